#include <gtest/gtest.h>

#include <algorithm>

#include "sidedisk/constructions.hpp"
#include "sidedisk/medial_axis.hpp"
#include "sidedisk/mis.hpp"
#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"

using namespace sidedisk;

namespace {

struct Instance {
    IntersectionGraph G;
    TreeDecomposition T;
};

Instance instance(const ConvexPolygon& P, IntersectionMode m = IntersectionMode::Closed) {
    return {graph_bruteforce(P, m), build_tree_decomposition(P, compute_medial_axis(P))};
}

// Plain enumeration of all subsets; returns the size and the lexicographically smallest maximum set.
MisResult exhaustive(const IntersectionGraph& G) {
    const int n = G.n;
    std::vector<unsigned> adj(n, 0);
    for (auto [i, j] : G.edges) adj[i] |= 1u << j, adj[j] |= 1u << i;
    MisResult best;
    best.size = -1;
    for (unsigned s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if ((s >> i & 1) && (adj[i] & s)) ok = false;
        if (!ok) continue;
        std::vector<int> w;
        for (int i = 0; i < n; ++i)
            if (s >> i & 1) w.push_back(i);
        int k = static_cast<int>(w.size());
        if (k > best.size || (k == best.size && w < best.witness)) best = {k, w};
    }
    return best;
}

IntersectionGraph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

}  // namespace

TEST(MisDp, Triangle) {
    Instance I = instance(regular_polygon(3));
    EXPECT_EQ(mis_dp(I.G, I.T).size, 1);
}

TEST(MisDp, RegularPentagon) {
    Instance I = instance(regular_polygon(5));
    EXPECT_EQ(mis_dp(I.G, I.T).size, 2);
    EXPECT_EQ(exhaustive(I.G).size, 2);
}

TEST(MisDp, ExtremalEight) {
    Instance I = instance(extremal_polygon(8));
    MisResult r = mis_dp(I.G, I.T);
    EXPECT_EQ(r.size, 2);
    EXPECT_TRUE(is_independent(I.G, r.witness));
}

TEST(MisDp, MatchesExhaustiveOnSmallPolygons) {
    for (int k = 0; k < 120; ++k) {
        ConvexPolygon P = random_convex_polygon(3 + k % 16, 8000 + k);
        for (IntersectionMode m : {IntersectionMode::Closed, IntersectionMode::Open}) {
            Instance I = instance(P, m);
            MisResult r = mis_dp(I.G, I.T);
            EXPECT_EQ(r.size, exhaustive(I.G).size) << P.size();
            EXPECT_EQ(static_cast<int>(r.witness.size()), r.size);
            EXPECT_TRUE(is_independent(I.G, r.witness));
            EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
        }
    }
}

TEST(MisDp, LargePolygonsGiveMaximalSetsAboveQuarter) {
    for (int k = 0; k < 20; ++k) {
        int n = 200 + 150 * k;
        Instance I = instance(random_convex_polygon(n, 9000 + k));
        MisResult r = mis_dp(I.G, I.T);
        EXPECT_TRUE(is_independent(I.G, r.witness));
        EXPECT_GE(r.size, (n + 3) / 4);
        std::vector<char> in(n, 0);
        for (int x : r.witness) in[x] = 1;
        auto adj = I.G.adjacency();
        for (int v = 0; v < n; ++v) {
            if (in[v]) continue;
            bool blocked = std::any_of(adj[v].begin(), adj[v].end(), [&](int w) { return in[w]; });
            EXPECT_TRUE(blocked) << "vertex " << v << " could be added";
        }
    }
}

TEST(MisDp, RejectsInvalidDecomposition) {
    Instance I = instance(regular_polygon(6));
    I.T.bags.pop_back();
    try {
        mis_dp(I.G, I.T);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDecomposition);
    }
}

TEST(MisBruteforce, SmallGraphs) {
    EXPECT_EQ(mis_bruteforce(complete(4)).size, 1);
    MisResult c6 = mis_bruteforce(cycle_with_chords(6, {}));
    EXPECT_EQ(c6.size, 3);
    EXPECT_EQ(c6.witness, (std::vector<int>{0, 2, 4}));
}

TEST(MisBruteforce, ExtremalThirteen) {
    IntersectionGraph G = graph_bruteforce(extremal_polygon(13), IntersectionMode::Closed);
    EXPECT_EQ(mis_bruteforce(G).size, 4);
    EXPECT_EQ(exhaustive(G).size, 4);
}

TEST(MisBruteforce, LexicographicallySmallestWitness) {
    for (int k = 0; k < 80; ++k) {
        IntersectionGraph G = graph_bruteforce(random_convex_polygon(3 + k % 15, 9500 + k), IntersectionMode::Closed);
        MisResult a = mis_bruteforce(G), b = exhaustive(G);
        EXPECT_EQ(a.size, b.size);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(MisBruteforce, SizeLimit) {
    EXPECT_NO_THROW(mis_bruteforce(cycle_with_chords(kBruteforceLimit, {})));
    try {
        mis_bruteforce(cycle_with_chords(kBruteforceLimit + 1, {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(IsIndependent, Basics) {
    IntersectionGraph C5 = cycle_with_chords(5, {});
    EXPECT_TRUE(is_independent(C5, {0, 2}));
    EXPECT_FALSE(is_independent(C5, {0, 1}));
    EXPECT_TRUE(is_independent(C5, {}));
}
