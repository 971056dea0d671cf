#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "sidedisk/constructions.hpp"
#include "sidedisk/medial_axis.hpp"
#include "sidedisk/mis.hpp"
#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"

using namespace sidedisk;
using std::numbers::pi;

namespace {

constexpr auto kClosed = IntersectionMode::Closed;

IntersectionGraph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

bool is_clique(const IntersectionGraph& G, const std::vector<int>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (!G.has_edge(s[a], s[b])) return false;
    return true;
}

// s is a run of consecutive indices modulo n
bool cyclic_run(std::vector<int> s, int n) {
    std::sort(s.begin(), s.end());
    int breaks = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        int next = k + 1 < s.size() ? s[k + 1] : s[0] + n;
        breaks += next != s[k] + 1;
    }
    return static_cast<int>(s.size()) == n || breaks == 1;
}

// Each block is a cyclic run of the sides left after deleting the blocks built later.
bool nested_runs(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> order(n, -1);
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (int x : blocks[k]) order[x] = static_cast<int>(k);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        std::vector<int> kept;  // positions among surviving sides
        int pos = 0;
        for (int x = 0; x < n; ++x) {
            if (order[x] > static_cast<int>(k)) continue;
            if (order[x] == static_cast<int>(k)) kept.push_back(pos);
            ++pos;
        }
        if (!cyclic_run(kept, pos)) return false;
    }
    return true;
}

int alpha_dp(const ConvexPolygon& P) {
    TreeDecomposition T = build_tree_decomposition(P, compute_medial_axis(P));
    return mis_dp(graph_bruteforce(P, kClosed), T).size;
}

}  // namespace

TEST(RegularPolygon, SmallGraphs) {
    EXPECT_EQ(graph_bruteforce(regular_polygon(3), kClosed).edges, complete(3).edges);
    EXPECT_EQ(graph_bruteforce(regular_polygon(5), kClosed).edges, cycle_with_chords(5, {}).edges);
    EXPECT_EQ(graph_bruteforce(regular_polygon(4), kClosed).edges, complete(4).edges);
    EXPECT_EQ(graph_bruteforce(regular_polygon(4), IntersectionMode::Open).edges, cycle_with_chords(4, {}).edges);
}

TEST(RegularPolygon, Arguments) {
    EXPECT_THROW(regular_polygon(2), Error);
    EXPECT_THROW(regular_polygon(5, 0.0), Error);
    ConvexPolygon P = regular_polygon(7, 3.0);
    for (const Point& p : P.vertices()) EXPECT_NEAR(norm(p), 3.0, 1e-12);
}

TEST(RandomConvexPolygon, TriangleAndDeterminism) {
    for (std::uint64_t s = 0; s < 20; ++s) EXPECT_EQ(random_convex_polygon(3, s).size(), 3u);
    ConvexPolygon a = random_convex_polygon(50, 7), b = random_convex_polygon(50, 7);
    EXPECT_EQ(a.vertices(), b.vertices());
    EXPECT_NE(a.vertices(), random_convex_polygon(50, 8).vertices());
}

TEST(RandomConvexPolygon, PassesValidator) {
    for (int n : {3, 10, 100, 200, 1000}) {
        ConvexPolygon P = random_convex_polygon(n, 1);
        ConvexPolygon Q = validate_convex_polygon(P.vertices());
        EXPECT_EQ(Q.vertices(), P.vertices());
        EXPECT_EQ(static_cast<int>(P.size()), n);
    }
}

TEST(JitteredEllipse, StrictlyConvexAtScale) {
    for (int n : {3, 1000, 200000}) {
        ConvexPolygon P = jittered_ellipse(n, 5);
        EXPECT_NO_THROW(validate_convex_polygon(P.vertices())) << n;
    }
}

TEST(BaseQuadrilateral, CompleteProperAndAcute) {
    ConvexPolygon P = base_quadrilateral();
    EXPECT_EQ(graph_bruteforce(P, kClosed).edges, complete(4).edges);
    EXPECT_TRUE(proper_report(P).certified(kProperMargin));
    int acute = 0;
    for (int i = 0; i < 4; ++i) acute += interior_angle(P, i) < pi / 2 - 1e-9;
    EXPECT_EQ(acute, 1);
}

TEST(AttachGadget, FourOnQuadrilateral) {
    ConvexPolygon P = base_quadrilateral();
    GadgetResult g = attach_gadget(P, 4);
    ASSERT_EQ(g.polygon.size(), 8u);
    IntersectionGraph G = graph_bruteforce(g.polygon, kClosed);
    ASSERT_EQ(g.old_block.size(), 4u);
    ASSERT_EQ(g.new_block.size(), 4u);
    EXPECT_TRUE(is_clique(G, g.old_block));
    EXPECT_TRUE(is_clique(G, g.new_block));
    // across the blocks only the two cycle edges remain
    int cross = 0;
    for (int a : g.old_block)
        for (int b : g.new_block)
            if (G.has_edge(a, b)) {
                ++cross;
                EXPECT_TRUE(std::abs(a - b) == 1 || std::abs(a - b) == 7);
            }
    EXPECT_EQ(cross, 2);
    EXPECT_EQ(G.edges.size(), 14u);
    EXPECT_TRUE(proper_report(g.polygon).certified(kProperMargin));
    EXPECT_GE(g.overlap, kProperMargin);
    ASSERT_GE(g.tip, 0);
    EXPECT_LT(interior_angle(g.polygon, g.tip), pi / 2);
}

TEST(AttachGadget, OneOnQuadrilateral) {
    GadgetResult g = attach_gadget(base_quadrilateral(), 1);
    ASSERT_EQ(g.polygon.size(), 5u);
    ASSERT_EQ(g.new_block.size(), 1u);
    IntersectionGraph G = graph_bruteforce(g.polygon, kClosed);
    int s = g.new_block[0];
    for (int j = 0; j < 5; ++j) {
        if (j == s) continue;
        bool neighbour = j == (s + 1) % 5 || j == (s + 4) % 5;
        EXPECT_EQ(G.has_edge(s, j), neighbour) << j;
    }
}

TEST(AttachGadget, TwoOnTriangle) {
    GadgetResult g = attach_gadget(regular_polygon(3), 2);
    ASSERT_EQ(g.polygon.size(), 5u);
    ASSERT_EQ(g.new_block.size(), 2u);
    IntersectionGraph G = graph_bruteforce(g.polygon, kClosed);
    EXPECT_TRUE(G.has_edge(g.new_block[0], g.new_block[1]));
    EXPECT_TRUE(is_clique(G, g.old_block));
    EXPECT_TRUE(proper_report(g.polygon).certified(kProperMargin));
}

TEST(AttachGadget, EverySizeKeepsBlocksAndCycle) {
    for (int m = 1; m <= 4; ++m) {
        GadgetResult g = attach_gadget(base_quadrilateral(), m);
        const int n = static_cast<int>(g.polygon.size());
        EXPECT_EQ(n, 4 + m);
        IntersectionGraph G = graph_bruteforce(g.polygon, kClosed);
        EXPECT_TRUE(is_clique(G, g.new_block));
        EXPECT_TRUE(cyclic_run(g.new_block, n));
        std::set<int> all(g.old_block.begin(), g.old_block.end());
        all.insert(g.new_block.begin(), g.new_block.end());
        EXPECT_EQ(static_cast<int>(all.size()), n);
        for (int k = 0; k < n; ++k) EXPECT_TRUE(G.has_edge(k, (k + 1) % n));
    }
}

TEST(AttachGadget, Preconditions) {
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;  // sentinel: nothing thrown
    };
    ConvexPolygon P = base_quadrilateral();
    EXPECT_EQ(kind([&] { attach_gadget(P, 5); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind([&] { attach_gadget(P, 0); }), ErrorKind::InvalidArgument);
    GadgetOptions right;
    right.vertex = 3;  // right angle at (0,-1)
    EXPECT_EQ(kind([&] { attach_gadget(P, 4, right); }), ErrorKind::PreconditionFailed);
    ConvexPolygon kite = validate_convex_polygon({{0, -0.2}, {1, 0}, {0, 1.5}, {-1, 0}});
    GadgetOptions at;
    at.vertex = 0;  // obtuse
    EXPECT_EQ(kind([&] { attach_gadget(kite, 4, at); }), ErrorKind::PreconditionFailed);
    at.vertex = 2;
    EXPECT_NO_THROW(attach_gadget(kite, 4, at));
    // 60 degree rhombus: acute corner, but both opposite disk pairs are tangent
    const double h = std::sqrt(3.0) / 2;
    ConvexPolygon rhombus = validate_convex_polygon({{0, 0}, {1, 0}, {1.5, h}, {0.5, h}});
    ASSERT_LT(interior_angle(rhombus, 0), pi / 2);
    ASSERT_FALSE(proper_report(rhombus).certified(kProperMargin));
    at.vertex = 0;
    EXPECT_EQ(kind([&] { attach_gadget(rhombus, 1, at); }), ErrorKind::PreconditionFailed);
}

TEST(ExtremalPolygon, SmallCases) {
    EXPECT_EQ(alpha_dp(extremal_polygon(3)), 1);
    EXPECT_EQ(mis_bruteforce(graph_bruteforce(extremal_polygon(9), kClosed)).size, 3);
}

TEST(ExtremalPolygon, SixteenHasFourNestedCliques) {
    ExtremalResult r = extremal_construction(16);
    IntersectionGraph G = graph_bruteforce(r.polygon, kClosed);
    EXPECT_EQ(alpha_dp(r.polygon), 4);
    ASSERT_EQ(r.blocks.size(), 4u);
    for (const auto& b : r.blocks) {
        EXPECT_EQ(b.size(), 4u);
        EXPECT_TRUE(is_clique(G, b));
    }
    EXPECT_TRUE(cyclic_run(r.blocks.back(), 16));
    EXPECT_TRUE(nested_runs(r.blocks, 16));
}

TEST(ExtremalPolygon, FamilyUpToForty) {
    for (int n = 3; n <= 40; ++n) {
        ExtremalResult r = extremal_construction(n);
        ASSERT_EQ(static_cast<int>(r.polygon.size()), n);
        IntersectionGraph G = graph_bruteforce(r.polygon, kClosed);
        EXPECT_EQ(alpha_dp(r.polygon), (n + 3) / 4) << n;
        EXPECT_TRUE(proper_report(r.polygon).certified(kProperMargin)) << n;
        // the blocks partition the sides into (n + 3) / 4 cliques
        std::vector<int> seen;
        for (const auto& b : r.blocks) {
            EXPECT_TRUE(is_clique(G, b)) << n;
            seen.insert(seen.end(), b.begin(), b.end());
        }
        EXPECT_EQ(static_cast<int>(r.blocks.size()), (n + 3) / 4);
        EXPECT_TRUE(nested_runs(r.blocks, n)) << n;
        std::sort(seen.begin(), seen.end());
        for (int k = 0; k < n; ++k) EXPECT_EQ(seen[k], k);
        if (n <= kBruteforceLimit) EXPECT_EQ(mis_bruteforce(G).size, (n + 3) / 4);
    }
}

TEST(ExtremalPolygon, Deterministic) {
    EXPECT_EQ(extremal_polygon(23).vertices(), extremal_polygon(23).vertices());
}

TEST(C4Probe, SquareAndQuadrilateral) {
    ConvexPolygon S = validate_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    EXPECT_TRUE(c4_probe(S));
    EXPECT_TRUE(c4_probe(base_quadrilateral()));
    EXPECT_THROW(c4_probe(regular_polygon(5)), Error);
    MidpointCheck m = midpoint_inequality(S);
    EXPECT_NEAR(m.slack02, 0.0, 1e-15);
    EXPECT_NEAR(m.slack13, 0.0, 1e-15);
    EXPECT_TRUE(m.holds(1e-12));
}

// The opposite-pair test agrees with the oracle graph and one slack is non-negative.
TEST(C4Probe, RandomQuadrilaterals) {
    for (std::uint64_t t = 0; t < 20000; ++t) {
        ConvexPolygon Q = random_quadrilateral(1, t);
        IntersectionGraph G = graph_bruteforce(Q, kClosed);
        bool oracle = G.has_edge(0, 2) || G.has_edge(1, 3);
        EXPECT_EQ(c4_probe(Q), oracle);
        EXPECT_TRUE(oracle) << t;
        MidpointCheck m = midpoint_inequality(Q);
        double longest = 0;
        for (int k = 0; k < 4; ++k) longest = std::max(longest, Q.side(k).length());
        EXPECT_TRUE(m.holds(1e-9 * longest)) << t;
    }
}

TEST(C4Probe, ExperimentIndependentOfThreads) {
    ProbeReport a = c4_probe_experiment(5000, 3, {}, 1), b = c4_probe_experiment(5000, 3, {}, 4);
    EXPECT_EQ(a.trials, 5000u);
    EXPECT_EQ(a.intersecting, b.intersecting);
    EXPECT_EQ(a.midpoint_ok, b.midpoint_ok);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.intersecting, 5000u);
}
