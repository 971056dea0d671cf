#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sidedisk/constructions.hpp"
#include "sidedisk/medial_axis.hpp"
#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"

using namespace sidedisk;

namespace {

TreeDecomposition build(const ConvexPolygon& P, BuildTrace* trace = nullptr) {
    return build_tree_decomposition(P, compute_medial_axis(P), {}, trace);
}

std::set<int> sides_of(const Bag& b) { return {b.begin(), b.end()}; }

Bag make_bag(int id, int parent, std::vector<int> s) {
    Bag b;
    b.id = id;
    b.parent = parent;
    for (int x : s) b.sides[b.count++] = x;
    return b;
}

// Sides strictly between u and v going counter-clockwise.
std::vector<int> open_range(int u, int v, int n) {
    std::vector<int> out;
    for (int k = (u + 1) % n; k != v % n; k = (k + 1) % n) out.push_back(k);
    return out;
}

ConvexPolygon split_heptagon() {
    return validate_convex_polygon({{0.402727, 0.742339}, {0.00632372, 0.421127}, {0, 0}, {0.541534, 0.00488345},
                                    {0.777188, 0.0667275}, {0.762101, 0.353592}, {0.504087, 0.63877}});
}

std::vector<ConvexPolygon> sample() {
    std::vector<ConvexPolygon> out;
    for (int n = 3; n <= 30; ++n) out.push_back(regular_polygon(n));
    for (int k = 0; k < 200; ++k) out.push_back(random_convex_polygon(3 + k % 120, 7000 + k));
    for (int n : {4, 8, 13, 20, 27}) out.push_back(extremal_polygon(n));
    out.push_back(split_heptagon());
    return out;
}

}  // namespace

TEST(TreeDecomposition, TriangleIsOneBag) {
    TreeDecomposition T = build(validate_convex_polygon({{0, 0}, {3, 0.4}, {1, 2}}));
    ASSERT_EQ(T.bags.size(), 1u);
    EXPECT_EQ(sides_of(T.bags[0]), (std::set<int>{0, 1, 2}));
    EXPECT_EQ(width(T), 2);
}

TEST(TreeDecomposition, SquareHasTwoBags) {
    ConvexPolygon P = validate_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    TreeDecomposition T = build(P);
    ASSERT_EQ(T.bags.size(), 2u);
    EXPECT_EQ(sides_of(T.bags[T.root]), (std::set<int>{0, 1, 2}));
    const Bag& child = T.bags[1 - T.root];
    EXPECT_EQ(child.parent, T.root);
    EXPECT_EQ(sides_of(child), (std::set<int>{0, 1, 2, 3}));
    EXPECT_EQ(width(T), 3);
    EXPECT_TRUE(validate_decomposition(graph_bruteforce(P, IntersectionMode::Closed), T).ok());
}

TEST(TreeDecomposition, HeptagonCallTree) {
    ConvexPolygon P = split_heptagon();
    BuildTrace trace;
    TreeDecomposition T = build(P, &trace);
    EXPECT_EQ(T.bags.size(), 5u);
    EXPECT_EQ(sides_of(T.bags[T.root]), (std::set<int>{0, 2, 5}));
    auto has_call = [&](int u, int v, int z) {
        return std::any_of(trace.calls.begin(), trace.calls.end(),
                           [&](const RangeCall& c) { return c.u == u && c.v == v && c.z == z; });
    };
    EXPECT_TRUE(has_call(2, 5, 0));
    // the child keeps side 0 when the 3-5 bisector crosses it, otherwise takes side 2
    int z = bisector_hits_side(P, 3, 5, 0, Tolerance{}) ? 0 : 2;
    EXPECT_TRUE(has_call(3, 5, z));
    EXPECT_TRUE(validate_decomposition(graph_bruteforce(P, IntersectionMode::Closed), T).ok());
}

TEST(TreeDecomposition, AdjacentRangeGivesLeaf) {
    // in the square the call on (2, 4) has a single interior side and no children
    ConvexPolygon P = validate_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    BuildTrace trace;
    TreeDecomposition T = build(P, &trace);
    for (const RangeCall& c : trace.calls) {
        int len = ((c.v - c.u) % 4 + 4) % 4;
        bool has_child = std::any_of(T.bags.begin(), T.bags.end(), [&](const Bag& b) { return b.parent == c.bag; });
        if (len == 2) EXPECT_FALSE(has_child);
        if (len == 1) EXPECT_EQ(T.bags[c.bag].count, 3);
    }
}

TEST(TreeDecomposition, OctagonCallIsValid) {
    ConvexPolygon P = regular_polygon(8);
    TreeDecomposition T = build(P);
    EXPECT_EQ(T.bags.size(), 6u);
    for (IntersectionMode m : {IntersectionMode::Closed, IntersectionMode::Open})
        EXPECT_TRUE(validate_decomposition(graph_bruteforce(P, m), T).ok());
}

TEST(TreeDecomposition, WidthBagCountAndValidity) {
    for (const ConvexPolygon& P : sample()) {
        const int n = static_cast<int>(P.size());
        TreeDecomposition T = build(P);
        EXPECT_LE(width(T), 3);
        EXPECT_EQ(static_cast<int>(T.bags.size()), n == 3 ? 1 : n - 2);
        for (IntersectionMode m : {IntersectionMode::Closed, IntersectionMode::Open}) {
            ValidationReport v = validate_decomposition(graph_bruteforce(P, m), T);
            EXPECT_TRUE(v.ok()) << n << " " << v.structure_error;
        }
    }
}

TEST(TreeDecomposition, WidthThreeOnExtremalFamily) {
    for (int n = 4; n <= 24; ++n) EXPECT_EQ(width(build(extremal_polygon(n))), 3) << n;
}

// Nothing outside D[u,v] and D_z meets the interior range of a call.
TEST(TreeDecomposition, RangeIsolatedExceptThirdDisk) {
    for (const ConvexPolygon& P : sample()) {
        const int n = static_cast<int>(P.size());
        if (n < 4) continue;
        BuildTrace trace;
        build(P, &trace);
        IntersectionGraph G = graph_bruteforce(P, IntersectionMode::Closed);
        for (const RangeCall& c : trace.calls) {
            std::vector<int> inner = open_range(c.u, c.v, n);
            std::set<int> allowed(inner.begin(), inner.end());
            allowed.insert({c.u, c.v, c.z});
            for (int i : inner)
                for (int j = 0; j < n; ++j)
                    if (!allowed.count(j)) EXPECT_FALSE(G.has_edge(i, j)) << n << " call " << c.u << "," << c.v;
        }
    }
}

// For a bag {u, v, z, t} the ranges on either side of t are mutually independent.
TEST(TreeDecomposition, SplitRangesIndependent) {
    for (const ConvexPolygon& P : sample()) {
        const int n = static_cast<int>(P.size());
        if (n < 4) continue;
        BuildTrace trace;
        TreeDecomposition T = build(P, &trace);
        IntersectionGraph G = graph_bruteforce(P, IntersectionMode::Closed);
        for (const RangeCall& c : trace.calls) {
            const Bag& b = T.bags[c.bag];
            if (b.count != 4) continue;
            int t = -1;
            for (int s : b)
                if (s != c.u && s != c.v && s != c.z) t = s;
            ASSERT_GE(t, 0);
            for (int i : open_range(c.u, t, n))
                for (int j : open_range(t, c.v, n)) EXPECT_FALSE(G.has_edge(i, j)) << n;
        }
    }
}

TEST(TreeDecomposition, LinearWorkCounters) {
    for (int n : {1000, 20000}) {
        BuildTrace trace;
        build(jittered_ellipse(n, 3), &trace);
        EXPECT_LE(trace.split_queries, static_cast<std::size_t>(2 * n));
        EXPECT_LE(trace.bisector_tests, static_cast<std::size_t>(4 * n));
        EXPECT_LE(trace.axis_steps, static_cast<std::size_t>(4 * n));
    }
}

TEST(ValidateDecomposition, DeletedBagReportsMissingSide) {
    ConvexPolygon P = validate_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    TreeDecomposition T = build(P);
    T.bags.erase(T.bags.begin() + (1 - T.root));
    T.bags[0].id = 0;
    T.root = 0;
    ValidationReport v = validate_decomposition(graph_bruteforce(P, IntersectionMode::Closed), T);
    EXPECT_FALSE(v.ok());
    EXPECT_FALSE(v.property1 && v.property2);
    EXPECT_EQ(v.missing_vertices, std::vector<int>{3});
}

TEST(ValidateDecomposition, SplitOccurrenceNamesVertex) {
    IntersectionGraph C6 = cycle_with_chords(6, {});
    TreeDecomposition T;
    T.n = 6;
    T.root = 0;
    T.bags = {make_bag(0, -1, {0, 1, 5}), make_bag(1, 0, {1, 2, 3}), make_bag(2, 1, {3, 4, 5})};
    ValidationReport v = validate_decomposition(C6, T);
    EXPECT_TRUE(v.property1);
    EXPECT_TRUE(v.property2);
    EXPECT_FALSE(v.property3);
    EXPECT_EQ(v.disconnected_vertices, std::vector<int>{5});
}

TEST(ValidateDecomposition, UncoveredEdge) {
    IntersectionGraph C6 = cycle_with_chords(6, {{0, 3}});
    TreeDecomposition T;
    T.n = 6;
    T.bags = {make_bag(0, -1, {0, 1, 5}), make_bag(1, 0, {1, 2, 5}), make_bag(2, 1, {2, 3, 5}), make_bag(3, 2, {3, 4, 5})};
    ValidationReport v = validate_decomposition(C6, T);
    EXPECT_FALSE(v.property2);
    ASSERT_EQ(v.uncovered_edges.size(), 1u);
    EXPECT_EQ(v.uncovered_edges[0], (std::pair<int, int>{0, 3}));
}

TEST(ValidateDecomposition, BrokenStructure) {
    IntersectionGraph K3 = cycle_with_chords(3, {});
    TreeDecomposition T;
    T.n = 3;
    T.bags = {make_bag(0, 1, {0, 1, 2}), make_bag(1, 0, {0, 1})};  // parent cycle, no root
    EXPECT_FALSE(validate_decomposition(K3, T).structure_ok);
}
