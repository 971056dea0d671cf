#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sidedisk/geometry.hpp"

namespace sidedisk {

struct TreeDecomposition;

using Edge = std::pair<int, int>;

struct IntersectionGraph {
    int n = 0;
    std::vector<Edge> edges;  // i < j, sorted, unique
    IntersectionMode mode = IntersectionMode::Closed;

    bool has_edge(int i, int j) const;
    std::vector<std::vector<int>> adjacency() const;
};

std::vector<Disk> side_disks(const ConvexPolygon& P);

// Predicate on two sides of P, shared by every graph builder.
bool sides_intersect(const ConvexPolygon& P, int i, int j, IntersectionMode mode, Tolerance tol);

IntersectionGraph graph_bruteforce(const ConvexPolygon& P, IntersectionMode mode, Tolerance tol = {});
IntersectionGraph graph_from_decomposition(const ConvexPolygon& P, const TreeDecomposition& T,
                                           IntersectionMode mode, Tolerance tol = {});

// Cycle 0..n-1 plus the given chords.
IntersectionGraph cycle_with_chords(int n, const std::vector<Edge>& chords);
IntersectionGraph make_graph(int n, std::vector<Edge> edges, IntersectionMode mode = IntersectionMode::Closed);

bool dihedral_isomorphic(const IntersectionGraph& G, const IntersectionGraph& H);
bool check_edge_bound(const IntersectionGraph& G);

std::string to_edge_list(const IntersectionGraph& G);
std::string to_dot(const IntersectionGraph& G);

// Level at which a disk set counts as proper: every intersecting pair overlaps
// and every other pair is separated by at least this fraction of the smaller radius.
inline constexpr double kProperMargin = 1e-9;

// Overlap of every intersecting pair and separation of every other pair,
// each relative to the smaller radius.
struct ProperReport {
    double min_overlap = 0.0;     // smallest (r1 + r2 - d) / min(r1, r2) over overlapping pairs
    double min_separation = 0.0;  // smallest (d - r1 - r2) / min(r1, r2) over disjoint pairs
    Edge worst_overlap{-1, -1};
    Edge worst_separation{-1, -1};
    bool certified(double margin) const { return min_overlap >= margin && min_separation >= margin; }
};
ProperReport proper_report(const ConvexPolygon& P);

}  // namespace sidedisk
