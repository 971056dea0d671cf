#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sidedisk/geometry.hpp"
#include "sidedisk/medial_axis.hpp"

namespace sidedisk {

struct IntersectionGraph;

struct Bag {
    int id = 0;
    int parent = -1;  // -1 for the root
    std::array<int, 4> sides{};
    int count = 0;

    const int* begin() const { return sides.data(); }
    const int* end() const { return sides.data() + count; }
    bool contains(int s) const {
        for (int k = 0; k < count; ++k)
            if (sides[k] == s) return true;
        return false;
    }
};

struct TreeDecomposition {
    int n = 0;
    int root = 0;
    std::vector<Bag> bags;  // bags[i].id == i
};

// One invocation of the range recursion, in original side labels.
// The range is the cyclic interval from u to v (v may equal u + n - style wrap;
// u_rot/v_rot keep the rotated, non-wrapping form).
struct RangeCall {
    int u = 0, v = 0, z = 0;  // original labels
    int u_rot = 0, v_rot = 0, z_rot = 0;
    int axis_vertex = 0;
    int bag = 0;
    bool ambiguous = false;  // some bisector test fell inside the tolerance band
};

struct BuildTrace {
    int rotation = 0;  // rotated label r corresponds to original (r + rotation) mod n
    std::array<int, 3> root_triple{};
    std::vector<RangeCall> calls;
    std::size_t split_queries = 0;
    std::size_t bisector_tests = 0;
    std::size_t axis_steps = 0;
    std::size_t ambiguous_tests = 0;
};

TreeDecomposition build_tree_decomposition(const ConvexPolygon& P, const MedialAxis& M, Tolerance tol = {},
                                           BuildTrace* trace = nullptr);

int width(const TreeDecomposition& T);

struct ValidationReport {
    bool structure_ok = true;
    std::string structure_error;
    bool property1 = true;
    bool property2 = true;
    bool property3 = true;
    std::vector<int> missing_vertices;
    std::vector<std::pair<int, int>> uncovered_edges;
    std::vector<int> disconnected_vertices;
    bool ok() const { return structure_ok && property1 && property2 && property3; }
};

ValidationReport validate_decomposition(const IntersectionGraph& G, const TreeDecomposition& T);

}  // namespace sidedisk
