#pragma once

#include <string>
#include <vector>

#include "sidedisk/geometry.hpp"
#include "sidedisk/side_disks.hpp"

namespace sidedisk {

// Hamiltonian cycle 0..n-1 plus non-crossing chords.
struct OuterplanarInput {
    int n = 0;
    std::vector<Edge> chords;  // normalized i < j, sorted
};

OuterplanarInput parse_outerplanar(int n, std::vector<Edge> chords);
IntersectionGraph as_graph(const OuterplanarInput& G);

struct FaceTree {
    std::vector<std::vector<int>> faces;      // vertices in cyclic order
    std::vector<std::vector<int>> neighbors;  // faces sharing a chord
    std::vector<int> start;                   // one face, or two neighbouring quadrilaterals
};

// Every non-crossing chord set on an n-cycle; with `up_to_symmetry` one
// representative (lexicographically smallest chord list) per dihedral class.
std::vector<OuterplanarInput> all_outerplanar(int n, bool up_to_symmetry);

FaceTree face_tree(const OuterplanarInput& G);

// Side i of the result is vertex i of the input graph.
ConvexPolygon realize(const OuterplanarInput& G, Tolerance tol = {});

struct GoodnessReport {
    bool proper = true;
    double min_overlap = 0.0;  // relative to the smaller radius; minus the gap when a near-touching pair fails
    Edge worst_pair{-1, -1};

    bool vertices_clear = true;
    double min_vertex_clearance = 0.0;  // (distance - radius) / radius over non-incident disks
    int worst_vertex = -1;
    int worst_side = -1;

    bool angles_ok = true;
    double min_angle = 0.0;
    int min_angle_vertex = -1;

    bool good() const { return proper && vertices_clear && angles_ok; }
    std::string failures() const;
};

GoodnessReport check_good(const ConvexPolygon& P, Tolerance tol = {});

// Separation of the k subdivision disks of AC from the leg disks D(AA') and D(CC').
struct SubdivisionMargin {
    int index = 0;
    double radius = 0.0;
    double dist_a = 0.0;  // midpoint of Q_i Q_{i+1} to the line through A perpendicular to AB
    double dist_c = 0.0;  // same for C and BC
    bool constrained_a = false;
    bool constrained_c = false;
    bool disjoint_a = false;  // direct disk predicate, Closed mode
    bool disjoint_c = false;
};

struct SubdivisionReport {
    std::vector<SubdivisionMargin> entries;
    double min_ratio = 0.0;  // smallest dist / radius over constrained entries
    bool all_disjoint = true;  // over constrained entries
};

SubdivisionReport subdivision_margins(Point A, Point B, Point C, Point Ap, Point Cp, int k, Tolerance tol = {});

}  // namespace sidedisk
