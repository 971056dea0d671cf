#pragma once

#include <cstdint>
#include <vector>

#include "sidedisk/geometry.hpp"
#include "sidedisk/side_disks.hpp"

namespace sidedisk {

ConvexPolygon regular_polygon(int n, double circumradius = 1.0);
ConvexPolygon random_convex_polygon(int n, std::uint64_t seed, Tolerance tol = {});
ConvexPolygon base_quadrilateral();
// Points of the ellipse x^2/4 + y^2 = 1 at jittered angles; stays strictly convex for n up to 10^7.
ConvexPolygon jittered_ellipse(int n, std::uint64_t seed);

struct GadgetOptions {
    int vertex = -1;  // acute vertex to replace; -1 picks the most acute one
    double margin = kProperMargin;
    int max_halvings = 60;
    Tolerance tol{};
};

struct GadgetResult {
    ConvexPolygon polygon;
    std::vector<int> old_block;  // images of the sides of the input polygon
    std::vector<int> new_block;  // the m new sides, consecutive
    int vertex = 0;              // replaced vertex of the input
    double delta = 0.0;          // |A'B| = |BC'|
    int halvings = 0;
    double overlap = 0.0;        // certified proper margins of the result
    double separation = 0.0;
    int tip = -1;                // for m = 4: index of the new acute vertex
};

GadgetResult attach_gadget(const ConvexPolygon& P, int m, const GadgetOptions& opt = {});

struct ExtremalStep {
    int m = 0;
    int vertex = 0;
    double delta = 0.0;
    double overlap = 0.0;
    double separation = 0.0;
    double tip_angle = 0.0;
};

struct ExtremalResult {
    ConvexPolygon polygon;
    std::vector<std::vector<int>> blocks;  // clique partition of the side indices
    std::vector<ExtremalStep> steps;
};

ExtremalResult extremal_construction(int n, Tolerance tol = {});
ConvexPolygon extremal_polygon(int n, Tolerance tol = {});

// Opposite-pair test of a quadrilateral (Closed mode).
bool c4_probe(const ConvexPolygon& Q, Tolerance tol = {});

struct MidpointCheck {
    double slack02 = 0.0;  // |s0| + |s2| - 2 dist(mid s1, mid s3)
    double slack13 = 0.0;  // |s1| + |s3| - 2 dist(mid s0, mid s2)
    bool holds(double tol) const;
};
MidpointCheck midpoint_inequality(const ConvexPolygon& Q);

// 4 uniform points in the unit square, redrawn until their hull is a quadrilateral.
ConvexPolygon random_quadrilateral(std::uint64_t seed, std::uint64_t trial);

struct ProbeReport {
    std::uint64_t trials = 0;
    std::uint64_t intersecting = 0;
    std::uint64_t midpoint_ok = 0;
    std::vector<std::uint64_t> failures;  // trial ids
};
ProbeReport c4_probe_experiment(std::uint64_t trials, std::uint64_t seed, Tolerance tol = {}, int threads = 0);

}  // namespace sidedisk
