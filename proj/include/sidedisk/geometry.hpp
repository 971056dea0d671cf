#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "sidedisk/error.hpp"

namespace sidedisk {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point unit(Point a) { return a / norm(a); }
inline Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline bool finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

struct Segment {
    Point a;
    Point b;
    double length() const { return dist(a, b); }
    Point midpoint() const { return sidedisk::midpoint(a, b); }
};

// direction has unit length
struct Line {
    Point point;
    Point direction;
};

struct Disk {
    Point center;
    double radius = 0.0;
};

enum class IntersectionMode { Closed, Open };

struct Tolerance {
    double eps = 1e-9;

    // Throws InvalidArgument unless 0 < eps < 1e-3.
    static Tolerance make(double eps);
    // Default eps, overridden by the SIDEDISK_EPS environment variable when set.
    static Tolerance from_env();
};

class ConvexPolygon {
public:
    ConvexPolygon() = default;

    std::size_t size() const { return v_.size(); }
    const std::vector<Point>& vertices() const { return v_; }
    Point vertex(std::size_t i) const { return v_[i % v_.size()]; }
    // side i joins vertex i to vertex i+1
    Segment side(std::size_t i) const { return {v_[i % v_.size()], v_[(i + 1) % v_.size()]}; }

    // No validation; callers must already hold a strictly convex CCW list.
    static ConvexPolygon trusted(std::vector<Point> v) {
        ConvexPolygon p;
        p.v_ = std::move(v);
        return p;
    }

private:
    std::vector<Point> v_;
};

Disk disk_from_segment(const Segment& s, Tolerance tol = {});

// Signed gap dist(c1,c2) - r1 - r2; negative when the disks overlap.
double disk_gap(const Disk& d1, const Disk& d2);

// Same quantity for the diameter disks of two segments, evaluated through the
// power of the smaller center with respect to the larger disk so that a tiny
// disk next to a large one keeps its relative accuracy.
double segment_disk_gap(const Segment& s1, const Segment& s2);

// Closed: gap <= eps*scale. Open: gap < -eps*scale. scale = min(r1, r2).
bool gap_intersects(double gap, double r1, double r2, IntersectionMode mode, Tolerance tol);
bool disks_intersect(const Disk& d1, const Disk& d2, IntersectionMode mode, Tolerance tol = {});
bool segment_disks_intersect(const Segment& s1, const Segment& s2, IntersectionMode mode,
                             Tolerance tol = {});

ConvexPolygon validate_convex_polygon(std::vector<Point> points, Tolerance tol = {});

double interior_angle(const ConvexPolygon& P, std::size_t i);
double polygon_area(const std::vector<Point>& v);

Line side_line(const ConvexPolygon& P, std::size_t i);
Line interior_bisector(const Line& l1, const Line& l2, const ConvexPolygon& P, Tolerance tol = {});

// Equal-distance function of two side lines of a CCW polygon:
// f(x) = dist(x, line a) - dist(x, line b), both distances signed positive inside.
struct SideBisector {
    Point na, nb;    // inward unit normals
    double ca, cb;   // dot(na, x) - ca is the signed distance to line a
    double eval(Point x) const { return (dot(na, x) - ca) - (dot(nb, x) - cb); }
    double gradient_norm() const { return norm(na - nb); }
};
SideBisector side_bisector(const ConvexPolygon& P, std::size_t a, std::size_t b);

// Does the bisector of sides a and b cross side z (closed segment, tolerance eps*|s_z|)?
// ambiguous is set when the decision came from the tolerance band.
bool bisector_hits_side(const ConvexPolygon& P, std::size_t a, std::size_t b, std::size_t z,
                        Tolerance tol, bool* ambiguous = nullptr);

ConvexPolygon translated(const ConvexPolygon& P, Point shift);

}  // namespace sidedisk
