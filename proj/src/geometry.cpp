#include "sidedisk/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <string>

namespace sidedisk {

std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::TooFewVertices: return "TooFewVertices";
        case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
        case ErrorKind::NotConvex: return "NotConvex";
        case ErrorKind::EmptyRange: return "EmptyRange";
        case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::GenerationFailed: return "GenerationFailed";
        case ErrorKind::WrongArity: return "WrongArity";
        case ErrorKind::NotOuterplanar: return "NotOuterplanar";
        case ErrorKind::InvalidChord: return "InvalidChord";
        case ErrorKind::NotRealizable: return "NotRealizable";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Tolerance Tolerance::make(double eps) {
    if (!(eps > 0.0 && eps < 1e-3)) {
        throw Error(ErrorKind::InvalidArgument, "eps must satisfy 0 < eps < 1e-3, got " + std::to_string(eps));
    }
    return Tolerance{eps};
}

Tolerance Tolerance::from_env() {
    const char* s = std::getenv("SIDEDISK_EPS");
    if (s == nullptr || *s == '\0') return Tolerance{};
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0') throw Error(ErrorKind::InvalidArgument, std::string("bad SIDEDISK_EPS: ") + s);
    return make(v);
}

Disk disk_from_segment(const Segment& s, Tolerance tol) {
    double len = s.length();
    double scale = std::max(norm(s.a), norm(s.b));
    if (!(len > tol.eps * scale) || len == 0.0) {
        throw Error(ErrorKind::DegenerateInput, "segment shorter than tolerance");
    }
    return Disk{s.midpoint(), 0.5 * len};
}

double disk_gap(const Disk& d1, const Disk& d2) {
    return dist(d1.center, d2.center) - d1.radius - d2.radius;
}

double segment_disk_gap(const Segment& s1, const Segment& s2) {
    double l1 = s1.length(), l2 = s2.length();
    const Segment& big = l1 >= l2 ? s1 : s2;
    const Segment& small = l1 >= l2 ? s2 : s1;
    double rb = 0.5 * std::max(l1, l2);
    double rs = 0.5 * std::min(l1, l2);
    // c - a and c - b for the small center c, formed from endpoint differences
    Point ca = 0.5 * ((small.a - big.a) + (small.b - big.a));
    Point cb = 0.5 * ((small.a - big.b) + (small.b - big.b));
    double pw = dot(ca, cb);  // |c - center|^2 - rb^2
    Point cc = 0.5 * (ca + cb);
    double d = norm(cc);
    return pw / (d + rb) - rs;
}

bool gap_intersects(double gap, double r1, double r2, IntersectionMode mode, Tolerance tol) {
    double scale = std::min(r1, r2);
    if (mode == IntersectionMode::Closed) return gap <= tol.eps * scale;
    return gap < -tol.eps * scale;
}

bool disks_intersect(const Disk& d1, const Disk& d2, IntersectionMode mode, Tolerance tol) {
    return gap_intersects(disk_gap(d1, d2), d1.radius, d2.radius, mode, tol);
}

bool segment_disks_intersect(const Segment& s1, const Segment& s2, IntersectionMode mode, Tolerance tol) {
    return gap_intersects(segment_disk_gap(s1, s2), 0.5 * s1.length(), 0.5 * s2.length(), mode, tol);
}

double polygon_area(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    if (n < 3) return 0.0;
    // anchored at v[0] to limit cancellation
    double s = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) s += cross(v[i] - v[0], v[i + 1] - v[0]);
    return 0.5 * s;
}

ConvexPolygon validate_convex_polygon(std::vector<Point> pts, Tolerance tol) {
    const std::size_t n = pts.size();
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "need at least 3 vertices, got " + std::to_string(n));
    for (const Point& p : pts) {
        if (!finite(p)) throw Error(ErrorKind::DegenerateInput, "non-finite coordinate");
    }
    for (std::size_t i = 0; i < n; ++i) {
        Point a = pts[i], b = pts[(i + 1) % n];
        if (dist(a, b) <= tol.eps * std::max(norm(a), norm(b)) || a == b) {
            throw Error(ErrorKind::DegenerateInput, "repeated vertex at index " + std::to_string((i + 1) % n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Point e1 = pts[i] - pts[(i + n - 1) % n];
        Point e2 = pts[(i + 1) % n] - pts[i];
        if (std::abs(cross(e1, e2)) <= tol.eps * norm(e1) * norm(e2)) {
            throw Error(ErrorKind::NotStrictlyConvex, "collinear triple at vertex " + std::to_string(i));
        }
    }
    if (polygon_area(pts) < 0.0) std::reverse(pts.begin() + 1, pts.end());
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Point e1 = pts[i] - pts[(i + n - 1) % n];
        Point e2 = pts[(i + 1) % n] - pts[i];
        double c = cross(e1, e2);
        if (c <= 0.0) throw Error(ErrorKind::NotConvex, "reflex turn at vertex " + std::to_string(i));
        turning += std::atan2(c, dot(e1, e2));
    }
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
        throw Error(ErrorKind::NotConvex, "boundary winds more than once");
    }
    return ConvexPolygon::trusted(std::move(pts));
}

double interior_angle(const ConvexPolygon& P, std::size_t i) {
    const std::size_t n = P.size();
    Point v = P.vertex(i);
    Point a = P.vertex(i + n - 1) - v;
    Point c = P.vertex(i + 1) - v;
    return std::atan2(std::abs(cross(a, c)), dot(a, c));
}

Line side_line(const ConvexPolygon& P, std::size_t i) {
    Segment s = P.side(i);
    return Line{s.a, unit(s.b - s.a)};
}

namespace {

Point vertex_mean(const ConvexPolygon& P) {
    Point m;
    for (const Point& p : P.vertices()) m = m + p;
    return m / static_cast<double>(P.size());
}

}  // namespace

Line interior_bisector(const Line& l1, const Line& l2, const ConvexPolygon& P, Tolerance tol) {
    Point g = vertex_mean(P);
    Point n1 = perp(l1.direction), n2 = perp(l2.direction);
    if (dot(n1, g - l1.point) < 0) n1 = -1.0 * n1;
    if (dot(n2, g - l2.point) < 0) n2 = -1.0 * n2;
    double c1 = dot(n1, l1.point), c2 = dot(n2, l2.point);
    Point w = n1 - n2;
    double wn = norm(w);
    if (wn <= tol.eps) {
        throw Error(ErrorKind::DegenerateInput, "lines are parallel with equal inward normals");
    }
    // (n1 - n2).x = c1 - c2
    double c = c1 - c2;
    Point dir = unit(perp(w));
    Point foot = g + ((c - dot(w, g)) / (wn * wn)) * w;
    return Line{foot, dir};
}

SideBisector side_bisector(const ConvexPolygon& P, std::size_t a, std::size_t b) {
    auto make = [&](std::size_t i, Point& nrm, double& c) {
        Segment s = P.side(i);
        nrm = perp(unit(s.b - s.a));  // inward for CCW
        Point anchor = norm(s.a) <= norm(s.b) ? s.a : s.b;
        c = dot(nrm, anchor);
    };
    SideBisector f{};
    make(a, f.na, f.ca);
    make(b, f.nb, f.cb);
    return f;
}

bool bisector_hits_side(const ConvexPolygon& P, std::size_t a, std::size_t b, std::size_t z, Tolerance tol,
                        bool* ambiguous) {
    SideBisector f = side_bisector(P, a, b);
    Segment s = P.side(z);
    double g = f.gradient_norm();
    double fa = f.eval(s.a) / g, fb = f.eval(s.b) / g;  // signed distances to the bisector
    double band = tol.eps * s.length();
    bool strict = (fa < -band && fb > band) || (fa > band && fb < -band);
    bool near = std::abs(fa) <= band || std::abs(fb) <= band;
    if (ambiguous) *ambiguous = near;
    return strict || near;
}

ConvexPolygon translated(const ConvexPolygon& P, Point shift) {
    std::vector<Point> v = P.vertices();
    for (Point& p : v) p = p + shift;
    return ConvexPolygon::trusted(std::move(v));
}

}  // namespace sidedisk
