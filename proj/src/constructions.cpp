#include "sidedisk/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "sidedisk/rng.hpp"

namespace sidedisk {

namespace {

constexpr double kPi = std::numbers::pi;

// gadget shape search: weights of log margin and log shortest new side against log tip deficit
constexpr double kMarginWeight = 0.1;
constexpr double kSideWeight = 0.25;

std::vector<double> log_grid(double lo, double hi, int k) {
    std::vector<double> g;
    for (int i = 0; i < k; ++i) g.push_back(lo * std::pow(hi / lo, k == 1 ? 0.0 : double(i) / (k - 1)));
    return g;
}

}  // namespace

ConvexPolygon regular_polygon(int n, double circumradius) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "regular polygon needs n >= 3");
    if (!(circumradius > 0)) throw Error(ErrorKind::InvalidArgument, "circumradius must be positive");
    std::vector<Point> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * kPi * k / n;
        v[k] = {circumradius * std::cos(a), circumradius * std::sin(a)};
    }
    return ConvexPolygon::trusted(std::move(v));
}

ConvexPolygon base_quadrilateral() {
    return ConvexPolygon::trusted({{1, 0}, {0, 2}, {-1, 0}, {0, -1}});
}

ConvexPolygon jittered_ellipse(int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "ellipse polygon needs n >= 3");
    CounterRng rng(seed, 0);
    std::vector<Point> v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * kPi * (k + 0.4 * rng.uniform()) / n;
        v[k] = {2.0 * std::cos(a), std::sin(a)};
    }
    return ConvexPolygon::trusted(std::move(v));
}

ConvexPolygon random_convex_polygon(int n, std::uint64_t seed, Tolerance tol) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "random polygon needs n >= 3");
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        CounterRng rng(seed, attempt);
        // split sorted coordinates into two monotone chains per axis
        auto components = [&]() {
            std::vector<double> c(static_cast<std::size_t>(n));
            for (double& x : c) x = rng.uniform();
            std::sort(c.begin(), c.end());
            double lo = c.front(), hi = c.back();
            std::vector<double> out;
            out.reserve(c.size());
            double last1 = lo, last2 = lo;
            for (int k = 1; k + 1 < n; ++k) {
                if (rng.next() & 1ULL) {
                    out.push_back(c[k] - last1);
                    last1 = c[k];
                } else {
                    out.push_back(last2 - c[k]);
                    last2 = c[k];
                }
            }
            out.push_back(hi - last1);
            out.push_back(last2 - hi);
            return out;
        };
        std::vector<double> xs = components(), ys = components();
        for (int k = n - 1; k > 0; --k) std::swap(ys[k], ys[rng.below(static_cast<std::uint64_t>(k) + 1)]);
        std::vector<Point> e(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) e[k] = {xs[k], ys[k]};
        std::sort(e.begin(), e.end(), [](Point a, Point b) { return std::atan2(a.y, a.x) < std::atan2(b.y, b.x); });
        std::vector<Point> v(static_cast<std::size_t>(n));
        Point p{0, 0}, lo{0, 0};
        for (int k = 0; k < n; ++k) {
            v[k] = p;
            p = p + e[k];
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
        }
        for (Point& q : v) q = q - lo;
        try {
            return validate_convex_polygon(std::move(v), tol);
        } catch (const Error&) {
        }
    }
    throw Error(ErrorKind::GenerationFailed, "no strictly convex sample after 100 draws");
}

// ---------------------------------------------------------------- gadget

namespace {

struct PairTable {
    int n = 0;
    std::vector<char> edge;  // n*n
    bool at(int i, int j) const { return edge[static_cast<std::size_t>(i) * n + j] != 0; }
};

PairTable closed_graph_table(const ConvexPolygon& P, Tolerance tol) {
    PairTable t;
    t.n = static_cast<int>(P.size());
    t.edge.assign(static_cast<std::size_t>(t.n) * t.n, 0);
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            if (sides_intersect(P, i, j, IntersectionMode::Closed, tol))
                t.edge[static_cast<std::size_t>(i) * t.n + j] = t.edge[static_cast<std::size_t>(j) * t.n + i] = 1;
    return t;
}

struct Certificate {
    double overlap = std::numeric_limits<double>::infinity();
    double separation = std::numeric_limits<double>::infinity();
};

// Checks the gadget contract on Q; returns false on any violation.
bool certify(const PairTable& old, const std::vector<Point>& qv, int b, int m, double margin, double old_sep,
             Tolerance tol, Certificate& cert) {
    ConvexPolygon Q;
    try {
        Q = validate_convex_polygon(qv, tol);
    } catch (const Error&) {
        return false;
    }
    if (!(Q.vertex(0) == qv[0]) || !(Q.vertex(1) == qv[1])) return false;  // orientation flipped
    const int n = static_cast<int>(qv.size());
    auto is_new = [&](int k) { return k >= b && k < b + m; };
    auto old_index = [&](int k) { return k < b ? k : k - m; };
    std::vector<double> rad(n);
    for (int k = 0; k < n; ++k) rad[k] = 0.5 * Q.side(k).length();
    // cheap checks on the new block first
    for (int i = b; i < b + m; ++i)
        for (int j = i + 1; j < b + m; ++j) {
            double g = segment_disk_gap(Q.side(i), Q.side(j)) / std::min(rad[i], rad[j]);
            if (-g < margin) return false;
        }
    // only pairs touching the new block or the two shortened neighbours can change
    std::vector<char> touched(n, 0);
    for (int k = b - 1; k <= b + m; ++k) touched[(k + n) % n] = 1;
    double sep_floor = std::min(margin, old_sep);
    for (int i = 0; i < n; ++i) {
        if (!touched[i]) continue;
        for (int j = 0; j < n; ++j) {
            if (j == i || (touched[j] && j < i)) continue;
            double gap = segment_disk_gap(Q.side(i), Q.side(j));
            double g = gap / std::min(rad[i], rad[j]);
            bool hit = gap_intersects(gap, rad[i], rad[j], IntersectionMode::Closed, tol);
            if (!is_new(i) && !is_new(j) && hit != old.at(old_index(i), old_index(j))) return false;
            if (hit) {
                if (-g < margin) return false;
                cert.overlap = std::min(cert.overlap, -g);
            } else {
                if (g < sep_floor) return false;
                cert.separation = std::min(cert.separation, g);
            }
        }
    }
    return true;
}

struct Shape {
    double kappa, tau, phi;
};

// Inserted points A', ..., C' for one parameter choice, with B at the origin.
bool gadget_points(Point A, Point C, int m, double delta, const Shape& s, std::vector<Point>& out) {
    Point uA = unit(A), uC = unit(C);
    double beta = std::atan2(std::abs(cross(uA, uC)), dot(uA, uC));
    Point w = unit(uA + uC);
    Point Ap = delta * uA, Cp = delta * uC;
    out.clear();
    out.push_back(Ap);
    if (m == 1) {
        out.push_back(Cp);
        return true;
    }
    double mu_max = (1.0 - std::tan(beta / 2)) * delta * std::cos(beta / 2);
    Point Bp = (s.kappa * mu_max) * w;
    if (m == 2) {
        out.push_back(Bp);
        out.push_back(Cp);
        return true;
    }
    Point d = Bp - Ap;
    double lab = norm(d);
    d = d / lab;
    auto circle = [&](double lam, Point& M, double& rho) {
        Point T = Cp + lam * (Bp - Cp);
        M = 0.5 * (Cp + T);
        rho = 0.5 * norm(T - Cp);
        return T;
    };
    auto gap = [&](double lam) {
        Point M;
        double rho;
        circle(lam, M, rho);
        return std::abs(cross(d, M - Ap)) - rho;
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        double mid = 0.5 * (lo + hi);
        (gap(mid) > 0 ? lo : hi) = mid;
    }
    double lam = hi + s.tau * (1.0 - hi);
    Point M;
    double rho;
    Point T = circle(lam, M, rho);
    Point f = Ap - M;
    double bq = dot(f, d), cq = dot(f, f) - rho * rho, disc = bq * bq - cq;
    if (!(disc > 0)) return false;
    double root = std::sqrt(disc);
    double s1 = -bq - root, s2 = -bq + root;
    if (!(s1 > 0 && s2 < lab)) return false;  // both crossings inside segment A'B'
    Point R = Ap + s2 * d;
    out.push_back(R);
    if (m == 4) {
        double tr = std::atan2(R.y - M.y, R.x - M.x), tt = std::atan2(T.y - M.y, T.x - M.x);
        double dth = std::remainder(tt - tr, 2 * kPi);
        double th = tr + s.phi * dth;
        out.push_back(M + rho * Point{std::cos(th), std::sin(th)});
    }
    out.push_back(T);
    out.push_back(Cp);
    return true;
}

int most_acute_vertex(const ConvexPolygon& P) {
    int best = 0;
    double ba = interior_angle(P, 0);
    for (int k = 1; k < static_cast<int>(P.size()); ++k) {
        double a = interior_angle(P, k);
        if (a < ba) {
            ba = a;
            best = k;
        }
    }
    return best;
}

}  // namespace

GadgetResult attach_gadget(const ConvexPolygon& P, int m, const GadgetOptions& opt) {
    if (m < 1 || m > 4) throw Error(ErrorKind::InvalidArgument, "gadget size must be 1..4");
    const int n = static_cast<int>(P.size());
    const int b = opt.vertex < 0 ? most_acute_vertex(P) : opt.vertex;
    if (b >= n) throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    double beta = interior_angle(P, b);
    if (!(beta < kPi / 2)) throw Error(ErrorKind::PreconditionFailed, "interior angle at the chosen vertex is not acute");
    ProperReport pr = proper_report(P);
    if (pr.min_overlap < opt.margin)
        throw Error(ErrorKind::PreconditionFailed, "input disk set is not proper at the required margin");

    const PairTable old = closed_graph_table(P, opt.tol);
    const Point B = P.vertex(b);
    const Point A = P.vertex(b + n - 1) - B, C = P.vertex(b + 1) - B;

    std::vector<double> kappas{0.5}, taus{0.5}, phis{0.5};
    // the feasible region shrinks like the squared distance of the angle from a right angle
    const double e2 = std::pow(kPi / 2 - beta, 2);
    if (m >= 2) kappas = log_grid(0.01, 0.95, 8);
    if (m >= 3) taus = log_grid(1e-3 * e2, 0.9, 10);
    if (m == 4) phis = log_grid(1e-4 * e2, 0.9, 12);

    double delta = 0.25 * std::min(norm(A), norm(C));
    std::vector<Point> ins, qv;
    for (int h = 0; h <= opt.max_halvings; ++h, delta *= 0.5) {
        double best_score = -std::numeric_limits<double>::infinity();
        GadgetResult best;
        bool found = false;
        for (double kappa : kappas)
            for (double tau : taus)
                for (double phi : phis) {
                    if (!gadget_points(A, C, m, delta, Shape{kappa, tau, phi}, ins)) continue;
                    qv.clear();
                    for (int k = 0; k < b; ++k) qv.push_back(P.vertex(k));
                    for (Point p : ins) qv.push_back(p + B);
                    for (int k = b + 1; k < n; ++k) qv.push_back(P.vertex(k));
                    double score = 0.0;
                    if (m == 4) {
                        ConvexPolygon tmp = ConvexPolygon::trusted(qv);
                        double tip = interior_angle(tmp, b + 3);
                        if (!(tip < kPi / 2)) continue;
                        double shortest = std::numeric_limits<double>::infinity();
                        for (int k = b; k < b + m; ++k) shortest = std::min(shortest, tmp.side(k).length());
                        score = std::log(kPi / 2 - tip) + kSideWeight * std::log(shortest / delta);
                    }
                    Certificate cert;
                    if (!certify(old, qv, b, m, opt.margin, pr.min_separation, opt.tol, cert)) continue;
                    score += kMarginWeight * std::log(std::min(cert.overlap, cert.separation));
                    if (!found || score > best_score) {
                        found = true;
                        best_score = score;
                        best.polygon = ConvexPolygon::trusted(qv);
                    }
                }
        if (found) {
            ProperReport fin = proper_report(best.polygon);
            best.overlap = fin.min_overlap;
            best.separation = fin.min_separation;
            best.vertex = b;
            best.delta = delta;
            best.halvings = h;
            for (int k = 0; k < n; ++k) best.old_block.push_back(k < b ? k : k + m);
            for (int k = b; k < b + m; ++k) best.new_block.push_back(k);
            if (m == 4) best.tip = b + 3;
            return best;
        }
    }
    throw Error(ErrorKind::ConstructionFailed,
                "no certified gadget of size " + std::to_string(m) + " at vertex " + std::to_string(b) + " within " +
                    std::to_string(opt.max_halvings) + " halvings");
}

// ---------------------------------------------------------------- extremal family

namespace {

// Kite with three acute corners, so that three gadget chains can grow side by side.
ConvexPolygon chain_base() {
    return ConvexPolygon::trusted({{0, -0.2}, {1, 0}, {0, 1.5}, {-1, 0}});
}

void record(ExtremalResult& R, const GadgetResult& g, int m) {
    for (auto& blk : R.blocks)
        for (int& k : blk) k = g.old_block[k];
    R.blocks.push_back(g.new_block);
    ExtremalStep st;
    st.m = m;
    st.vertex = g.vertex;
    st.delta = g.delta;
    st.overlap = g.overlap;
    st.separation = g.separation;
    st.tip_angle = g.tip >= 0 ? interior_angle(g.polygon, g.tip) : 0.0;
    R.steps.push_back(st);
    R.polygon = g.polygon;
}

}  // namespace

namespace {

struct ChainState {
    ExtremalResult result;
    std::vector<int> tips;  // current acute vertex of every chain
};

// Chain receiving the g-th size-4 gadget (g = 0, 1, ...). Chain 0 is deep and kept
// at the origin; the other two stay shallow because they lose relative precision.
std::size_t chain_of(int g) {
    static constexpr std::size_t order[] = {0, 0, 0, 0, 1, 1, 2, 2};
    return g < 8 ? order[g] : 0;
}

void attach_to_chain(ChainState& st, std::size_t c, int m, Tolerance tol) {
    ExtremalResult& R = st.result;
    if (c == 0) R.polygon = translated(R.polygon, -1.0 * R.polygon.vertex(st.tips[c]));
    GadgetOptions opt;
    opt.tol = tol;
    opt.vertex = st.tips[c];
    GadgetResult g = attach_gadget(R.polygon, m, opt);
    for (int& x : st.tips) x = g.old_block[x];
    st.tips[c] = g.tip;
    record(R, g, m);
}

ChainState chain_start() {
    ChainState st;
    st.result.polygon = chain_base();
    st.result.blocks = {{0, 1, 2, 3}};
    for (int k = 0; k < 4; ++k)
        if (interior_angle(st.result.polygon, k) < kPi / 2) st.tips.push_back(k);
    std::stable_sort(st.tips.begin(), st.tips.end(), [&](int x, int y) {
        return interior_angle(st.result.polygon, x) < interior_angle(st.result.polygon, y);
    });
    return st;
}

// States after 0, 1, 2, ... size-4 gadgets, shared by all n with the same tolerance.
ChainState chain_prefix(int gadgets, Tolerance tol) {
    static std::mutex mu;
    static std::map<double, std::vector<ChainState>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& states = cache[tol.eps];
    if (states.empty()) states.push_back(chain_start());
    while (static_cast<int>(states.size()) <= gadgets) {
        ChainState next = states.back();
        attach_to_chain(next, chain_of(static_cast<int>(states.size()) - 1), 4, tol);
        states.push_back(std::move(next));
    }
    return states[gadgets];
}

}  // namespace

ExtremalResult extremal_construction(int n, Tolerance tol) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "extremal polygon needs n >= 3");
    if (n == 3) {
        ExtremalResult R;
        R.polygon = regular_polygon(3);
        R.blocks = {{0, 1, 2}};
        return R;
    }
    const int t = n / 4, r = n % 4;
    ChainState st = chain_prefix(t - 1, tol);
    if (r > 0) {
        // shallowest chain first, the deep one last
        std::vector<int> depth(st.tips.size(), 0);
        for (int g = 0; g < t - 1; ++g) ++depth[chain_of(g)];
        std::vector<std::size_t> order(st.tips.size());
        for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return depth[x] < depth[y]; });
        for (std::size_t k = 0; k < order.size(); ++k) {
            ChainState trial = st;
            try {
                attach_to_chain(trial, order[k], r, tol);
                st = std::move(trial);
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ConstructionFailed || k + 1 == order.size()) throw;
            }
        }
    }
    return st.result;
}

ConvexPolygon extremal_polygon(int n, Tolerance tol) { return extremal_construction(n, tol).polygon; }

// ---------------------------------------------------------------- C4 probe

bool c4_probe(const ConvexPolygon& Q, Tolerance tol) {
    if (Q.size() != 4) throw Error(ErrorKind::WrongArity, "probe needs a quadrilateral");
    return sides_intersect(Q, 0, 2, IntersectionMode::Closed, tol) || sides_intersect(Q, 1, 3, IntersectionMode::Closed, tol);
}

MidpointCheck midpoint_inequality(const ConvexPolygon& Q) {
    if (Q.size() != 4) throw Error(ErrorKind::WrongArity, "midpoint inequality needs a quadrilateral");
    auto len = [&](int k) { return Q.side(k).length(); };
    auto mid = [&](int k) { return Q.side(k).midpoint(); };
    MidpointCheck c;
    c.slack02 = len(0) + len(2) - 2.0 * dist(mid(1), mid(3));
    c.slack13 = len(1) + len(3) - 2.0 * dist(mid(0), mid(2));
    return c;
}

bool MidpointCheck::holds(double tol) const { return slack02 >= -tol && slack13 >= -tol; }

ConvexPolygon random_quadrilateral(std::uint64_t seed, std::uint64_t trial) {
    CounterRng rng(seed, trial);
    for (;;) {
        std::vector<Point> p(4);
        for (Point& q : p) q = {rng.uniform(), rng.uniform()};
        // the hull is a quadrilateral iff some cyclic order is strictly convex
        std::sort(p.begin(), p.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
        Point c = 0.25 * (p[0] + p[1] + p[2] + p[3]);
        std::sort(p.begin(), p.end(), [c](Point a, Point b) {
            return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
        });
        bool convex = true;
        for (int k = 0; k < 4; ++k)
            if (cross(p[(k + 1) % 4] - p[k], p[(k + 2) % 4] - p[(k + 1) % 4]) <= 0) convex = false;
        if (!convex) continue;
        try {
            return validate_convex_polygon(p);
        } catch (const Error&) {
        }
    }
}

ProbeReport c4_probe_experiment(std::uint64_t trials, std::uint64_t seed, Tolerance tol, int threads) {
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    struct Part {
        std::uint64_t inter = 0, mid = 0;
        std::vector<std::uint64_t> fail;
    };
    std::vector<Part> parts(static_cast<std::size_t>(threads));
    auto work = [&](int w) {
        Part& pt = parts[w];
        for (std::uint64_t t = static_cast<std::uint64_t>(w); t < trials; t += static_cast<std::uint64_t>(threads)) {
            ConvexPolygon Q = random_quadrilateral(seed, t);
            bool hit = c4_probe(Q, tol);
            MidpointCheck mc = midpoint_inequality(Q);
            double scale = 0.0;
            for (int k = 0; k < 4; ++k) scale = std::max(scale, Q.side(k).length());
            bool mid = mc.holds(tol.eps * scale);
            pt.inter += hit;
            pt.mid += mid;
            if (!hit || !mid) pt.fail.push_back(t);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& th : pool) th.join();
    ProbeReport r;
    r.trials = trials;
    for (auto& pt : parts) {
        r.intersecting += pt.inter;
        r.midpoint_ok += pt.mid;
        r.failures.insert(r.failures.end(), pt.fail.begin(), pt.fail.end());
    }
    std::sort(r.failures.begin(), r.failures.end());
    return r;
}

}  // namespace sidedisk
