#include "sidedisk/realizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <queue>
#include <string>

#include "sidedisk/constructions.hpp"
#include "sidedisk/error.hpp"

namespace sidedisk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kHalvings = 60;
constexpr double kSkews[] = {0.02, 0.1, 0.3};

// true iff c lies strictly inside the cyclic arc from a to b (a < b)
bool strictly_inside(int a, int b, int c) { return a < c && c < b; }

bool chords_cross(Edge x, Edge y) {
    if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second) return false;
    return strictly_inside(x.first, x.second, y.first) != strictly_inside(x.first, x.second, y.second);
}

}  // namespace

OuterplanarInput parse_outerplanar(int n, std::vector<Edge> chords) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "graph needs n >= 3");
    for (Edge& c : chords) {
        if (c.first < 0 || c.first >= n || c.second < 0 || c.second >= n)
            throw Error(ErrorKind::InvalidChord, "chord endpoint out of range");
        if (c.first == c.second) throw Error(ErrorKind::InvalidChord, "chord is a loop");
        if (c.first > c.second) std::swap(c.first, c.second);
        if (c.second - c.first == 1 || c.second - c.first == n - 1)
            throw Error(ErrorKind::InvalidChord,
                        "chord {" + std::to_string(c.first) + "," + std::to_string(c.second) + "} is a cycle edge");
    }
    std::sort(chords.begin(), chords.end());
    if (std::adjacent_find(chords.begin(), chords.end()) != chords.end())
        throw Error(ErrorKind::InvalidChord, "duplicate chord");
    for (std::size_t x = 0; x < chords.size(); ++x)
        for (std::size_t y = x + 1; y < chords.size(); ++y)
            if (chords_cross(chords[x], chords[y]))
                throw Error(ErrorKind::NotOuterplanar,
                            "chords {" + std::to_string(chords[x].first) + "," + std::to_string(chords[x].second) +
                                "} and {" + std::to_string(chords[y].first) + "," + std::to_string(chords[y].second) +
                                "} cross");
    return OuterplanarInput{n, std::move(chords)};
}

IntersectionGraph as_graph(const OuterplanarInput& G) { return cycle_with_chords(G.n, G.chords); }

std::vector<OuterplanarInput> all_outerplanar(int n, bool up_to_symmetry) {
    if (n < 3) throw Error(ErrorKind::TooFewVertices, "graph needs n >= 3");
    std::vector<Edge> cand;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1)) cand.emplace_back(i, j);
    std::vector<std::vector<Edge>> sets;
    std::vector<Edge> cur;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        sets.push_back(cur);
        for (std::size_t k = from; k < cand.size(); ++k) {
            bool ok = true;
            for (const Edge& e : cur)
                if (chords_cross(e, cand[k])) ok = false;
            if (!ok) continue;
            cur.push_back(cand[k]);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    grow(grow, 0);
    std::vector<OuterplanarInput> out;
    if (!up_to_symmetry) {
        for (auto& s : sets) out.push_back(OuterplanarInput{n, std::move(s)});
        return out;
    }
    for (auto& s : sets) {
        std::vector<Edge> best;
        bool first = true;
        for (int refl = 0; refl < 2; ++refl)
            for (int rot = 0; rot < n; ++rot) {
                std::vector<Edge> img;
                for (auto [a, b] : s) {
                    int x = refl ? (n - a) % n : a, y = refl ? (n - b) % n : b;
                    x = (x + rot) % n;
                    y = (y + rot) % n;
                    img.emplace_back(std::min(x, y), std::max(x, y));
                }
                std::sort(img.begin(), img.end());
                if (first || img < best) best = std::move(img);
                first = false;
            }
        if (best == s) out.push_back(OuterplanarInput{n, s});
    }
    return out;
}

FaceTree face_tree(const OuterplanarInput& G) {
    const int n = G.n;
    if (n == 4 && G.chords.empty()) throw Error(ErrorKind::NotRealizable, "the 4-cycle has no side-disk realization");
    std::vector<std::vector<int>> partner(static_cast<std::size_t>(n));
    for (auto [a, b] : G.chords) {
        partner[a].push_back(b);
        partner[b].push_back(a);
    }
    FaceTree F;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> regions;
    regions.emplace_back();
    for (int v = 0; v < n; ++v) regions.back().push_back(v);
    while (!regions.empty()) {
        std::vector<int> R = std::move(regions.back());
        regions.pop_back();
        const int m = static_cast<int>(R.size());
        for (int k = 0; k < m; ++k) pos[R[k]] = k;
        int pi = -1, pj = -1;
        for (int k = 0; k < m && pi < 0; ++k)
            for (int w : partner[R[k]]) {
                int p = pos[w];
                if (p < 0) continue;
                int d = std::abs(p - k);
                if (d != 1 && d != m - 1) {
                    pi = std::min(k, p);
                    pj = std::max(k, p);
                    break;
                }
            }
        for (int v : R) pos[v] = -1;
        if (pi < 0) {
            F.faces.push_back(std::move(R));
            continue;
        }
        std::vector<int> a(R.begin() + pi, R.begin() + pj + 1), b(R.begin() + pj, R.end());
        b.insert(b.end(), R.begin(), R.begin() + pi + 1);
        regions.push_back(std::move(a));
        regions.push_back(std::move(b));
    }
    // canonical order: each face starts at its smallest vertex, faces sorted
    for (auto& f : F.faces) std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    std::sort(F.faces.begin(), F.faces.end());

    const int nf = static_cast<int>(F.faces.size());
    F.neighbors.assign(static_cast<std::size_t>(nf), {});
    std::map<Edge, int> owner;
    for (int x = 0; x < nf; ++x) {
        const auto& f = F.faces[x];
        for (std::size_t k = 0; k < f.size(); ++k) {
            int u = f[k], w = f[(k + 1) % f.size()];
            int d = std::abs(u - w);
            if (d == 1 || d == n - 1) continue;
            Edge e{std::min(u, w), std::max(u, w)};
            auto it = owner.find(e);
            if (it == owner.end()) {
                owner.emplace(e, x);
            } else {
                F.neighbors[x].push_back(it->second);
                F.neighbors[it->second].push_back(x);
            }
        }
    }
    for (auto& nb : F.neighbors) std::sort(nb.begin(), nb.end());

    for (int x = 0; x < nf; ++x)
        if (F.faces[x].size() != 4) {
            F.start = {x};
            return F;
        }
    // every face is a quadrilateral: start from the first neighbouring pair
    F.start = {0, F.neighbors[0].front()};
    return F;
}

GoodnessReport check_good(const ConvexPolygon& P, Tolerance tol) {
    GoodnessReport g;
    const int n = static_cast<int>(P.size());
    ProperReport pr = proper_report(P);
    g.min_overlap = pr.min_overlap;
    g.worst_pair = pr.worst_overlap;
    // a touching pair counts as intersecting in Closed mode but has no overlap
    g.proper = pr.certified(kProperMargin);
    if (pr.min_overlap >= kProperMargin && !g.proper) {
        g.min_overlap = -pr.min_separation;
        g.worst_pair = pr.worst_separation;
    }

    std::vector<Disk> D = side_disks(P);
    g.min_vertex_clearance = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        Point p = P.vertex(k);
        for (int j = 0; j < n; ++j) {
            if (j == k || j == (k + n - 1) % n) continue;
            double c = (dist(p, D[j].center) - D[j].radius) / D[j].radius;
            if (c < g.min_vertex_clearance) {
                g.min_vertex_clearance = c;
                g.worst_vertex = k;
                g.worst_side = j;
            }
        }
    }
    g.vertices_clear = g.min_vertex_clearance >= kProperMargin;

    g.min_angle = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double a = interior_angle(P, k);
        if (a < g.min_angle) {
            g.min_angle = a;
            g.min_angle_vertex = k;
        }
    }
    g.angles_ok = g.min_angle >= kPi / 3 - tol.eps;
    return g;
}

std::string GoodnessReport::failures() const {
    std::string s;
    auto add = [&](const std::string& x) { s += (s.empty() ? "" : "; ") + x; };
    if (!proper)
        add("disks " + std::to_string(worst_pair.first) + "," + std::to_string(worst_pair.second) +
            " overlap only " + std::to_string(min_overlap));
    if (!vertices_clear)
        add("vertex " + std::to_string(worst_vertex) + " lies in the disk of side " + std::to_string(worst_side));
    if (!angles_ok)
        add("interior angle at vertex " + std::to_string(min_angle_vertex) + " is " + std::to_string(min_angle) +
            " < pi/3");
    return s;
}

// ---------------------------------------------------------------- realize

namespace {

struct Labeled {
    std::vector<Point> v;
    std::vector<int> label;  // graph vertex of side k
};

std::vector<Edge> expected_edges(const IntersectionGraph& G, const std::vector<char>& present) {
    std::vector<Edge> out;
    for (auto [a, b] : G.edges)
        if (present[a] && present[b]) out.emplace_back(a, b);
    return out;
}

bool certify(const Labeled& cand, const std::vector<Edge>& want, Tolerance tol) {
    ConvexPolygon P;
    try {
        P = validate_convex_polygon(cand.v, tol);
    } catch (const Error&) {
        return false;
    }
    if (!(P.vertex(1) == cand.v[1])) return false;
    if (!proper_report(P).certified(kProperMargin)) return false;
    if (!check_good(P, tol).good()) return false;
    IntersectionGraph H = graph_bruteforce(P, IntersectionMode::Closed, tol);
    std::vector<Edge> got;
    got.reserve(H.edges.size());
    for (auto [i, j] : H.edges) {
        int a = cand.label[i], b = cand.label[j];
        got.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(got.begin(), got.end());
    return got == want;
}

Labeled start_polygon(const FaceTree& F) {
    Labeled L;
    if (F.start.size() == 1) {
        const auto& f = F.faces[F.start[0]];
        ConvexPolygon P = regular_polygon(static_cast<int>(f.size()));
        L.v.assign(P.vertices().begin(), P.vertices().end());
        L.label = f;
        return L;
    }
    // two quadrilaterals sharing a chord: the hexagon whose long sides 2 and 5 meet
    const auto& f0 = F.faces[F.start[0]];
    const auto& f1 = F.faces[F.start[1]];
    std::vector<int> cyc(f0.begin(), f0.end());
    cyc.insert(cyc.end(), f1.begin(), f1.end());
    std::sort(cyc.begin(), cyc.end());
    cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
    // the shared chord joins positions p and p + 3 of the six-cycle
    int p = 0;
    for (int k = 0; k < 3; ++k) {
        int a = cyc[k], b = cyc[k + 3];
        bool in0 = std::count(f0.begin(), f0.end(), a) && std::count(f0.begin(), f0.end(), b);
        bool in1 = std::count(f1.begin(), f1.end(), a) && std::count(f1.begin(), f1.end(), b);
        if (in0 && in1) p = k;
    }
    L.v = {{-1, 0}, {0, -1}, {1, 0}, {1, 3}, {0, 4}, {-1, 3}};
    L.label.resize(6);
    for (int k = 0; k < 6; ++k) L.label[k] = cyc[(k + p + 4) % 6];
    return L;
}

// Replaces the vertex shared by the sides labelled a and b with a cut plus the new sides.
// `chord` tells whether two labels share a chord of the input, i.e. whether a later
// ear will be cut at the vertex between them.
Labeled add_ear(const Labeled& cur, const std::vector<int>& path, const std::vector<Edge>& want,
                const std::function<bool(int, int)>& chord, Tolerance tol) {
    const int n = static_cast<int>(cur.v.size());
    const int a = path.front(), b = path.back();
    const int t = static_cast<int>(path.size()) - 2;
    int before = -1;
    for (int k = 0; k < n; ++k) {
        int x = cur.label[k], y = cur.label[(k + 1) % n];
        if ((x == a && y == b) || (x == b && y == a)) before = k;
    }
    if (before < 0) throw Error(ErrorKind::ConstructionFailed, "chord sides are not adjacent in the partial polygon");
    const int vb = (before + 1) % n;
    // labels of the new sides from A to C
    std::vector<int> inner(path.begin() + 1, path.end() - 1);
    if (cur.label[before] == b) std::reverse(inner.begin(), inner.end());

    const Point B = cur.v[vb], Ap = cur.v[(vb + n - 1) % n], Cp = cur.v[(vb + 1) % n];
    const Point ua = unit(Ap - B), uc = unit(Cp - B);
    // The cut end nearer to B keeps the larger share of the turn.
    // Favour the end that will be cut again, otherwise repeated ears there flatten it.
    const bool again_a = chord(cur.label[before], inner.front());
    const bool again_c = chord(inner.back(), cur.label[vb]);
    std::vector<std::pair<double, double>> skews;
    if (again_a != again_c)
        for (double s : kSkews) skews.push_back(again_a ? std::pair{s, 1.0} : std::pair{1.0, s});
    skews.emplace_back(1.0, 1.0);
    double delta = 0.25 * std::min(dist(Ap, B), dist(Cp, B));
    for (int h = 0; h <= kHalvings; ++h, delta *= 0.5) {
        for (auto [sa, sc] : skews) {
            const Point A = B + (delta * sa) * ua, C = B + (delta * sc) * uc;
            const Point dir = C - A;
            const Point out{dir.y / norm(dir), -dir.x / norm(dir)};
            double eta = 0.25;
            for (int g = 0; g <= (t >= 2 ? kHalvings : 0); ++g, eta *= 0.5) {
                Labeled cand;
                for (int k = 0; k < n; ++k) {
                    if (k == vb) {
                        cand.v.push_back(A);
                        for (int i = t - 1; i >= 1; --i) {
                            double s = static_cast<double>(i) / t;
                            cand.v.push_back(C + s * (A - C) + (eta * norm(dir) * 4.0 * s * (1.0 - s)) * out);
                        }
                        cand.v.push_back(C);
                    } else {
                        cand.v.push_back(cur.v[k]);
                    }
                }
                for (int k = 0; k < n; ++k) {
                    cand.label.push_back(cur.label[k]);
                    if (k == before)
                        cand.label.insert(cand.label.end(), inner.begin(), inner.end());
                }
                // vertex vb became t + 1 vertices; sides after `before` shifted accordingly
                if (vb == 0) {
                    std::rotate(cand.label.begin(), cand.label.end() - t, cand.label.end());
                }
                if (certify(cand, want, tol)) return cand;
            }
        }
    }
    throw Error(ErrorKind::ConstructionFailed, "no certified ear insertion within " + std::to_string(kHalvings) +
                                                   " halvings");
}

}  // namespace

ConvexPolygon realize(const OuterplanarInput& G, Tolerance tol) {
    FaceTree F = face_tree(G);
    const IntersectionGraph target = as_graph(G);
    const int nf = static_cast<int>(F.faces.size());
    std::vector<char> present(static_cast<std::size_t>(G.n), 0), done(static_cast<std::size_t>(nf), 0);

    Labeled cur = start_polygon(F);
    for (int x : F.start) done[x] = 1;
    for (int v : cur.label) present[v] = 1;
    if (!certify(cur, expected_edges(target, present), tol))
        throw Error(ErrorKind::ConstructionFailed, "base polygon does not certify");

    auto is_chord = [&](int a, int b) {
        int d = std::abs(a - b);
        return d != 1 && d != G.n - 1 && target.has_edge(std::min(a, b), std::max(a, b));
    };
    std::queue<int> q;
    for (int x : F.start) q.push(x);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : F.neighbors[x]) {
            if (done[y]) continue;
            done[y] = 1;
            // path through the new face between the endpoints of the shared chord
            const auto& f = F.faces[y];
            const int m = static_cast<int>(f.size());
            int p = -1;
            for (int k = 0; k < m && p < 0; ++k)
                if (present[f[k]] && present[f[(k + 1) % m]]) p = k;
            std::vector<int> path;
            for (int k = 0; k < m; ++k) path.push_back(f[(p + 1 + k) % m]);
            for (int v : path) present[v] = 1;
            cur = add_ear(cur, path, expected_edges(target, present), is_chord, tol);
            q.push(y);
        }
    }

    // relabel so that side i carries vertex i
    const int n = G.n;
    std::vector<Point> v = cur.v;
    std::vector<int> lab = cur.label;
    if (lab[1] != (lab[0] + 1) % n) {
        // labels decrease counter-clockwise: mirror, then restore the orientation
        std::vector<Point> w(n);
        std::vector<int> wl(n);
        for (int j = 0; j < n; ++j) {
            const Point& s = v[(n - j) % n];
            w[j] = {-s.x, s.y};
            wl[j] = lab[(2 * n - j - 1) % n];
        }
        v = std::move(w);
        lab = std::move(wl);
    }
    int s = static_cast<int>(std::find(lab.begin(), lab.end(), 0) - lab.begin());
    std::rotate(v.begin(), v.begin() + s, v.end());
    ConvexPolygon P = validate_convex_polygon(std::move(v), tol);
    IntersectionGraph H = graph_bruteforce(P, IntersectionMode::Closed, tol);
    if (H.edges != target.edges) throw Error(ErrorKind::ConstructionFailed, "final labelling does not match the input");
    return P;
}

// ---------------------------------------------------------------- subdivision margins

SubdivisionReport subdivision_margins(Point A, Point B, Point C, Point Ap, Point Cp, int k, Tolerance tol) {
    if (k < 2) throw Error(ErrorKind::PreconditionFailed, "need at least two subdivision segments");
    const double la = dist(A, B), lc = dist(C, B);
    if (!(la > 0 && lc > 0) || std::abs(la - lc) > tol.eps * std::max(la, lc))
        throw Error(ErrorKind::PreconditionFailed, "triangle is not isosceles with apex B");
    const double beta = std::atan2(std::abs(cross(A - B, C - B)), dot(A - B, C - B));
    if (beta < kPi / 3 - tol.eps) throw Error(ErrorKind::PreconditionFailed, "apex angle below pi/3");
    auto interior = [&](Point X, Point Y) {
        // X strictly between Y and B on one line
        Point d = Y - B;
        double s = dot(X - B, d) / dot(d, d);
        return std::abs(cross(X - B, d)) <= tol.eps * norm(d) * norm(d) && s > 0 && s < 1;
    };
    if (!interior(A, Ap) || !interior(C, Cp))
        throw Error(ErrorKind::PreconditionFailed, "A and C must lie inside A'B and BC'");

    const Point ua = unit(B - A), uc = unit(B - C);
    const double r = dist(A, C) / (2.0 * k);
    const Disk da = disk_from_segment({A, Ap}), dc = disk_from_segment({C, Cp});
    SubdivisionReport rep;
    rep.min_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
        Point q0 = C + (static_cast<double>(i) / k) * (A - C), q1 = C + (static_cast<double>(i + 1) / k) * (A - C);
        Point mid = midpoint(q0, q1);
        SubdivisionMargin e;
        e.index = i;
        e.radius = r;
        e.dist_a = std::abs(dot(mid - A, ua));
        e.dist_c = std::abs(dot(mid - C, uc));
        e.constrained_a = i <= k - 2;
        e.constrained_c = i >= 1;
        Disk dq{mid, r};
        e.disjoint_a = !disks_intersect(dq, da, IntersectionMode::Closed, tol);
        e.disjoint_c = !disks_intersect(dq, dc, IntersectionMode::Closed, tol);
        if (e.constrained_a) {
            rep.min_ratio = std::min(rep.min_ratio, e.dist_a / r);
            rep.all_disjoint &= e.disjoint_a;
        }
        if (e.constrained_c) {
            rep.min_ratio = std::min(rep.min_ratio, e.dist_c / r);
            rep.all_disjoint &= e.disjoint_c;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

}  // namespace sidedisk
