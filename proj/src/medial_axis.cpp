#include "sidedisk/medial_axis.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

namespace sidedisk {

namespace {

unsigned long long pair_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<unsigned long long>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

struct SideLines {
    std::vector<Point> normal;  // inward unit normals
    const ConvexPolygon* P;

    explicit SideLines(const ConvexPolygon& poly) : P(&poly) {
        normal.resize(poly.size());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            Segment s = poly.side(k);
            normal[k] = perp(unit(s.b - s.a));
        }
    }
    // signed offset of line k relative to origin o: dot(n_k, x - o) = off
    double offset(int k, Point o) const { return dot(normal[k], P->vertex(static_cast<std::size_t>(k)) - o); }
};

// Circle tangent to the lines of sides p, i, q: returns (center, radius).
std::pair<Point, double> tangent_circle(const SideLines& L, int p, int i, int q) {
    Point o = L.P->vertex(static_cast<std::size_t>(i));
    Point np = L.normal[p], ni = L.normal[i], nq = L.normal[q];
    double cp = L.offset(p, o), ci = L.offset(i, o), cq = L.offset(q, o);
    Point a1 = ni - np, a2 = nq - np;
    double b1 = ci - cp, b2 = cq - cp;
    double det = cross(a1, a2);
    Point y{(b1 * a2.y - b2 * a1.y) / det, (a1.x * b2 - a2.x * b1) / det};
    double h = dot(np, y) - cp;
    return {o + y, h};
}

struct Node {
    Point center;
    double h;
    std::vector<int> tangent;
};

int find_root(std::vector<int>& uf, int x) {
    while (uf[x] != x) {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    return x;
}

}  // namespace

bool MedialAxis::is_tangent(int id, int side) const {
    auto s = tangent_sides(id);
    return std::binary_search(s.begin(), s.end(), side);
}

MedialAxisVertex MedialAxis::vertex(int id) const {
    auto s = tangent_sides(id);
    return MedialAxisVertex{id, center_[id], radius_[id], std::vector<int>(s.begin(), s.end()), is_leaf(id)};
}

std::vector<int> MedialAxis::edges_on_bisector(int a, int b) const {
    unsigned long long k = pair_key(a, b);
    auto lo = std::lower_bound(bisector_index_.begin(), bisector_index_.end(), std::make_pair(k, -1));
    std::vector<int> out;
    for (auto it = lo; it != bisector_index_.end() && it->first == k; ++it) out.push_back(it->second);
    return out;
}

MedialAxis compute_medial_axis(const ConvexPolygon& P, Tolerance tol) {
    const int n = static_cast<int>(P.size());
    SideLines L(P);

    std::vector<Node> nodes;  // internal nodes in creation order
    nodes.reserve(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> raw_edges;  // node ids; leaves encoded as -(k+1)
    raw_edges.reserve(2 * static_cast<std::size_t>(n));

    std::vector<int> prev(n), next(n), origin(n), version(n, 0);
    for (int k = 0; k < n; ++k) {
        prev[k] = (k + n - 1) % n;
        next[k] = (k + 1) % n;
        origin[k] = -(k + 1);  // wavefront vertex between prev[k] and k starts at polygon vertex k
    }

    using Event = std::tuple<double, int, int>;  // (h, side, version)
    std::priority_queue<Event, std::vector<Event>, std::greater<>> pq;
    auto schedule = [&](int i) {
        ++version[i];
        auto [c, h] = tangent_circle(L, prev[i], i, next[i]);
        (void)c;
        pq.emplace(h, i, version[i]);
    };
    if (n > 3)
        for (int k = 0; k < n; ++k) schedule(k);

    int active = n;
    while (active > 3) {
        auto [h, i, ver] = pq.top();
        pq.pop();
        if (ver != version[i]) continue;
        int p = prev[i], q = next[i];
        auto [c, hh] = tangent_circle(L, p, i, q);
        int id = static_cast<int>(nodes.size());
        nodes.push_back(Node{c, hh, {p, i, q}});
        raw_edges.emplace_back(id, origin[i]);
        raw_edges.emplace_back(id, origin[q]);
        next[p] = q;
        prev[q] = p;
        origin[q] = id;
        version[i] = -1;
        --active;
        if (active > 3) {
            schedule(p);
            schedule(q);
        }
    }
    {
        int a = 0;
        while (version[a] < 0) ++a;
        int b = next[a], c3 = next[b];
        auto [c, hh] = tangent_circle(L, a, b, c3);
        int id = static_cast<int>(nodes.size());
        nodes.push_back(Node{c, hh, {a, b, c3}});
        raw_edges.emplace_back(id, origin[a]);
        raw_edges.emplace_back(id, origin[b]);
        raw_edges.emplace_back(id, origin[c3]);
    }

    // contract internal edges of (numerically) zero length
    const int raw = static_cast<int>(nodes.size());
    std::vector<int> uf(raw);
    std::iota(uf.begin(), uf.end(), 0);
    for (auto [a, b] : raw_edges) {
        if (b < 0) continue;
        const Node &na = nodes[a], &nb = nodes[b];
        double scale = std::max(na.h, nb.h);
        if (dist(na.center, nb.center) <= tol.eps * scale && std::abs(na.h - nb.h) <= tol.eps * scale) {
            int ra = find_root(uf, a), rb = find_root(uf, b);
            if (ra != rb) uf[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    for (int k = 0; k < raw; ++k) {
        int r = find_root(uf, k);
        if (r != k) nodes[r].tangent.insert(nodes[r].tangent.end(), nodes[k].tangent.begin(), nodes[k].tangent.end());
    }
    std::vector<std::vector<int>> nbr(raw);
    std::vector<std::vector<int>> leaf_nbr(n);
    for (auto [a, b] : raw_edges) {
        int ra = find_root(uf, a);
        if (b < 0) {
            int k = -b - 1;
            nbr[ra].push_back(b);
            leaf_nbr[k].push_back(ra);
        } else {
            int rb = find_root(uf, b);
            if (ra == rb) continue;
            nbr[ra].push_back(rb);
            nbr[rb].push_back(ra);
        }
    }

    // renumber internal roots in preorder from the largest inscribed disk
    int start = -1;
    for (int k = 0; k < raw; ++k) {
        if (uf[k] != k) continue;
        if (start < 0 || nodes[k].h > nodes[start].h) start = k;
    }
    std::vector<int> newid(raw, -1);
    std::vector<int> order;
    std::vector<int> stack{start};
    newid[start] = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        auto& nb = nbr[x];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
            int y = *it;
            if (y < 0 || newid[y] >= 0) continue;
            newid[y] = 0;  // mark; real id assigned on pop
            stack.push_back(y);
        }
    }
    const int I = static_cast<int>(order.size());
    for (int k = 0; k < I; ++k) newid[order[k]] = k;

    MedialAxis M;
    M.internal_ = I;
    const int V = I + n;
    M.center_.resize(V);
    M.radius_.resize(V);
    M.tangent_off_.assign(V + 1, 0);
    for (int k = 0; k < I; ++k) {
        Node& nd = nodes[order[k]];
        std::sort(nd.tangent.begin(), nd.tangent.end());
        nd.tangent.erase(std::unique(nd.tangent.begin(), nd.tangent.end()), nd.tangent.end());
        M.center_[k] = nd.center;
        M.radius_[k] = nd.h;
        M.tangent_off_[k + 1] = M.tangent_off_[k] + static_cast<int>(nd.tangent.size());
    }
    for (int k = 0; k < n; ++k) {
        M.center_[I + k] = P.vertex(static_cast<std::size_t>(k));
        M.radius_[I + k] = 0.0;
        M.tangent_off_[I + k + 1] = M.tangent_off_[I + k] + 2;
    }
    M.tangent_.resize(static_cast<std::size_t>(M.tangent_off_[V]));
    for (int k = 0; k < I; ++k) {
        const Node& nd = nodes[order[k]];
        std::copy(nd.tangent.begin(), nd.tangent.end(), M.tangent_.begin() + M.tangent_off_[k]);
    }
    for (int k = 0; k < n; ++k) {
        int a = (k + n - 1) % n, b = k;
        M.tangent_[M.tangent_off_[I + k]] = std::min(a, b);
        M.tangent_[M.tangent_off_[I + k] + 1] = std::max(a, b);
    }

    std::vector<std::vector<int>> adj(V);
    for (int k = 0; k < I; ++k) {
        for (int y : nbr[order[k]]) {
            int w = y < 0 ? I + (-y - 1) : newid[y];
            adj[k].push_back(w);
            if (w < k || w >= I) M.edges_.emplace_back(std::min(k, w), std::max(k, w));
        }
    }
    for (int k = 0; k < n; ++k)
        for (int r : leaf_nbr[k]) adj[I + k].push_back(newid[r]);
    std::sort(M.edges_.begin(), M.edges_.end());
    M.adj_off_.assign(V + 1, 0);
    for (int k = 0; k < V; ++k) {
        std::sort(adj[k].begin(), adj[k].end());
        M.adj_off_[k + 1] = M.adj_off_[k] + static_cast<int>(adj[k].size());
    }
    M.adj_.reserve(static_cast<std::size_t>(M.adj_off_[V]));
    for (auto& a : adj) M.adj_.insert(M.adj_.end(), a.begin(), a.end());

    for (int e = 0; e < static_cast<int>(M.edges_.size()); ++e) {
        auto [a, b] = M.edges_[e];
        auto sa = M.tangent_sides(a), sb = M.tangent_sides(b);
        std::vector<int> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
        for (std::size_t x = 0; x < common.size(); ++x)
            for (std::size_t y = x + 1; y < common.size(); ++y)
                M.bisector_index_.emplace_back(pair_key(common[x], common[y]), e);
    }
    std::sort(M.bisector_index_.begin(), M.bisector_index_.end());
    return M;
}

MedialAxisVertex max_inscribed_vertex(const MedialAxis& M) {
    if (M.internal_count() == 0) throw Error(ErrorKind::EmptyRange, "medial axis has no internal vertex");
    int best = 0;
    for (int k = 1; k < M.internal_count(); ++k)
        if (M.inradius(k) > M.inradius(best)) best = k;
    return M.vertex(best);
}

SplitResult find_split_side(const MedialAxis& M, const ConvexPolygon& P, int u, int v, int q, std::size_t* steps) {
    (void)P;
    const int n = M.polygon_size();
    auto off = [&](int x) { return ((x - u) % n + n) % n; };
    int len = off(v);
    if (len == 0) len = n;
    if (len <= 1) throw Error(ErrorKind::EmptyRange, "range (" + std::to_string(u) + "," + std::to_string(v) + ") is empty");

    auto best_in = [&](int id) {
        int best = -1, bo = len;
        for (int s : M.tangent_sides(id)) {
            int o = off(s);
            if (o > 0 && o < len && o < bo) {
                bo = o;
                best = s;
            }
        }
        return best;
    };

    if (int t = best_in(q); t >= 0) return {t, q};
    // walk along the chain of axis vertices tangent to both s_u and s_v
    std::vector<int> frontier{q}, seen{q};
    std::size_t hops = 0;
    while (!frontier.empty()) {
        std::vector<int> nextf;
        for (int x : frontier) {
            for (int w : M.neighbors(x)) {
                if (M.is_leaf(w) || std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
                if (!M.is_tangent(w, u) || !M.is_tangent(w, v)) continue;
                seen.push_back(w);
                ++hops;
                if (int t = best_in(w); t >= 0) {
                    if (steps) *steps += hops;
                    return {t, w};
                }
                nextf.push_back(w);
            }
        }
        frontier.swap(nextf);
    }
    throw Error(ErrorKind::PreconditionFailed,
                "no axis vertex tangent to sides " + std::to_string(u) + ", " + std::to_string(v) + " splits the range");
}

}  // namespace sidedisk
