#include "sidedisk/side_disks.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "sidedisk/tree_decomposition.hpp"

namespace sidedisk {

namespace {

std::uint64_t key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) | static_cast<std::uint32_t>(j);
}

void normalize(std::vector<Edge>& e) {
    for (auto& [i, j] : e)
        if (i > j) std::swap(i, j);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
}

}  // namespace

bool IntersectionGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), Edge{i, j});
}

std::vector<std::vector<int>> IntersectionGraph::adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<Disk> side_disks(const ConvexPolygon& P) {
    std::vector<Disk> d;
    d.reserve(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        Segment s = P.side(i);
        d.push_back(Disk{s.midpoint(), 0.5 * s.length()});
    }
    return d;
}

bool sides_intersect(const ConvexPolygon& P, int i, int j, IntersectionMode mode, Tolerance tol) {
    return segment_disks_intersect(P.side(static_cast<std::size_t>(i)), P.side(static_cast<std::size_t>(j)), mode,
                                   tol);
}

IntersectionGraph graph_bruteforce(const ConvexPolygon& P, IntersectionMode mode, Tolerance tol) {
    IntersectionGraph G;
    G.n = static_cast<int>(P.size());
    G.mode = mode;
    for (int i = 0; i < G.n; ++i)
        for (int j = i + 1; j < G.n; ++j)
            if (sides_intersect(P, i, j, mode, tol)) G.edges.emplace_back(i, j);
    return G;
}

IntersectionGraph graph_from_decomposition(const ConvexPolygon& P, const TreeDecomposition& T, IntersectionMode mode,
                                           Tolerance tol) {
    IntersectionGraph G;
    G.n = static_cast<int>(P.size());
    G.mode = mode;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(T.bags.size() * 8);
    // preorder over the bag tree
    std::vector<std::vector<int>> children(T.bags.size());
    for (const Bag& b : T.bags)
        if (b.parent >= 0) children[b.parent].push_back(b.id);
    std::vector<int> stack{T.root};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const Bag& b = T.bags[id];
        for (int x = 0; x < b.count; ++x)
            for (int y = x + 1; y < b.count; ++y) {
                int i = b.sides[x], j = b.sides[y];
                if (i == j || !seen.insert(key(i, j)).second) continue;
                if (sides_intersect(P, i, j, mode, tol)) G.edges.emplace_back(std::min(i, j), std::max(i, j));
            }
        for (auto it = children[id].rbegin(); it != children[id].rend(); ++it) stack.push_back(*it);
    }
    std::sort(G.edges.begin(), G.edges.end());
    return G;
}

IntersectionGraph make_graph(int n, std::vector<Edge> edges, IntersectionMode mode) {
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw Error(ErrorKind::InvalidArgument, "edge out of range");
    }
    normalize(edges);
    return IntersectionGraph{n, std::move(edges), mode};
}

IntersectionGraph cycle_with_chords(int n, const std::vector<Edge>& chords) {
    std::vector<Edge> e(chords);
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(e));
}

bool dihedral_isomorphic(const IntersectionGraph& G, const IntersectionGraph& H) {
    if (G.n != H.n) throw Error(ErrorKind::SizeMismatch, "graphs have different vertex counts");
    if (G.edges.size() != H.edges.size()) return false;
    const int n = G.n;
    std::unordered_set<std::uint64_t> target;
    target.reserve(H.edges.size() * 2);
    for (auto [i, j] : H.edges) target.insert(key(i, j));
    for (int refl = 0; refl < 2; ++refl) {
        for (int k = 0; k < n; ++k) {
            auto map = [&](int i) { return refl ? ((k - i) % n + n) % n : (i + k) % n; };
            bool ok = true;
            for (auto [i, j] : G.edges) {
                if (!target.count(key(map(i), map(j)))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

bool check_edge_bound(const IntersectionGraph& G) {
    return static_cast<long long>(G.edges.size()) <= 3LL * G.n - 6;
}

std::string to_edge_list(const IntersectionGraph& G) {
    std::ostringstream os;
    for (auto [i, j] : G.edges) os << i << ' ' << j << '\n';
    return os.str();
}

std::string to_dot(const IntersectionGraph& G) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int i = 0; i < G.n; ++i) os << "  " << i << ";\n";
    for (auto [i, j] : G.edges) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

ProperReport proper_report(const ConvexPolygon& P) {
    ProperReport r;
    r.min_overlap = std::numeric_limits<double>::infinity();
    r.min_separation = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(P.size());
    std::vector<double> rad(n);
    for (int i = 0; i < n; ++i) rad[i] = 0.5 * P.side(i).length();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double g = segment_disk_gap(P.side(i), P.side(j)) / std::min(rad[i], rad[j]);
            if (g < 0) {
                if (-g < r.min_overlap) {
                    r.min_overlap = -g;
                    r.worst_overlap = {i, j};
                }
            } else if (g < r.min_separation) {
                r.min_separation = g;
                r.worst_separation = {i, j};
            }
        }
    return r;
}

}  // namespace sidedisk
