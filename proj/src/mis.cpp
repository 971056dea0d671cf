#include "sidedisk/mis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>

#include "sidedisk/error.hpp"

namespace sidedisk {

namespace {

constexpr int kNone = std::numeric_limits<int>::min() / 4;

enum class NodeKind : std::uint8_t { Leaf, Introduce, Forget, Join };

struct SmallBag {
    std::array<int, 4> v{};
    int count = 0;

    int position(int s) const {
        for (int k = 0; k < count; ++k)
            if (v[k] == s) return k;
        return -1;
    }
    SmallBag with(int s) const {
        SmallBag b = *this;
        int k = b.count++;
        while (k > 0 && b.v[k - 1] > s) {
            b.v[k] = b.v[k - 1];
            --k;
        }
        b.v[k] = s;
        return b;
    }
    SmallBag without(int s) const {
        SmallBag b;
        for (int k = 0; k < count; ++k)
            if (v[k] != s) b.v[b.count++] = v[k];
        return b;
    }
};

struct Node {
    NodeKind kind = NodeKind::Leaf;
    int vertex = -1;
    int a = -1, b = -1;
    SmallBag bag;
    std::array<int, 16> best{};
};

// Reindexes a mask over `from` to a mask over `to`; elements missing from `to` are dropped.
unsigned remap(unsigned mask, const SmallBag& from, const SmallBag& to) {
    unsigned out = 0;
    for (int k = 0; k < from.count; ++k)
        if (mask >> k & 1u) {
            int p = to.position(from.v[k]);
            if (p >= 0) out |= 1u << p;
        }
    return out;
}

class NiceDp {
public:
    NiceDp(const IntersectionGraph& G, const TreeDecomposition& T) : G_(G) {
        edges_.reserve(G.edges.size() * 2);
        for (auto [i, j] : G.edges) edges_.insert(key(i, j));
        build(T);
    }

    MisResult solve() {
        MisResult r;
        r.size = nodes_[root_].best[0];
        std::vector<char> in(static_cast<std::size_t>(G_.n), 0);
        std::vector<std::pair<int, unsigned>> stack{{root_, 0u}};
        while (!stack.empty()) {
            auto [id, mask] = stack.back();
            stack.pop_back();
            const Node& x = nodes_[id];
            switch (x.kind) {
                case NodeKind::Leaf:
                    break;
                case NodeKind::Introduce: {
                    int p = x.bag.position(x.vertex);
                    if (mask >> p & 1u) in[x.vertex] = 1;
                    stack.emplace_back(x.a, remap(mask & ~(1u << p), x.bag, nodes_[x.a].bag));
                    break;
                }
                case NodeKind::Forget: {
                    const Node& c = nodes_[x.a];
                    unsigned m0 = remap(mask, x.bag, c.bag);
                    unsigned m1 = m0 | 1u << c.bag.position(x.vertex);
                    stack.emplace_back(x.a, c.best[m1] >= c.best[m0] ? m1 : m0);
                    break;
                }
                case NodeKind::Join:
                    stack.emplace_back(x.b, mask);
                    stack.emplace_back(x.a, mask);
                    break;
            }
        }
        for (int v = 0; v < G_.n; ++v)
            if (in[v]) r.witness.push_back(v);
        return r;
    }

private:
    static std::uint64_t key(int i, int j) {
        if (i > j) std::swap(i, j);
        return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
    }

    int add(Node x) {
        nodes_.push_back(x);
        return static_cast<int>(nodes_.size()) - 1;
    }

    int leaf() {
        Node x;
        x.best.fill(kNone);
        x.best[0] = 0;
        return add(x);
    }

    int introduce(int child, int v) {
        const Node c = nodes_[child];
        Node x;
        x.kind = NodeKind::Introduce;
        x.vertex = v;
        x.a = child;
        x.bag = c.bag.with(v);
        x.best.fill(kNone);
        int p = x.bag.position(v);
        for (unsigned m = 0; m < (1u << x.bag.count); ++m) {
            int base = c.best[remap(m & ~(1u << p), x.bag, c.bag)];
            if (base == kNone) continue;
            if (!(m >> p & 1u)) {
                x.best[m] = base;
                continue;
            }
            bool ok = true;
            for (int k = 0; k < x.bag.count && ok; ++k)
                if (k != p && (m >> k & 1u) && edges_.count(key(v, x.bag.v[k]))) ok = false;
            if (ok) x.best[m] = base + 1;
        }
        return add(x);
    }

    int forget(int child, int v) {
        const Node c = nodes_[child];
        Node x;
        x.kind = NodeKind::Forget;
        x.vertex = v;
        x.a = child;
        x.bag = c.bag.without(v);
        x.best.fill(kNone);
        unsigned bit = 1u << c.bag.position(v);
        for (unsigned m = 0; m < (1u << x.bag.count); ++m) {
            unsigned m0 = remap(m, x.bag, c.bag);
            x.best[m] = std::max(c.best[m0], c.best[m0 | bit]);
        }
        return add(x);
    }

    int join(int left, int right) {
        Node x;
        x.kind = NodeKind::Join;
        x.a = left;
        x.b = right;
        x.bag = nodes_[left].bag;
        x.best.fill(kNone);
        for (unsigned m = 0; m < (1u << x.bag.count); ++m) {
            int l = nodes_[left].best[m], r = nodes_[right].best[m];
            if (l != kNone && r != kNone) x.best[m] = l + r - std::popcount(m);
        }
        return add(x);
    }

    // moves a node with bag `from` to bag `to`: forget first, then introduce
    int bridge(int id, const SmallBag& to) {
        SmallBag from = nodes_[id].bag;
        for (int k = 0; k < from.count; ++k)
            if (to.position(from.v[k]) < 0) id = forget(id, from.v[k]);
        for (int k = 0; k < to.count; ++k)
            if (nodes_[id].bag.position(to.v[k]) < 0) id = introduce(id, to.v[k]);
        return id;
    }

    void build(const TreeDecomposition& T) {
        const int B = static_cast<int>(T.bags.size());
        std::vector<std::vector<int>> children(B);
        for (const Bag& b : T.bags)
            if (b.parent >= 0) children[b.parent].push_back(b.id);
        std::vector<SmallBag> bag(B);
        for (const Bag& b : T.bags) {
            for (int s : b) bag[b.id] = bag[b.id].with(s);
        }
        nodes_.reserve(static_cast<std::size_t>(B) * 4 + 8);
        // postorder without recursion
        std::vector<int> order, stack{T.root};
        order.reserve(B);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            order.push_back(x);
            for (int c : children[x]) stack.push_back(c);
        }
        std::vector<int> top(B, -1);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int x = *it;
            int acc = -1;
            for (int c : children[x]) {
                int up = bridge(top[c], bag[x]);
                acc = acc < 0 ? up : join(acc, up);
            }
            top[x] = acc < 0 ? bridge(leaf(), bag[x]) : acc;
        }
        root_ = bridge(top[T.root], SmallBag{});
    }

    const IntersectionGraph& G_;
    std::unordered_set<std::uint64_t> edges_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace

MisResult mis_dp(const IntersectionGraph& G, const TreeDecomposition& T) {
    ValidationReport v = validate_decomposition(G, T);
    if (!v.ok()) {
        std::string why = !v.structure_ok ? v.structure_error
                          : !v.property1 ? "a side is in no bag"
                          : !v.property2 ? "an edge is in no bag"
                                         : "the bags holding some side are not connected";
        throw Error(ErrorKind::InvalidDecomposition, why);
    }
    return NiceDp(G, T).solve();
}

MisResult mis_bruteforce(const IntersectionGraph& G) {
    const int n = G.n;
    if (n > kBruteforceLimit)
        throw Error(ErrorKind::TooLarge, "brute force is limited to n <= " + std::to_string(kBruteforceLimit));
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) closed[v] = 1u << v;
    for (auto [i, j] : G.edges) {
        closed[i] |= 1u << j;
        closed[j] |= 1u << i;
    }
    std::uint32_t best = 0;
    int best_size = -1;
    // include-first search over the lowest candidate gives sets in lexicographic order,
    // so only strict improvements are kept
    auto search = [&](auto&& self, std::uint32_t cand, std::uint32_t chosen, int size) -> void {
        if (cand == 0) {
            if (size > best_size) {
                best_size = size;
                best = chosen;
            }
            return;
        }
        if (size + std::popcount(cand) <= best_size) return;
        int v = std::countr_zero(cand);
        self(self, cand & ~closed[v], chosen | 1u << v, size + 1);
        // a vertex with no candidate neighbour is always worth taking
        if ((closed[v] & cand) != (1u << v)) self(self, cand & ~(1u << v), chosen, size);
    };
    std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1u;
    search(search, all, 0u, 0);
    MisResult r;
    r.size = std::max(best_size, 0);
    for (int v = 0; v < n; ++v)
        if (best >> v & 1u) r.witness.push_back(v);
    return r;
}

bool is_independent(const IntersectionGraph& G, const std::vector<int>& set) {
    for (std::size_t x = 0; x < set.size(); ++x)
        for (std::size_t y = x + 1; y < set.size(); ++y)
            if (set[x] == set[y] || G.has_edge(set[x], set[y])) return false;
    return true;
}

}  // namespace sidedisk
