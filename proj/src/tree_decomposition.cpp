#include "sidedisk/tree_decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>

#include "sidedisk/side_disks.hpp"

namespace sidedisk {

namespace {

// Three tangent sides of the root disk that split the boundary most evenly.
std::array<int, 3> choose_root_triple(std::span<const int> s, int n) {
    const int k = static_cast<int>(s.size());
    auto worst_gap = [n](int a, int b, int c) { return std::max({b - a, c - b, a + n - c}); };
    std::array<int, 3> best{s[0], s[1], s[2]};
    int best_gap = worst_gap(s[0], s[1], s[2]);
    auto consider = [&](int a, int b, int c) {
        int g = worst_gap(a, b, c);
        std::array<int, 3> cand{a, b, c};
        if (g < best_gap || (g == best_gap && cand < best)) {
            best_gap = g;
            best = cand;
        }
    };
    if (k <= 48) {
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
                for (int z = y + 1; z < k; ++z) consider(s[x], s[y], s[z]);
        return best;
    }
    // many tangent sides: for every first side, try the neighbours of the ideal thirds
    for (int x = 0; x < k; ++x) {
        int a = s[x];
        auto near = [&](double target, int lo) {
            std::array<int, 2> c{-1, -1};
            auto it = std::lower_bound(s.begin() + lo, s.end(), static_cast<int>(std::ceil(target)));
            if (it != s.end()) c[0] = static_cast<int>(it - s.begin());
            if (it != s.begin() + lo) c[1] = static_cast<int>(it - s.begin()) - 1;
            return c;
        };
        for (int yi : near(a + n / 3.0, x + 1)) {
            if (yi < 0 || yi <= x) continue;
            for (int zi : near(s[yi] + (a + n - s[yi]) / 2.0, yi + 1)) {
                if (zi < 0 || zi <= yi) continue;
                consider(a, s[yi], s[zi]);
            }
        }
    }
    return best;
}

struct Frame {
    int u, v, z, q, parent;
};

}  // namespace

TreeDecomposition build_tree_decomposition(const ConvexPolygon& P, const MedialAxis& M, Tolerance tol,
                                           BuildTrace* trace) {
    const int n = static_cast<int>(P.size());
    TreeDecomposition T;
    T.n = n;
    T.root = 0;
    T.bags.reserve(static_cast<std::size_t>(std::max(1, n - 2)));

    MedialAxisVertex q0 = max_inscribed_vertex(M);
    std::array<int, 3> tri = choose_root_triple(std::span<const int>(q0.tangent_sides), n);
    const int rot = tri[0];
    auto orig = [&](int r) { return (r + rot) % n; };
    const int i = tri[1] - rot, j = tri[2] - rot;

    auto add_bag = [&](int parent, std::initializer_list<int> rotated) {
        Bag b;
        b.id = static_cast<int>(T.bags.size());
        b.parent = parent;
        for (int r : rotated) {
            int s = orig(r);
            if (!b.contains(s)) b.sides[b.count++] = s;
        }
        T.bags.push_back(b);
        return b.id;
    };

    if (trace) {
        *trace = BuildTrace{};
        trace->rotation = rot;
        trace->root_triple = tri;
    }
    add_bag(-1, {0, i, j});

    std::vector<Frame> stack;
    // pushed in reverse so that bag ids follow preorder
    if (j < n - 1) stack.push_back({j, n, i, q0.id, 0});
    if (i < j - 1) stack.push_back({i, j, 0, q0.id, 0});
    if (i > 1) stack.push_back({0, i, j, q0.id, 0});

    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        RangeCall call{orig(f.u), orig(f.v), orig(f.z), f.u, f.v, f.z, f.q, 0, false};
        if (f.u == f.v - 1) {
            call.bag = add_bag(f.parent, {f.u, f.v, f.z});
            if (trace) trace->calls.push_back(call);
            continue;
        }
        std::size_t steps = 0;
        SplitResult sp = find_split_side(M, P, orig(f.u), orig(f.v), f.q, &steps);
        int t = ((sp.t - rot) % n + n) % n;
        int id = add_bag(f.parent, {f.u, f.v, f.z, t});
        call.bag = id;

        Frame left{}, right{};
        bool has_left = f.u < t - 1, has_right = t < f.v - 1;
        if (has_left) {
            bool amb = false;
            bool hit = bisector_hits_side(P, orig(f.u), orig(t), orig(f.z), tol, &amb);
            call.ambiguous |= amb;
            left = {f.u, t, hit ? f.z : f.v, sp.vertex, id};
        }
        if (has_right) {
            bool amb = false;
            bool hit = bisector_hits_side(P, orig(t), orig(f.v), orig(f.z), tol, &amb);
            call.ambiguous |= amb;
            right = {t, f.v, hit ? f.z : f.u, sp.vertex, id};
        }
        if (trace) {
            ++trace->split_queries;
            trace->axis_steps += steps;
            trace->bisector_tests += static_cast<std::size_t>(has_left) + static_cast<std::size_t>(has_right);
            trace->ambiguous_tests += call.ambiguous ? 1 : 0;
            trace->calls.push_back(call);
        }
        if (has_right) stack.push_back(right);
        if (has_left) stack.push_back(left);
    }
    return T;
}

int width(const TreeDecomposition& T) {
    int w = 0;
    for (const Bag& b : T.bags) w = std::max(w, b.count);
    return w - 1;
}

ValidationReport validate_decomposition(const IntersectionGraph& G, const TreeDecomposition& T) {
    ValidationReport r;
    const int n = G.n;
    const int B = static_cast<int>(T.bags.size());
    auto fail_structure = [&](const std::string& msg) {
        r.structure_ok = false;
        r.structure_error = msg;
        r.property1 = r.property2 = r.property3 = false;
        return r;
    };
    if (T.n != n) return fail_structure("decomposition is over " + std::to_string(T.n) + " sides, graph has " + std::to_string(n));
    if (B == 0) return fail_structure("no bags");
    if (T.root < 0 || T.root >= B) return fail_structure("root id out of range");
    int roots = 0;
    for (int k = 0; k < B; ++k) {
        const Bag& b = T.bags[k];
        if (b.id != k) return fail_structure("bag " + std::to_string(k) + " carries id " + std::to_string(b.id));
        if (b.count < 1 || b.count > 4) return fail_structure("bag " + std::to_string(k) + " has bad size");
        for (int x = 0; x < b.count; ++x) {
            if (b.sides[x] < 0 || b.sides[x] >= n) return fail_structure("bag " + std::to_string(k) + " has side out of range");
            for (int y = x + 1; y < b.count; ++y)
                if (b.sides[x] == b.sides[y]) return fail_structure("bag " + std::to_string(k) + " repeats a side");
        }
        if (b.parent == -1) {
            ++roots;
            if (k != T.root) return fail_structure("bag " + std::to_string(k) + " has no parent but is not the root");
        } else if (b.parent < 0 || b.parent >= B || b.parent == k) {
            return fail_structure("bag " + std::to_string(k) + " has invalid parent");
        }
    }
    if (roots != 1) return fail_structure("expected exactly one root");
    // every bag must reach the root without revisiting
    std::vector<char> state(B, 0);  // 0 unknown, 1 on current path, 2 reaches root
    state[T.root] = 2;
    for (int k = 0; k < B; ++k) {
        std::vector<int> path;
        int x = k;
        while (state[x] == 0) {
            state[x] = 1;
            path.push_back(x);
            x = T.bags[x].parent;
        }
        if (state[x] == 1) return fail_structure("parent links contain a cycle through bag " + std::to_string(x));
        for (int y : path) state[y] = 2;
    }

    std::vector<int> count(n, 0), linked(n, 0);
    for (const Bag& b : T.bags) {
        for (int s : b) {
            ++count[s];
            if (b.parent >= 0 && T.bags[b.parent].contains(s)) ++linked[s];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (count[v] == 0) {
            r.property1 = false;
            r.missing_vertices.push_back(v);
        } else if (count[v] - linked[v] != 1) {
            r.property3 = false;
            r.disconnected_vertices.push_back(v);
        }
    }
    std::unordered_set<std::uint64_t> covered;
    covered.reserve(static_cast<std::size_t>(B) * 8);
    for (const Bag& b : T.bags)
        for (int x = 0; x < b.count; ++x)
            for (int y = x + 1; y < b.count; ++y) {
                int a = std::min(b.sides[x], b.sides[y]), c = std::max(b.sides[x], b.sides[y]);
                covered.insert((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(c));
            }
    for (auto [a, c] : G.edges) {
        if (!covered.count((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(c))) {
            r.property2 = false;
            r.uncovered_edges.emplace_back(a, c);
        }
    }
    return r;
}

}  // namespace sidedisk
