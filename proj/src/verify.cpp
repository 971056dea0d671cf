#include "sidedisk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "sidedisk/constructions.hpp"
#include "sidedisk/error.hpp"
#include "sidedisk/medial_axis.hpp"
#include "sidedisk/mis.hpp"
#include "sidedisk/rng.hpp"
#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"

namespace sidedisk {

namespace {

constexpr std::size_t kKeptCounterexamples = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

}  // namespace

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed, int random_count, Tolerance tol) {
    std::vector<CorpusEntry> out;
    for (int n = 3; n <= 40; ++n) out.push_back({"extremal-" + std::to_string(n), extremal_polygon(n, tol), true});
    for (int n = 3; n <= 100; ++n) out.push_back({"regular-" + std::to_string(n), regular_polygon(n), false});
    CounterRng rng(seed, 0x636f72707573ULL);
    for (int i = 0; i < random_count; ++i) {
        int n = 3 + static_cast<int>(rng.below(198));
        out.push_back({"random-" + std::to_string(i) + "-n" + std::to_string(n),
                       random_convex_polygon(n, splitmix64(seed) + static_cast<std::uint64_t>(i), tol), false});
    }
    return out;
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.informational || c.failures == 0; });
}

CheckResult& VerifyReport::check(const std::string& name, bool informational) {
    for (CheckResult& c : checks)
        if (c.name == name) return c;
    checks.push_back(CheckResult{name, 0, 0, {}, informational});
    return checks.back();
}

const CheckResult* VerifyReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const CheckResult& c : checks)
        cs.push_back({{"name", c.name},
                      {"runs", c.runs},
                      {"failures", c.failures},
                      {"status", c.informational ? "info" : c.failures == 0 ? "pass" : "fail"},
                      {"counterexamples", c.counterexamples}});
    return {{"ok", ok()}, {"polygons", polygons}, {"seconds", seconds}, {"checks", cs}};
}

void verify_polygon(const CorpusEntry& entry, VerifyReport& report, Tolerance tol) {
    const ConvexPolygon& P = entry.polygon;
    const int n = static_cast<int>(P.size());
    const int quarter = (n + 3) / 4;
    auto record = [&](const std::string& check, bool pass, const std::string& detail, bool info = false) {
        CheckResult& c = report.check(check, info);
        ++c.runs;
        if (!pass) {
            ++c.failures;
            if (c.counterexamples.size() < kKeptCounterexamples) c.counterexamples.push_back(entry.name + ": " + detail);
        }
    };
    ++report.polygons;
    MedialAxis M;
    TreeDecomposition T;
    try {
        M = compute_medial_axis(P, tol);
        T = build_tree_decomposition(P, M, tol);
    } catch (const Error& e) {
        record("pipeline", false, e.what());
        return;
    }
    record("width", width(T) <= 3, "width " + std::to_string(width(T)));
    if (n >= 4)
        record("bag_count", static_cast<int>(T.bags.size()) == n - 2,
               std::to_string(T.bags.size()) + " bags for n = " + std::to_string(n));
    for (IntersectionMode mode : {IntersectionMode::Closed, IntersectionMode::Open}) {
        const std::string tag = mode == IntersectionMode::Closed ? " (closed)" : " (open)";
        try {
            IntersectionGraph G = graph_bruteforce(P, mode, tol);
            IntersectionGraph F = graph_from_decomposition(P, T, mode, tol);
            ValidationReport v = validate_decomposition(G, T);
            std::string why = !v.structure_ok ? v.structure_error
                              : !v.property1  ? "side " + std::to_string(v.missing_vertices.front()) + " in no bag"
                              : !v.property2  ? "edge " + std::to_string(v.uncovered_edges.front().first) + "-" +
                                                   std::to_string(v.uncovered_edges.front().second) + " uncovered"
                              : !v.property3  ? "bags of side " + std::to_string(v.disconnected_vertices.front()) +
                                                   " disconnected"
                                              : "";
            record("decomposition", v.ok(), why + tag);
            record("oracle_equivalence", F.edges == G.edges,
                   std::to_string(F.edges.size()) + " fast edges vs " + std::to_string(G.edges.size()) + tag);
            record("edge_bound", check_edge_bound(G), std::to_string(G.edges.size()) + " edges" + tag);
            int missing = -1;
            for (int k = 0; k < n && missing < 0; ++k)
                if (!G.has_edge(k, (k + 1) % n)) missing = k;
            std::string gap = "sides " + std::to_string(missing) + " and " + std::to_string((missing + 1) % n) + tag;
            if (mode == IntersectionMode::Closed) record("hamiltonian", missing < 0, gap);
            else record("open_cycle_degeneracy", missing < 0, gap, true);
            if (!v.ok()) continue;
            MisResult r = mis_dp(G, T);
            record("mis_witness", is_independent(G, r.witness) && static_cast<int>(r.witness.size()) == r.size,
                   "witness is not an independent set of the claimed size" + tag);
            record("mis_lower_bound", r.size >= quarter, "alpha " + std::to_string(r.size) + tag);
            if (n <= kBruteforceLimit) {
                int b = mis_bruteforce(G).size;
                record("mis_oracle", b == r.size, "dp " + std::to_string(r.size) + " vs brute force " + std::to_string(b) + tag);
            }
            if (entry.extremal && mode == IntersectionMode::Closed) {
                record("extremal_alpha", r.size == quarter, "alpha " + std::to_string(r.size));
                if (n >= 4) record("extremal_width", width(T) == 3, "width " + std::to_string(width(T)));
            }
        } catch (const Error& e) {
            record("pipeline", false, e.what() + tag);
        }
    }
}

VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, Tolerance tol) {
    auto t0 = Clock::now();
    VerifyReport report;
    for (const CorpusEntry& e : corpus) verify_polygon(e, report, tol);
    report.seconds = seconds_since(t0);
    return report;
}

// ---------------------------------------------------------------- bench

namespace {

// Best of repeated runs, repeating until `budget` seconds are spent (at least twice).
template <class F>
double best_time(F&& f, double budget) {
    double best = std::numeric_limits<double>::infinity(), spent = 0.0;
    for (int k = 0; k < 2 || spent < budget; ++k) {
        auto t0 = Clock::now();
        f();
        double s = seconds_since(t0);
        best = std::min(best, s);
        spent += s;
    }
    return best;
}

double spread(const std::vector<double>& v) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi / *lo;
}

}  // namespace

BenchReport run_bench(const std::vector<int>& sizes, std::uint64_t seed, Tolerance tol) {
    BenchReport rep;
    std::vector<double> per_n, per_nlogn;
    for (int n : sizes) {
        ConvexPolygon P = jittered_ellipse(n, seed);
        BenchRow row;
        row.n = n;
        const double budget = 0.3;
        MedialAxis M = compute_medial_axis(P, tol);
        TreeDecomposition T = build_tree_decomposition(P, M, tol);
        row.medial_axis = best_time([&] { M = compute_medial_axis(P, tol); }, budget);
        row.decomposition = best_time([&] { T = build_tree_decomposition(P, M, tol); }, budget);
        row.graph = best_time([&] { (void)graph_from_decomposition(P, T, IntersectionMode::Closed, tol); }, budget);
        row.pipeline = best_time(
            [&] {
                MedialAxis m = compute_medial_axis(P, tol);
                TreeDecomposition t = build_tree_decomposition(P, m, tol);
                (void)graph_from_decomposition(P, t, IntersectionMode::Closed, tol);
            },
            budget);
        rep.rows.push_back(row);
        per_n.push_back(row.decomposition / n);
        per_nlogn.push_back(row.pipeline / (n * std::log2(static_cast<double>(n))));
    }
    if (!rep.rows.empty()) {
        rep.decomposition_spread = spread(per_n);
        rep.pipeline_spread = spread(per_nlogn);
    }
    return rep;
}

nlohmann::json BenchReport::to_json() const {
    nlohmann::json rows_j = nlohmann::json::array();
    for (const BenchRow& r : rows)
        rows_j.push_back({{"n", r.n},
                          {"medial_axis_s", r.medial_axis},
                          {"decomposition_s", r.decomposition},
                          {"graph_s", r.graph},
                          {"pipeline_s", r.pipeline}});
    return {{"rows", rows_j},
            {"decomposition_spread_per_n", decomposition_spread},
            {"pipeline_spread_per_nlogn", pipeline_spread},
            {"linear_within_2x", linear_ok()},
            {"nlogn_within_2x", nlogn_ok()}};
}

}  // namespace sidedisk
