#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "sidedisk/geometry.hpp"

namespace sidedisk {

struct CorpusEntry {
    std::string name;  // e.g. "extremal-12", "random-57"
    ConvexPolygon polygon;
    bool extremal = false;
};

// Extremal n in [3, 40], regular n in [3, 100], and `random_count` random polygons with n in [3, 200].
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 1, int random_count = 1000, Tolerance tol = {});

struct CheckResult {
    std::string name;
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;  // first few only
    bool informational = false;  // counted and reported, never fails the run
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::size_t polygons = 0;
    double seconds = 0.0;

    bool ok() const;
    CheckResult& check(const std::string& name, bool informational = false);
    const CheckResult* find(const std::string& name) const;
    nlohmann::json to_json() const;
};

// Runs every structural check on P in both modes and records the outcome in `report`.
// Consecutive Open-mode disks whose overlap falls inside the tolerance band are
// counted under the informational check "open_cycle_degeneracy".
void verify_polygon(const CorpusEntry& entry, VerifyReport& report, Tolerance tol = {});
VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, Tolerance tol = {});

struct BenchRow {
    int n = 0;
    double medial_axis = 0.0;     // seconds per run
    double decomposition = 0.0;   // tree decomposition from a ready medial axis
    double graph = 0.0;           // edges from the decomposition
    double pipeline = 0.0;        // medial axis + decomposition + graph
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double decomposition_spread = 0.0;  // max/min of time / n
    double pipeline_spread = 0.0;       // max/min of time / (n log n)
    bool linear_ok(double factor = 2.0) const { return decomposition_spread <= factor; }
    bool nlogn_ok(double factor = 2.0) const { return pipeline_spread <= factor; }
    nlohmann::json to_json() const;
};

BenchReport run_bench(const std::vector<int>& sizes, std::uint64_t seed = 1, Tolerance tol = {});

}  // namespace sidedisk
