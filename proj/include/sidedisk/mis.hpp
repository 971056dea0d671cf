#pragma once

#include <vector>

#include "sidedisk/side_disks.hpp"
#include "sidedisk/tree_decomposition.hpp"

namespace sidedisk {

struct MisResult {
    int size = 0;
    std::vector<int> witness;  // sorted side indices
};

// Exact maximum independent set by dynamic programming over a nice form of T.
// Throws InvalidDecomposition when T fails validate_decomposition for G.
MisResult mis_dp(const IntersectionGraph& G, const TreeDecomposition& T);

inline constexpr int kBruteforceLimit = 24;

// Branch and bound; returns the lexicographically smallest maximum set. n <= 24.
MisResult mis_bruteforce(const IntersectionGraph& G);

bool is_independent(const IntersectionGraph& G, const std::vector<int>& set);

}  // namespace sidedisk
