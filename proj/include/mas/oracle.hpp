#pragma once

#include <optional>
#include <vector>

#include "mas/graph.hpp"
#include "mas/spectral.hpp"

namespace mas {

// Brute-force ground truth for small instances.
struct OracleResult {
    double value = 0.0;                       // edge count, budget, or rho
    std::optional<std::vector<int>> order;    // permutation witness
    std::optional<BoolMatrix> witness;        // matrix witness
    long enumerated = 0;
};

inline constexpr int kOraclePermutationCap = 9;
inline constexpr long kOracleEnumerationCap = 1'000'000;

// Max forward-edge count over all vertex orders (self-loops never
// countable); branch and bound over permutations.
OracleResult exact_mas(const BoolMatrix& a, int cap = kOraclePermutationCap);

// Min over all orders of the max per-vertex backward-in-edge count
// (self-loops always cut).
OracleResult exact_max_mas(const BoolMatrix& a, int cap = kOraclePermutationCap);

// Min rho over every per-row choice of at most budget_i cuts.
OracleResult exact_min_rho(const BoolMatrix& a, const std::vector<int>& budgets,
                           long enumeration_cap = kOracleEnumerationCap,
                           const SpectralOptions& opts = {});

}  // namespace mas
