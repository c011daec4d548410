#pragma once

#include <optional>
#include <vector>

#include "mas/graph.hpp"
#include "mas/spectral.hpp"

namespace mas {

// Cut-priority key for the weighted variant. The literal key orders the
// row support by alpha_ij * v_j; the ratio key by v_j / alpha_ij
// (objective reduction per unit of budget).
enum class WeightedKey { product, ratio };

// Per-vertex cut budgets, optional edge weights, optional protected
// in-edges. In unweighted mode budgets count cut edges per row; in
// weighted mode they bound the total cut weight per row.
struct BudgetSpec {
    std::vector<double> budgets;
    std::optional<WeightedMatrix> weights;
    std::vector<IndexSet> untouchable;  // empty or one set per row

    static BudgetSpec uniform(int n, double r);
    bool weighted() const { return weights.has_value(); }
    const IndexSet& protected_row(int i) const;
    void validate(const BoolMatrix& a) const;
};

struct SolveConfig {
    SpectralOptions spectral;
    bool debug_asserts = false;
    WeightedKey weighted_key = WeightedKey::product;
    std::optional<BoolMatrix> start;  // warm start, must lie in the ball
};

struct MinRhoResult {
    BoolMatrix x_hat;
    double rho = 0.0;
    bool optimal = false;
    long eig_count = 0;
};

// Surviving entries of a_row after zeroing the `budget` entries of
// a_row \ untouchable with the largest v-components (ties cut the
// lowest index first). All of them are cut when fewer than budget
// remain.
IndexSet minimal_row(const IndexSet& a_row, const std::vector<double>& v, int budget,
                     const IndexSet& untouchable = {});

// Value-based minimality test: <x_row, v> equals the minimum attained
// by minimal_row, within an absolute tolerance of 1e-9 (chosen to
// dominate the eigensolver residual).
bool is_row_minimal(const IndexSet& x_row, const IndexSet& a_row, const std::vector<double>& v,
                    int budget, const IndexSet& untouchable = {});

// Cut-priority ordering of a weighted row's support (descending key,
// ties by lower index).
std::vector<int> weighted_row_order(const IndexSet& a_row, const std::vector<double>& weights,
                                    const std::vector<double>& v,
                                    WeightedKey key = WeightedKey::product);

// Weighted minimal row: cut edges greedily in key order while they fit
// the remaining weight budget.
IndexSet weighted_minimal_row(const IndexSet& a_row, const std::vector<double>& weights,
                              const std::vector<double>& v, double budget,
                              const IndexSet& untouchable = {},
                              WeightedKey key = WeightedKey::product);

// Greedy relaxation minimizing rho over the product of per-row L1
// balls B(A_i, r_i); returns the global minimizer in the unweighted
// case. Termination on acyclicity is structural, never a floating
// rho-threshold.
MinRhoResult min_rho_over_ball(const BoolMatrix& a, const BudgetSpec& budgets,
                               const SolveConfig& cfg = {});

}  // namespace mas
