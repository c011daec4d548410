#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mas/greedy.hpp"

namespace mas {

struct MaxMasSolution {
    int r_star = 0;
    BoolMatrix g0;                     // acyclic witness
    std::vector<int> per_vertex_cuts;  // c_i = |row_i(A)| - |row_i(G0)|
    long eig_count = 0;
    double wall_time_ms = 0.0;
};

struct FeasibilityResult {
    bool feasible = false;
    double rho = 0.0;  // min rho over the ball when infeasible
    BoolMatrix witness;
    long eig_count = 0;
};

struct WeightedMaxMasSolution {
    bool feasible = true;
    double budget = 0.0;  // smallest certified-feasible per-vertex cut weight
    BoolMatrix g0;
    long eig_count = 0;
    double wall_time_ms = 0.0;
};

struct ConstrainedMaxMasSolution {
    bool feasible = false;  // false <=> the protected subgraph is cyclic
    int r_star = 0;
    BoolMatrix g0;
    std::vector<int> per_vertex_cuts;
    long eig_count = 0;
    double wall_time_ms = 0.0;
};

struct MasApproximation {
    std::vector<int> ordering;  // every edge of g_bar is forward under it
    BoolMatrix g_bar;
    double gamma = 0.0;
    bool contains_g0 = false;
};

// Integer bisection on r in [0, max in-degree]; each probe minimizes
// rho over B(A, r), feasible iff the witness is acyclic.
MaxMasSolution solve_max_mas(const BoolMatrix& a, const SolveConfig& cfg = {});

// Single min-rho solve with per-vertex budgets.
FeasibilityResult solve_problem1(const BoolMatrix& a, const std::vector<double>& budgets,
                                 const SolveConfig& cfg = {});

// Weighted max-MAS via real-valued bisection on the per-vertex cut
// weight; gap defaults to 1e-6 times the largest row weight sum.
WeightedMaxMasSolution solve_problem2(const WeightedMatrix& a, const SolveConfig& cfg = {},
                                      std::optional<double> gap = {});

// Max-MAS with protected edges; infeasible at every budget when the
// protected subgraph itself contains a cycle.
ConstrainedMaxMasSolution solve_problem3(const BoolMatrix& a,
                                         const std::vector<IndexSet>& untouchable,
                                         const SolveConfig& cfg = {});

// Triangularization of A along a topological order of G0; the output
// contains G0, is acyclic, and reports gamma = |E'|/|E|.
MasApproximation approx_mas(const BoolMatrix& a, const BoolMatrix& g0);

// Same, but re-asserts budget compliance / protected-edge presence.
MasApproximation approx_mas_constrained(const BoolMatrix& a, const BoolMatrix& g0,
                                        const BudgetSpec& spec);

// Random-order baseline: the larger of the forward and backward edge
// sets, guaranteeing gamma >= 1/2 on loop-free graphs.
MasApproximation baseline_random_permutation(const BoolMatrix& a, std::uint64_t seed);

}  // namespace mas
