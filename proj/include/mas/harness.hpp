#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mas/graph.hpp"
#include "mas/solver.hpp"

namespace mas {

enum class GraphFamily { uniform_density, small_world };

struct GenSpec {
    GraphFamily family = GraphFamily::uniform_density;
    int n = 0;
    double p_edge = 0.0;  // uniform family
    int k = 0;            // small-world nearest-neighbour degree
    double p = 0.0;       // small-world rewiring probability
    std::uint64_t seed = 0;
    bool allow_self_loops = false;

    void validate() const;
};

struct ExperimentRow {
    GenSpec spec;
    int trial = 0;
    bool ok = true;
    std::string error;
    int r_star = 0;
    double gamma = 0.0;
    long eig_count = 0;
    double wall_time_ms = 0.0;
};

struct ExperimentCell {
    GenSpec spec;
    int trials = 0;
    double mean_r_star = 0.0;
    double mean_gamma = 0.0;
    double mean_eig_count = 0.0;
    double mean_wall_time_ms = 0.0;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    std::vector<ExperimentCell> cells;
};

// Each ordered pair (i, j), i != j, receives an edge independently with
// probability p_edge; seeded and reproducible.
BoolMatrix gen_uniform(const GenSpec& spec);

// Newman-Watts-Strogatz-style ring: k/2 neighbours on each side, each
// lattice edge rewired to a random distant target with probability p,
// then oriented uniformly at random. No self-loops, no duplicates.
BoolMatrix gen_small_world(const GenSpec& spec);

BoolMatrix generate(const GenSpec& spec);

// Full pipeline per instance: solve_max_mas then approx_mas, recording
// gamma, eigenvector count and wall time. Trials run in parallel;
// per-trial seeds are spec.seed + trial, so the report is deterministic
// up to the wall-time columns.
ExperimentReport run_table(const std::vector<GenSpec>& specs, int trials_per_cell,
                           const SolveConfig& cfg = {});

}  // namespace mas
