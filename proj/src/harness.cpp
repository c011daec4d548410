#include "mas/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "mas/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mas {

void GenSpec::validate() const {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    if (family == GraphFamily::uniform_density) {
        if (p_edge < 0.0 || p_edge > 1.0) throw std::invalid_argument("p_edge must be in [0,1]");
    } else {
        if (k < 1 || k >= n) throw std::invalid_argument("small-world k must satisfy 1 <= k < n");
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("rewiring p must be in [0,1]");
    }
}

BoolMatrix gen_uniform(const GenSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < spec.n; ++i)
        for (int j = 0; j < spec.n; ++j) {
            if (i == j && !spec.allow_self_loops) continue;
            if (rng.bernoulli(spec.p_edge)) edges.push_back({i, j});
        }
    return BoolMatrix::from_edges(spec.n, edges);
}

BoolMatrix gen_small_world(const GenSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);
    const int n = spec.n;
    const int half = spec.k / 2;

    std::set<std::pair<int, int>> pairs;  // canonical (min,max)
    auto canon = [](int u, int v) { return std::pair{std::min(u, v), std::max(u, v)}; };
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= half; ++d) pairs.insert(canon(i, (i + d) % n));

    std::vector<std::pair<int, int>> lattice(pairs.begin(), pairs.end());
    for (auto [u, v] : lattice) {
        if (!rng.bernoulli(spec.p)) continue;
        // Rewire the far endpoint; keep u, draw a fresh distinct target.
        for (int attempt = 0; attempt < 64; ++attempt) {
            int t = (int)rng.below((std::uint64_t)n);
            if (t == u || pairs.count(canon(u, t))) continue;
            pairs.erase(canon(u, v));
            pairs.insert(canon(u, t));
            break;
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (rng.bernoulli(0.5))
            edges.push_back({u, v});
        else
            edges.push_back({v, u});
    }
    return BoolMatrix::from_edges(n, edges);
}

BoolMatrix generate(const GenSpec& spec) {
    return spec.family == GraphFamily::uniform_density ? gen_uniform(spec) : gen_small_world(spec);
}

ExperimentReport run_table(const std::vector<GenSpec>& specs, int trials_per_cell,
                           const SolveConfig& cfg) {
    ExperimentReport report;
    if (const char* env = std::getenv("MASOLVER_THREADS")) {
#ifdef _OPENMP
        int threads = std::atoi(env);
        if (threads > 0) omp_set_num_threads(threads);
#else
        (void)env;
#endif
    }
    for (const auto& cell_spec : specs) {
        std::vector<ExperimentRow> rows(trials_per_cell);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int t = 0; t < trials_per_cell; ++t) {
            ExperimentRow row;
            row.spec = cell_spec;
            row.spec.seed = cell_spec.seed + (std::uint64_t)t;
            row.trial = t;
            try {
                const BoolMatrix a = generate(row.spec);
                auto sol = solve_max_mas(a, cfg);
                auto approx = approx_mas(a, sol.g0);
                row.r_star = sol.r_star;
                row.gamma = approx.gamma;
                row.eig_count = sol.eig_count;
                row.wall_time_ms = sol.wall_time_ms;
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
            rows[t] = std::move(row);
        }

        ExperimentCell cell;
        cell.spec = cell_spec;
        int ok_count = 0;
        for (const auto& row : rows) {
            if (!row.ok) continue;
            ++ok_count;
            cell.mean_r_star += row.r_star;
            cell.mean_gamma += row.gamma;
            cell.mean_eig_count += (double)row.eig_count;
            cell.mean_wall_time_ms += row.wall_time_ms;
        }
        cell.trials = ok_count;
        if (ok_count > 0) {
            cell.mean_r_star /= ok_count;
            cell.mean_gamma /= ok_count;
            cell.mean_eig_count /= ok_count;
            cell.mean_wall_time_ms /= ok_count;
        }
        report.cells.push_back(cell);
        for (auto& row : rows) report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace mas
