// Compares the serial and OpenMP matvec kernels and times full
// max-MAS solves on generated instances.

#include <chrono>
#include <cstdio>
#include <vector>

#include "mas/harness.hpp"
#include "mas/rng.hpp"
#include "mas/spectral.hpp"

using namespace mas;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(auto&& fn, int reps) {
    auto start = clock_type::now();
    for (int r = 0; r < reps; ++r) fn();
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count() / reps;
}

WeightedMatrix random_weighted(int n, double density, std::uint64_t seed) {
    Rng rng(seed);
    WeightedMatrix m;
    m.n = n;
    m.rows.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rng.bernoulli(density)) m.rows[i].push_back({j, 0.5 + rng.uniform01()});
    return m;
}

}  // namespace

int main() {
    std::printf("matvec kernels (ms per call)\n");
    std::printf("%8s %10s %12s %12s %8s\n", "n", "nnz", "serial", "openmp", "speedup");
    for (int n : {500, 1000, 2000, 4000}) {
        auto m = random_weighted(n, 0.05, 42);
        long nnz = 0;
        for (auto& row : m.rows) nnz += (long)row.size();
        std::vector<double> x(n, 1.0), y;
        const int reps = 200;
        double serial = time_ms([&] { matvec_serial(m, x, y); }, reps);
        double parallel = time_ms([&] { matvec_parallel(m, x, y); }, reps);
        std::printf("%8d %10ld %12.4f %12.4f %8.2f\n", n, nnz, serial, parallel,
                    serial / parallel);
    }

    std::printf("\nfull max-MAS solve, uniform density 0.3 (serial vs parallel matvec)\n");
    std::printf("%8s %12s %12s %10s %8s\n", "n", "serial ms", "openmp ms", "r*", "eigs");
    for (int n : {50, 100, 250}) {
        GenSpec spec{GraphFamily::uniform_density, n, 0.3, 0, 0.0, 7};
        auto a = gen_uniform(spec);
        SolveConfig serial_cfg, parallel_cfg;
        serial_cfg.spectral.parallel = false;
        parallel_cfg.spectral.parallel = true;
        auto s = solve_max_mas(a, serial_cfg);
        auto p = solve_max_mas(a, parallel_cfg);
        std::printf("%8d %12.1f %12.1f %10d %8ld\n", n, s.wall_time_ms, p.wall_time_ms, s.r_star,
                    s.eig_count);
    }
    return 0;
}
