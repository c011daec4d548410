#include "mas/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mas {

namespace {

constexpr long kParallelNnzThreshold = 1 << 14;

WeightedMatrix to_weighted(const BoolMatrix& m) {
    WeightedMatrix w;
    w.n = m.n;
    w.rows.resize(m.n);
    for (int i = 0; i < m.n; ++i) {
        w.rows[i].reserve(m.rows[i].size());
        for (int j : m.rows[i]) w.rows[i].push_back({j, 1.0});
    }
    return w;
}

long nnz(const WeightedMatrix& m) {
    long total = 0;
    for (auto& row : m.rows) total += (long)row.size();
    return total;
}

void matvec(const WeightedMatrix& m, const std::vector<double>& x, std::vector<double>& y,
            bool parallel) {
    if (parallel && nnz(m) >= kParallelNnzThreshold)
        matvec_parallel(m, x, y);
    else
        matvec_serial(m, x, y);
}

// Power iteration on B + I; B irreducible makes B + I primitive, so the
// iteration converges for any positive start.
EigenPair power_iterate(const WeightedMatrix& b, const SpectralOptions& opts) {
    const int n = b.n;
    if (n == 1) return {b.weight(0, 0), {1.0}};

    std::vector<double> x(n, 1.0), bx(n);
    const bool parallel = opts.parallel && nnz(b) >= kParallelNnzThreshold;
    double residual = 0.0;
    const int cap = opts.iter_cap(n);
    for (int it = 0; it < cap; ++it) {
        matvec(b, x, bx, parallel);
        double xbx = 0.0, xx = 0.0;
        for (int i = 0; i < n; ++i) {
            xbx += x[i] * bx[i];
            xx += x[i] * x[i];
        }
        const double lambda = xbx / xx;
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(bx[i] - lambda * x[i]));
        if (residual <= opts.residual_tol * std::max(1.0, lambda)) {
            double top = *std::max_element(x.begin(), x.end());
            for (double& v : x) v /= top;
            return {lambda, std::move(x)};
        }
        // x <- (B + I) x, max-normalized
        double top = 0.0;
        for (int i = 0; i < n; ++i) {
            x[i] += bx[i];
            top = std::max(top, x[i]);
        }
        for (double& v : x) v /= top;
    }
    throw eigen_error("power iteration did not converge within " + std::to_string(cap) +
                          " iterations (n=" + std::to_string(n) + ")",
                      residual);
}

std::vector<double> block_values(const WeightedMatrix& m, const FrobeniusForm& f,
                                 const SpectralOptions& opts) {
    std::vector<double> values(f.blocks.size());
    for (size_t b = 0; b < f.blocks.size(); ++b) {
        const auto& blk = f.blocks[b];
        if (blk.size() == 1)
            values[b] = m.weight(blk[0], blk[0]);
        else
            values[b] = power_iterate(restrict_to(m, blk), opts).value;
    }
    return values;
}

// Smallest block index attaining max(values) within tolerance.
int highest_attaining_block(const std::vector<double>& values, double rho,
                            const SpectralOptions& opts) {
    const double slack = std::max(rho * opts.rho_rel_tol, 1e-12);
    for (size_t b = 0; b < values.size(); ++b)
        if (values[b] >= rho - slack) return (int)b;
    return (int)values.size() - 1;  // unreachable
}

// Solve (rho I - A) x = rhs for an irreducible block with rho(A) < rho,
// by the convergent fixed point x <- (A x + rhs) / rho.
std::vector<double> solve_shifted_block(const WeightedMatrix& a, double rho,
                                        const std::vector<double>& rhs,
                                        const SpectralOptions& opts) {
    const int n = a.n;
    std::vector<double> x(n), ax(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / rho;
    const double stop = 0.25 * opts.residual_tol * std::max(1.0, rho);
    const int cap = opts.iter_cap(n);
    double residual = 0.0;
    for (int it = 0; it < cap; ++it) {
        matvec_serial(a, x, ax);
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(rho * x[i] - ax[i] - rhs[i]));
        if (residual <= stop) return x;
        for (int i = 0; i < n; ++i) x[i] = (ax[i] + rhs[i]) / rho;
    }
    throw eigen_error("shifted block solve did not converge (n=" + std::to_string(n) + ")",
                      residual);
}

MinimalLeadingEigenvector minimal_leading_impl(const WeightedMatrix& m, const FrobeniusForm& f,
                                               const SpectralOptions& opts) {
    SpectralOptions inner = opts;
    inner.residual_tol = 0.25 * opts.residual_tol;

    const auto values = block_values(m, f, inner);
    const double rho = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    const int top = highest_attaining_block(values, rho, opts);

    std::vector<double> v(m.n, 0.0);
    {
        const auto& blk = f.blocks[top];
        auto pair = blk.size() == 1 ? EigenPair{values[top], {1.0}}
                                    : power_iterate(restrict_to(m, blk), inner);
        for (size_t k = 0; k < blk.size(); ++k) v[blk[k]] = pair.vec[k];
    }

    // Back-substitute through the blocks above `top`; every block there
    // has a strictly smaller spectral radius, so rho I - A_j is
    // invertible. Uncoupled blocks stay at zero.
    for (int b = top - 1; b >= 0; --b) {
        const auto& blk = f.blocks[b];
        std::vector<double> rhs(blk.size(), 0.0);
        bool coupled = false;
        for (size_t k = 0; k < blk.size(); ++k) {
            for (auto& [j, w] : m.rows[blk[k]]) {
                if (f.block_of[j] != b) rhs[k] += w * v[j];
            }
            if (rhs[k] > 0.0) coupled = true;
        }
        if (!coupled) continue;
        if (blk.size() == 1) {
            v[blk[0]] = rhs[0] / (rho - values[b]);
        } else {
            auto x = solve_shifted_block(restrict_to(m, blk), rho, rhs, opts);
            for (size_t k = 0; k < blk.size(); ++k) v[blk[k]] = x[k];
        }
    }

    double topval = *std::max_element(v.begin(), v.end());
    for (double& e : v) e /= topval;

    MinimalLeadingEigenvector out;
    out.value = rho;
    out.vec = std::move(v);
    for (int i = 0; i < m.n; ++i)
        if (out.vec[i] > opts.support_tol) out.support.push_back(i);
    return out;
}

IndexSet basic_set_impl(const WeightedMatrix& m, const FrobeniusForm& f,
                        const SpectralOptions& opts) {
    const auto values = block_values(m, f, opts);
    const double rho = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    const double slack = std::max(rho * opts.rho_rel_tol, 1e-12);
    for (size_t b = 0; b + 1 < values.size(); ++b)
        if (values[b] >= rho - slack)
            throw invariant_error(
                "basic_set precondition violated: block " + std::to_string(b) + " of " +
                std::to_string(values.size()) + " also attains the spectral radius");
    return f.blocks.back();
}

}  // namespace

void matvec_serial(const WeightedMatrix& m, const std::vector<double>& x, std::vector<double>& y) {
    y.resize(m.n);
    for (int i = 0; i < m.n; ++i) {
        double acc = 0.0;
        for (auto& [j, w] : m.rows[i]) acc += w * x[j];
        y[i] = acc;
    }
}

void matvec_parallel(const WeightedMatrix& m, const std::vector<double>& x,
                     std::vector<double>& y) {
    y.resize(m.n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < m.n; ++i) {
        double acc = 0.0;
        for (auto& [j, w] : m.rows[i]) acc += w * x[j];
        y[i] = acc;
    }
}

EigenPair leading_pair_irreducible(const BoolMatrix& b, const SpectralOptions& opts) {
    return power_iterate(to_weighted(b), opts);
}

EigenPair leading_pair_irreducible(const WeightedMatrix& b, const SpectralOptions& opts) {
    return power_iterate(b, opts);
}

MinimalLeadingEigenvector minimal_leading_eigenvector(const BoolMatrix& m, const FrobeniusForm& f,
                                                      const SpectralOptions& opts) {
    return minimal_leading_impl(to_weighted(m), f, opts);
}

MinimalLeadingEigenvector minimal_leading_eigenvector(const WeightedMatrix& m,
                                                      const FrobeniusForm& f,
                                                      const SpectralOptions& opts) {
    return minimal_leading_impl(m, f, opts);
}

IndexSet basic_set(const BoolMatrix& m, const FrobeniusForm& f, const SpectralOptions& opts) {
    return basic_set_impl(to_weighted(m), f, opts);
}

IndexSet basic_set(const WeightedMatrix& m, const FrobeniusForm& f, const SpectralOptions& opts) {
    return basic_set_impl(m, f, opts);
}

double rho_of_boolean(const BoolMatrix& m, const SpectralOptions& opts) {
    return spectral_radius(to_weighted(m), opts);
}

double spectral_radius(const WeightedMatrix& m, const SpectralOptions& opts) {
    if (m.n == 0) return 0.0;
    const auto f = frobenius_factorize(m.pattern());
    const auto values = block_values(m, f, opts);
    return *std::max_element(values.begin(), values.end());
}

}  // namespace mas
