#pragma once

#include <stdexcept>
#include <vector>

#include "mas/graph.hpp"

namespace mas {

struct SpectralOptions {
    double residual_tol = 1e-10;  // on ||Mv - lambda v||_inf, scaled by max(1, lambda)
    double rho_rel_tol = 1e-8;    // block-rho equality test
    double support_tol = 1e-12;   // positivity threshold after unit max-norm scaling
    int iter_cap_per_n = 50;
    int iter_cap_base = 1000;
    bool parallel = true;  // OpenMP matvec for large rows

    int iter_cap(int n) const { return iter_cap_per_n * n + iter_cap_base; }
};

// Leading eigenpair, unit max-norm.
struct EigenPair {
    double value = 0.0;
    std::vector<double> vec;
};

struct MinimalLeadingEigenvector {
    std::vector<double> vec;  // over all n indices, unit max-norm
    IndexSet support;
    double value = 0.0;
};

struct eigen_error : std::runtime_error {
    double last_residual;
    eigen_error(const std::string& what, double residual)
        : std::runtime_error(what), last_residual(residual) {}
};

struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power iteration on B + I (primitive for irreducible B); B must be a
// single SCC or 1x1.
EigenPair leading_pair_irreducible(const BoolMatrix& b, const SpectralOptions& opts = {});
EigenPair leading_pair_irreducible(const WeightedMatrix& b, const SpectralOptions& opts = {});

// Leading eigenvector with inclusion-minimal support, via the Frobenius
// form: highest block attaining rho, back-substitution through the
// blocks above it, zero elsewhere.
MinimalLeadingEigenvector minimal_leading_eigenvector(const BoolMatrix& m, const FrobeniusForm& f,
                                                      const SpectralOptions& opts = {});
MinimalLeadingEigenvector minimal_leading_eigenvector(const WeightedMatrix& m,
                                                      const FrobeniusForm& f,
                                                      const SpectralOptions& opts = {});

// Indices of the last Frobenius block. Valid only when the matrix has a
// strictly positive minimal leading eigenvector; throws invariant_error
// when another block attains rho within tolerance.
IndexSet basic_set(const BoolMatrix& m, const FrobeniusForm& f, const SpectralOptions& opts = {});
IndexSet basic_set(const WeightedMatrix& m, const FrobeniusForm& f,
                   const SpectralOptions& opts = {});

// rho(M) = max over Frobenius blocks of the block leading value.
double rho_of_boolean(const BoolMatrix& m, const SpectralOptions& opts = {});
double spectral_radius(const WeightedMatrix& m, const SpectralOptions& opts = {});

// y = M x kernels; the OpenMP variant must agree with the serial one.
void matvec_serial(const WeightedMatrix& m, const std::vector<double>& x, std::vector<double>& y);
void matvec_parallel(const WeightedMatrix& m, const std::vector<double>& x, std::vector<double>& y);

}  // namespace mas
