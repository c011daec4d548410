#pragma once

// Test-only dense oracles, independent of the sparse solver paths.

#include <cmath>
#include <vector>

#include "mas/graph.hpp"
#include "mas/rng.hpp"

namespace mas::testing {

using Dense = std::vector<std::vector<double>>;

inline Dense dense_from(const BoolMatrix& m) {
    Dense d(m.n, std::vector<double>(m.n, 0.0));
    for (int i = 0; i < m.n; ++i)
        for (int j : m.rows[i]) d[i][j] = 1.0;
    return d;
}

inline Dense dense_multiply(const Dense& a, const Dense& b) {
    const int n = (int)a.size();
    Dense c(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0.0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline double frobenius_norm(const Dense& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (double v : row) s += v * v;
    return std::sqrt(s);
}

// Spectral radius via the Gelfand formula with repeated squaring:
// rho = lim ||A^(2^K)||^(1/2^K). Forty squarings push the polynomial
// factor below 1e-9 relative error.
inline double gelfand_rho(Dense a, int squarings = 40) {
    // B_k tracks A^(2^k) up to scale; the norm extracted at step k enters
    // rho = ||A^m||^(1/m) with weight 2^-k.
    double log_rho = 0.0;
    double weight = 1.0;
    for (int k = 0; k < squarings; ++k) {
        double norm = frobenius_norm(a);
        if (norm == 0.0) return 0.0;
        for (auto& row : a)
            for (double& v : row) v /= norm;
        log_rho += weight * std::log(norm);
        weight /= 2.0;
        a = dense_multiply(a, a);
    }
    return std::exp(log_rho + weight * std::log(frobenius_norm(a)));
}

// Characteristic polynomial coefficients by Leverrier-Faddeev:
// p(x) = x^n + c[0] x^(n-1) + ... + c[n-1].
inline std::vector<double> charpoly(const Dense& a) {
    const int n = (int)a.size();
    std::vector<double> c(n);
    Dense m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    for (int k = 1; k <= n; ++k) {
        m = dense_multiply(a, m);
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m[i][i];
        c[k - 1] = -tr / k;
        for (int i = 0; i < n; ++i) m[i][i] += c[k - 1];
    }
    return c;
}

inline double charpoly_eval(const std::vector<double>& c, double x) {
    double v = 1.0;
    for (double ck : c) v = v * x + ck;
    return v;
}

// Leading eigenvector of A^T by dense power iteration on A^T + I;
// valid when the leading eigenvalue is simple.
inline std::vector<double> transpose_leading_vector(const BoolMatrix& m, int iters = 20000) {
    const int n = m.n;
    std::vector<double> x(n, 1.0), y(n);
    for (int it = 0; it < iters; ++it) {
        std::fill(y.begin(), y.end(), 0.0);
        for (int i = 0; i < n; ++i)
            for (int j : m.rows[i]) y[j] += x[i];  // (A^T x)_j
        double top = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] += x[i];
            top = std::max(top, y[i]);
        }
        for (int i = 0; i < n; ++i) y[i] /= top;
        x = y;
    }
    return x;
}

inline BoolMatrix random_bool_matrix(Rng& rng, int n, double p, bool allow_loops = false) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && !allow_loops) continue;
            if (rng.bernoulli(p)) edges.push_back({i, j});
        }
    return BoolMatrix::from_edges(n, edges);
}

inline BoolMatrix cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return BoolMatrix::from_edges(n, edges);
}

inline BoolMatrix complete_digraph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) edges.push_back({i, j});
    return BoolMatrix::from_edges(n, edges);
}

inline BoolMatrix chain_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return BoolMatrix::from_edges(n, edges);
}

}  // namespace mas::testing
