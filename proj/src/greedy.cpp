#include "mas/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace mas {

namespace {

// Comparisons between eigenvector components must dominate the
// eigensolver residual (1e-10 on unit max-norm vectors), or near-ties
// are resolved inconsistently across steps and the relaxation ping-pongs
// between mirror states. Components are quantized at this scale before
// ordering, and row values compare with the same tolerance.
constexpr double kValueTol = 1e-9;

long long quantized(double x) { return std::llround(x / kValueTol); }

const IndexSet kEmptySet;

}  // namespace

BudgetSpec BudgetSpec::uniform(int n, double r) {
    BudgetSpec spec;
    spec.budgets.assign(n, r);
    return spec;
}

const IndexSet& BudgetSpec::protected_row(int i) const {
    return untouchable.empty() ? kEmptySet : untouchable[i];
}

void BudgetSpec::validate(const BoolMatrix& a) const {
    if ((int)budgets.size() != a.n) throw std::invalid_argument("budget vector length != n");
    for (double r : budgets)
        if (r < 0.0) throw std::invalid_argument("budgets must be nonnegative");
    if (!untouchable.empty()) {
        if ((int)untouchable.size() != a.n)
            throw std::invalid_argument("untouchable sets length != n");
        for (int i = 0; i < a.n; ++i)
            if (!std::includes(a.rows[i].begin(), a.rows[i].end(), untouchable[i].begin(),
                               untouchable[i].end()))
                throw std::invalid_argument("untouchable entries must be a subset of row " +
                                            std::to_string(i));
    }
    if (weights && weights->n != a.n) throw std::invalid_argument("weight matrix size != n");
}

IndexSet minimal_row(const IndexSet& a_row, const std::vector<double>& v, int budget,
                     const IndexSet& untouchable) {
    std::vector<int> cuttable;
    cuttable.reserve(a_row.size());
    std::set_difference(a_row.begin(), a_row.end(), untouchable.begin(), untouchable.end(),
                        std::back_inserter(cuttable));
    if (budget < (int)cuttable.size()) {
        std::stable_sort(cuttable.begin(), cuttable.end(), [&](int a, int b) {
            auto qa = quantized(v[a]), qb = quantized(v[b]);
            return qa > qb || (qa == qb && a < b);
        });
        cuttable.resize(budget);
    }
    IndexSet survivors;
    std::sort(cuttable.begin(), cuttable.end());
    std::set_difference(a_row.begin(), a_row.end(), cuttable.begin(), cuttable.end(),
                        std::back_inserter(survivors));
    return survivors;
}

bool is_row_minimal(const IndexSet& x_row, const IndexSet& a_row, const std::vector<double>& v,
                    int budget, const IndexSet& untouchable) {
    double value = 0.0;
    for (int j : x_row) value += v[j];
    double best = 0.0;
    for (int j : minimal_row(a_row, v, budget, untouchable)) best += v[j];
    return value <= best + kValueTol;
}

std::vector<int> weighted_row_order(const IndexSet& a_row, const std::vector<double>& weights,
                                    const std::vector<double>& v, WeightedKey key) {
    std::vector<int> order(a_row);
    auto score = [&](int j) {
        return key == WeightedKey::product ? weights[j] * v[j] : v[j] / weights[j];
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto qa = quantized(score(a)), qb = quantized(score(b));
        return qa > qb || (qa == qb && a < b);
    });
    return order;
}

IndexSet weighted_minimal_row(const IndexSet& a_row, const std::vector<double>& weights,
                              const std::vector<double>& v, double budget,
                              const IndexSet& untouchable, WeightedKey key) {
    std::vector<int> cuttable;
    std::set_difference(a_row.begin(), a_row.end(), untouchable.begin(), untouchable.end(),
                        std::back_inserter(cuttable));
    IndexSet cut;
    double remaining = budget;
    for (int j : weighted_row_order(cuttable, weights, v, key)) {
        if (weights[j] <= remaining + kValueTol) {
            cut.push_back(j);
            remaining -= weights[j];
        }
    }
    std::sort(cut.begin(), cut.end());
    IndexSet survivors;
    std::set_difference(a_row.begin(), a_row.end(), cut.begin(), cut.end(),
                        std::back_inserter(survivors));
    return survivors;
}

namespace {

// Working view of one solve: the pattern of the current candidate plus
// the weight of every admissible entry (1 in the unweighted case).
struct BallContext {
    const BoolMatrix& a;
    const BudgetSpec& spec;
    const SolveConfig& cfg;
    std::vector<std::vector<double>> row_weights;  // full-length buffers, one per use

    explicit BallContext(const BoolMatrix& a_, const BudgetSpec& spec_, const SolveConfig& cfg_)
        : a(a_), spec(spec_), cfg(cfg_) {}

    double weight(int i, int j) const { return spec.weighted() ? spec.weights->weight(i, j) : 1.0; }

    WeightedMatrix weighted_view(const BoolMatrix& x) const {
        WeightedMatrix w;
        w.n = x.n;
        w.rows.resize(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int j : x.rows[i]) w.rows[i].push_back({j, weight(i, j)});
        return w;
    }

    double row_value(const IndexSet& row, const std::vector<double>& v, int i) const {
        double acc = 0.0;
        for (int j : row) acc += weight(i, j) * v[j];
        return acc;
    }

    // Minimal row of A_i restricted to S (given as the indices of
    // a_row_s), with respect to v.
    IndexSet minimal_row_on(int i, const IndexSet& a_row_s, const IndexSet& unt_s,
                            const std::vector<double>& v) const {
        if (!spec.weighted())
            return minimal_row(a_row_s, v, (int)std::llround(spec.budgets[i]), unt_s);
        std::vector<double> wbuf(a.n, 0.0);
        for (int j : a_row_s) wbuf[j] = spec.weights->weight(i, j);
        return weighted_minimal_row(a_row_s, wbuf, v, spec.budgets[i], unt_s, cfg.weighted_key);
    }

    void check_feasible(const BoolMatrix& x) const {
        for (int i = 0; i < a.n; ++i) {
            if (!std::includes(a.rows[i].begin(), a.rows[i].end(), x.rows[i].begin(),
                               x.rows[i].end()))
                throw invariant_error("candidate row is not a subset of A");
            const auto& prot = spec.protected_row(i);
            if (!std::includes(x.rows[i].begin(), x.rows[i].end(), prot.begin(), prot.end()))
                throw invariant_error("untouchable entry was removed");
            double cut = 0.0;
            IndexSet removed;
            std::set_difference(a.rows[i].begin(), a.rows[i].end(), x.rows[i].begin(),
                                x.rows[i].end(), std::back_inserter(removed));
            for (int j : removed) cut += weight(i, j);
            if (cut > spec.budgets[i] + 1e-9)
                throw invariant_error("row " + std::to_string(i) + " exceeds its budget");
        }
    }
};

size_t hash_matrix(const BoolMatrix& x) {
    size_t h = 1469598103934665603ull;
    auto mix = [&](size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& row : x.rows) {
        mix(row.size());
        for (int j : row) mix((size_t)j);
    }
    return h;
}

}  // namespace

MinRhoResult min_rho_over_ball(const BoolMatrix& a, const BudgetSpec& spec,
                               const SolveConfig& cfg) {
    a.validate();
    spec.validate(a);
    BallContext ctx(a, spec, cfg);

    BoolMatrix x = cfg.start.value_or(a);
    if (cfg.start) {
        if (x.n != a.n) throw std::invalid_argument("warm start has mismatched size");
        ctx.check_feasible(x);
    }

    long eig_count = 0;
    double last_outer_rho = std::numeric_limits<double>::infinity();
    const long step_cap = 1000L * a.n + 10000;
    long steps = 0;

    for (;;) {  // (*) outer iteration
        if (is_acyclic(x)) {
            if (cfg.debug_asserts) ctx.check_feasible(x);
            return {std::move(x), 0.0, true, eig_count};
        }
        auto f = frobenius_factorize(x);
        auto mlev = spec.weighted()
                        ? minimal_leading_eigenvector(ctx.weighted_view(x), f, cfg.spectral)
                        : minimal_leading_eigenvector(x, f, cfg.spectral);
        ++eig_count;
        double rho = mlev.value;
        // Global rho is non-increasing; it decreases strictly only once
        // every block attaining it has been processed (several blocks can
        // attain rho at once, each consuming one outer iteration).
        if (cfg.debug_asserts && rho > last_outer_rho + std::max(1e-8 * last_outer_rho, 1e-12))
            throw invariant_error("spectral radius increased across iterations");
        last_outer_rho = rho;

        std::vector<double> v = std::move(mlev.vec);
        IndexSet s = std::move(mlev.support);
        for (int i = 0; i < a.n; ++i)  // keep v supported exactly on S
            if (!std::binary_search(s.begin(), s.end(), i)) v[i] = 0.0;

        std::set<size_t> seen;
        bool next_outer = false;
        while (!next_outer) {  // (**) main loop
            if (++steps > step_cap)
                throw invariant_error("relaxation exceeded its step cap; internal cycling");
            if (cfg.debug_asserts && !seen.insert(hash_matrix(x)).second)
                throw invariant_error("repeated state within one outer iteration");

            BoolMatrix xs = restrict_to(x, s);
            auto fs = frobenius_factorize(xs);
            IndexSet h_local = spec.weighted()
                                   ? basic_set(restrict_to(*spec.weights, s), fs, cfg.spectral)
                                   : basic_set(xs, fs, cfg.spectral);
            IndexSet h;
            h.reserve(h_local.size());
            for (int k : h_local) h.push_back(s[k]);
            std::sort(h.begin(), h.end());

            // I = rows of X' already minimal in B(A_i', r_i) w.r.t. v'.
            IndexSet minimal_set;
            std::vector<IndexSet> replacement(a.n);
            for (int i : s) {
                IndexSet a_row_s, unt_s, x_row_s;
                const auto& prot = spec.protected_row(i);
                std::set_intersection(a.rows[i].begin(), a.rows[i].end(), s.begin(), s.end(),
                                      std::back_inserter(a_row_s));
                std::set_intersection(prot.begin(), prot.end(), s.begin(), s.end(),
                                      std::back_inserter(unt_s));
                std::set_intersection(x.rows[i].begin(), x.rows[i].end(), s.begin(), s.end(),
                                      std::back_inserter(x_row_s));
                replacement[i] = ctx.minimal_row_on(i, a_row_s, unt_s, v);
                double cur = ctx.row_value(x_row_s, v, i);
                double best = ctx.row_value(replacement[i], v, i);
                if (cur <= best + kValueTol) minimal_set.push_back(i);
            }

            if (minimal_set == s) {
                // Optimality stop: every row of X on S is minimal w.r.t.
                // the positive eigenvector v|_S, so X attains the minimum.
                // Reverting off-support rows to A retains more edges, but
                // A's off-S rows may re-enter S and close cycles through
                // the boundary; keep the reset only when it leaves rho
                // unchanged.
                BoolMatrix x_hat = x;
                for (int i = 0; i < a.n; ++i)
                    if (!std::binary_search(s.begin(), s.end(), i)) x_hat.rows[i] = a.rows[i];
                double rho_hat = spec.weighted()
                                     ? spectral_radius(ctx.weighted_view(x_hat), cfg.spectral)
                                     : rho_of_boolean(x_hat, cfg.spectral);
                if (rho_hat > rho + std::max(1e-8 * rho, 1e-9)) {
                    x_hat = x;
                    rho_hat = rho;
                }
                if (cfg.debug_asserts) {
                    ctx.check_feasible(x_hat);
                    double rho_full = spec.weighted()
                                          ? spectral_radius(ctx.weighted_view(x), cfg.spectral)
                                          : rho_of_boolean(x, cfg.spectral);
                    if (std::abs(rho_full - rho) > std::max(1e-8 * rho, 1e-8))
                        throw invariant_error(
                            "rho of the terminal matrix deviates from the inner rho");
                }
                return {std::move(x_hat), rho_hat, true, eig_count};
            }

            // Build the relaxed candidate: rows in S \ I take the
            // minimal row inside S and revert to A outside S.
            BoolMatrix x_tilde = x;
            for (int i : s) {
                if (std::binary_search(minimal_set.begin(), minimal_set.end(), i)) continue;
                IndexSet off_s;
                std::set_difference(a.rows[i].begin(), a.rows[i].end(), s.begin(), s.end(),
                                    std::back_inserter(off_s));
                IndexSet merged;
                std::merge(replacement[i].begin(), replacement[i].end(), off_s.begin(), off_s.end(),
                           std::back_inserter(merged));
                x_tilde.rows[i] = std::move(merged);
            }
            if (cfg.debug_asserts) ctx.check_feasible(x_tilde);

            if (std::includes(minimal_set.begin(), minimal_set.end(), h.begin(), h.end())) {
                // rho is preserved and the leading eigenvalue stays
                // simple; recompute the eigenvector on the same support.
                BoolMatrix xts = restrict_to(x_tilde, s);
                auto fts = frobenius_factorize(xts);
                auto mlev2 =
                    spec.weighted()
                        ? minimal_leading_eigenvector(
                              restrict_to(ctx.weighted_view(x_tilde), s), fts, cfg.spectral)
                        : minimal_leading_eigenvector(xts, fts, cfg.spectral);
                ++eig_count;
                if (cfg.debug_asserts && std::abs(mlev2.value - rho) > std::max(1e-8 * rho, 1e-8))
                    throw invariant_error("rho changed although the basic set was minimal");
                x = std::move(x_tilde);
                std::fill(v.begin(), v.end(), 0.0);
                IndexSet new_s;
                new_s.reserve(mlev2.support.size());
                for (int k : mlev2.support) {
                    v[s[k]] = mlev2.vec[k];
                    new_s.push_back(s[k]);
                }
                if (cfg.debug_asserts &&
                    !std::includes(s.begin(), s.end(), new_s.begin(), new_s.end()))
                    throw invariant_error("support grew within an outer iteration");
                s = std::move(new_s);
            } else {
                // rho restricted to S strictly drops; start the next
                // outer iteration.
                if (cfg.debug_asserts) {
                    BoolMatrix xts = restrict_to(x_tilde, s);
                    double rho_s = spec.weighted()
                                       ? spectral_radius(restrict_to(ctx.weighted_view(x_tilde), s),
                                                         cfg.spectral)
                                       : rho_of_boolean(xts, cfg.spectral);
                    if (rho_s >= rho - std::max(1e-8 * rho, 1e-12))
                        throw invariant_error(
                            "restricted spectral radius did not strictly decrease");
                }
                x = std::move(x_tilde);
                next_outer = true;
            }
        }
    }
}

}  // namespace mas
