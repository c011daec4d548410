#include "mas/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mas/rng.hpp"

namespace mas {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

std::vector<int> cuts_per_vertex(const BoolMatrix& a, const BoolMatrix& x) {
    std::vector<int> cuts(a.n);
    for (int i = 0; i < a.n; ++i) cuts[i] = (int)(a.rows[i].size() - x.rows[i].size());
    return cuts;
}

int max_cut_count(const BoolMatrix& a, const BoolMatrix& x) {
    int worst = 0;
    for (int i = 0; i < a.n; ++i)
        worst = std::max(worst, (int)(a.rows[i].size() - x.rows[i].size()));
    return worst;
}

// A previous probe's witness is a valid warm start for budget r when no
// row exceeds r cuts (untouchable entries are preserved by construction).
std::optional<BoolMatrix> warm_start(const std::optional<BoolMatrix>& witness,
                                     const BoolMatrix& a, int r) {
    if (witness && max_cut_count(a, *witness) <= r) return witness;
    return std::nullopt;
}

}  // namespace

MaxMasSolution solve_max_mas(const BoolMatrix& a, const SolveConfig& cfg) {
    auto start = clock_type::now();
    MaxMasSolution sol;
    if (is_acyclic(a)) {
        sol.r_star = 0;
        sol.g0 = a;
        sol.per_vertex_cuts.assign(a.n, 0);
        sol.wall_time_ms = ms_since(start);
        return sol;
    }
    int r0 = 0;
    for (const auto& row : a.rows) r0 = std::max(r0, (int)row.size());

    // B(A, r0) contains the zero matrix, so r0 is feasible; invariant:
    // lo infeasible, hi feasible with `best` its witness.
    int lo = 0, hi = r0;
    std::optional<BoolMatrix> best, last;
    long eigs = 0;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        SolveConfig probe = cfg;
        probe.start = warm_start(best, a, mid);
        if (!probe.start) probe.start = warm_start(last, a, mid);
        auto res = min_rho_over_ball(a, BudgetSpec::uniform(a.n, mid), probe);
        eigs += res.eig_count;
        if (res.rho == 0.0) {
            hi = mid;
            best = std::move(res.x_hat);
        } else {
            lo = mid;
            last = std::move(res.x_hat);
        }
    }
    if (!best) {
        SolveConfig probe = cfg;
        probe.start = warm_start(last, a, hi);
        auto res = min_rho_over_ball(a, BudgetSpec::uniform(a.n, hi), probe);
        eigs += res.eig_count;
        best = std::move(res.x_hat);
    }
    sol.r_star = hi;
    sol.g0 = std::move(*best);
    sol.per_vertex_cuts = cuts_per_vertex(a, sol.g0);
    sol.eig_count = eigs;
    sol.wall_time_ms = ms_since(start);
    return sol;
}

FeasibilityResult solve_problem1(const BoolMatrix& a, const std::vector<double>& budgets,
                                 const SolveConfig& cfg) {
    BudgetSpec spec;
    spec.budgets = budgets;
    auto res = min_rho_over_ball(a, spec, cfg);
    FeasibilityResult out;
    out.feasible = res.rho == 0.0;
    out.rho = res.rho;
    out.witness = std::move(res.x_hat);
    out.eig_count = res.eig_count;
    return out;
}

WeightedMaxMasSolution solve_problem2(const WeightedMatrix& a, const SolveConfig& cfg,
                                      std::optional<double> gap) {
    auto start = clock_type::now();
    a.validate();
    const BoolMatrix pattern = a.pattern();
    WeightedMaxMasSolution sol;
    if (is_acyclic(pattern)) {
        sol.budget = 0.0;
        sol.g0 = pattern;
        sol.wall_time_ms = ms_since(start);
        return sol;
    }
    double max_row_weight = 0.0;
    for (int i = 0; i < a.n; ++i) {
        double total = 0.0;
        for (auto& [j, w] : a.rows[i]) total += w;
        max_row_weight = std::max(max_row_weight, total);
    }
    const double eps = gap.value_or(1e-6 * max_row_weight);

    auto probe = [&](double budget, long& eigs) {
        BudgetSpec spec = BudgetSpec::uniform(a.n, budget);
        spec.weights = a;
        auto res = min_rho_over_ball(pattern, spec, cfg);
        eigs += res.eig_count;
        return res;
    };

    long eigs = 0;
    double lo = 0.0, hi = max_row_weight;
    auto top = probe(hi, eigs);
    BoolMatrix witness = std::move(top.x_hat);  // feasible: the ball contains the zero matrix
    while (hi - lo > eps) {
        double mid = 0.5 * (lo + hi);
        auto res = probe(mid, eigs);
        if (res.rho == 0.0) {
            hi = mid;
            witness = std::move(res.x_hat);
        } else {
            lo = mid;
        }
    }
    sol.budget = hi;
    sol.g0 = std::move(witness);
    sol.eig_count = eigs;
    sol.wall_time_ms = ms_since(start);
    return sol;
}

ConstrainedMaxMasSolution solve_problem3(const BoolMatrix& a,
                                         const std::vector<IndexSet>& untouchable,
                                         const SolveConfig& cfg) {
    auto start = clock_type::now();
    ConstrainedMaxMasSolution sol;
    if (untouchable.empty()) {
        auto plain = solve_max_mas(a, cfg);
        sol.feasible = true;
        sol.r_star = plain.r_star;
        sol.g0 = std::move(plain.g0);
        sol.per_vertex_cuts = std::move(plain.per_vertex_cuts);
        sol.eig_count = plain.eig_count;
        sol.wall_time_ms = ms_since(start);
        return sol;
    }

    BoolMatrix protected_graph;
    protected_graph.n = a.n;
    protected_graph.rows = untouchable;
    protected_graph.validate();
    if (!is_acyclic(protected_graph)) {
        sol.feasible = false;
        sol.wall_time_ms = ms_since(start);
        return sol;
    }

    int r0 = 0;
    for (int i = 0; i < a.n; ++i)
        r0 = std::max(r0, (int)(a.rows[i].size() - untouchable[i].size()));

    auto probe = [&](int r, const std::optional<BoolMatrix>& ws, long& eigs) {
        BudgetSpec spec = BudgetSpec::uniform(a.n, r);
        spec.untouchable = untouchable;
        SolveConfig pcfg = cfg;
        pcfg.start = warm_start(ws, a, r);
        auto res = min_rho_over_ball(a, spec, pcfg);
        eigs += res.eig_count;
        return res;
    };

    long eigs = 0;
    sol.feasible = true;
    if (is_acyclic(a)) {
        sol.r_star = 0;
        sol.g0 = a;
    } else {
        int lo = 0, hi = r0;
        std::optional<BoolMatrix> best;
        while (hi - lo > 1) {
            int mid = lo + (hi - lo) / 2;
            auto res = probe(mid, best, eigs);
            if (res.rho == 0.0) {
                hi = mid;
                best = std::move(res.x_hat);
            } else {
                lo = mid;
            }
        }
        if (!best) best = probe(hi, best, eigs).x_hat;
        sol.r_star = hi;
        sol.g0 = std::move(*best);
    }
    sol.per_vertex_cuts = cuts_per_vertex(a, sol.g0);
    sol.eig_count = eigs;
    sol.wall_time_ms = ms_since(start);
    return sol;
}

MasApproximation approx_mas(const BoolMatrix& a, const BoolMatrix& g0) {
    if (a.n != g0.n) throw std::invalid_argument("size mismatch between A and G0");
    if (!is_acyclic(g0)) throw std::invalid_argument("G0 must be acyclic");
    for (int i = 0; i < a.n; ++i)
        if (!std::includes(a.rows[i].begin(), a.rows[i].end(), g0.rows[i].begin(),
                           g0.rows[i].end()))
            throw std::invalid_argument("G0 must be a subgraph of A");

    // Any topological order of G0 yields a valid Frobenius permutation
    // (G0 is nilpotent, so all blocks are singletons and ties are free).
    // Keep the permuted A strictly above the diagonal; among the valid
    // orders, place greedily so that each placement loses as few A-edges
    // as possible. A vertex is placeable once all its G0 out-neighbours
    // are placed; placing it then discards its A out-edges to vertices
    // still unplaced, so pick the placeable vertex with the fewest such
    // edges (ties to the lowest index).
    const int n = a.n;
    std::vector<int> g0_out_unplaced(n, 0), a_out_unplaced(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j : a.rows[i]) ++a_out_unplaced[j];
        for (int j : g0.rows[i]) ++g0_out_unplaced[j];
    }
    std::vector<int> place_pos(n, -1);
    std::vector<int> placement;
    placement.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (place_pos[v] >= 0 || g0_out_unplaced[v] != 0) continue;
            if (pick < 0 || a_out_unplaced[v] < a_out_unplaced[pick]) pick = v;
        }
        place_pos[pick] = step;
        placement.push_back(pick);
        for (int src : a.rows[pick])  // in-edges of pick: sources lose an unplaced target
            if (place_pos[src] < 0) --a_out_unplaced[src];
        for (int src : g0.rows[pick])
            if (place_pos[src] < 0) --g0_out_unplaced[src];
    }

    MasApproximation out;
    out.g_bar.n = n;
    out.g_bar.rows.resize(n);
    for (int i = 0; i < n; ++i)
        for (int j : a.rows[i])
            if (place_pos[i] < place_pos[j]) out.g_bar.rows[i].push_back(j);

    // Placement runs sink-side first: edges point from later placements
    // to earlier ones. Reverse it so reported edges are forward.
    out.ordering.assign(placement.rbegin(), placement.rend());
    out.gamma = edge_count(a) == 0 ? 1.0 : (double)edge_count(out.g_bar) / (double)edge_count(a);
    out.contains_g0 = true;
    for (int i = 0; i < a.n && out.contains_g0; ++i)
        out.contains_g0 = std::includes(out.g_bar.rows[i].begin(), out.g_bar.rows[i].end(),
                                        g0.rows[i].begin(), g0.rows[i].end());
    return out;
}

MasApproximation approx_mas_constrained(const BoolMatrix& a, const BoolMatrix& g0,
                                        const BudgetSpec& spec) {
    auto out = approx_mas(a, g0);
    spec.validate(a);
    for (int i = 0; i < a.n; ++i) {
        const auto& bar = out.g_bar.rows[i];
        double cut = 0.0;
        IndexSet removed;
        std::set_difference(a.rows[i].begin(), a.rows[i].end(), bar.begin(), bar.end(),
                            std::back_inserter(removed));
        for (int j : removed)
            cut += spec.weighted() ? spec.weights->weight(i, j) : 1.0;
        if (!spec.budgets.empty() && cut > spec.budgets[i] + 1e-9)
            throw invariant_error("restored subgraph exceeds the budget of row " +
                                  std::to_string(i));
        const auto& prot = spec.protected_row(i);
        if (!std::includes(bar.begin(), bar.end(), prot.begin(), prot.end()))
            throw invariant_error("restored subgraph lost a protected edge in row " +
                                  std::to_string(i));
    }
    return out;
}

MasApproximation baseline_random_permutation(const BoolMatrix& a, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> order(a.n);
    for (int i = 0; i < a.n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<int> pos(a.n);
    for (int p = 0; p < a.n; ++p) pos[order[p]] = p;

    // Edge j -> i is forward when pos[j] < pos[i]; self-loops belong to
    // neither set.
    long fwd = 0, bwd = 0;
    for (int i = 0; i < a.n; ++i)
        for (int j : a.rows[i]) {
            if (j == i) continue;
            (pos[j] < pos[i] ? fwd : bwd)++;
        }
    const bool keep_forward = fwd >= bwd;

    MasApproximation out;
    out.g_bar.n = a.n;
    out.g_bar.rows.resize(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j : a.rows[i]) {
            if (j == i) continue;
            if ((pos[j] < pos[i]) == keep_forward) out.g_bar.rows[i].push_back(j);
        }
    out.ordering = keep_forward ? order : std::vector<int>(order.rbegin(), order.rend());
    out.gamma = edge_count(a) == 0 ? 1.0 : (double)edge_count(out.g_bar) / (double)edge_count(a);
    out.contains_g0 = false;
    return out;
}

}  // namespace mas
