#include "mas/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace mas {

namespace {

struct Masks {
    std::vector<unsigned> in;   // in[v]: sources of in-edges of v, loop excluded
    std::vector<unsigned> out;  // out[v]: targets of out-edges of v, loop excluded
    std::vector<bool> loop;
    long total_loopfree = 0;
};

Masks build_masks(const BoolMatrix& a) {
    Masks m;
    m.in.assign(a.n, 0);
    m.out.assign(a.n, 0);
    m.loop.assign(a.n, false);
    for (int i = 0; i < a.n; ++i)
        for (int j : a.rows[i]) {
            if (j == i) {
                m.loop[i] = true;
                continue;
            }
            m.in[i] |= 1u << j;
            m.out[j] |= 1u << i;
            ++m.total_loopfree;
        }
    return m;
}

void check_cap(const BoolMatrix& a, int cap) {
    if (a.n > cap)
        throw std::invalid_argument("oracle size cap exceeded: n=" + std::to_string(a.n) +
                                    " > " + std::to_string(cap));
}

}  // namespace

OracleResult exact_mas(const BoolMatrix& a, int cap) {
    check_cap(a, cap);
    const auto m = build_masks(a);
    const int n = a.n;

    OracleResult res;
    std::vector<int> current(n), best(n);
    long lost_best = m.total_loopfree + 1;
    long enumerated = 0;

    // Place vertices left to right; an edge is lost exactly when its
    // source is placed after its target, counted at source placement.
    auto recurse = [&](auto&& self, int depth, unsigned placed, long lost) -> void {
        if (lost >= lost_best) return;  // cannot beat the incumbent
        if (depth == n) {
            ++enumerated;
            lost_best = lost;
            best = current;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed & (1u << v)) continue;
            current[depth] = v;
            self(self, depth + 1, placed | (1u << v),
                 lost + std::popcount(m.out[v] & placed));
        }
    };
    recurse(recurse, 0, 0, 0);

    res.value = (double)(m.total_loopfree - lost_best);
    res.order = best;
    res.enumerated = enumerated;
    return res;
}

OracleResult exact_max_mas(const BoolMatrix& a, int cap) {
    check_cap(a, cap);
    const auto m = build_masks(a);
    const int n = a.n;

    OracleResult res;
    std::vector<int> current(n), best(n);
    int best_max = n + 1;
    long enumerated = 0;

    // c_v is finalized when v is placed: in-edges from still-unplaced
    // vertices are backward, plus a self-loop if present.
    auto recurse = [&](auto&& self, int depth, unsigned placed, int running_max) -> void {
        if (running_max >= best_max) return;
        if (depth == n) {
            ++enumerated;
            best_max = running_max;
            best = current;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (placed & (1u << v)) continue;
            int cv = std::popcount(m.in[v] & ~placed) + (m.loop[v] ? 1 : 0);
            current[depth] = v;
            self(self, depth + 1, placed | (1u << v), std::max(running_max, cv));
        }
    };
    recurse(recurse, 0, 0, 0);

    res.value = (double)best_max;
    res.order = best;
    res.enumerated = enumerated;
    return res;
}

OracleResult exact_min_rho(const BoolMatrix& a, const std::vector<int>& budgets,
                           long enumeration_cap, const SpectralOptions& opts) {
    if ((int)budgets.size() != a.n) throw std::invalid_argument("budget vector length != n");

    // Subsets of size <= r_i of each row support.
    auto choices_of_row = [&](int i) {
        const auto& sup = a.rows[i];
        const int m = (int)sup.size();
        std::vector<IndexSet> out;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) > budgets[i]) continue;
            IndexSet survivors;
            for (int k = 0; k < m; ++k)
                if (!(mask & (1u << k))) survivors.push_back(sup[k]);
            out.push_back(std::move(survivors));
        }
        return out;
    };

    long combos = 1;
    std::vector<std::vector<IndexSet>> choices(a.n);
    for (int i = 0; i < a.n; ++i) {
        if ((int)a.rows[i].size() > 20)
            throw std::invalid_argument("row support too large for exhaustive enumeration");
        choices[i] = choices_of_row(i);
        combos *= (long)choices[i].size();
        if (combos > enumeration_cap)
            throw std::invalid_argument("enumeration bound exceeded: more than " +
                                        std::to_string(enumeration_cap) + " candidates");
    }

    OracleResult res;
    res.value = std::numeric_limits<double>::infinity();
    BoolMatrix candidate;
    candidate.n = a.n;
    candidate.rows.resize(a.n);

    auto recurse = [&](auto&& self, int row) -> void {
        if (row == a.n) {
            ++res.enumerated;
            double rho = rho_of_boolean(candidate, opts);
            if (rho < res.value) {
                res.value = rho;
                res.witness = candidate;
            }
            return;
        }
        for (const auto& pick : choices[row]) {
            candidate.rows[row] = pick;
            self(self, row + 1);
        }
    };
    recurse(recurse, 0);
    return res;
}

}  // namespace mas
