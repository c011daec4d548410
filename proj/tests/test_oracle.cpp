#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mas/oracle.hpp"

using namespace mas;
using namespace mas::testing;

namespace {

// Forward edge count of a under ordering (order[p] = vertex at position p).
long forward_edges(const BoolMatrix& a, const std::vector<int>& order) {
    std::vector<int> pos(a.n);
    for (int p = 0; p < a.n; ++p) pos[order[p]] = p;
    long kept = 0;
    for (int i = 0; i < a.n; ++i)
        for (int j : a.rows[i])
            if (j != i && pos[j] < pos[i]) ++kept;
    return kept;
}

int max_backward_in(const BoolMatrix& a, const std::vector<int>& order) {
    std::vector<int> pos(a.n);
    for (int p = 0; p < a.n; ++p) pos[order[p]] = p;
    int worst = 0;
    for (int i = 0; i < a.n; ++i) {
        int cut = 0;
        for (int j : a.rows[i])
            if (j == i || pos[j] > pos[i]) ++cut;
        worst = std::max(worst, cut);
    }
    return worst;
}

}  // namespace

TEST_CASE("exact_mas") {
    CHECK(exact_mas(cycle_graph(3)).value == 2.0);
    CHECK(exact_mas(complete_digraph(3)).value == 3.0);
    auto chain = chain_graph(5);
    CHECK(exact_mas(chain).value == (double)edge_count(chain));
    SUBCASE("witness order reproduces the optimum") {
        Rng rng(41);
        for (int t = 0; t < 30; ++t) {
            int n = 2 + (int)rng.below(6);
            auto a = random_bool_matrix(rng, n, 0.5, true);
            auto res = exact_mas(a);
            REQUIRE(res.order.has_value());
            CHECK(forward_edges(a, *res.order) == (long)res.value);
        }
    }
}

TEST_CASE("exact_max_mas") {
    CHECK(exact_max_mas(cycle_graph(6)).value == 1.0);
    CHECK(exact_max_mas(complete_digraph(4)).value == 3.0);
    CHECK(exact_max_mas(chain_graph(5)).value == 0.0);
    SUBCASE("witness order reproduces the optimum") {
        Rng rng(42);
        for (int t = 0; t < 30; ++t) {
            int n = 2 + (int)rng.below(6);
            auto a = random_bool_matrix(rng, n, 0.5, true);
            auto res = exact_max_mas(a);
            REQUIRE(res.order.has_value());
            CHECK(max_backward_in(a, *res.order) == (int)res.value);
        }
    }
}

TEST_CASE("exact_min_rho") {
    auto k3 = complete_digraph(3);
    CHECK(exact_min_rho(k3, {0, 0, 0}).value ==
          doctest::Approx(rho_of_boolean(k3)).epsilon(1e-8));
    CHECK(exact_min_rho(k3, {1, 1, 1}).value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(exact_min_rho(cycle_graph(5), {1, 1, 1, 1, 1}).value == doctest::Approx(0.0));
    SUBCASE("witness matrix attains the reported rho") {
        Rng rng(43);
        for (int t = 0; t < 20; ++t) {
            int n = 2 + (int)rng.below(4);
            auto a = random_bool_matrix(rng, n, 0.5, true);
            auto res = exact_min_rho(a, std::vector<int>(n, 1));
            REQUIRE(res.witness.has_value());
            CHECK(rho_of_boolean(*res.witness) == doctest::Approx(res.value).epsilon(1e-8));
        }
    }
}

TEST_CASE("property: pigeonhole bound and cross-oracle consistency") {
    Rng rng(44);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + (int)rng.below(6);
        auto a = random_bool_matrix(rng, n, 0.5, false);
        long e = edge_count(a);
        auto mas = exact_mas(a);
        CHECK((long)mas.value >= (e + 1) / 2);
        // The max-MAS ordering keeps some valid edge set, never more than the
        // MAS optimum.
        auto mm = exact_max_mas(a);
        REQUIRE(mm.order.has_value());
        CHECK(forward_edges(a, *mm.order) <= (long)mas.value);
    }
}

TEST_CASE("property: monotonicity under edge addition") {
    Rng rng(45);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + (int)rng.below(4);
        auto a = random_bool_matrix(rng, n, 0.4, false);
        // Pick an absent non-loop entry and add it.
        int i = -1, j = -1;
        for (int tries = 0; tries < 100 && i < 0; ++tries) {
            int u = (int)rng.below(n), v = (int)rng.below(n);
            if (u != v && !a.has_entry(v, u)) i = v, j = u;
        }
        if (i < 0) continue;
        auto b = a;
        b.rows[i].insert(std::lower_bound(b.rows[i].begin(), b.rows[i].end(), j), j);
        CHECK(exact_max_mas(b).value >= exact_max_mas(a).value);
        CHECK(exact_mas(b).value >= exact_mas(a).value);
    }
}
