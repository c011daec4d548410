#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mas/graph.hpp"
#include "mas/spectral.hpp"

using namespace mas;
using namespace mas::testing;

TEST_CASE("is_acyclic basics") {
    CHECK_FALSE(is_acyclic(cycle_graph(3)));
    CHECK(is_acyclic(chain_graph(3)));
    CHECK_FALSE(is_acyclic(BoolMatrix::from_edges(1, {{0, 0}})));
    CHECK(is_acyclic(BoolMatrix::from_edges(0, {})));
    CHECK(is_acyclic(BoolMatrix::from_edges(4, {})));
}

TEST_CASE("strongly connected components") {
    SUBCASE("two disjoint 2-cycles") {
        auto m = BoolMatrix::from_edges(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
        auto sccs = strongly_connected_components(m);
        REQUIRE(sccs.size() == 2);
        CHECK(sccs[0].size() == 2);
        CHECK(sccs[1].size() == 2);
    }
    SUBCASE("chain gives singletons") {
        auto sccs = strongly_connected_components(chain_graph(3));
        REQUIRE(sccs.size() == 3);
        for (const auto& c : sccs) CHECK(c.size() == 1);
    }
    SUBCASE("bidirected K3 is one component") {
        auto m = BoolMatrix::from_edges(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
        auto sccs = strongly_connected_components(m);
        REQUIRE(sccs.size() == 1);
        CHECK(sccs[0] == IndexSet{0, 1, 2});
    }
}

TEST_CASE("frobenius_factorize") {
    SUBCASE("irreducible matrix is a single block") {
        auto f = frobenius_factorize(cycle_graph(4));
        REQUIRE(f.blocks.size() == 1);
        CHECK(f.blocks[0] == IndexSet{0, 1, 2, 3});
    }
    SUBCASE("acyclic chain gives a topological order") {
        auto m = chain_graph(3);
        auto f = frobenius_factorize(m);
        REQUIRE(f.blocks.size() == 3);
        // Every edge u->v must have pos(v) < pos(u): the entry (v, u)
        // sits above the diagonal in the permuted matrix.
        for (int v = 0; v < m.n; ++v)
            for (int u : m.rows[v]) CHECK(f.pos_of[v] < f.pos_of[u]);
    }
    SUBCASE("2-cycle feeding a 2-cycle, permuted matrix checked entrywise") {
        // {0,1} is a 2-cycle, edge 1->2, {2,3} is a 2-cycle.
        auto m = BoolMatrix::from_edges(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
        auto f = frobenius_factorize(m);
        REQUIRE(f.blocks.size() == 2);
        CHECK(f.blocks[0] == IndexSet{2, 3});
        CHECK(f.blocks[1] == IndexSet{0, 1});
        CHECK(f.order == std::vector<int>{2, 3, 0, 1});
        int expected[4][4] = {{0, 1, 0, 1},  //
                              {1, 0, 0, 0},
                              {0, 0, 0, 1},
                              {0, 0, 1, 0}};
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q)
                CHECK((int)m.has_entry(f.order[p], f.order[q]) == expected[p][q]);
    }
}

TEST_CASE("restrict_to") {
    auto m = cycle_graph(3);
    SUBCASE("full set is the identity") { CHECK(restrict_to(m, {0, 1, 2}) == m); }
    SUBCASE("3-cycle to {0,1} keeps only 0->1") {
        auto r = restrict_to(m, {0, 1});
        CHECK(r == BoolMatrix::from_edges(2, {{0, 1}}));
    }
    SUBCASE("empty set gives 0x0") {
        auto r = restrict_to(m, {});
        CHECK(r.n == 0);
        CHECK(r.rows.empty());
    }
    SUBCASE("weighted restriction keeps weights") {
        WeightedMatrix w;
        w.n = 3;
        w.rows.resize(3);
        w.rows[1] = {{0, 2.5}};
        w.rows[2] = {{1, 1.5}};
        auto r = restrict_to(w, {1, 2});
        CHECK(r.n == 2);
        CHECK(r.weight(1, 0) == doctest::Approx(1.5));
        CHECK(r.weight(0, 1) == 0.0);
    }
}

TEST_CASE("edge_count") {
    CHECK(edge_count(cycle_graph(3)) == 3);
    CHECK(edge_count(BoolMatrix::from_edges(5, {})) == 0);
    CHECK(edge_count(complete_digraph(4)) == 12);
}

TEST_CASE("from_edges deduplicates and validates") {
    auto m = BoolMatrix::from_edges(3, {{0, 1}, {0, 1}, {2, 1}});
    CHECK(edge_count(m) == 2);
    CHECK(m.rows[1] == IndexSet{0, 2});
    CHECK_NOTHROW(m.validate());
    CHECK_THROWS(BoolMatrix::from_edges(2, {{0, 5}}));
}

TEST_CASE("property: frobenius permutation is block upper triangular") {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + (int)rng.below(9);
        auto m = random_bool_matrix(rng, n, rng.uniform01(), true);
        auto f = frobenius_factorize(m);
        // No entries strictly below the block diagonal.
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                int bi = f.block_of[f.order[p]], bj = f.block_of[f.order[q]];
                if (bi > bj) CHECK_FALSE(m.has_entry(f.order[p], f.order[q]));
            }
        // Blocks partition the vertex set.
        std::vector<int> seen(n, 0);
        for (const auto& b : f.blocks)
            for (int v : b) seen[v]++;
        CHECK(std::count(seen.begin(), seen.end(), 1) == n);
    }
}

TEST_CASE("property: acyclic iff all blocks singleton without self-loops") {
    Rng rng(202);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + (int)rng.below(10);
        auto m = random_bool_matrix(rng, n, rng.uniform01() * 0.5, true);
        auto f = frobenius_factorize(m);
        bool structural = true;
        for (const auto& b : f.blocks)
            if (b.size() > 1 || m.has_entry(b[0], b[0])) structural = false;
        CHECK(is_acyclic(m) == structural);
    }
}

TEST_CASE("property: restrict preserves entries") {
    Rng rng(303);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + (int)rng.below(8);
        auto m = random_bool_matrix(rng, n, 0.4, true);
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (rng.bernoulli(0.6)) s.push_back(i);
        auto r = restrict_to(m, s);
        for (int a = 0; a < (int)s.size(); ++a)
            for (int b = 0; b < (int)s.size(); ++b)
                CHECK(r.has_entry(a, b) == m.has_entry(s[a], s[b]));
    }
}

TEST_CASE("property: acyclicity iff spectral radius below 0.5, n <= 12") {
    Rng rng(404);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + (int)rng.below(12);
        auto m = random_bool_matrix(rng, n, rng.uniform01() * 0.4, true);
        CHECK(is_acyclic(m) == (rho_of_boolean(m) < 0.5));
    }
}
