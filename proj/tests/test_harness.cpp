#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "mas/harness.hpp"

using namespace mas;
using namespace mas::testing;

namespace {

GenSpec uniform_spec(int n, double p_edge, std::uint64_t seed) {
    GenSpec s;
    s.family = GraphFamily::uniform_density;
    s.n = n;
    s.p_edge = p_edge;
    s.seed = seed;
    return s;
}

GenSpec sw_spec(int n, int k, double p, std::uint64_t seed) {
    GenSpec s;
    s.family = GraphFamily::small_world;
    s.n = n;
    s.k = k;
    s.p = p;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("gen_uniform") {
    SUBCASE("p_edge 0 gives the empty graph") {
        CHECK(edge_count(gen_uniform(uniform_spec(12, 0.0, 7))) == 0);
    }
    SUBCASE("p_edge 1 gives the complete digraph") {
        auto m = gen_uniform(uniform_spec(9, 1.0, 7));
        CHECK(edge_count(m) == 9 * 8);
        for (int i = 0; i < 9; ++i) CHECK_FALSE(m.has_entry(i, i));
    }
    SUBCASE("fixed seed is deterministic") {
        auto a = gen_uniform(uniform_spec(20, 0.3, 123));
        auto b = gen_uniform(uniform_spec(20, 0.3, 123));
        CHECK(a == b);
        auto c = gen_uniform(uniform_spec(20, 0.3, 124));
        CHECK(a != c);
    }
    SUBCASE("self loops only when requested") {
        auto s = uniform_spec(10, 1.0, 1);
        s.allow_self_loops = true;
        CHECK(edge_count(gen_uniform(s)) == 100);
    }
}

TEST_CASE("gen_small_world") {
    SUBCASE("p = 0 is the pure ring lattice with total degree k") {
        auto m = gen_small_world(sw_spec(20, 6, 0.0, 5));
        std::vector<int> degree(20, 0);
        for (int i = 0; i < 20; ++i)
            for (int j : m.rows[i]) {
                degree[i]++;
                degree[j]++;
            }
        for (int d : degree) CHECK(d == 6);
        CHECK(edge_count(m) == 20 * 6 / 2);
    }
    SUBCASE("p = 1 preserves the edge count") {
        auto m = gen_small_world(sw_spec(30, 6, 1.0, 5));
        CHECK(edge_count(m) == 30 * 6 / 2);
    }
    SUBCASE("no self-loops, no duplicate undirected pairs") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto m = gen_small_world(sw_spec(25, 8, 0.4, seed));
            std::set<std::pair<int, int>> pairs;
            for (int i = 0; i < m.n; ++i)
                for (int j : m.rows[i]) {
                    CHECK(i != j);
                    auto key = std::minmax(i, j);
                    CHECK(pairs.insert({key.first, key.second}).second);
                }
            m.validate();
        }
    }
    SUBCASE("deterministic per seed") {
        CHECK(gen_small_world(sw_spec(40, 10, 0.1, 9)) ==
              gen_small_world(sw_spec(40, 10, 0.1, 9)));
    }
}

TEST_CASE("run_table") {
    SUBCASE("empty spec list gives an empty report") {
        auto rep = run_table({}, 5);
        CHECK(rep.rows.empty());
        CHECK(rep.cells.empty());
    }
    SUBCASE("small cell: rows, aggregates, determinism") {
        std::vector<GenSpec> specs = {uniform_spec(10, 0.3, 77), uniform_spec(8, 0.5, 78)};
        auto rep = run_table(specs, 3);
        REQUIRE(rep.rows.size() == 6);
        REQUIRE(rep.cells.size() == 2);
        for (const auto& row : rep.rows) {
            CHECK(row.ok);
            CHECK(row.gamma > 0.0);
            CHECK(row.gamma <= 1.0);
        }
        for (int c = 0; c < 2; ++c) {
            double sum_gamma = 0.0, sum_r = 0.0;
            for (const auto& row : rep.rows)
                if (row.spec.n == specs[c].n) {
                    sum_gamma += row.gamma;
                    sum_r += row.r_star;
                }
            CHECK(rep.cells[c].trials == 3);
            CHECK(rep.cells[c].mean_gamma == doctest::Approx(sum_gamma / 3));
            CHECK(rep.cells[c].mean_r_star == doctest::Approx(sum_r / 3));
        }
        auto rep2 = run_table(specs, 3);
        for (size_t i = 0; i < rep.rows.size(); ++i) {
            CHECK(rep.rows[i].r_star == rep2.rows[i].r_star);
            CHECK(rep.rows[i].gamma == rep2.rows[i].gamma);
            CHECK(rep.rows[i].eig_count == rep2.rows[i].eig_count);
        }
    }
}

TEST_CASE("generated instances pass matrix validation") {
    Rng rng(88);
    for (int t = 0; t < 20; ++t) {
        auto u = gen_uniform(uniform_spec(5 + (int)rng.below(30), rng.uniform01(), rng.next()));
        CHECK_NOTHROW(u.validate());
        int n = 10 + (int)rng.below(30);
        int k = 2 + 2 * (int)rng.below(4);
        auto s = gen_small_world(sw_spec(n, k, rng.uniform01(), rng.next()));
        CHECK_NOTHROW(s.validate());
    }
}
