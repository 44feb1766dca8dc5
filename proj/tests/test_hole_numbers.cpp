#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holes/hole_numbers.hpp"
#include "oracles.hpp"

using namespace holes;

namespace {

UniformHypergraph cycle(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return UniformHypergraph(n, 2, edges);
}

const SolverOptions exhaustive{SolverMode::exhaustive, 1'000'000'000};

PartiteMultiHypergraph star(int edges)
{
    std::vector<MultiEdge> es;
    for (int i = 0; i < edges; ++i)
        es.push_back({{0, 1 + i}, 1});
    return PartiteMultiHypergraph({1, edges}, es);
}

} // namespace

TEST_CASE("independence number")
{
    CHECK(independence_number(UniformHypergraph::complete(5, 2)).size == 1);
    CHECK(independence_number(UniformHypergraph::empty(5, 2)).size == 5);
    auto c5 = independence_number(cycle(5));
    CHECK(c5.size == 2);
    CHECK(is_independent(cycle(5), c5.vertices));
    CHECK(independence_number(UniformHypergraph::complete(6, 3)).size == 2);
    CHECK(independence_number(cycle(5), exhaustive).size == 2);
}

TEST_CASE("alpha_k small cases")
{
    for (int n = 2; n <= 6; ++n)
        CHECK(alpha_k(UniformHypergraph::complete(n, 2), 2).value == 0);
    CHECK(alpha_k(UniformHypergraph::complete(6, 3), 3).value == 0);
    auto c4 = alpha_k(cycle(4), 2);
    CHECK(c4.value == 1);
    REQUIRE(c4.hole);
    CHECK(verify_hole(cycle(4), *c4.hole));
    CHECK(alpha_k(UniformHypergraph::empty(7, 2), 2).value == 3);
    CHECK(alpha_k(UniformHypergraph::empty(7, 3), 3).value == 2);
    CHECK_FALSE(alpha_k(UniformHypergraph::complete(3, 2), 2).hole);
}

TEST_CASE("alpha_hat_k small cases")
{
    CHECK(alpha_hat_k(UniformHypergraph::empty(5, 2), 2).value == 5);
    // the independent set {0, 2} taken twice
    CHECK(alpha_hat_k(cycle(4), 2).value == 2);
    CHECK(alpha_hat_k(UniformHypergraph::complete(4, 2), 2).value == 1);
    auto c6 = alpha_hat_k(cycle(6), 2);
    CHECK(verify_hole(cycle(6), *c6.hole, true));
    CHECK(c6.value == 3);
}

TEST_CASE("hole verifier")
{
    auto c4 = cycle(4);
    CHECK(verify_hole(c4, {{{0}, {2}}}));
    CHECK_FALSE(verify_hole(c4, {{{0}, {1}}}));
    CHECK_FALSE(verify_hole(c4, {{{0}, {0}}}));
    CHECK(verify_hole(UniformHypergraph::empty(3, 2), {{{0}, {0}}}, true));
    CHECK_FALSE(verify_hole(c4, {{{0, 1}, {2}}}));
    CHECK_FALSE(verify_hole(c4, {{{}, {}}}));
}

TEST_CASE("alpha_k matches brute force")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + trial % 5;
        int k = trial % 3 == 0 ? 3 : 2;
        auto g = oracle::random_hypergraph(rng, n, k, k == 2 ? 0.35 : 0.25);
        int expected = oracle::alpha(g, k);
        auto fast = alpha_k(g, k);
        CHECK(fast.value == expected);
        CHECK(alpha_k(g, k, exhaustive).value == expected);
        if (fast.hole)
            CHECK(verify_hole(g, *fast.hole));
        auto hat = alpha_hat_k(g, k);
        CHECK(hat.value == alpha_hat_k(g, k, exhaustive).value);
        if (hat.hole)
            CHECK(verify_hole(g, *hat.hole, true));
    }
}

TEST_CASE("alpha_2 of sparse random graphs on 40 vertices")
{
    std::mt19937_64 rng(17);
    auto g = oracle::random_hypergraph(rng, 40, 2, 0.1);
    auto result = alpha_k(g, 2);
    REQUIRE(result.hole);
    CHECK(verify_hole(g, *result.hole));
    CHECK(result.value >= 5);
}

TEST_CASE("nu_k small cases")
{
    CHECK(nu_k(star(5), 2).value == 0);
    PartiteMultiHypergraph two({2, 2}, {{{0, 2}, 1}, {{1, 3}, 1}});
    auto r = nu_k(two, 2);
    CHECK(r.value == 1);
    REQUIRE(r.family);
    CHECK(verify_cross_free(two, *r.family));
    PartiteMultiHypergraph fat({1, 1}, {{{0, 1}, 7}});
    CHECK(nu_k(fat, 2).value == 0);
    PartiteMultiHypergraph parallel({2, 2}, {{{0, 2}, 3}, {{1, 3}, 4}});
    CHECK(nu_k(parallel, 2).value == 3);
}

TEST_CASE("cross-free verifier")
{
    PartiteMultiHypergraph two({2, 2}, {{{0, 2}, 1}, {{1, 3}, 1}});
    CHECK(verify_cross_free(two, {{{0}, {1}}}));
    CHECK_FALSE(verify_cross_free(two, {{{0}, {0}}}));
    CHECK_FALSE(verify_cross_free(two, {{{0}, {2}}}));
    CHECK_FALSE(verify_cross_free(star(3), {{{0}, {1}}}));
    CHECK_FALSE(verify_cross_free(two, {{{0}, {}}}));
}

TEST_CASE("nu_k matches brute force")
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 2 + trial % 2;
        int k = 2 + (trial % 3 == 0 && r == 3 ? 1 : 0);
        auto h = oracle::random_multi(rng, r, 2 + trial % 2, 2 + trial % 4, 3);
        if (h.n() > 9)
            continue;
        auto expected = oracle::nu(h, k);
        auto fast = nu_k(h, k);
        CHECK(fast.value == expected);
        CHECK(nu_k(h, k, exhaustive).value == expected);
        if (fast.family) {
            CHECK(verify_cross_free(h, *fast.family));
            CHECK(fast.family->min_size() == expected);
        }
    }
}

TEST_CASE("hole-number chain and expander equivalences")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 5 + trial % 4;
        int k = trial % 2 == 0 ? 2 : 3;
        auto g = oracle::random_hypergraph(rng, n, k, k == 2 ? 0.4 : 0.3);
        int a = independence_number(g).size;
        int hat = alpha_hat_k(g, k).value;
        int ak = alpha_k(g, k).value;
        CHECK(a / k <= hat / k);
        CHECK(hat / k <= ak);
        CHECK(ak <= hat);
        for (int p = 0; p < n; ++p) {
            CHECK(is_expander(g, p, n - p) == (hat <= p));
            CHECK(is_outer_expander(g, p, n - p) == (ak <= p));
        }
    }
}

TEST_CASE("expander examples")
{
    CHECK(is_expander(UniformHypergraph::complete(5, 2), 0, 4));
    CHECK_FALSE(is_expander(UniformHypergraph::complete(5, 2), 0, 5));
    CHECK(is_expander(UniformHypergraph::complete(5, 3), 1, 3));
    CHECK_FALSE(is_expander(UniformHypergraph::complete(5, 3), 1, 4));
    CHECK(is_outer_expander(UniformHypergraph::complete(5, 2), 0, 5));
    CHECK_FALSE(is_expander(UniformHypergraph::empty(5, 2), 0, 1));
    CHECK_THROWS_AS(is_expander(UniformHypergraph::empty(5, 2), 5, 1), PreconditionError);
}

TEST_CASE("solver budget")
{
    SolverOptions tight;
    tight.budget = 3;
    CHECK_THROWS_AS(alpha_k(UniformHypergraph::empty(12, 2), 2, tight), BudgetExceeded);
}
