#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "holes/constructions.hpp"
#include "holes/duality.hpp"
#include "holes/rng.hpp"
#include "oracles.hpp"

using namespace holes;

namespace {

const Claim& find(const ConstructionReport& report, const std::string& name)
{
    for (const auto& c : report.claims)
        if (c.name == name)
            return c;
    FAIL("missing claim " << name);
    return report.claims.front();
}

} // namespace

TEST_CASE("grid")
{
    auto grid = construct_grid(3, 4, 12);
    certify(grid);
    CHECK(grid.certified());
    CHECK(find(grid, "largest_component").measured == std::vector<std::int64_t>{4});
    CHECK(find(grid, "alpha_2").value == 2);
    CHECK(oracle::alpha(*grid.primal, 2) == 2);
    CHECK(grid.notes.at("alpha_formula_displayed") == 4);
    CHECK(grid.notes.at("alpha_formula_proof") == 2);
    auto labels = color_components(*grid.primal, *grid.coloring);
    CHECK(labels.sizes[0] == std::vector<int>{4, 4, 4});
    CHECK(labels.sizes[1] == std::vector<int>{3, 3, 3, 3});

    auto small = construct_grid(2, 2, 4);
    certify(small);
    CHECK(find(small, "alpha_2").value == 1);
    CHECK(oracle::alpha(*small.primal, 2) == 1);
    CHECK(find(small, "largest_component").measured[0] == 2);

    auto one = construct_grid(1, 1, 5);
    certify(one);
    CHECK(find(one, "alpha_2").value == 0);
    CHECK(one.primal->edge_count() == 10);

    CHECK_THROWS_AS(construct_grid(3, 4, 10), PreconditionError);
    CHECK_THROWS_AS(construct_grid(4, 3, 12), PreconditionError);
}

TEST_CASE("grid alpha matches the proof formula")
{
    for (int s = 1; s <= 4; ++s)
        for (int t = s; t <= 5; ++t) {
            if (s * t > 16)
                continue;
            auto grid = construct_grid(s, t, s * t);
            CHECK(find(grid, "alpha_2").value == grid.notes.at("alpha_formula_proof"));
        }
}

TEST_CASE("layered")
{
    for (auto [r, a, n] : {std::tuple{2, 2, 12}, {3, 1, 10}, {2, 1, 6}, {3, 0, 5}}) {
        auto report = construct_layered(r, a, n);
        certify(report);
        CHECK(report.certified());
    }
    auto l = construct_layered(2, 2, 12);
    auto labels = color_components(*l.primal, *l.coloring);
    for (int c = 0; c < 2; ++c) {
        auto sizes = labels.sizes[static_cast<std::size_t>(c)];
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{4, 8});
    }
    CHECK(oracle::alpha(*construct_layered(2, 1, 6).primal, 2) == 1);
    CHECK(construct_layered(3, 0, 5).primal->edge_count() == 10);
    CHECK_THROWS_AS(construct_layered(2, 4, 12), PreconditionError);
    CHECK_THROWS_AS(construct_layered(1, 0, 4), PreconditionError);
}

TEST_CASE("layered dual")
{
    auto d = construct_layered_dual(2, 1, 6);
    certify(d);
    CHECK(find(d, "u_degrees").measured == std::vector<std::int64_t>{4, 4});
    CHECK(find(d, "v_degrees").measured == std::vector<std::int64_t>{2, 2});
    CHECK(oracle::nu(*d.dual, 2) == 1);

    auto d3 = construct_layered_dual(3, 1, 10);
    certify(d3);
    CHECK(d3.dual->max_degree() == 8);

    auto fat = construct_layered_dual(2, 0, 5);
    certify(fat);
    CHECK(fat.dual->edge_count() == 1);
    CHECK(fat.dual->max_degree() == 5);
}

TEST_CASE("layered dual matches the dual of the canonical layered coloring")
{
    auto l = construct_layered(2, 2, 12);
    auto d = dual_of_coloring(*l.primal, canonicalize(*l.coloring));
    CHECK(d.dual.max_degree() == 8);
}

TEST_CASE("isolated clique")
{
    auto six = construct_isolated_clique(6, 1, 2);
    certify(six);
    CHECK(find(six, "alpha_k").value == 1);
    CHECK(six.notes.at("mc_clique") == 5);
    auto eight = construct_isolated_clique(8, 2, 2);
    certify(eight);
    CHECK(oracle::alpha(*eight.primal, 2) == 2);
    auto complete = construct_isolated_clique(5, 0, 3, 3);
    certify(complete);
    CHECK(complete.primal->edge_count() == 10);
    CHECK_THROWS_AS(construct_isolated_clique(6, 4, 2), PreconditionError);
}

TEST_CASE("hole based coloring")
{
    UniformHypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto chi = hole_based_coloring(c4, {{{0}, {2}}});
    auto labels = color_components(c4, chi);
    CHECK(labels.label[0][0] != labels.label[0][1]);
    CHECK(labels.label[1][2] != labels.label[1][1]);
    CHECK(largest_mono_component(c4, chi).size <= 3);
    CHECK_THROWS_AS(hole_based_coloring(UniformHypergraph::complete(4, 2), {{{0}, {1}}}), PreconditionError);
    CHECK_THROWS_AS(hole_based_coloring(UniformHypergraph::complete(4, 2), {{{}, {}}}), PreconditionError);

    auto l = construct_layered(2, 2, 12);
    auto hole = alpha_k(*l.primal, 2);
    REQUIRE(hole.hole);
    auto colored = hole_based_coloring(*l.primal, *hole.hole);
    CHECK(largest_mono_component(*l.primal, colored).size <= 10);
}

TEST_CASE("affine plane coloring")
{
    for (auto [q, n] : {std::pair{2, 8}, {3, 18}, {2, 4}, {5, 25}}) {
        auto report = affine_plane_coloring(q, n);
        certify(report);
        auto labels = color_components(*report.primal, *report.coloring);
        for (const auto& sizes : labels.sizes)
            CHECK(static_cast<int>(sizes.size()) == q);
    }
    CHECK_THROWS_AS(affine_plane_coloring(4, 16), PreconditionError);
    CHECK_THROWS_AS(affine_plane_coloring(2, 6), PreconditionError);
}

TEST_CASE("capped coloring")
{
    // K_9 on 0..8 with four isolated vertices 9..12
    auto g = UniformHypergraph(13, 2, UniformHypergraph::complete(9, 2).edges());
    auto chi = capped_coloring(g, {9, 10, 11, 12}, 2);
    CHECK(largest_mono_component(g, chi).size <= (13 - 4) / 1 + 2);

    // two K_4 blocks joined by a matching, A attached to vertex 0 only
    std::vector<Edge> edges;
    for (int b = 0; b < 2; ++b)
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                edges.push_back({4 * b + u, 4 * b + v});
    for (int i = 0; i < 3; ++i)
        edges.push_back({0, 8 + i});
    auto h = UniformHypergraph(11, 2, edges);
    auto capped = capped_coloring(h, {8, 9, 10}, 3);
    auto labels = color_components(h, capped);
    for (const auto& sizes : labels.sizes)
        for (int s : sizes)
            CHECK(s <= (11 - 3) / 2 + 1);

    CHECK_THROWS_AS(capped_coloring(UniformHypergraph(4, 2, {{0, 1}}), {0, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(capped_coloring(UniformHypergraph(7, 2, {{0, 3}, {1, 4}}), {0, 1, 2}, 3), PreconditionError);
}

TEST_CASE("Bose triple systems")
{
    CHECK(bose_sts(3).edge_count() == 1);
    CHECK(bose_sts(9).edge_count() == 12);
    CHECK(bose_sts(15).edge_count() == 35);
    for (int n : {3, 9, 15, 21, 27})
        CHECK(is_steiner_triple_system(bose_sts(n)));
    CHECK_THROWS_AS(bose_sts(7), PreconditionError);
}

TEST_CASE("binomial sampler")
{
    CHECK(sample_binomial_hypergraph(6, 2, 0.0, 1).edge_count() == 0);
    CHECK(sample_binomial_hypergraph(6, 3, 1.0, 1).edge_count() == 20);
    auto a = sample_binomial_hypergraph(12, 2, 0.5, 7);
    CHECK(a == sample_binomial_hypergraph(12, 2, 0.5, 7));
    CHECK(a.edge_count() == 37);
    CHECK_FALSE(a == sample_binomial_hypergraph(12, 2, 0.5, 8));
}

TEST_CASE("splitmix64 reference stream")
{
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
}

TEST_CASE("first moment bound")
{
    CHECK(first_moment_alpha_bound(10, 2, 0.999999) == 1);
    int a = first_moment_alpha_bound(40, 2, 0.5);
    // direct evaluation of C(n, a) C(n - a, a) 2^{-a^2}
    auto expected = [](int n, int size) {
        double total = 1;
        for (int i = 0; i < size; ++i)
            total *= static_cast<double>(n - i) / (i + 1);
        for (int i = 0; i < size; ++i)
            total *= static_cast<double>(n - size - i) / (i + 1);
        return total * std::pow(0.5, size * size);
    };
    CHECK(expected(40, a) < 1);
    CHECK(expected(40, a - 1) >= 1);
    int previous = first_moment_alpha_bound(30, 3, 0.05);
    for (double p : {0.1, 0.2, 0.4, 0.8}) {
        int current = first_moment_alpha_bound(30, 3, p);
        CHECK(current <= previous);
        previous = current;
    }
    CHECK_THROWS_AS(first_moment_alpha_bound(10, 2, 0.0), PreconditionError);
}
