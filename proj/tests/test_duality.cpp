#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holes/duality.hpp"
#include "holes/hole_numbers.hpp"
#include "oracles.hpp"

using namespace holes;

namespace {

EdgeColoring random_coloring(std::mt19937_64& rng, const UniformHypergraph& g, int r)
{
    std::uniform_int_distribution<int> pick(0, r - 1);
    std::vector<int> colors;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        colors.push_back(pick(rng));
    return EdgeColoring::from_indices(r, colors);
}

} // namespace

TEST_CASE("dual of a monochromatic triangle")
{
    auto k3 = UniformHypergraph::complete(3, 2);
    auto d = dual_of_coloring(k3, EdgeColoring::from_indices(2, {0, 0, 0}));
    CHECK(d.dual.part_sizes() == std::vector<int>{1, 3});
    CHECK(d.dual.n() == 3);
    CHECK(d.dual.degree(d.part_vertex(0, 0)) == 3);
    CHECK(d.dual.max_degree() == 3);
    CHECK(d.component_of_vertex[2] == std::pair<int, int>{1, 1});
    CHECK(d.copy_of_vertex == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("dualization rejects multi-colorings")
{
    auto k3 = UniformHypergraph::complete(3, 2);
    CHECK_THROWS_AS(dual_of_coloring(k3, EdgeColoring(2, {3, 1, 1})), PreconditionError);
    CHECK_THROWS_AS(dual_of_coloring(k3, EdgeColoring::from_indices(1, {0, 0, 0})), PreconditionError);
}

TEST_CASE("primal of a single fat edge")
{
    PartiteMultiHypergraph fat({1, 1}, {{{0, 1}, 3}});
    auto p = primal_of_dual(fat, 2);
    CHECK(p.primal == UniformHypergraph::complete(3, 2));
    for (ColorSet c : p.coloring.colors())
        CHECK(c == 0b11);
    CHECK_THROWS_AS(primal_of_dual(fat, 3), PreconditionError);
    CHECK_THROWS_AS(primal_of_dual(fat, 1), PreconditionError);
}

TEST_CASE("duality identities on random colorings")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + trial % 6;
        int k = trial % 3 == 0 ? 3 : 2;
        int r = 2 + trial % 3;
        auto g = oracle::random_hypergraph(rng, n, k, k == 2 ? 0.5 : 0.3);
        auto chi = random_coloring(rng, g, r);
        auto d = dual_of_coloring(g, chi);
        CHECK(d.dual.n() == n);
        CHECK(d.dual.max_degree() == largest_mono_component(g, chi).size);
        for (Vertex u = 0; u < d.dual.vertex_count(); ++u) {
            auto [color, comp] = d.component_of_vertex[static_cast<std::size_t>(u)];
            CHECK(d.dual.degree(u) == d.labeling.sizes[static_cast<std::size_t>(color)][static_cast<std::size_t>(comp)]);
        }
        for (Vertex v = 0; v < n; ++v)
            CHECK(d.vertex_of_copy[static_cast<std::size_t>(d.copy_of_vertex[static_cast<std::size_t>(v)])] == v);
        for (int j = 2; j <= std::min(r, 3); ++j)
            CHECK(nu_k(d.dual, j).value <= alpha_k(g, j).value);
    }
}

TEST_CASE("primal parameters are bounded by the dual")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 2 + trial % 2;
        int k = 2 + (r == 3 && trial % 4 == 1 ? 1 : 0);
        auto h = oracle::random_multi(rng, r, 2 + trial % 3, 2 + trial % 4, 3);
        if (h.n() > 12)
            continue;
        auto p = primal_of_dual(h, k);
        CHECK(p.primal.n() == h.n());
        CHECK(alpha_k(p.primal, k).value <= nu_k(h, k).value);
        if (h.max_degree() >= k || h.max_degree() <= 1)
            CHECK(largest_mono_component(p.primal, p.coloring).size >= h.max_degree());

        // copies through u share a component once u has degree at least k
        auto labels = color_components(p.primal, p.coloring);
        const auto owners = h.copy_owners();
        for (Vertex u = 0; u < h.vertex_count(); ++u) {
            if (h.degree(u) < k)
                continue;
            int part = h.part_of(u);
            int first = -1;
            for (std::int64_t c = 0; c < h.n(); ++c) {
                if (h.edge(owners[static_cast<std::size_t>(c)]).verts[static_cast<std::size_t>(part)] != u)
                    continue;
                int label = labels.label[static_cast<std::size_t>(part)][static_cast<std::size_t>(c)];
                if (first < 0)
                    first = label;
                CHECK(label == first);
            }
        }
    }
}
