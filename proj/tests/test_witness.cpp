#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holes/constructions.hpp"
#include "holes/duality.hpp"
#include "holes/witness.hpp"
#include "oracles.hpp"

using namespace holes;

namespace {

PartiteMultiHypergraph star(int r, int leaves)
{
    std::vector<MultiEdge> edges;
    for (int i = 0; i < leaves; ++i) {
        MultiEdge e;
        e.verts.push_back(0);
        for (int p = 1; p < r; ++p)
            e.verts.push_back(p * leaves + i);
        edges.push_back(e);
    }
    return PartiteMultiHypergraph(std::vector<int>(static_cast<std::size_t>(r), leaves), edges);
}

PartiteMultiHypergraph single_edge(int r, std::int64_t mult)
{
    std::vector<Vertex> verts;
    for (int p = 0; p < r; ++p)
        verts.push_back(p);
    return PartiteMultiHypergraph(std::vector<int>(static_cast<std::size_t>(r), 1), {{verts, mult}});
}

/// A heavy edge of the given multiplicity plus light random edges.
PartiteMultiHypergraph fat_core(std::mt19937_64& rng, int r, int per_part, int light, int max_light, std::int64_t heavy)
{
    auto noise = oracle::random_multi(rng, r, per_part, light, max_light);
    std::vector<MultiEdge> edges = noise.edges();
    std::vector<Vertex> core;
    for (int p = 0; p < r; ++p)
        core.push_back(p * per_part + static_cast<int>(rng() % static_cast<unsigned>(per_part)));
    auto it = std::find_if(edges.begin(), edges.end(), [&](const MultiEdge& e) { return e.verts == core; });
    if (it != edges.end())
        it->mult += heavy;
    else
        edges.push_back({core, heavy});
    return PartiteMultiHypergraph(noise.part_sizes(), edges);
}

std::int64_t pow3(int e)
{
    std::int64_t out = 1;
    for (int i = 0; i < e; ++i)
        out *= 3;
    return out;
}

struct FuzzTally
{
    int runs = 0;
    int degree = 0;
    int cross_free = 0;
    int driver_errors = 0;
};

/// Runs the driver for (s, r) on instances meeting its precondition, with
/// the exact nu and with a smaller one.
FuzzTally fuzz_driver(int s, int r, int rounds, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const auto t = *ThresholdTable::lookup(s, r);
    const std::int64_t unit = r == 2 ? 7 : r == 3 ? pow3(9) : pow3(r * (r + 1) / 2 + r);
    FuzzTally tally;
    for (int attempt = 0; tally.runs < rounds && attempt < 10 * rounds; ++attempt) {
        const int per_part = 2 + static_cast<int>(rng() % 3);
        auto h = r == 2 && attempt % 2 ? oracle::random_multi(rng, r, per_part, 2 + static_cast<int>(rng() % 6), 4)
                                       : fat_core(rng, r, per_part, static_cast<int>(rng() % 6), 3,
                                   unit * (1 + static_cast<std::int64_t>(rng() % 3)));
        const std::int64_t exact = nu_k(h, s).value;
        if (!t.precondition(h.n(), exact))
            continue;
        ++tally.runs;
        auto w = degree_witness(h, s, exact);
        REQUIRE(verify_witness(h, w));
        REQUIRE(w.tag() == WitnessTag::degree);
        const auto& d = std::get<DegreeWitness>(w.payload);
        REQUIRE(t.degree_ok(d.degree, h.n(), exact));
        ++tally.degree;

        if (exact == 0)
            continue;
        const std::int64_t lie = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(exact));
        try {
            auto l = degree_witness(h, s, lie);
            REQUIRE(verify_witness(h, l));
            if (l.tag() == WitnessTag::cross_free)
                ++tally.cross_free;
            else
                REQUIRE(t.degree_ok(std::get<DegreeWitness>(l.payload).degree, h.n(), lie));
        }
        catch (const DriverError& e) {
            REQUIRE(!e.dump().empty());
            ++tally.driver_errors;
        }
    }
    return tally;
}

} // namespace

TEST_CASE("bags")
{
    auto h = PartiteMultiHypergraph({2, 2}, {{{0, 2}, 3}, {{1, 3}, 2}});
    CHECK(bag_size(full_bag(h)) == 5);
    CHECK(bag_of_copies(h, {0, 4}) == EdgeBag{1, 1});
    CHECK_THROWS_AS(bag_of_copies(h, {1, 1}), PreconditionError);
    CHECK_THROWS_AS(bag_of_copies(h, {5}), PreconditionError);
}

TEST_CASE("threshold table")
{
    CHECK(ThresholdTable::lookup(2, 2)->which == DriverCase::bipartite);
    CHECK(ThresholdTable::lookup(2, 3)->which == DriverCase::tripartite);
    CHECK(ThresholdTable::lookup(3, 3)->which == DriverCase::r_partite);
    CHECK(ThresholdTable::lookup(3, 4)->which == DriverCase::shadow);
    CHECK(ThresholdTable::lookup(2, 4)->which == DriverCase::weak);
    CHECK_FALSE(ThresholdTable::lookup(3, 5).has_value());
    CHECK_FALSE(ThresholdTable::lookup(2, 1).has_value());
    CHECK(ThresholdTable::entries(5).size() == 3);

    const auto bip = *ThresholdTable::lookup(2, 2);
    CHECK(bip.precondition(7, 1));
    CHECK_FALSE(bip.precondition(6, 1));
    CHECK(bip.degree_ok(5, 7, 1));
    CHECK_FALSE(bip.degree_ok(4, 7, 1));

    const auto tri = *ThresholdTable::lookup(2, 3);
    CHECK(tri.precondition(19683, 1));
    CHECK_FALSE(tri.precondition(19682, 1));
    CHECK(tri.degree_ok(4, 11, 1));
    CHECK_FALSE(tri.degree_ok(5, 15, 1));

    const auto shadow = *ThresholdTable::lookup(3, 4);
    CHECK(shadow.precondition(pow3(14), 1));
    CHECK_FALSE(shadow.precondition(pow3(14) - 1, 1));
    CHECK(shadow.degree_ok(3, 4, 0));
    CHECK_FALSE(shadow.degree_ok(2, 4, 0));

    const auto big = *ThresholdTable::lookup(16, 16);
    CHECK_FALSE(big.precondition(std::numeric_limits<std::int64_t>::max(), 1));
    CHECK(big.precondition(16, 0));
    CHECK_FALSE(big.precondition(15, 0));

    // two disjoint triples: nu_3 = 0 yet Delta = 1 < n
    const auto triple = *ThresholdTable::lookup(3, 3);
    CHECK_FALSE(triple.precondition(2, 0));
    CHECK(triple.precondition(3, 0));
}

TEST_CASE("split: star concentrates")
{
    auto h = star(2, 5);
    auto out = split_or_concentrate(h, 0, {full_bag(h)}, {1}, 0);
    CHECK(out.concentrated);
    CHECK(out.vertex == 0);
    CHECK(out.incidences == std::vector<std::int64_t>{5});
    CHECK(verify_split(h, 0, {full_bag(h)}, {1}, 0, out));

    auto simple = split_or_concentrate_simple(h, 0, {full_bag(h)}, {1}, 1);
    CHECK(simple.concentrated);
}

TEST_CASE("split: disjoint bundles split")
{
    // two bundles of nu + 1 = 2 parallel edges with disjoint vertices
    auto h = PartiteMultiHypergraph({2, 2}, {{{0, 2}, 4}, {{1, 3}, 4}});
    std::vector<EdgeBag> families = {{4, 0}, {0, 4}};
    auto out = split_or_concentrate(h, 0, families, {1, 1}, 1);
    CHECK_FALSE(out.concentrated);
    CHECK(verify_split(h, 0, families, {1, 1}, 1, out));
    auto simple = split_or_concentrate_simple(h, 1, families, {1, 1}, 1);
    CHECK_FALSE(simple.concentrated);
    CHECK(verify_split(h, 1, families, {1, 1}, 1, simple));
}

TEST_CASE("split: rejects undersized families")
{
    auto h = star(2, 3);
    CHECK_THROWS_AS(split_or_concentrate(h, 0, {full_bag(h)}, {1}, 1), PreconditionError);
    CHECK_THROWS_AS(split_or_concentrate_simple(h, 0, {full_bag(h), full_bag(h)}, {1, 1}, 1), PreconditionError);
    CHECK_THROWS_AS(split_or_concentrate(h, 2, {full_bag(h)}, {1}, 0), PreconditionError);
    CHECK_THROWS_AS(split_or_concentrate(h, 0, {EdgeBag{2, 0, 0}}, {1}, 0), PreconditionError);
}

TEST_CASE("split: fuzz")
{
    std::mt19937_64 rng(11);
    int checked = 0, split = 0;
    for (int round = 0; round < 1000; ++round) {
        const int r = 2 + static_cast<int>(rng() % 3);
        auto h = oracle::random_multi(rng, r, 3, 2 + static_cast<int>(rng() % 8), 4);
        const int l = 1 + static_cast<int>(rng() % 3);
        const std::int64_t nu = static_cast<std::int64_t>(rng() % 2);
        std::vector<EdgeBag> families;
        std::vector<std::int64_t> weights;
        for (int j = 0; j < l; ++j) {
            EdgeBag bag;
            for (const auto& e : h.edges())
                bag.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(e.mult + 1)));
            families.push_back(bag);
            weights.push_back(1);
        }
        const int part = static_cast<int>(rng() % static_cast<unsigned>(r));
        const bool simple = rng() % 2;
        bool fits = true;
        for (int j = 0; j < l; ++j)
            fits = fits && bag_size(families[static_cast<std::size_t>(j)]) >= (simple || j == 0 ? 3 : 2) * nu + 1;
        if (!fits)
            continue;
        auto out = simple ? split_or_concentrate_simple(h, part, families, weights, nu)
                          : split_or_concentrate(h, part, families, weights, nu);
        REQUIRE(verify_split(h, part, families, weights, nu, out));
        ++checked;
        split += out.concentrated ? 0 : 1;
    }
    CHECK(checked > 500);
    CHECK(split > 0);
}

TEST_CASE("high-degree vertex")
{
    auto s = star(2, 9);
    auto w = high_degree_vertex(s, 2, 1, 0);
    REQUIRE(w.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(w.payload).degree == 9);

    // a perfect matching on 9 edges has nu_2 = 4, so nu = 1 is refuted
    std::vector<MultiEdge> matching;
    for (int i = 0; i < 9; ++i)
        matching.push_back({{i, 9 + i}, 1});
    auto m = PartiteMultiHypergraph({9, 9}, matching);
    auto refuted = high_degree_vertex(m, 2, 1, 1);
    REQUIRE(refuted.tag() == WitnessTag::cross_free);
    CHECK(std::get<CrossFreeFamily>(refuted.payload).min_size() >= 2);
    CHECK(verify_witness(m, refuted));

    // two disjoint stars of 4 edges
    auto stars = PartiteMultiHypergraph({2, 8}, {{{0, 2}, 1}, {{0, 3}, 1}, {{0, 4}, 1}, {{0, 5}, 1},
                                                 {{1, 6}, 1}, {{1, 7}, 1}, {{1, 8}, 1}, {{1, 9}, 1}});
    CHECK(oracle::nu(stars, 2) == 4);
    auto d = high_degree_vertex(stars, 2, 1, 0);
    CHECK(d.tag() == WitnessTag::degree);

    CHECK_THROWS_AS(high_degree_vertex(s, 2, 1, 2), PreconditionError);
}

TEST_CASE("high-degree vertex fuzz with exact nu")
{
    std::mt19937_64 rng(5);
    int runs = 0;
    for (int round = 0; round < 2000; ++round) {
        const int r = 2 + static_cast<int>(rng() % 2);
        auto h = oracle::random_multi(rng, r, 3, 2 + static_cast<int>(rng() % 6), 30);
        const int s = 2;
        const std::int64_t nu = nu_k(h, s).value;
        const std::int64_t delta = 1;
        if (pow3(r) * delta * nu > h.n())
            continue;
        ++runs;
        auto w = high_degree_vertex(h, s, delta, nu);
        REQUIRE(verify_witness(h, w));
        REQUIRE(w.tag() == WitnessTag::degree);
        CHECK(std::get<DegreeWitness>(w.payload).degree >= delta * nu + 1);
    }
    CHECK(runs > 100);
}

TEST_CASE("fat edge")
{
    auto h = single_edge(3, 12);
    auto w = fat_edge_or_degree(h, 2, 0);
    REQUIRE(w.tag() == WitnessTag::multiplicity);
    CHECK(std::get<MultiplicityWitness>(w.payload).multiplicity == 12);
    CHECK(fat_edge_or_degree(single_edge(4, 5), 3, 0).tag() == WitnessTag::multiplicity);

    CHECK_THROWS_AS(fat_edge_or_degree(single_edge(2, 5), 2, 0), PreconditionError);
    CHECK_THROWS_AS(fat_edge_or_degree(single_edge(3, 5), 2, 1), PreconditionError);
    CHECK_THROWS_AS(fat_edge_or_degree(single_edge(3, 5), 2, -1), PreconditionError);
}

TEST_CASE("fat edge fuzz with exact nu")
{
    std::mt19937_64 rng(17);
    int runs = 0;
    for (int round = 0; round < 500; ++round) {
        const int r = 3 + static_cast<int>(rng() % 2);
        const std::vector<int> cases = r == 3 ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4};
        const int s = cases[rng() % cases.size()];
        auto h = fat_core(rng, r, 2, static_cast<int>(rng() % 5), 2, pow3(r * (r + 1) / 2) * 3);
        const std::int64_t nu = nu_k(h, s).value;
        if (h.max_degree() < pow3(r * (r + 1) / 2) * nu + 1)
            continue;
        ++runs;
        auto w = fat_edge_or_degree(h, s, nu);
        REQUIRE(verify_witness(h, w));
        CHECK(w.tag() != WitnessTag::cross_free);
    }
    CHECK(runs > 100);
}

TEST_CASE("bipartite driver")
{
    auto s = star(2, 8);
    auto w = bipartite_degree_witness(s, 0);
    REQUIRE(w.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(w.payload).degree == 8);

    auto layered = construct_layered_dual(2, 1, 7);
    auto l = bipartite_degree_witness(*layered.dual, 1);
    REQUIRE(l.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(l.payload).degree == 5);

    auto big = construct_layered_dual(2, 1, 20);
    auto b = bipartite_degree_witness(*big.dual, 1);
    REQUIRE(b.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(b.payload).degree >= 18);

    auto stars = PartiteMultiHypergraph({2, 6}, {{{0, 2}, 1}, {{0, 3}, 1}, {{0, 4}, 1},
                                                 {{1, 5}, 1}, {{1, 6}, 1}, {{1, 7}, 1}});
    CHECK(oracle::nu(stars, 2) == 3);
    auto refuted = bipartite_degree_witness(stars, 0);
    CHECK(refuted.tag() == WitnessTag::cross_free);
    CHECK(verify_witness(stars, refuted));
    CHECK_FALSE(refuted.trace.empty());

    CHECK_THROWS_AS(bipartite_degree_witness(stars, 1), PreconditionError);
    CHECK_THROWS_AS(bipartite_degree_witness(single_edge(3, 9), 0), PreconditionError);
}

TEST_CASE("tripartite driver")
{
    auto w = tripartite_degree_witness(single_edge(3, 10), 0);
    REQUIRE(w.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(w.payload).degree == 10);

    auto affine = affine_plane_coloring(2, 8);
    auto dual = dual_of_coloring(*affine.primal, canonicalize(*affine.coloring));
    const std::int64_t exact = nu_k(dual.dual, 2).value;
    const auto t = *ThresholdTable::lookup(2, 3);
    if (t.precondition(dual.dual.n(), exact)) {
        auto d = tripartite_degree_witness(dual.dual, exact);
        CHECK(d.tag() == WitnessTag::degree);
    }
    else {
        CHECK_THROWS_AS(tripartite_degree_witness(dual.dual, exact), PreconditionError);
    }
}

TEST_CASE("r-partite driver")
{
    for (int r = 3; r <= 5; ++r) {
        auto w = r_partite_degree_witness(single_edge(r, 7), 0);
        REQUIRE(w.tag() == WitnessTag::degree);
        CHECK(std::get<DegreeWitness>(w.payload).degree == 7);
    }
    const int n = static_cast<int>(pow3(9));
    auto layered = construct_layered_dual(3, 1, n);
    auto w = r_partite_degree_witness(*layered.dual, 1);
    REQUIRE(w.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(w.payload).degree >= n - 2);
}

TEST_CASE("shadow driver")
{
    for (int r = 4; r <= 5; ++r) {
        auto w = shadow_degree_witness(single_edge(r, 9), 0);
        REQUIRE(w.tag() == WitnessTag::degree);
        CHECK(std::get<DegreeWitness>(w.payload).degree == 9);
    }
    CHECK_THROWS_AS(shadow_degree_witness(single_edge(3, 9), 0), PreconditionError);
}

TEST_CASE("weak driver")
{
    auto w = weak_degree_witness(single_edge(4, 9), 0);
    REQUIRE(w.tag() == WitnessTag::degree);
    CHECK(std::get<DegreeWitness>(w.payload).degree == 9);

    // a fat edge and a disjoint edge of multiplicity 2: nu = 0 is a lie
    auto h = PartiteMultiHypergraph({2, 2, 2, 2}, {{{0, 2, 4, 6}, 9}, {{1, 3, 5, 7}, 2}});
    auto refuted = weak_degree_witness(h, 0);
    CHECK(refuted.tag() == WitnessTag::cross_free);
    CHECK(verify_witness(h, refuted));
}

TEST_CASE("driver fuzz with exact and lied nu")
{
    struct Case
    {
        int s, r, rounds;
    };
    for (auto c : {Case{2, 2, 10000}, Case{2, 3, 10000}, Case{3, 3, 10000}, Case{4, 4, 10000}, Case{3, 4, 10000},
                   Case{2, 4, 10000}}) {
        CAPTURE(c.s);
        CAPTURE(c.r);
        auto tally = fuzz_driver(c.s, c.r, c.rounds, 1000 + static_cast<std::uint64_t>(c.s * 10 + c.r));
        CHECK(tally.runs == c.rounds);
        CHECK(tally.driver_errors == 0);
        CHECK(tally.degree == tally.runs);
        CHECK(tally.cross_free > 0);
    }
}

TEST_CASE("mono-component witness")
{
    std::mt19937_64 rng(3);
    auto clique = oracle::random_hypergraph(rng, 8, 3, 1.0);
    std::vector<int> colors;
    for (std::size_t i = 0; i < clique.edge_count(); ++i)
        colors.push_back(static_cast<int>(rng() % 3));
    auto coloring = EdgeColoring::from_indices(3, colors);
    for (int s : {2, 3}) {
        auto w = mono_component_witness(clique, coloring, s, 0);
        REQUIRE(w.component.has_value());
        CHECK(w.component->size == 8);
    }

    auto layered = construct_layered(3, 0, 10);
    auto canonical = canonicalize(*layered.coloring);
    auto l = mono_component_witness(*layered.primal, canonical, 3, 0);
    REQUIRE(l.component.has_value());
    CHECK(l.component->size >= 10);

    auto grid = construct_grid(3, 4, 12);
    auto g = canonicalize(*grid.coloring);
    CHECK_THROWS_AS(mono_component_witness(*grid.primal, g, 2, 2), PreconditionError);
    auto blocks = construct_grid(2, 2, 8);
    CHECK_THROWS_AS(mono_component_witness(*blocks.primal, *blocks.coloring, 2, 0), PreconditionError);
}

TEST_CASE("mono-component witness maps refutations to holes")
{
    // two disjoint triangles in a 2-coloured K_6 minus the cross edges
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    UniformHypergraph g(6, 2, edges);
    auto coloring = EdgeColoring::from_indices(2, {0, 0, 0, 1, 1, 1});
    CHECK(oracle::alpha(g, 2) == 3);
    auto w = mono_component_witness(g, coloring, 2, 0);
    REQUIRE(w.hole.has_value());
    CHECK(verify_hole(g, *w.hole));
    CHECK(w.hole->sets.size() == 2);
}
