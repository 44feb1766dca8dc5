#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "holes/constructions.hpp"
#include "holes/duality.hpp"
#include "holes/io.hpp"
#include "holes/sweep.hpp"
#include "holes/witness.hpp"
#include "oracles.hpp"

using namespace holes;
using io::Json;

namespace {

/// serialize -> parse -> serialize is a fixpoint.
template <typename T, typename Parse>
void check_fixpoint(const T& value, Parse parse)
{
    const Json once = io::to_json(value);
    const Json again = io::to_json(parse(Json::parse(once.dump())));
    CHECK(once == again);
}

} // namespace

TEST_CASE("json round trips")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto g = oracle::random_hypergraph(rng, 3 + i % 6, 2 + i % 2, 0.5);
        check_fixpoint(g, io::hypergraph_from_json);
        std::vector<int> colors;
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            colors.push_back(static_cast<int>(e % 3));
        check_fixpoint(EdgeColoring::from_indices(3, colors), io::coloring_from_json);
        auto h = oracle::random_multi(rng, 2 + i % 3, 3, 5, 4);
        check_fixpoint(h, io::multi_from_json);
    }

    auto report = construct_layered(2, 2, 12);
    CHECK(io::hypergraph_from_json(io::to_json(report).at("instance")) == *report.primal);

    auto sts = bose_sts(9);
    auto hole = *alpha_k(sts, 3).hole;
    check_fixpoint(hole, io::hole_from_json);

    auto star = PartiteMultiHypergraph({1, 9}, [] {
        std::vector<MultiEdge> edges;
        for (int v = 1; v <= 9; ++v)
            edges.push_back({{0, v}, 1});
        return edges;
    }());
    auto w = bipartite_degree_witness(star, 0);
    check_fixpoint(w, io::witness_from_json);
    CHECK(verify_witness(star, io::witness_from_json(io::to_json(w))));

    auto matching = PartiteMultiHypergraph({3, 3}, {{{0, 3}, 2}, {{1, 4}, 2}, {{2, 5}, 2}});
    auto refuted = bipartite_degree_witness(matching, 0);
    REQUIRE(refuted.tag() == WitnessTag::cross_free);
    check_fixpoint(refuted, io::witness_from_json);
}

TEST_CASE("json parse errors are precondition rejections")
{
    CHECK_THROWS_AS(io::hypergraph_from_json(Json::parse(R"({"n": 3})")), PreconditionError);
    CHECK_THROWS_AS(io::hypergraph_from_json(Json::parse(R"({"n": "3", "k": 2, "edges": []})")), PreconditionError);
    CHECK_THROWS_AS(io::hypergraph_from_json(Json::parse(R"({"n": 3, "k": 2, "edges": [[0, 5]]})")), PreconditionError);
    CHECK_THROWS_AS(io::coloring_from_json(Json::parse(R"({"r": 2, "colors": [[2]]})")), PreconditionError);
    CHECK_THROWS_AS(io::coloring_from_json(Json::parse(R"({"r": 0, "colors": []})")), PreconditionError);
    CHECK_THROWS_AS(io::multi_from_json(Json::parse(R"({"r": 2, "part_sizes": [1], "edges": []})")), PreconditionError);
    CHECK_THROWS_AS(io::witness_from_json(Json::parse(R"({"tag": "Nope", "payload": {}})")), PreconditionError);
    CHECK_THROWS_AS(io::read_file("/nonexistent/instance.json"), PreconditionError);
    CHECK_THROWS_AS(sweep_from_json(Json::parse(R"({"generator": "regular"})")), PreconditionError);
    CHECK_THROWS_AS(sweep_from_json(Json::parse(R"({"generator": "bose_sts", "k": 2})")), PreconditionError);
}

TEST_CASE("sweep: empty grid gives the header only")
{
    SweepSpec spec;
    const auto csv = to_csv(run_sweep(spec));
    CHECK(csv == "generator,n,k,r,d,p,seed,rng,edges,alpha,alpha_status,first_moment,mc_lower,outcome\n");
}

TEST_CASE("sweep: csv is bit-stable and medians are monotone")
{
    auto spec = sweep_from_json(Json::parse(
        R"({"n": [24], "k": 2, "d": [2, 4, 8, 16], "seeds": [0, 1, 2, 3, 4], "analyses": ["alpha", "first_moment", "witness"]})"));
    const auto first = to_csv(run_sweep(spec));
    spec.threads = 1;
    const auto second = to_csv(run_sweep(spec));
    CHECK(first == second);

    const auto medians = cell_medians(run_sweep(spec));
    REQUIRE(medians.size() == 4);
    for (std::size_t i = 1; i < medians.size(); ++i)
        CHECK(medians[i].median_alpha <= medians[i - 1].median_alpha);
    for (const auto& m : medians) {
        CHECK(m.exact == m.total);
        CHECK(m.first_moment.has_value());
    }
}

TEST_CASE("sweep: records are a function of the seed")
{
    SweepSpec spec;
    spec.n = {16};
    spec.d = {3};
    spec.seeds = {7, 8, 7};
    spec.witness = true;
    const auto records = run_sweep(spec);
    REQUIRE(records.size() == 3);
    auto strip = [](Json j) {
        j.erase("wall_ms");
        return j;
    };
    CHECK(strip(to_json(records[0])) == strip(to_json(records[2])));
    CHECK(records[0].alpha_status == "exact");
    CHECK(!records[0].outcome.empty());
}

TEST_CASE("sweep: Steiner triple systems report n - 2 alpha_3")
{
    auto spec = sweep_from_json(Json::parse(R"({"generator": "bose_sts", "n": [9, 15]})"));
    const auto records = run_sweep(spec);
    REQUIRE(records.size() == 2);
    CHECK(records[0].alpha == 2);
    CHECK(records[0].mc_lower == 5);
    CHECK(records[1].alpha == 4);
    CHECK(records[1].mc_lower == 7);
}

TEST_CASE("sweep: budget overruns are recorded, not raised")
{
    SweepSpec spec;
    spec.n = {30};
    spec.d = {4};
    spec.seeds = {1};
    spec.budget = 3;
    const auto records = run_sweep(spec);
    REQUIRE(records.size() == 1);
    CHECK(records[0].alpha_status == "budget");
    CHECK(!records[0].alpha);
    CHECK(to_csv(records).find("median of 0/1") != std::string::npos);
}
