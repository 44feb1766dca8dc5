#include "holes/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "holes/constructions.hpp"
#include "holes/duality.hpp"
#include "holes/rng.hpp"
#include "holes/sweep.hpp"
#include "holes/witness.hpp"

namespace holes {

namespace {

/// Collects failed checks with a short description of the first few.
class Checks
{
public:
    void expect(bool ok, const std::function<std::string()>& what)
    {
        ++total_;
        if (ok)
            return;
        ++failed_;
        if (failures_.size() < 3)
            failures_.push_back(what());
    }

    bool ok() const { return failed_ == 0; }

    std::string summary() const
    {
        std::string out = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
        for (const auto& f : failures_)
            out += "; " + f;
        return out;
    }

private:
    long total_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
};

UniformHypergraph random_uniform(SplitMix64& rng, int n, int k, double p)
{
    std::vector<Edge> edges;
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (n >= k) {
        if (rng.uniform() < p)
            edges.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return UniformHypergraph(n, k, std::move(edges));
}

EdgeColoring random_coloring(SplitMix64& rng, const UniformHypergraph& g, int r)
{
    std::vector<int> colors;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        colors.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(r))));
    return EdgeColoring::from_indices(r, colors);
}

/// r parts of 1..max_part vertices and at most max_copies edge copies.
PartiteMultiHypergraph random_multi(SplitMix64& rng, int r, int max_part, int max_copies)
{
    std::vector<int> sizes;
    for (int i = 0; i < r; ++i)
        sizes.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_part))));
    std::vector<MultiEdge> edges;
    std::int64_t budget = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_copies)));
    const int distinct = 1 + static_cast<int>(rng.below(8));
    for (int e = 0; e < distinct && budget > 0; ++e) {
        MultiEdge edge;
        int offset = 0;
        for (int size : sizes) {
            edge.verts.push_back(offset + static_cast<int>(rng.below(static_cast<std::uint64_t>(size))));
            offset += size;
        }
        if (std::any_of(edges.begin(), edges.end(), [&](const MultiEdge& f) { return f.verts == edge.verts; }))
            continue;
        edge.mult = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(std::min<std::int64_t>(budget, 8))));
        budget -= edge.mult;
        edges.push_back(std::move(edge));
    }
    return PartiteMultiHypergraph(std::move(sizes), std::move(edges));
}

std::string list(const std::vector<int>& values)
{
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + std::to_string(values[i]);
    return out + "}";
}

void duality_exactness(CriterionResult& out, SuiteLevel level)
{
    SplitMix64 rng(101);
    Checks checks;
    const int pairs = level == SuiteLevel::full ? 500 : 100;
    for (int i = 0; i < pairs; ++i) {
        const int k = 2 + static_cast<int>(rng.below(2));
        const int r = 2 + static_cast<int>(rng.below(3));
        const int n = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(13 - k)));
        auto g = random_uniform(rng, n, k, 0.15 + 0.7 * rng.uniform());
        auto coloring = random_coloring(rng, g, r);
        auto dual = dual_of_coloring(g, coloring);
        const int largest = largest_mono_component(g, coloring).size;
        checks.expect(dual.dual.max_degree() == largest, [&] {
            return "pair " + std::to_string(i) + ": Delta " + std::to_string(dual.dual.max_degree()) + " != mc "
                + std::to_string(largest);
        });
        checks.expect(dual.dual.n() == n, [&] { return "pair " + std::to_string(i) + ": copies != n"; });
        const auto nu = nu_k(dual.dual, k).value;
        const int alpha = alpha_k(g, k).value;
        checks.expect(nu <= alpha, [&] {
            return "pair " + std::to_string(i) + ": nu " + std::to_string(nu) + " > alpha " + std::to_string(alpha);
        });
    }
    out.passed = checks.ok();
    out.detail = std::to_string(pairs) + " pairs, " + checks.summary();
}

void bipartite_theorem(CriterionResult& out, SuiteLevel level)
{
    SplitMix64 rng(202);
    Checks checks;
    const int instances = level == SuiteLevel::full ? 1000 : 200;
    int applicable = 0;
    for (int i = 0; i < instances; ++i) {
        auto h = random_multi(rng, 2, 4, 24);
        const std::int64_t nu = nu_k(h, 2).value;
        if (6 * nu >= h.n())
            continue;
        ++applicable;
        const std::int64_t bound = h.n() - 2 * nu;
        checks.expect(h.max_degree() >= bound, [&] { return "instance " + std::to_string(i) + ": Delta below n - 2 nu"; });
        auto w = bipartite_degree_witness(h, nu);
        const auto* d = std::get_if<DegreeWitness>(&w.payload);
        checks.expect(d && verify_witness(h, w) && d->degree >= bound,
                      [&] { return "instance " + std::to_string(i) + ": driver witness misses n - 2 nu"; });
    }
    out.passed = checks.ok() && applicable > 0;
    out.detail = std::to_string(instances) + " multigraphs, " + std::to_string(applicable) + " with 6 nu < n, "
        + checks.summary();
}

/// Graphs on n vertices up to isomorphism, as edge lists.
std::vector<UniformHypergraph> graph_classes(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do
        perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        index[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] = static_cast<int>(i);
        index[static_cast<std::size_t>(pairs[i].second)][static_cast<std::size_t>(pairs[i].first)] = static_cast<int>(i);
    }
    std::set<std::uint32_t> seen;
    std::vector<UniformHypergraph> out;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t image = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1U)
                    image |= 1U << index[static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[i].first)])]
                                        [static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[i].second)])];
            canon = std::min(canon, image);
        }
        if (!seen.insert(canon).second)
            continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((canon >> i) & 1U)
                edges.push_back({pairs[i].first, pairs[i].second});
        out.emplace_back(n, 2, std::move(edges));
    }
    return out;
}

void primal_upper_bound(CriterionResult& out, SuiteLevel level)
{
    Checks checks;
    const int max_n = level == SuiteLevel::full ? 6 : 5;
    int graphs = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& g : graph_classes(n)) {
            ++graphs;
            const int mc2 = mc_exact(g, 2).value;
            const int a2 = alpha_k(g, 2).value;
            checks.expect(mc2 <= n - a2, [&] {
                return "n=" + std::to_string(n) + " m=" + std::to_string(g.edge_count()) + ": mc_2 " + std::to_string(mc2)
                    + " > n - alpha_2 " + std::to_string(n - a2);
            });
            const int independence = independence_number(g).size;
            for (int r : {2, 3}) {
                const int mc = r == 2 ? mc2 : mc_exact(g, r).value;
                const int denom = (r - 1) * independence;
                const int bound = (n + denom - 1) / denom;
                checks.expect(mc >= bound, [&] {
                    return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": mc " + std::to_string(mc) + " < "
                        + std::to_string(bound);
                });
            }
        }
    out.passed = checks.ok();
    out.detail = std::to_string(graphs) + " isomorphism classes on n <= " + std::to_string(max_n) + ", "
        + checks.summary();
}

void complete_anchors(CriterionResult& out, SuiteLevel)
{
    Checks checks;
    std::vector<int> graph_values, triple_values;
    for (int n = 1; n <= 6; ++n) {
        const int mc = mc_exact(UniformHypergraph::complete(n, 2), 2).value;
        graph_values.push_back(mc);
        checks.expect(mc == n, [&] { return "mc_2(K_" + std::to_string(n) + ") = " + std::to_string(mc); });
    }
    for (int n : {4, 5}) {
        const int mc = mc_exact(UniformHypergraph::complete(n, 3), 3).value;
        triple_values.push_back(mc);
        checks.expect(mc == n, [&] { return "mc_3(K_" + std::to_string(n) + "^3) = " + std::to_string(mc); });
    }
    out.passed = checks.ok();
    out.detail = "mc_2(K_1..K_6) = " + list(graph_values) + ", mc_3(K_4^3, K_5^3) = " + list(triple_values) + ", "
        + checks.summary();
}

std::vector<int> sorted_sizes(const ComponentLabeling& labeling, int color)
{
    auto sizes = labeling.sizes[static_cast<std::size_t>(color)];
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

void construction_certification(CriterionResult& out, SuiteLevel)
{
    Checks checks;
    std::vector<std::string> notes;

    auto grid = construct_grid(3, 4, 12);
    const int grid_mc = largest_mono_component(*grid.primal, *grid.coloring).size;
    const int grid_alpha = alpha_k(*grid.primal, 2, {SolverMode::exhaustive, 1'000'000'000}).value;
    checks.expect(grid_mc == 4, [&] { return "grid mc " + std::to_string(grid_mc); });
    checks.expect(grid_alpha == 2, [&] { return "grid alpha_2 " + std::to_string(grid_alpha); });
    notes.push_back("grid mc " + std::to_string(grid_mc) + " alpha_2 " + std::to_string(grid_alpha));

    for (auto [r, a, n] : {std::tuple{2, 2, 12}, std::tuple{3, 1, 10}, std::tuple{3, 2, 30}}) {
        const std::string tag = "layered(" + std::to_string(r) + "," + std::to_string(a) + "," + std::to_string(n) + ")";
        auto report = construct_layered(r, a, n);
        const std::vector<int> expected = {n - 2 * a, 2 * a};
        auto labeling = color_components(*report.primal, *report.coloring);
        for (int c = 0; c < r; ++c) {
            auto sizes = sorted_sizes(labeling, c);
            checks.expect(sizes == expected, [&] {
                return tag + " color " + std::to_string(c) + " components " + list(sizes) + " != " + list(expected);
            });
        }
        const int alpha = alpha_k(*report.primal, r).value;
        checks.expect(alpha == a, [&] { return tag + " alpha_r " + std::to_string(alpha); });

        auto dual = construct_layered_dual(r, a, n);
        std::set<std::int64_t> degrees;
        for (Vertex v = 0; v < dual.dual->vertex_count(); ++v)
            degrees.insert(dual.dual->degree(v));
        checks.expect(degrees == std::set<std::int64_t>{n - 2 * a, 2 * a},
                      [&] { return tag + " dual degrees differ from {n-2a, 2a}"; });
        notes.push_back(tag + " components " + list(sorted_sizes(labeling, 0)) + " alpha " + std::to_string(alpha));
    }

    for (int q : {2, 3, 5}) {
        const int n = 2 * q * q;
        auto affine = affine_plane_coloring(q, n);
        auto labeling = color_components(*affine.primal, *affine.coloring);
        for (int c = 0; c <= q; ++c)
            for (int size : labeling.sizes[static_cast<std::size_t>(c)])
                checks.expect(size == n / q, [&] {
                    return "affine q=" + std::to_string(q) + " color " + std::to_string(c) + " component " + std::to_string(size);
                });
    }
    out.passed = checks.ok();
    std::string joined;
    for (const auto& note : notes)
        joined += note + "; ";
    out.detail = joined + checks.summary();
}

void witness_soundness(CriterionResult& out, SuiteLevel level)
{
    struct Driver
    {
        int s, r;
    };
    const int target = level == SuiteLevel::full ? 10000 : 500;
    Checks checks;
    std::string tallies;
    SplitMix64 rng(606);
    for (auto [s, r] : {Driver{2, 2}, Driver{2, 3}, Driver{3, 3}, Driver{4, 4}, Driver{3, 4}, Driver{2, 4}}) {
        const auto t = *ThresholdTable::lookup(s, r);
        int instances = 0, exact_runs = 0, refutations = 0;
        while (instances < target) {
            auto h = random_multi(rng, r, 3, 40);
            const std::int64_t nu = nu_k(h, s).value;
            std::vector<std::int64_t> claims;
            if (t.precondition(h.n(), nu))
                claims.push_back(nu);
            for (std::int64_t lie = nu - 1; lie >= 0; --lie)
                if (t.precondition(h.n(), lie)) {
                    claims.push_back(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(lie + 1))));
                    break;
                }
            if (claims.empty())
                continue;
            ++instances;
            for (std::int64_t claim : claims) {
                const std::string where = "s=" + std::to_string(s) + " r=" + std::to_string(r) + " nu=" + std::to_string(claim);
                try {
                    auto w = degree_witness(h, s, claim);
                    checks.expect(verify_witness(h, w), [&] { return where + ": witness fails verification"; });
                    if (const auto* d = std::get_if<DegreeWitness>(&w.payload))
                        checks.expect(t.degree_ok(d->degree, h.n(), claim), [&] { return where + ": degree below bound"; });
                    else
                        ++refutations;
                    if (claim == nu) {
                        ++exact_runs;
                        checks.expect(w.tag() == WitnessTag::degree, [&] { return where + ": exact nu refuted"; });
                    }
                }
                catch (const DriverError& e) {
                    checks.expect(false, [&] { return where + ": " + e.what(); });
                }
            }
        }
        tallies += " (" + std::to_string(s) + "," + std::to_string(r) + "): " + std::to_string(instances) + " instances, "
            + std::to_string(exact_runs) + " exact, " + std::to_string(refutations) + " refutations;";
    }
    out.passed = checks.ok();
    out.detail = tallies.substr(1) + " " + checks.summary();
}

void oracle_equivalence(CriterionResult& out, SuiteLevel level)
{
    SplitMix64 rng(707);
    Checks checks;
    const int corpus = level == SuiteLevel::full ? 200 : 50;
    const SolverOptions exhaustive{SolverMode::exhaustive, 4'000'000'000ULL};
    for (int i = 0; i < corpus; ++i) {
        const int k = 2 + static_cast<int>(rng.below(2));
        const int n = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(11 - k)));
        auto g = random_uniform(rng, n, k, 0.1 + 0.8 * rng.uniform());
        const std::string where = "instance " + std::to_string(i);
        const int alpha = alpha_k(g, k).value;
        const int hat = alpha_hat_k(g, k).value;
        const int alpha_oracle = alpha_k(g, k, exhaustive).value;
        const int hat_oracle = alpha_hat_k(g, k, exhaustive).value;
        checks.expect(alpha == alpha_oracle, [&] { return where + ": alpha_k differs from enumeration"; });
        checks.expect(hat == hat_oracle, [&] { return where + ": alpha_hat_k differs from enumeration"; });
        const int independence = independence_number(g).size;
        checks.expect(independence / k <= hat / k && hat / k <= alpha && alpha <= hat,
                      [&] { return where + ": chain fails"; });
        for (int p = 0; p < n; ++p) {
            checks.expect(is_expander(g, p, n - p) == (hat <= p), [&] { return where + ": expander equivalence at p=" + std::to_string(p); });
            checks.expect(is_outer_expander(g, p, n - p) == (alpha <= p),
                          [&] { return where + ": outer-expander equivalence at p=" + std::to_string(p); });
        }
        const int r = 2 + static_cast<int>(rng.below(2));
        auto dual = dual_of_coloring(g, random_coloring(rng, g, r));
        for (int s = 2; s <= 3; ++s) {
            const auto nu = nu_k(dual.dual, s).value;
            const auto nu_oracle = nu_k(dual.dual, s, exhaustive).value;
            checks.expect(nu == nu_oracle, [&] { return where + ": nu_" + std::to_string(s) + " differs from enumeration"; });
        }
    }
    out.passed = checks.ok();
    out.detail = std::to_string(corpus) + " instances, " + checks.summary();
}

void random_scaling(CriterionResult& out, SuiteLevel level)
{
    SweepSpec spec;
    spec.n = {40};
    spec.k = 2;
    spec.d = {4, 8, 16, 32};
    const int seeds = level == SuiteLevel::full ? 20 : 5;
    for (int s = 0; s < seeds; ++s)
        spec.seeds.push_back(static_cast<std::uint64_t>(s));
    auto medians = cell_medians(run_sweep(spec));
    Checks checks;
    std::string detail;
    for (std::size_t i = 0; i < medians.size(); ++i) {
        const auto& m = medians[i];
        checks.expect(m.exact == m.total, [&] { return "d=" + std::to_string(m.d) + ": solver budget exceeded"; });
        if (i > 0)
            checks.expect(m.median_alpha <= medians[i - 1].median_alpha, [&] { return "median alpha_2 increases"; });
        const double bound = m.first_moment ? *m.first_moment : 0;
        if (!(m.median_alpha <= 3 * bound && bound <= 3 * m.median_alpha))
            out.warnings.push_back("d=" + std::to_string(static_cast<int>(m.d)) + ": median " + std::to_string(m.median_alpha)
                                   + " outside factor 3 of first-moment bound " + std::to_string(bound));
        std::ostringstream cell;
        cell << "d=" << m.d << " median " << m.median_alpha << " bound " << bound << "; ";
        detail += cell.str();
    }
    out.passed = checks.ok();
    out.detail = detail + checks.summary();
}

void steiner_anchor(CriterionResult& out, SuiteLevel)
{
    Checks checks;
    std::string detail;
    for (int n : {9, 15, 21}) {
        auto s = bose_sts(n);
        checks.expect(is_steiner_triple_system(s), [&] { return "bose_sts(" + std::to_string(n) + ") is not Steiner"; });
        auto hole = alpha_k(s, 3);
        checks.expect(!hole.hole || verify_hole(s, *hole.hole), [&] { return "hole witness fails"; });
        const int bound = n - 2 * hole.value;
        checks.expect(3 * bound >= 2 * n + 3, [&] {
            return "n=" + std::to_string(n) + ": n - 2 alpha_3 = " + std::to_string(bound) + " < 2n/3 + 1 = "
                + std::to_string(2 * n / 3 + 1);
        });
        detail += "n=" + std::to_string(n) + " alpha_3 " + std::to_string(hole.value) + " n-2alpha_3 " + std::to_string(bound)
            + "; ";
    }
    out.passed = checks.ok();
    out.detail = detail + checks.summary();
}

struct Criterion
{
    int id;
    const char* name;
    double limit_seconds;
    void (*run)(CriterionResult&, SuiteLevel);
};

constexpr Criterion criteria[] = {
    {1, "duality exactness", 60, duality_exactness},
    {2, "bipartite degree theorem", 60, bipartite_theorem},
    {3, "primal upper bound on small graphs", 300, primal_upper_bound},
    {4, "complete hypergraph anchors", 120, complete_anchors},
    {5, "construction certification", 120, construction_certification},
    {6, "witness engine soundness", 600, witness_soundness},
    {7, "hole-number oracle equivalence", 300, oracle_equivalence},
    {8, "random hypergraph scaling", 300, random_scaling},
    {9, "Steiner triple system anchor", 120, steiner_anchor},
};

} // namespace

std::vector<CriterionResult> run_acceptance(SuiteLevel level, const std::vector<int>& only)
{
    std::vector<CriterionResult> results;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end())
            continue;
        CriterionResult result;
        result.id = c.id;
        result.name = c.name;
        result.limit_seconds = c.limit_seconds;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(result, level);
        }
        catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("aborted: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.seconds >= result.limit_seconds) {
            result.passed = false;
            result.detail += "; exceeded time limit";
        }
        results.push_back(std::move(result));
    }
    return results;
}

std::string format_result(const CriterionResult& result)
{
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ". " << result.name << ": " << result.detail << " ("
        << result.seconds << " s, limit " << static_cast<int>(result.limit_seconds) << " s)";
    for (const auto& w : result.warnings)
        out << "\n       warning: " << w;
    return out.str();
}

} // namespace holes
