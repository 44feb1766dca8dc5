#include "holes/witness.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "holes/max_flow.hpp"

namespace holes {

namespace {

using Wide = __int128;

constexpr Wide wide_cap = Wide{1} << 120;

/// 3^e, saturated far above any 64-bit quantity.
Wide pow3(int e)
{
    Wide out = 1;
    for (int i = 0; i < e && out < wide_cap; ++i)
        out *= 3;
    return std::min(out, wide_cap);
}

Wide wmul(Wide a, Wide b)
{
    if (a == 0 || b == 0)
        return 0;
    if (a > wide_cap / b)
        return wide_cap;
    return a * b;
}

std::int64_t narrow(Wide x)
{
    return x > Wide{std::numeric_limits<std::int64_t>::max() / 2} ? std::numeric_limits<std::int64_t>::max() / 2
                                                                  : static_cast<std::int64_t>(x);
}

int choose2(int m) { return m * (m - 1) / 2; }

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw PreconditionError(message);
}

/// Bounded copy count a_j nu + 1 and its multiples, in 64 bits.
std::int64_t times(std::int64_t a, std::int64_t nu, std::int64_t factor = 1)
{
    return narrow(wmul(wmul(a, nu), factor));
}

std::vector<std::int64_t> part_counts(const PartiteMultiHypergraph& h, const EdgeBag& bag, int part)
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(h.part_sizes()[static_cast<std::size_t>(part)]), 0);
    const int offset = h.part_offset(part);
    for (std::size_t e = 0; e < bag.size(); ++e)
        if (bag[e])
            counts[static_cast<std::size_t>(h.edge(e).verts[static_cast<std::size_t>(part)] - offset)] += bag[e];
    return counts;
}

/// Copies of the bag whose part vertex lies in (or outside) the local set.
EdgeBag restrict_bag(const PartiteMultiHypergraph& h, const EdgeBag& bag, int part, const std::vector<bool>& local,
                     bool inside)
{
    EdgeBag out(bag.size(), 0);
    const int offset = h.part_offset(part);
    for (std::size_t e = 0; e < bag.size(); ++e) {
        bool in = local[static_cast<std::size_t>(h.edge(e).verts[static_cast<std::size_t>(part)] - offset)];
        if (in == inside)
            out[e] = bag[e];
    }
    return out;
}

/// Inclusion-minimal set of part vertices whose counts reach the threshold:
/// add in descending count order, then drop redundant vertices.
std::optional<std::vector<bool>> minimal_set(const std::vector<std::int64_t>& counts, std::int64_t threshold)
{
    std::vector<std::size_t> order(counts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
    std::vector<bool> chosen(counts.size(), false);
    std::vector<std::size_t> taken;
    std::int64_t total = 0;
    for (std::size_t v : order) {
        if (total >= threshold)
            break;
        chosen[v] = true;
        taken.push_back(v);
        total += counts[v];
    }
    if (total < threshold)
        return std::nullopt;
    for (auto it = taken.rbegin(); it != taken.rend(); ++it)
        if (total - counts[*it] >= threshold) {
            chosen[*it] = false;
            total -= counts[*it];
        }
    return chosen;
}

bool crosses_in_part(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families)
{
    std::vector<int> hits(static_cast<std::size_t>(h.part_sizes()[static_cast<std::size_t>(part)]), 0);
    for (const auto& f : families) {
        auto counts = part_counts(h, f, part);
        for (std::size_t v = 0; v < counts.size(); ++v)
            hits[v] += counts[v] > 0 ? 1 : 0;
    }
    return std::any_of(hits.begin(), hits.end(), [&](int c) { return c == static_cast<int>(families.size()); });
}

SplitOutcome split_impl(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                        const std::vector<std::int64_t>& weights, std::int64_t nu)
{
    const std::size_t l = families.size();
    std::vector<std::int64_t> sizes;
    std::vector<std::vector<std::int64_t>> counts;
    for (const auto& f : families) {
        sizes.push_back(bag_size(f));
        counts.push_back(part_counts(h, f, part));
    }
    const int offset = h.part_offset(part);
    const std::vector<bool> none(counts[0].size(), false);

    SplitOutcome out;
    std::size_t best = static_cast<std::size_t>(std::max_element(counts[0].begin(), counts[0].end()) - counts[0].begin());
    if (counts[0][best] >= sizes[0] - times(weights[0], nu)) {
        std::vector<bool> at(counts[0].size(), false);
        at[best] = true;
        for (std::size_t j = 1; j < l; ++j)
            if (sizes[j] - counts[j][best] >= times(weights[j], nu) + 1) {
                out.families = families;
                out.families[0] = restrict_bag(h, families[0], part, at, true);
                out.families[j] = restrict_bag(h, families[j], part, at, false);
                out.origin.resize(l);
                std::iota(out.origin.begin(), out.origin.end(), 0);
                return out;
            }
        out.concentrated = true;
        out.vertex = offset + static_cast<Vertex>(best);
        for (std::size_t j = 0; j < l; ++j)
            out.incidences.push_back(counts[j][best]);
        return out;
    }

    auto first = *minimal_set(counts[0], times(weights[0], nu) + 1);
    if (l == 1) {
        out.families = {restrict_bag(h, families[0], part, first, true), restrict_bag(h, families[0], part, first, false)};
        out.origin = {0, 0};
        return out;
    }
    std::int64_t second_in_first = 0;
    for (std::size_t v = 0; v < first.size(); ++v)
        if (first[v])
            second_in_first += counts[1][v];
    const bool swap = second_in_first >= times(weights[1], nu) + 1;
    out.families = families;
    out.families[0] = restrict_bag(h, families[0], part, first, !swap);
    out.families[1] = restrict_bag(h, families[1], part, first, swap);
    out.origin.resize(l);
    std::iota(out.origin.begin(), out.origin.end(), 0);
    return out;
}

void check_split_input(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                       const std::vector<std::int64_t>& weights, std::int64_t nu)
{
    require(part >= 0 && part < h.r(), "part index out of range");
    require(!families.empty() && families.size() == weights.size(), "need one weight per family");
    require(nu >= 0, "nu must be nonnegative");
    for (std::size_t j = 0; j < families.size(); ++j) {
        require(weights[j] >= 1, "weights must be positive");
        require(families[j].size() == h.edge_count(), "family bag does not match the edge list");
        for (std::size_t e = 0; e < families[j].size(); ++e)
            require(families[j][e] >= 0 && families[j][e] <= h.edge(e).mult, "family bag exceeds an edge multiplicity");
    }
}

std::string dump(const PartiteMultiHypergraph& h, std::int64_t nu, const std::vector<std::string>& trace)
{
    std::ostringstream out;
    out << "parts:";
    for (int size : h.part_sizes())
        out << ' ' << size;
    out << "\nedges:";
    for (const auto& e : h.edges()) {
        out << " [";
        for (std::size_t i = 0; i < e.verts.size(); ++i)
            out << (i ? "," : "") << e.verts[i];
        out << "]x" << e.mult;
    }
    out << "\nnu_hat: " << nu << "\ntrace:";
    for (const auto& step : trace)
        out << "\n  " << step;
    return out.str();
}

/// Shared state of one driver run.
class Run
{
public:
    Run(const PartiteMultiHypergraph& h, std::int64_t nu)
        : h(h)
        , nu(nu)
    {
    }

    const PartiteMultiHypergraph& h;
    std::int64_t nu;
    std::vector<std::string> trace;

    void note(std::string step) { trace.push_back(std::move(step)); }

    [[noreturn]] void fail(const std::string& what) const { throw DriverError(what, dump(h, nu, trace)); }

    template <typename Pred>
    EdgeBag bag_if(Pred&& pred) const
    {
        EdgeBag bag(h.edge_count(), 0);
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            if (pred(e))
                bag[e] = h.edge(e).mult;
        return bag;
    }

    EdgeBag single(std::size_t edge) const
    {
        EdgeBag bag(h.edge_count(), 0);
        bag[edge] = h.edge(edge).mult;
        return bag;
    }

    bool contains(std::size_t e, Vertex v) const { return h.edge(e).verts[static_cast<std::size_t>(h.part_of(v))] == v; }

    Witness degree(Vertex v)
    {
        note("degree witness at vertex " + std::to_string(v) + " with degree " + std::to_string(h.degree(v)));
        return {DegreeWitness{v, h.degree(v), h.incident(v)}, trace};
    }

    Witness multiplicity(std::size_t e)
    {
        note("edge " + std::to_string(e) + " has multiplicity " + std::to_string(h.edge(e).mult));
        return {MultiplicityWitness{e, h.edge(e).mult}, trace};
    }

    /// Disjoint families of nu + 1 copies each, family j drawn from
    /// candidates[j] and the remaining s - |candidates| drawn freely.
    std::optional<Witness> cross_free(const std::vector<EdgeBag>& candidates, int s)
    {
        const int m = static_cast<int>(candidates.size());
        s = std::max(s, m);
        const int edges = static_cast<int>(h.edge_count());
        const int source = s + edges, sink = source + 1;
        MaxFlow flow(sink + 1);
        std::vector<std::vector<int>> arcs(static_cast<std::size_t>(s));
        for (int j = 0; j < s; ++j) {
            flow.add_arc(source, j, nu + 1);
            for (int e = 0; e < edges; ++e) {
                std::int64_t cap = j < m ? candidates[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]
                                         : h.edge(static_cast<std::size_t>(e)).mult;
                arcs[static_cast<std::size_t>(j)].push_back(cap > 0 ? flow.add_arc(j, s + e, cap) : -1);
            }
        }
        for (int e = 0; e < edges; ++e)
            flow.add_arc(s + e, sink, h.edge(static_cast<std::size_t>(e)).mult);
        if (flow.run(source, sink) != static_cast<std::int64_t>(s) * (nu + 1))
            return std::nullopt;

        CrossFreeFamily family;
        family.families.resize(static_cast<std::size_t>(s));
        std::vector<std::int64_t> used(static_cast<std::size_t>(edges), 0);
        for (int j = 0; j < s; ++j)
            for (int e = 0; e < edges; ++e) {
                int arc = arcs[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
                if (arc < 0)
                    continue;
                std::int64_t take = flow.flow(arc);
                std::int64_t base = h.copy_offset(static_cast<std::size_t>(e)) + used[static_cast<std::size_t>(e)];
                for (std::int64_t c = 0; c < take; ++c)
                    family.families[static_cast<std::size_t>(j)].push_back(base + c);
                used[static_cast<std::size_t>(e)] += take;
            }
        if (!verify_cross_free(h, family))
            return std::nullopt;
        note("cross-free family of " + std::to_string(s) + " families of size " + std::to_string(nu + 1));
        return Witness{std::move(family), trace};
    }

    /// cross_free for s families, falling back to two.
    std::optional<Witness> cross_free_at_most(const std::vector<EdgeBag>& candidates, int s)
    {
        if (auto w = cross_free(candidates, s))
            return w;
        if (s > static_cast<int>(candidates.size())) {
            note("not enough copies for " + std::to_string(s) + " families");
            return cross_free(candidates, static_cast<int>(candidates.size()));
        }
        return std::nullopt;
    }

    Witness must_cross_free(const std::vector<EdgeBag>& candidates, int s, const std::string& step)
    {
        if (auto w = cross_free(candidates, s))
            return *w;
        fail(step + ": no disjoint cross-free selection of size " + std::to_string(nu + 1));
    }

    SplitOutcome split(int part, const std::vector<EdgeBag>& families, const std::vector<std::int64_t>& weights,
                       bool simple)
    {
        for (std::size_t j = 0; j < families.size(); ++j) {
            std::int64_t need = (simple || j == 0 ? 3 : 2) * times(weights[j], nu) + 1;
            if (bag_size(families[j]) < need)
                fail("splitting lemma precondition fails for family " + std::to_string(j) + " in part "
                     + std::to_string(part));
        }
        auto out = split_impl(h, part, families, weights, nu);
        if (!verify_split(h, part, families, weights, nu, out))
            fail("splitting lemma produced an invalid outcome in part " + std::to_string(part));
        note(std::string(simple ? "simple" : "precise") + " split in part " + std::to_string(part) + ": "
             + (out.concentrated ? "concentrated at " + std::to_string(out.vertex) : "split"));
        return out;
    }

    /// Finds the edge with exactly these vertices, one per part.
    std::size_t edge_with(const std::vector<Vertex>& verts) const
    {
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            if (h.edge(e).verts == verts)
                return e;
        fail("no edge through the concentrated vertex set");
    }

    Witness finish(Witness w, const std::function<bool(std::int64_t)>& degree_ok)
    {
        if (!verify_witness(h, w))
            fail("witness failed verification");
        if (auto* d = std::get_if<DegreeWitness>(&w.payload); d && !degree_ok(d->degree))
            fail("degree witness misses the guaranteed bound");
        if (auto* c = std::get_if<CrossFreeFamily>(&w.payload); c && c->min_size() < nu + 1)
            fail("cross-free witness is too small");
        if (auto* m = std::get_if<MultiplicityWitness>(&w.payload); m && m->multiplicity < nu + 1)
            fail("multiplicity witness is too small");
        w.trace = trace;
        return w;
    }
};

void check_driver_input(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    require(nu >= 0, "nu_hat must be nonnegative");
    require(h.n() >= 1, "the multi-hypergraph has no edges");
}

Witness high_degree_run(Run& run, int s, std::int64_t delta)
{
    const auto& h = run.h;
    const std::int64_t nu = run.nu;
    const int r = h.r();
    const std::int64_t target = times(delta, nu) + 1;
    auto fallback = [&]() -> Witness {
        Vertex v = h.max_degree_vertex();
        if (h.degree(v) >= target)
            return run.degree(v);
        run.fail("family sizes collapsed without a vertex of degree delta nu + 1");
    };

    auto degrees = part_counts(h, full_bag(h), 0);
    auto top = static_cast<std::size_t>(std::max_element(degrees.begin(), degrees.end()) - degrees.begin());
    if (degrees[top] >= target)
        return run.degree(h.part_offset(0) + static_cast<Vertex>(top));
    auto first = minimal_set(degrees, narrow(wmul(pow3(r - 1), wmul(delta, nu))) + 1);
    if (!first)
        return fallback();
    std::vector<EdgeBag> pair = {restrict_bag(h, full_bag(h), 0, *first, true), restrict_bag(h, full_bag(h), 0, *first, false)};
    run.note("part 0 split into " + std::to_string(bag_size(pair[0])) + " + " + std::to_string(bag_size(pair[1])) + " copies");

    for (int part = 1; part < r; ++part) {
        const std::int64_t a = narrow(wmul(pow3(r - 1 - part), delta));
        for (const auto& f : pair)
            if (bag_size(f) < 3 * times(a, nu) + 1)
                return fallback();
        auto out = run.split(part, pair, {a, a}, true);
        if (out.concentrated)
            return run.degree(out.vertex);
        pair = out.families;
    }
    if (auto w = run.cross_free_at_most(pair, s))
        return *w;
    run.fail("final split families admit no disjoint selection");
}

/// The maximum concentrated vertex set of the fat-edge lemma.
std::vector<Vertex> maximum_concentrated_set(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    const int r = h.r();
    std::map<std::vector<Vertex>, std::int64_t> degree;
    for (const auto& e : h.edges())
        for (unsigned mask = 1; mask < (1U << r); ++mask) {
            std::vector<Vertex> u;
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1U)
                    u.push_back(e.verts[static_cast<std::size_t>(i)]);
            degree[u] += e.mult;
        }
    std::vector<Vertex> best;
    for (const auto& [u, d] : degree) {
        const int l = static_cast<int>(u.size());
        if (Wide{d} < wmul(pow3(choose2(r + 2 - l)), nu) + 1)
            continue;
        if (u.size() > best.size())
            best = u;
    }
    return best;
}

/// Degree bound of the fat-edge lemma for case s.
bool fat_edge_degree_ok(int r, int s, std::int64_t n, std::int64_t nu, std::int64_t d)
{
    if (s == 2)
        return Wide{r - 1} * d >= Wide{n} - 2 * Wide{nu};
    if (s == r)
        return Wide{d} >= Wide{n} - 2 * Wide{nu};
    return Wide{r} * d >= Wide{r - 1} * n - Wide{2} * r * (r - 1) * nu;
}

Witness fat_edge_run(Run& run, int s)
{
    const auto& h = run.h;
    const std::int64_t nu = run.nu;
    const int r = h.r();
    const std::int64_t n = h.n();
    auto u = maximum_concentrated_set(h, nu);
    if (u.empty())
        run.fail("no vertex meets the fat-edge degree threshold");
    const int l = static_cast<int>(u.size());
    const int depth = choose2(r + 2 - l);
    {
        std::string step = "maximum concentrated set:";
        for (Vertex v : u)
            step += " " + std::to_string(v);
        run.note(step);
    }
    if (l == r)
        return run.multiplicity(run.edge_with(u));

    std::vector<bool> in_u(static_cast<std::size_t>(r), false);
    for (Vertex v : u)
        in_u[static_cast<std::size_t>(h.part_of(v))] = true;
    std::vector<int> outside;
    for (int p = 0; p < r; ++p)
        if (!in_u[static_cast<std::size_t>(p)])
            outside.push_back(p);
    auto contains_all = [&](std::size_t e) {
        return std::all_of(u.begin(), u.end(), [&](Vertex v) { return run.contains(e, v); });
    };
    const EdgeBag e_bag = run.bag_if(contains_all);
    std::vector<EdgeBag> avoid;
    for (Vertex v : u)
        avoid.push_back(run.bag_if([&](std::size_t e) { return !run.contains(e, v); }));

    auto best_in_u = [&]() {
        Vertex best = u.front();
        for (Vertex v : u)
            if (h.degree(v) > h.degree(best))
                best = v;
        return best;
    };
    auto maximality = [&](const std::string& where) -> Witness { run.fail(where + ": outcome contradicts maximality of the concentrated set"); };

    if (s == 2) {
        auto f = run.bag_if([&](std::size_t e) {
            return std::none_of(u.begin(), u.end(), [&](Vertex v) { return run.contains(e, v); });
        });
        const std::int64_t fsize = bag_size(f);
        if (Wide{r - 1} * fsize <= Wide{r - 1 - l} * n + Wide{2} * l * nu)
            return run.degree(best_in_u());
        std::vector<EdgeBag> pair = {e_bag, f};
        for (std::size_t t = 1; t <= outside.size(); ++t) {
            const std::int64_t a_e = narrow(pow3(depth - static_cast<int>(t)));
            const std::int64_t a_f = std::int64_t{1} << (outside.size() - t);
            auto out = run.split(outside[t - 1], pair, {a_e, a_f}, false);
            if (out.concentrated)
                return maximality("case (i)");
            pair = out.families;
        }
        return run.must_cross_free(pair, 2, "case (i)");
    }

    // cases (ii) and (iii)
    auto two_sided = [&]() {
        const std::int64_t first = times(narrow(pow3(depth - 1)), nu) + 1;
        EdgeBag e1(h.edge_count(), 0), e2 = e_bag;
        std::int64_t left = first;
        for (std::size_t e = 0; e < e_bag.size() && left > 0; ++e) {
            std::int64_t take = std::min(left, e_bag[e]);
            e1[e] = take;
            e2[e] -= take;
            left -= take;
        }
        std::vector<EdgeBag> pair = {e1, e2};
        for (std::size_t t = 1; t <= outside.size(); ++t) {
            const std::int64_t a = narrow(pow3(depth - 1 - static_cast<int>(t)));
            auto out = run.split(outside[t - 1], pair, {a, a}, true);
            if (out.concentrated)
                maximality("two-sided split");
            pair = out.families;
        }
        return pair;
    };

    if (s == r) {
        for (std::size_t i = 0; i < u.size(); ++i)
            if (bag_size(avoid[i]) <= 2 * nu)
                return run.degree(u[i]);
        if (l <= r - 2) {
            auto families = two_sided();
            families.insert(families.end(), avoid.begin(), avoid.end());
            return run.must_cross_free(families, r, "case (ii)");
        }
        std::vector<EdgeBag> families = {e_bag};
        families.insert(families.end(), avoid.begin(), avoid.end());
        auto out = run.split(outside.front(), families, std::vector<std::int64_t>(families.size(), 1), false);
        if (out.concentrated) {
            auto verts = u;
            verts.push_back(out.vertex);
            std::sort(verts.begin(), verts.end());
            return run.multiplicity(run.edge_with(verts));
        }
        return run.must_cross_free(out.families, r, "case (ii)");
    }

    // s = r - 1
    for (std::size_t i = 0; i < u.size(); ++i)
        if (Wide{r} * bag_size(avoid[i]) <= Wide{n} + Wide{2} * r * (r - 1) * nu)
            return run.degree(u[i]);
    if (l <= r - 3) {
        auto families = two_sided();
        families.insert(families.end(), avoid.begin(), avoid.end());
        return run.must_cross_free(families, r - 1, "case (iii)");
    }
    if (l == r - 2) {
        std::vector<EdgeBag> families = {e_bag};
        families.insert(families.end(), avoid.begin(), avoid.end());
        for (std::size_t t = 1; t <= outside.size(); ++t) {
            std::vector<std::int64_t> weights(families.size(), t == 1 ? 2 : 1);
            weights[0] = narrow(pow3(depth - static_cast<int>(t)));
            auto out = run.split(outside[t - 1], families, weights, false);
            if (out.concentrated)
                return maximality("case (iii), l = r - 2");
            families = out.families;
        }
        return run.must_cross_free(families, r - 1, "case (iii)");
    }
    // l = r - 1
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            EdgeBag both(h.edge_count(), 0);
            for (std::size_t e = 0; e < both.size(); ++e)
                both[e] = std::min(avoid[static_cast<std::size_t>(i)][e], avoid[static_cast<std::size_t>(j)][e]);
            if (bag_size(both) < 2 * nu + 1)
                continue;
            std::vector<EdgeBag> families = {e_bag};
            for (int m = 0; m < l; ++m)
                if (m != i && m != j)
                    families.push_back(avoid[static_cast<std::size_t>(m)]);
            families.push_back(both);
            auto out = run.split(outside.front(), families, std::vector<std::int64_t>(families.size(), 1), false);
            if (out.concentrated) {
                auto verts = u;
                verts.push_back(out.vertex);
                std::sort(verts.begin(), verts.end());
                return run.multiplicity(run.edge_with(verts));
            }
            return run.must_cross_free(out.families, r - 1, "case (iii), pairwise overlap");
        }
    std::vector<EdgeBag> starred;
    for (int i = 0; i < l; ++i)
        starred.push_back(run.bag_if([&](std::size_t e) {
            for (int j = 0; j < l; ++j)
                if (run.contains(e, u[static_cast<std::size_t>(j)]) == (j == i))
                    return false;
            return true;
        }));
    auto out = run.split(outside.front(), starred, std::vector<std::int64_t>(starred.size(), 1), false);
    if (out.concentrated)
        return run.degree(out.vertex);
    return run.must_cross_free(out.families, r - 1, "case (iii), starred families");
}

/// Membership mask of every distinct edge: bit i when it avoids e's part-i vertex.
std::vector<unsigned> avoid_masks(const PartiteMultiHypergraph& h, std::size_t fat)
{
    std::vector<unsigned> masks;
    for (const auto& e : h.edges()) {
        unsigned m = 0;
        for (int i = 0; i < h.r(); ++i)
            if (e.verts[static_cast<std::size_t>(i)] != h.edge(fat).verts[static_cast<std::size_t>(i)])
                m |= 1U << i;
        masks.push_back(m);
    }
    return masks;
}

/// Runs the shared degree pipeline and returns the fat edge, or a finished
/// witness when the pipeline already settled the case.
std::variant<std::size_t, Witness> degree_pipeline(Run& run, int s)
{
    const int r = run.h.r();
    auto high = high_degree_run(run, s, narrow(pow3(choose2(r + 1))));
    if (high.tag() == WitnessTag::cross_free)
        return high;
    auto fat = fat_edge_run(run, s);
    if (fat.tag() != WitnessTag::multiplicity)
        return fat;
    return std::get<MultiplicityWitness>(fat.payload).edge;
}

/// Reruns a failed driver as an exact search for a refutation of nu.
template <typename Driver>
Witness with_search_fallback(const PartiteMultiHypergraph& h, int s, std::int64_t nu, Driver&& driver)
{
    try {
        return driver();
    }
    catch (const DriverError& error) {
        NuResult exact;
        try {
            exact = nu_k(h, s, {SolverMode::branch_and_bound, 2'000'000});
        }
        catch (const BudgetExceeded&) {
            throw error;
        }
        if (exact.value <= nu || !exact.family)
            throw;
        CrossFreeFamily family;
        for (const auto& f : exact.family->families)
            family.families.emplace_back(f.begin(), f.begin() + nu + 1);
        std::vector<std::string> trace = {std::string("driver step failed: ") + error.what(),
                                          "exact search found " + std::to_string(s) + " families of size "
                                              + std::to_string(exact.value)};
        Witness w{std::move(family), std::move(trace)};
        if (!verify_witness(h, w))
            throw;
        return w;
    }
}

} // namespace

std::int64_t bag_size(const EdgeBag& bag) { return std::accumulate(bag.begin(), bag.end(), std::int64_t{0}); }

EdgeBag full_bag(const PartiteMultiHypergraph& h)
{
    EdgeBag bag;
    for (const auto& e : h.edges())
        bag.push_back(e.mult);
    return bag;
}

EdgeBag bag_of_copies(const PartiteMultiHypergraph& h, const std::vector<std::int64_t>& copies)
{
    EdgeBag bag(h.edge_count(), 0);
    std::vector<std::int64_t> sorted = copies;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "repeated copy id");
    for (std::int64_t c : sorted) {
        require(c >= 0 && c < h.n(), "copy id out of range");
        ++bag[h.edge_of_copy(c)];
    }
    return bag;
}

const char* to_string(WitnessTag tag)
{
    switch (tag) {
    case WitnessTag::degree:
        return "Degree";
    case WitnessTag::multiplicity:
        return "Multiplicity";
    case WitnessTag::cross_free:
        return "CrossFree";
    case WitnessTag::hole:
        return "Hole";
    }
    return "?";
}

const char* to_string(DriverCase which)
{
    switch (which) {
    case DriverCase::bipartite:
        return "bipartite";
    case DriverCase::tripartite:
        return "tripartite";
    case DriverCase::r_partite:
        return "r_partite";
    case DriverCase::shadow:
        return "shadow";
    case DriverCase::weak:
        return "weak";
    }
    return "?";
}

bool verify_witness(const PartiteMultiHypergraph& h, const Witness& witness)
{
    if (const auto* d = std::get_if<DegreeWitness>(&witness.payload))
        return d->vertex >= 0 && d->vertex < h.vertex_count() && d->degree == h.degree(d->vertex)
            && d->edges == h.incident(d->vertex);
    if (const auto* m = std::get_if<MultiplicityWitness>(&witness.payload))
        return m->edge < h.edge_count() && m->multiplicity == h.edge(m->edge).mult;
    if (const auto* c = std::get_if<CrossFreeFamily>(&witness.payload))
        return verify_cross_free(h, *c);
    return false;
}

bool verify_witness(const UniformHypergraph& g, const Witness& witness)
{
    const auto* hole = std::get_if<PartiteHole>(&witness.payload);
    return hole && verify_hole(g, *hole);
}

bool Threshold::precondition(std::int64_t n, std::int64_t nu) const
{
    if (nu < 0)
        return false;
    switch (which) {
    case DriverCase::bipartite:
        return 6 * Wide{nu} < n;
    case DriverCase::tripartite:
        return wmul(pow3(9), nu) <= n;
    default:
        return wmul(pow3(choose2(r + 1) + r), nu) <= n && Wide{s} * (nu + 1) <= n;
    }
}

bool Threshold::degree_ok(std::int64_t degree, std::int64_t n, std::int64_t nu) const
{
    const Wide d = degree, m = n, v = nu;
    switch (which) {
    case DriverCase::bipartite:
        return d >= m - 2 * v;
    case DriverCase::tripartite:
        return 2 * d >= m - 4 * v;
    case DriverCase::r_partite:
        return d >= m - Wide{r - 1} * v;
    case DriverCase::shadow:
        return Wide{r} * d >= Wide{r - 1} * m - Wide{r} * choose2(r) * v;
    case DriverCase::weak:
        return Wide{r} * d >= m - v;
    }
    return false;
}

std::string Threshold::precondition_text() const
{
    switch (which) {
    case DriverCase::bipartite:
        return "6 nu < n";
    case DriverCase::tripartite:
        return "3^9 nu <= n";
    default:
        return "3^" + std::to_string(choose2(r + 1) + r) + " nu <= n and " + std::to_string(s) + " (nu + 1) <= n";
    }
}

std::string Threshold::bound_text() const
{
    switch (which) {
    case DriverCase::bipartite:
        return "n - 2 nu";
    case DriverCase::tripartite:
        return "n/2 - 2 nu";
    case DriverCase::r_partite:
        return "n - " + std::to_string(r - 1) + " nu";
    case DriverCase::shadow:
        return std::to_string(r - 1) + "n/" + std::to_string(r) + " - " + std::to_string(choose2(r)) + " nu";
    case DriverCase::weak:
        return "(n - nu)/" + std::to_string(r);
    }
    return "";
}

std::optional<Threshold> ThresholdTable::lookup(int s, int r)
{
    if (r == 2 && s == 2)
        return Threshold{2, 2, DriverCase::bipartite};
    if (r == 3 && s == 2)
        return Threshold{2, 3, DriverCase::tripartite};
    if (r >= 3 && r <= 16 && s == r)
        return Threshold{s, r, DriverCase::r_partite};
    if (r >= 4 && r <= 16 && s == r - 1)
        return Threshold{s, r, DriverCase::shadow};
    if (r >= 4 && r <= 16 && s == 2)
        return Threshold{2, r, DriverCase::weak};
    return std::nullopt;
}

std::vector<Threshold> ThresholdTable::entries(int r)
{
    std::vector<Threshold> out;
    for (int s = 2; s <= r; ++s)
        if (auto t = lookup(s, r))
            out.push_back(*t);
    return out;
}

SplitOutcome split_or_concentrate(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                                  const std::vector<std::int64_t>& weights, std::int64_t nu)
{
    check_split_input(h, part, families, weights, nu);
    for (std::size_t j = 0; j < families.size(); ++j)
        require(bag_size(families[j]) >= (j == 0 ? 3 : 2) * times(weights[j], nu) + 1,
                "family " + std::to_string(j) + " is too small for the splitting lemma");
    return split_impl(h, part, families, weights, nu);
}

SplitOutcome split_or_concentrate_simple(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                                         const std::vector<std::int64_t>& weights, std::int64_t nu)
{
    check_split_input(h, part, families, weights, nu);
    for (std::size_t j = 0; j < families.size(); ++j)
        require(bag_size(families[j]) >= 3 * times(weights[j], nu) + 1,
                "family " + std::to_string(j) + " is too small for the splitting lemma");
    return split_impl(h, part, families, weights, nu);
}

bool verify_split(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                  const std::vector<std::int64_t>& weights, std::int64_t nu, const SplitOutcome& outcome)
{
    if (outcome.concentrated) {
        if (outcome.vertex < 0 || outcome.vertex >= h.vertex_count() || h.part_of(outcome.vertex) != part)
            return false;
        if (outcome.incidences.size() != families.size())
            return false;
        for (std::size_t j = 0; j < families.size(); ++j) {
            auto counts = part_counts(h, families[j], part);
            std::int64_t at = counts[static_cast<std::size_t>(outcome.vertex - h.part_offset(part))];
            if (at != outcome.incidences[j] || at < bag_size(families[j]) - times(weights[j], nu))
                return false;
        }
        return true;
    }
    if (outcome.families.size() < 2 || outcome.families.size() != outcome.origin.size())
        return false;
    std::vector<EdgeBag> used(families.size(), EdgeBag(h.edge_count(), 0));
    for (std::size_t k = 0; k < outcome.families.size(); ++k) {
        int j = outcome.origin[k];
        if (j < 0 || j >= static_cast<int>(families.size()) || outcome.families[k].size() != h.edge_count())
            return false;
        if (bag_size(outcome.families[k]) < times(weights[static_cast<std::size_t>(j)], nu) + 1)
            return false;
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            used[static_cast<std::size_t>(j)][e] += outcome.families[k][e];
            if (outcome.families[k][e] < 0 || used[static_cast<std::size_t>(j)][e] > families[static_cast<std::size_t>(j)][e])
                return false;
        }
    }
    return !crosses_in_part(h, part, outcome.families);
}

Witness high_degree_vertex(const PartiteMultiHypergraph& h, int s, std::int64_t delta, std::int64_t nu)
{
    check_driver_input(h, nu);
    require(s >= 2 && s <= h.r(), "s must satisfy 2 <= s <= r");
    require(delta >= 1, "delta must be positive");
    require(wmul(wmul(pow3(h.r()), delta), nu) <= h.n(), "high-degree lemma needs 3^r delta nu <= n");
    Run run(h, nu);
    const std::int64_t target = times(delta, nu) + 1;
    return run.finish(high_degree_run(run, s, delta), [&](std::int64_t d) { return d >= target; });
}

Witness fat_edge_or_degree(const PartiteMultiHypergraph& h, int s, std::int64_t nu)
{
    check_driver_input(h, nu);
    const int r = h.r();
    require(r >= 3, "fat-edge lemma needs r >= 3");
    require(s == 2 || s == r || (s == r - 1 && r >= 4), "fat-edge lemma needs s in {2, r-1, r}, with r >= 4 for s = r-1");
    require(Wide{h.max_degree()} >= wmul(pow3(choose2(r + 1)), nu) + 1, "fat-edge lemma needs Delta(H) >= 3^{C(r+1,2)} nu + 1");
    Run run(h, nu);
    return run.finish(fat_edge_run(run, s), [&](std::int64_t d) { return fat_edge_degree_ok(r, s, h.n(), nu, d); });
}

static Witness bipartite_impl(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    check_driver_input(h, nu);
    require(h.r() == 2, "bipartite driver needs r = 2");
    const Threshold t{2, 2, DriverCase::bipartite};
    require(t.precondition(h.n(), nu), "bipartite driver needs 6 nu < n");
    Run run(h, nu);
    const std::int64_t n = h.n();
    auto finish = [&](Witness w) { return run.finish(std::move(w), [&](std::int64_t d) { return t.degree_ok(d, n, nu); }); };

    // case 1: an edge of multiplicity at least nu + 1
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (h.edge(e).mult < nu + 1)
            continue;
        const Vertex u1 = h.edge(e).verts[0], u2 = h.edge(e).verts[1];
        run.note("case 1 with fat edge " + std::to_string(e));
        auto away = run.bag_if([&](std::size_t f) { return !run.contains(f, u1) && !run.contains(f, u2); });
        if (bag_size(away) >= nu + 1)
            if (auto w = run.cross_free({run.single(e), away}, 2))
                return finish(*w);
        auto only1 = run.bag_if([&](std::size_t f) { return run.contains(f, u1) && !run.contains(f, u2); });
        auto only2 = run.bag_if([&](std::size_t f) { return run.contains(f, u2) && !run.contains(f, u1); });
        if (bag_size(only1) >= nu + 1 && bag_size(only2) >= nu + 1)
            if (auto w = run.cross_free({only1, only2}, 2))
                return finish(*w);
        return finish(run.degree(bag_size(only2) <= nu ? u1 : u2));
    }

    // case 2: every multiplicity is at most nu
    run.note("case 2: every multiplicity is at most nu");
    std::array<Vertex, 2> top{};
    for (int p = 0; p < 2; ++p) {
        top[static_cast<std::size_t>(p)] = h.part_offset(p);
        for (Vertex v = h.part_offset(p); v < h.part_offset(p) + h.part_sizes()[static_cast<std::size_t>(p)]; ++v)
            if (h.degree(v) > h.degree(top[static_cast<std::size_t>(p)]))
                top[static_cast<std::size_t>(p)] = v;
    }
    if (h.degree(top[0]) >= 2 * nu + 1 && h.degree(top[1]) >= 2 * nu + 1) {
        auto only1 = run.bag_if([&](std::size_t f) { return run.contains(f, top[0]) && !run.contains(f, top[1]); });
        auto only2 = run.bag_if([&](std::size_t f) { return run.contains(f, top[1]) && !run.contains(f, top[0]); });
        return finish(run.must_cross_free({only1, only2}, 2, "case 2, two heavy vertices"));
    }
    const int light = h.degree(top[1]) <= 2 * nu ? 1 : 0;
    const int other = 1 - light;
    auto degrees = part_counts(h, full_bag(h), light);
    auto first = minimal_set(degrees, 2 * nu + 1);
    if (!first)
        run.fail("case 2: light side carries fewer than 2 nu + 1 copies");
    std::vector<EdgeBag> pair = {restrict_bag(h, full_bag(h), light, *first, true),
                                 restrict_bag(h, full_bag(h), light, *first, false)};
    if (bag_size(pair[0]) < 3 * nu + 1)
        std::swap(pair[0], pair[1]);
    auto out = run.split(other, pair, {1, 1}, false);
    if (out.concentrated)
        return finish(run.degree(out.vertex));
    return finish(run.must_cross_free(out.families, 2, "case 2 split"));
}

static Witness tripartite_impl(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    check_driver_input(h, nu);
    require(h.r() == 3, "tripartite driver needs r = 3");
    const Threshold t{2, 3, DriverCase::tripartite};
    require(t.precondition(h.n(), nu), "tripartite driver needs 3^9 nu <= n");
    Run run(h, nu);
    const std::int64_t n = h.n();
    auto finish = [&](Witness w) { return run.finish(std::move(w), [&](std::int64_t d) { return t.degree_ok(d, n, nu); }); };

    auto high = high_degree_run(run, 2, narrow(pow3(6)));
    if (high.tag() == WitnessTag::cross_free)
        return finish(high);
    auto fat = fat_edge_run(run, 2);
    if (fat.tag() != WitnessTag::multiplicity)
        return finish(fat);

    const std::size_t e = std::get<MultiplicityWitness>(fat.payload).edge;
    const auto& verts = h.edge(e).verts;
    auto has = [&](std::size_t f) {
        unsigned m = 0;
        for (int i = 0; i < 3; ++i)
            if (run.contains(f, verts[static_cast<std::size_t>(i)]))
                m |= 1U << i;
        return m;
    };
    auto exactly = [&](unsigned mask) { return run.bag_if([&](std::size_t f) { return has(f) == mask; }); };
    auto best_of = [&](std::initializer_list<int> parts) {
        Vertex best = verts[static_cast<std::size_t>(*parts.begin())];
        for (int p : parts)
            if (h.degree(verts[static_cast<std::size_t>(p)]) > h.degree(best))
                best = verts[static_cast<std::size_t>(p)];
        return best;
    };

    auto away = exactly(0);
    if (bag_size(away) >= nu + 1)
        if (auto w = run.cross_free({run.single(e), away}, 2))
            return finish(*w);
    // either u_3 already has degree n/2 - 2 nu or more than n/2 + nu edges meet u_1 u_2 but not u_3
    if (t.degree_ok(h.degree(verts[2]), n, nu))
        return finish(run.degree(verts[2]));
    std::array<EdgeBag, 3> only = {exactly(1), exactly(2), exactly(4)};
    for (int i = 0; i < 3; ++i)
        if (bag_size(only[static_cast<std::size_t>(i)]) < 3 * nu + 1)
            return finish(run.degree(i == 0 ? best_of({1, 2}) : i == 1 ? best_of({0, 2}) : best_of({0, 1})));
    auto pair12 = exactly(3);
    if (bag_size(pair12) >= nu + 1)
        if (auto w = run.cross_free({pair12, only[2]}, 2))
            return finish(*w);
    auto out = run.split(2, {only[0], only[1]}, {1, 1}, true);
    if (out.concentrated)
        return finish(run.degree(out.vertex));
    return finish(run.must_cross_free(out.families, 2, "tripartite endpoint split"));
}

static Witness r_partite_impl(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    check_driver_input(h, nu);
    const int r = h.r();
    require(r >= 3 && r <= 16, "r-partite driver needs 3 <= r <= 16");
    const Threshold t{r, r, DriverCase::r_partite};
    require(t.precondition(h.n(), nu), "r-partite driver needs " + t.precondition_text());
    Run run(h, nu);
    auto finish = [&](Witness w) { return run.finish(std::move(w), [&](std::int64_t d) { return t.degree_ok(d, h.n(), nu); }); };

    auto settled = degree_pipeline(run, r);
    if (auto* w = std::get_if<Witness>(&settled))
        return finish(*w);
    const std::size_t e = std::get<std::size_t>(settled);
    const auto masks = avoid_masks(h, e);
    auto where = [&](auto pred) { return run.bag_if([&](std::size_t f) { return pred(masks[f]); }); };
    std::vector<EdgeBag> avoid;
    for (int i = 0; i < r; ++i)
        avoid.push_back(where([&](unsigned m) { return (m >> i) & 1U; }));

    for (int i = 0; i < r; ++i)
        if (bag_size(avoid[static_cast<std::size_t>(i)]) <= Wide{r - 1} * nu)
            return finish(run.degree(h.edge(e).verts[static_cast<std::size_t>(i)]));
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            unsigned pair = (1U << i) | (1U << j);
            auto both = where([&](unsigned m) { return (m & pair) == pair; });
            if (bag_size(both) < nu + 1)
                continue;
            std::vector<EdgeBag> families = {run.single(e), both};
            for (int m = 0; m < r; ++m)
                if (m != i && m != j)
                    families.push_back(avoid[static_cast<std::size_t>(m)]);
            if (auto w = run.cross_free(families, r))
                return finish(*w);
            run.note("pairwise overlap claim not realized by a disjoint selection");
        }
    std::vector<EdgeBag> shifted;
    for (int i = 0; i < r; ++i) {
        unsigned allowed = (1U << i) | (1U << ((i + 1) % r));
        shifted.push_back(where([&](unsigned m) { return ((m >> i) & 1U) && (m & ~allowed) == 0; }));
    }
    return finish(run.must_cross_free(shifted, r, "shifted-difference families"));
}

static Witness shadow_impl(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    check_driver_input(h, nu);
    const int r = h.r();
    require(r >= 4 && r <= 16, "shadow driver needs 4 <= r <= 16");
    const Threshold t{r - 1, r, DriverCase::shadow};
    require(t.precondition(h.n(), nu), "shadow driver needs " + t.precondition_text());
    Run run(h, nu);
    const std::int64_t n = h.n();
    auto finish = [&](Witness w) { return run.finish(std::move(w), [&](std::int64_t d) { return t.degree_ok(d, n, nu); }); };

    auto settled = degree_pipeline(run, r - 1);
    if (auto* w = std::get_if<Witness>(&settled))
        return finish(*w);
    const std::size_t e = std::get<std::size_t>(settled);
    const auto masks = avoid_masks(h, e);
    auto where = [&](auto pred) { return run.bag_if([&](std::size_t f) { return pred(masks[f]); }); };
    auto all_of_set = [&](unsigned set) { return where([&](unsigned m) { return (m & set) == set; }); };
    auto starred = [&](unsigned set) { return where([&](unsigned m) { return m == set; }); };
    auto others = [&](unsigned skip) {
        std::vector<EdgeBag> out;
        for (int m = 0; m < r; ++m)
            if (!((skip >> m) & 1U))
                out.push_back(all_of_set(1U << m));
        return out;
    };
    const Wide cap = Wide{n} + Wide{r} * choose2(r) * nu;
    for (int i = 0; i < r; ++i)
        if (Wide{r} * bag_size(all_of_set(1U << i)) <= cap)
            return finish(run.degree(h.edge(e).verts[static_cast<std::size_t>(i)]));

    auto attempt = [&](std::vector<EdgeBag> families, const std::string& claim) -> std::optional<Witness> {
        if (auto w = run.cross_free(families, r - 1))
            return w;
        run.note(claim + " claim not realized by a disjoint selection");
        return std::nullopt;
    };
    const unsigned full = (1U << r) - 1;
    // three-way intersections
    for (unsigned set = 0; set <= full; ++set) {
        if (__builtin_popcount(set) != 3 || bag_size(all_of_set(set)) < nu + 1)
            continue;
        std::vector<EdgeBag> families = {run.single(e), all_of_set(set)};
        auto rest = others(set);
        families.insert(families.end(), rest.begin(), rest.end());
        if (auto w = attempt(families, "three-way"))
            return finish(*w);
    }
    // two disjoint pairwise intersections
    for (unsigned p1 = 0; p1 <= full; ++p1)
        for (unsigned p2 = p1 + 1; p2 <= full; ++p2) {
            if (__builtin_popcount(p1) != 2 || __builtin_popcount(p2) != 2 || (p1 & p2))
                continue;
            if (bag_size(all_of_set(p1)) < nu + 1 || bag_size(all_of_set(p2)) < nu + 1)
                continue;
            std::vector<EdgeBag> families = {run.single(e), all_of_set(p1), all_of_set(p2)};
            auto rest = others(p1 | p2);
            families.insert(families.end(), rest.begin(), rest.end());
            if (auto w = attempt(families, "two-way"))
                return finish(*w);
        }
    // a starred pair against a starred single
    for (unsigned pair = 0; pair <= full; ++pair) {
        if (__builtin_popcount(pair) != 2 || bag_size(starred(pair)) < nu + 1)
            continue;
        for (int j = 0; j < r; ++j) {
            if ((pair >> j) & 1U || bag_size(starred(1U << j)) < nu + 1)
                continue;
            std::vector<EdgeBag> families = {starred(pair), starred(1U << j)};
            auto rest = others(pair | (1U << j));
            families.insert(families.end(), rest.begin(), rest.end());
            if (auto w = attempt(families, "one-way/two-way"))
                return finish(*w);
        }
    }

    int p = -1, q = -1;
    std::int64_t largest = -1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            std::int64_t size = bag_size(all_of_set((1U << i) | (1U << j)));
            if (size > largest) {
                largest = size;
                p = i;
                q = j;
            }
        }
    if (Wide{largest} < Wide{r - 1} * nu + 1)
        run.fail("no pairwise intersection of size (r-1) nu + 1");
    int first = 0;
    while (first == p || first == q)
        ++first;
    if (bag_size(all_of_set((1U << first) | (1U << p))) > bag_size(all_of_set((1U << first) | (1U << q))))
        std::swap(p, q);
    run.note("heavy pair " + std::to_string(p) + "," + std::to_string(q));

    std::vector<EdgeBag> families;
    for (int i = 0; i < r; ++i)
        if (i != q)
            families.push_back(starred((1U << i) | (1U << q)));
    auto out = run.split(q, families, std::vector<std::int64_t>(families.size(), 1), true);
    if (out.concentrated)
        return finish(run.degree(out.vertex));
    return finish(run.must_cross_free(out.families, r - 1, "starred pair families"));
}

static Witness weak_impl(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    check_driver_input(h, nu);
    const int r = h.r();
    require(r >= 4 && r <= 16, "weak driver needs 4 <= r <= 16");
    const Threshold t{2, r, DriverCase::weak};
    require(t.precondition(h.n(), nu), "weak driver needs " + t.precondition_text());
    Run run(h, nu);
    auto finish = [&](Witness w) { return run.finish(std::move(w), [&](std::int64_t d) { return t.degree_ok(d, h.n(), nu); }); };

    auto settled = degree_pipeline(run, 2);
    if (auto* w = std::get_if<Witness>(&settled))
        return finish(*w);
    const std::size_t e = std::get<std::size_t>(settled);
    const auto masks = avoid_masks(h, e);
    const unsigned full = (1U << r) - 1;
    auto away = run.bag_if([&](std::size_t f) { return masks[f] == full; });
    if (bag_size(away) >= nu + 1)
        if (auto w = run.cross_free({run.single(e), away}, 2))
            return finish(*w);
    Vertex best = h.edge(e).verts[0];
    for (Vertex v : h.edge(e).verts)
        if (h.degree(v) > h.degree(best))
            best = v;
    return finish(run.degree(best));
}

Witness bipartite_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    return with_search_fallback(h, 2, nu, [&] { return bipartite_impl(h, nu); });
}

Witness tripartite_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    return with_search_fallback(h, 2, nu, [&] { return tripartite_impl(h, nu); });
}

Witness r_partite_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    return with_search_fallback(h, h.r(), nu, [&] { return r_partite_impl(h, nu); });
}

Witness shadow_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    return with_search_fallback(h, h.r() - 1, nu, [&] { return shadow_impl(h, nu); });
}

Witness weak_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu)
{
    return with_search_fallback(h, 2, nu, [&] { return weak_impl(h, nu); });
}

Witness degree_witness(const PartiteMultiHypergraph& h, int s, std::int64_t nu)
{
    auto t = ThresholdTable::lookup(s, h.r());
    require(t.has_value(), "no proven case for s = " + std::to_string(s) + ", r = " + std::to_string(h.r()));
    switch (t->which) {
    case DriverCase::bipartite:
        return bipartite_degree_witness(h, nu);
    case DriverCase::tripartite:
        return tripartite_degree_witness(h, nu);
    case DriverCase::r_partite:
        return r_partite_degree_witness(h, nu);
    case DriverCase::shadow:
        return shadow_degree_witness(h, nu);
    case DriverCase::weak:
        return weak_degree_witness(h, nu);
    }
    throw PreconditionError("unknown driver case");
}

MonoComponentWitness mono_component_witness(const UniformHypergraph& g, const EdgeColoring& coloring, int s,
                                            std::int64_t nu)
{
    require(coloring.is_canonical(), "mono-component witness needs a canonical coloring");
    require(s >= 2 && s <= g.k(), "mono-component witness needs 2 <= s <= k");
    auto t = ThresholdTable::lookup(s, coloring.r());
    require(t.has_value(), "no proven case for s = " + std::to_string(s) + ", r = " + std::to_string(coloring.r()));
    require(t->precondition(g.n(), nu), "precondition " + t->precondition_text() + " fails");
    auto d = dual_of_coloring(g, coloring);

    MonoComponentWitness out;
    out.nu = nu;
    out.s = s;
    out.which = t->which;
    out.dual = degree_witness(d.dual, s, nu);
    if (const auto* w = std::get_if<DegreeWitness>(&out.dual.payload)) {
        auto [color, component] = d.component_of_vertex[static_cast<std::size_t>(w->vertex)];
        MonoComponent c{color, static_cast<int>(w->degree), d.labeling.members(color, component)};
        if (static_cast<std::int64_t>(c.vertices.size()) != w->degree)
            throw DriverError("dual degree differs from the component size", dump(d.dual, nu, out.dual.trace));
        out.component = std::move(c);
        return out;
    }
    const auto& family = std::get<CrossFreeFamily>(out.dual.payload);
    PartiteHole hole;
    for (const auto& f : family.families) {
        std::vector<Vertex> set;
        for (std::size_t i = 0; i < f.size() && static_cast<std::int64_t>(i) < nu + 1; ++i)
            set.push_back(d.vertex_of_copy[static_cast<std::size_t>(f[i])]);
        std::sort(set.begin(), set.end());
        hole.sets.push_back(std::move(set));
    }
    if (!verify_hole(g, hole))
        throw DriverError("cross-free family does not map to a hole", dump(d.dual, nu, out.dual.trace));
    out.hole = std::move(hole);
    return out;
}

} // namespace holes
