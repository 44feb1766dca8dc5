#include "holes/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "holes/rng.hpp"

namespace holes {

namespace {

/// Calls visit(subset) for every k-subset of 0..n-1 in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit)
{
    if (k < 0 || k > n)
        return;
    Edge pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        visit(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Claim claim(std::string name, Quantity quantity, Relation relation, std::int64_t value, int k = 0)
{
    Claim c;
    c.name = std::move(name);
    c.quantity = quantity;
    c.relation = relation;
    c.value = value;
    c.k = k;
    return c;
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw PreconditionError(message);
}

void check_layered_range(int r, int a, int n)
{
    require(r >= 2, "layered construction needs r >= 2");
    require(n >= r, "layered construction needs n >= r");
    require(a >= 0 && static_cast<std::int64_t>(a) * (r + 2) <= n, "layered construction needs 0 <= a <= n/(r+2)");
}

/// Color of the edge uv in the affine plane of order q, given the points.
int affine_color(int q, int p, int p2)
{
    if (p == p2)
        return 0;
    int x1 = p / q, y1 = p % q, x2 = p2 / q, y2 = p2 % q;
    if (x1 == x2)
        return q;
    int dx = ((x2 - x1) % q + q) % q;
    int dy = ((y2 - y1) % q + q) % q;
    int inverse = 1;
    while (dx * inverse % q != 1)
        ++inverse;
    return dy * inverse % q;
}

} // namespace

bool holds(Relation relation, std::int64_t measured, std::int64_t value)
{
    switch (relation) {
    case Relation::equals:
        return measured == value;
    case Relation::at_most:
        return measured <= value;
    case Relation::at_least:
        return measured >= value;
    }
    return false;
}

bool ConstructionReport::certified() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verified.value_or(false); });
}

void measure(ConstructionReport& report, const SolverOptions& options)
{
    auto need_primal = [&](const Claim& c) {
        if (!report.primal)
            throw PreconditionError("claim '" + c.name + "' needs a primal instance");
    };
    auto need_colored = [&](const Claim& c) {
        need_primal(c);
        if (!report.coloring)
            throw PreconditionError("claim '" + c.name + "' needs a coloring");
    };
    auto need_dual = [&](const Claim& c) {
        if (!report.dual)
            throw PreconditionError("claim '" + c.name + "' needs a dual instance");
    };
    for (auto& c : report.claims) {
        c.measured.clear();
        switch (c.quantity) {
        case Quantity::alpha:
            need_primal(c);
            c.measured.push_back(alpha_k(*report.primal, c.k, options).value);
            break;
        case Quantity::nu:
            need_dual(c);
            c.measured.push_back(nu_k(*report.dual, c.k, options).value);
            break;
        case Quantity::largest_component:
            need_colored(c);
            c.measured.push_back(largest_mono_component(*report.primal, *report.coloring).size);
            break;
        case Quantity::color_largest_components: {
            need_colored(c);
            auto labels = color_components(*report.primal, *report.coloring);
            for (const auto& sizes : labels.sizes)
                c.measured.push_back(sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end()));
            break;
        }
        case Quantity::component_sizes: {
            need_colored(c);
            auto labels = color_components(*report.primal, *report.coloring);
            for (const auto& sizes : labels.sizes)
                c.measured.insert(c.measured.end(), sizes.begin(), sizes.end());
            break;
        }
        case Quantity::degrees:
            need_dual(c);
            for (Vertex v : c.vertices) {
                require(v >= 0 && v < report.dual->vertex_count(), "claim '" + c.name + "' names a vertex out of range");
                c.measured.push_back(report.dual->degree(v));
            }
            break;
        case Quantity::max_degree:
            need_dual(c);
            c.measured.push_back(report.dual->max_degree());
            break;
        }
        c.verified = std::all_of(c.measured.begin(), c.measured.end(),
                                 [&](std::int64_t m) { return holds(c.relation, m, c.value); });
    }
}

void certify(ConstructionReport& report, const SolverOptions& options)
{
    measure(report, options);
    for (const auto& c : report.claims)
        if (!*c.verified)
            throw VerificationError(report.name + ": claim '" + c.name + "' failed");
}

ConstructionReport construct_grid(int s, int t, int n, const SolverOptions& options)
{
    require(s >= 1 && s <= t, "grid needs 1 <= s <= t");
    require(n >= t && n % (s * t) == 0, "grid needs st to divide n");
    require(n <= 64, "grid alpha_2 is computed exactly and needs n <= 64");
    const int block = n / (s * t);
    auto row = [&](Vertex v) { return v / block / t; };
    auto col = [&](Vertex v) { return v / block % t; };

    std::vector<Edge> edges;
    std::vector<ColorSet> colors;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            ColorSet c = (row(u) == row(v) ? 1U : 0U) | (col(u) == col(v) ? 2U : 0U);
            if (c) {
                edges.push_back({u, v});
                colors.push_back(c);
            }
        }

    ConstructionReport report;
    report.name = "grid";
    report.params = {{"s", s}, {"t", t}, {"n", n}, {"r", 2}, {"k", 2}};
    report.primal = UniformHypergraph(n, 2, std::move(edges));
    report.coloring = EdgeColoring(2, std::move(colors));

    int proof = 0;
    for (int i = 0; i <= s; ++i)
        for (int j = 0; j <= t; ++j)
            proof = std::max(proof, std::min(i * j, (s - i) * (t - j)));
    report.notes["alpha_formula_displayed"] = static_cast<double>((s + 1) / 2 * (t / 2) * block);
    report.notes["alpha_formula_proof"] = static_cast<double>(proof * block);

    const int alpha = alpha_k(*report.primal, 2, options).value;
    report.claims.push_back(claim("alpha_2", Quantity::alpha, Relation::equals, alpha, 2));
    report.claims.push_back(claim("largest_component", Quantity::largest_component, Relation::equals, n / s));
    return report;
}

ConstructionReport construct_layered(int r, int a, int n)
{
    check_layered_range(r, a, n);
    const int base = n - (r + 1) * a;
    // layer of v: 0 for V_0, j for V_j, r + 1 for V_{r+1}
    auto layer = [&](Vertex v) { return v < base ? 0 : 1 + (v - base) / a; };

    std::vector<Edge> edges;
    std::vector<ColorSet> colors;
    for_each_subset(n, r, [&](const Edge& e) {
        std::vector<bool> present(static_cast<std::size_t>(r + 2), false);
        for (Vertex v : e)
            present[static_cast<std::size_t>(layer(v))] = true;
        ColorSet c = 0;
        for (int j = 1; j <= r; ++j) {
            bool low = !present[static_cast<std::size_t>(r + 1)] && !present[static_cast<std::size_t>(j)];
            bool high = true;
            for (int i = 0; i <= r; ++i)
                if (i != j && present[static_cast<std::size_t>(i)])
                    high = false;
            if (low || high)
                c |= ColorSet{1} << (j - 1);
        }
        if (c) {
            edges.push_back(e);
            colors.push_back(c);
        }
    });

    ConstructionReport report;
    report.name = "layered";
    report.params = {{"r", r}, {"a", a}, {"n", n}, {"k", r}};
    report.primal = UniformHypergraph(n, r, std::move(edges));
    report.coloring = EdgeColoring(r, std::move(colors));
    report.claims.push_back(claim("alpha_r", Quantity::alpha, Relation::equals, a, r));
    report.claims.push_back(claim("largest_component", Quantity::largest_component, Relation::equals, n - 2 * a));
    report.claims.push_back(claim("color_largest_components", Quantity::color_largest_components, Relation::equals, n - 2 * a));
    return report;
}

ConstructionReport construct_layered_dual(int r, int a, int n)
{
    check_layered_range(r, a, n);
    auto u = [](int part) { return 2 * part; };
    auto v = [](int part) { return 2 * part + 1; };

    std::vector<MultiEdge> edges;
    auto add = [&](std::vector<Vertex> verts, std::int64_t mult) {
        if (mult > 0)
            edges.push_back({std::move(verts), mult});
    };
    std::vector<Vertex> all_u, all_v;
    for (int i = 0; i < r; ++i) {
        all_u.push_back(u(i));
        all_v.push_back(v(i));
    }
    add(all_v, a);
    for (int i = 0; i < r; ++i) {
        auto mixed = all_u;
        mixed[static_cast<std::size_t>(i)] = v(i);
        add(mixed, a);
    }
    add(all_u, n - static_cast<std::int64_t>(r + 1) * a);

    ConstructionReport report;
    report.name = "layered_dual";
    report.params = {{"r", r}, {"a", a}, {"n", n}, {"k", r}};
    report.dual = PartiteMultiHypergraph(std::vector<int>(static_cast<std::size_t>(r), 2), std::move(edges));
    auto degrees_u = claim("u_degrees", Quantity::degrees, Relation::equals, n - 2 * a);
    degrees_u.vertices = all_u;
    auto degrees_v = claim("v_degrees", Quantity::degrees, Relation::equals, 2 * a);
    degrees_v.vertices = all_v;
    report.claims.push_back(degrees_u);
    report.claims.push_back(degrees_v);
    report.claims.push_back(claim("max_degree", Quantity::max_degree, Relation::equals, n - 2 * a));
    report.claims.push_back(claim("nu_r", Quantity::nu, Relation::equals, a, r));
    return report;
}

ConstructionReport construct_isolated_clique(int n, int a, int k, int r, const SolverOptions& options)
{
    require(k >= 2, "isolated clique needs k >= 2");
    require(r >= 1 && r <= max_colors, "isolated clique needs 1 <= r <= 32");
    require(a >= 0 && static_cast<std::int64_t>(a) * k <= n, "isolated clique needs 0 <= a <= n/k");
    require(n - a >= k, "isolated clique needs n - a >= k");
    auto clique = UniformHypergraph::complete(n - a, k);
    McOptions mc_options;
    mc_options.budget = options.budget;
    auto mc = mc_exact(clique, r, mc_options);

    ConstructionReport report;
    report.name = "isolated_clique";
    report.params = {{"n", n}, {"a", a}, {"k", k}, {"r", r}};
    report.primal = UniformHypergraph(n, k, clique.edges());
    report.coloring = EdgeColoring::from_indices(r, mc.coloring);
    report.notes["mc_clique"] = mc.value;
    report.claims.push_back(claim("alpha_k", Quantity::alpha, Relation::equals, a, k));
    report.claims.push_back(claim("largest_component", Quantity::largest_component, Relation::at_most, mc.value));
    return report;
}

EdgeColoring hole_based_coloring(const UniformHypergraph& g, const PartiteHole& hole)
{
    const int r = hole.k();
    require(r >= 2 && r <= g.k(), "hole-based coloring needs 2 <= r <= k sets");
    require(verify_hole(g, hole), "hole-based coloring needs a valid hole");
    std::vector<char> owner(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < r; ++i)
        for (Vertex v : hole.sets[static_cast<std::size_t>(i)])
            owner[static_cast<std::size_t>(v)] = static_cast<char>(i);
    std::vector<ColorSet> colors;
    const ColorSet all = r == max_colors ? ~ColorSet{0} : (ColorSet{1} << r) - 1;
    for (const auto& e : g.edges()) {
        ColorSet touched = 0;
        for (Vertex v : e)
            if (owner[static_cast<std::size_t>(v)] >= 0)
                touched |= ColorSet{1} << owner[static_cast<std::size_t>(v)];
        colors.push_back(all & ~touched);
    }
    return EdgeColoring(r, std::move(colors));
}

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

ConstructionReport affine_plane_coloring(int q, int n)
{
    require(is_prime(q), "affine plane order must be prime");
    require(q + 1 <= max_colors, "affine plane order too large");
    require(n > 0 && n % (q * q) == 0, "affine plane coloring needs q^2 to divide n");
    const int group = n / (q * q);
    auto g = UniformHypergraph::complete(n, 2);
    std::vector<int> colors;
    for (const auto& e : g.edges())
        colors.push_back(affine_color(q, e[0] / group, e[1] / group));

    ConstructionReport report;
    report.name = "affine";
    report.params = {{"q", q}, {"n", n}, {"r", q + 1}, {"k", 2}};
    report.primal = std::move(g);
    report.coloring = EdgeColoring::from_indices(q + 1, colors);
    report.claims.push_back(claim("component_sizes", Quantity::component_sizes, Relation::equals, n / q));
    report.claims.push_back(claim("largest_component", Quantity::largest_component, Relation::equals, n / q));
    return report;
}

EdgeColoring capped_coloring(const UniformHypergraph& g, const std::vector<Vertex>& a, int r)
{
    require(g.k() == 2, "capped coloring needs a graph");
    require(r >= 2 && r <= max_colors, "capped coloring needs 2 <= r <= 32");
    const int q = r - 1;
    require(q == 1 || is_prime(q), "capped coloring needs an affine plane of prime order r - 1");
    const int n = g.n();
    const int size = static_cast<int>(a.size());
    require(size >= r && size % r == 0, "|A| must be C r for some C >= 1");
    const int c = size / r;

    std::vector<int> part(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < size; ++i) {
        Vertex v = a[static_cast<std::size_t>(i)];
        require(v >= 0 && v < n, "A contains a vertex out of range");
        require(part[static_cast<std::size_t>(v)] < 0, "A contains a repeated vertex");
        part[static_cast<std::size_t>(v)] = i / c;
    }
    std::set<Vertex> neighbours;
    for (const auto& e : g.edges()) {
        bool in0 = part[static_cast<std::size_t>(e[0])] >= 0, in1 = part[static_cast<std::size_t>(e[1])] >= 0;
        require(!(in0 && in1), "A is not independent");
        if (in0)
            neighbours.insert(e[1]);
        if (in1)
            neighbours.insert(e[0]);
    }
    const int rest = n - size;
    require(rest % (q * q) == 0, "(r-1)^2 must divide n - |A|");
    const int class_size = rest / (q * q);
    require(static_cast<int>(neighbours.size()) <= class_size,
            "the neighbourhood of A has more than (n - Cr)/(r-1)^2 vertices");

    std::vector<int> point(static_cast<std::size_t>(n), -1);
    std::vector<int> filled(static_cast<std::size_t>(q * q), 0);
    for (Vertex v : neighbours)
        point[static_cast<std::size_t>(v)] = 0;
    filled[0] = static_cast<int>(neighbours.size());
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (part[static_cast<std::size_t>(v)] >= 0 || point[static_cast<std::size_t>(v)] >= 0)
            continue;
        while (filled[static_cast<std::size_t>(next)] == class_size)
            ++next;
        point[static_cast<std::size_t>(v)] = next;
        ++filled[static_cast<std::size_t>(next)];
    }

    std::vector<int> colors;
    for (const auto& e : g.edges()) {
        int pa = part[static_cast<std::size_t>(e[0])], pb = part[static_cast<std::size_t>(e[1])];
        if (pa >= 0 || pb >= 0)
            colors.push_back(std::max(pa, pb));
        else if (q == 1)
            colors.push_back(0);
        else
            colors.push_back(affine_color(q, point[static_cast<std::size_t>(e[0])], point[static_cast<std::size_t>(e[1])]));
    }
    return EdgeColoring::from_indices(r, colors);
}

UniformHypergraph bose_sts(int n)
{
    require(n > 0 && n % 6 == 3, "Bose construction needs n = 3 (mod 6)");
    const int m = n / 3;
    const int half = (m + 1) / 2;
    auto id = [&](int x, int i) { return i * m + x; };
    std::vector<Edge> triples;
    for (int x = 0; x < m; ++x)
        triples.push_back({id(x, 0), id(x, 1), id(x, 2)});
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            int z = static_cast<int>(static_cast<std::int64_t>(x + y) * half % m);
            for (int i = 0; i < 3; ++i)
                triples.push_back({id(x, i), id(y, i), id(z, (i + 1) % 3)});
        }
    return UniformHypergraph(n, 3, std::move(triples));
}

bool is_steiner_triple_system(const UniformHypergraph& g)
{
    if (g.k() != 3)
        return false;
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> cover(n * n, 0);
    for (const auto& e : g.edges())
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                ++cover[static_cast<std::size_t>(e[static_cast<std::size_t>(i)]) * n + static_cast<std::size_t>(e[static_cast<std::size_t>(j)])];
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (cover[u * n + v] != 1)
                return false;
    return true;
}

UniformHypergraph sample_binomial_hypergraph(int n, int k, double p, std::uint64_t seed)
{
    require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
    require(n >= 0 && k >= 1, "sampler needs n >= 0 and k >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for_each_subset(n, k, [&](const Edge& e) {
        if (rng.uniform() < p)
            edges.push_back(e);
    });
    return UniformHypergraph(n, k, std::move(edges));
}

long double log_expected_holes(int n, int k, double p, int a)
{
    const long double minus_inf = -std::numeric_limits<long double>::infinity();
    if (static_cast<std::int64_t>(k) * a > n)
        return minus_inf;
    auto log_choose = [](int top, int bottom) {
        return std::lgamma(static_cast<long double>(top) + 1) - std::lgamma(static_cast<long double>(bottom) + 1)
            - std::lgamma(static_cast<long double>(top - bottom) + 1);
    };
    long double total = 0;
    for (int i = 0; i < k; ++i)
        total += log_choose(n - i * a, a);
    if (a == 0)
        return total;
    if (p >= 1.0)
        return minus_inf;
    return total + std::pow(static_cast<long double>(a), static_cast<long double>(k)) * std::log1p(-static_cast<long double>(p));
}

int first_moment_alpha_bound(int n, int k, double p)
{
    require(p > 0.0 && p < 1.0, "first moment bound needs 0 < p < 1");
    require(k >= 2 && n >= 0, "first moment bound needs k >= 2");
    for (int a = 1;; ++a)
        if (log_expected_holes(n, k, p, a) < 0)
            return a;
}

} // namespace holes
