#include "holes/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace holes {

namespace {

void combinations(int n, int k, std::vector<Vertex>& current, int start, std::vector<Edge>& out)
{
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(current.size())); ++v) {
        current.push_back(v);
        combinations(n, k, current, v + 1, out);
        current.pop_back();
    }
}

/// Union-find with rollback: union by size, no path compression.
class RollbackUnionFind
{
public:
    explicit RollbackUnionFind(int n)
        : parent_(static_cast<std::size_t>(n))
        , size_(static_cast<std::size_t>(n), 1)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const
    {
        while (parent_[static_cast<std::size_t>(v)] != v)
            v = parent_[static_cast<std::size_t>(v)];
        return v;
    }

    /// Returns the size of the merged component.
    int unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            history_.push_back(-1);
            return size_[static_cast<std::size_t>(a)];
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        history_.push_back(b);
        return size_[static_cast<std::size_t>(a)];
    }

    void undo()
    {
        int b = history_.back();
        history_.pop_back();
        if (b < 0)
            return;
        int a = parent_[static_cast<std::size_t>(b)];
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

class McSearch
{
public:
    McSearch(const UniformHypergraph& g, int r, const McOptions& options)
        : g_(g)
        , r_(r)
        , options_(options)
    {
        order_ = connected_edge_order();
        for (int c = 0; c < r; ++c)
            forests_.emplace_back(g.n());
        assignment_.assign(g.edge_count(), -1);
    }

    McResult run()
    {
        result_.value = g_.n() + 1;
        dfs(0, 0, g_.n() > 0 ? 1 : 0);
        result_.nodes = nodes_;
        return result_;
    }

private:
    std::vector<std::size_t> connected_edge_order() const
    {
        std::vector<std::size_t> order;
        std::vector<bool> used(g_.edge_count(), false);
        std::vector<bool> touched(static_cast<std::size_t>(g_.n()), false);
        for (std::size_t step = 0; step < g_.edge_count(); ++step) {
            std::size_t pick = g_.edge_count();
            for (std::size_t i = 0; i < g_.edge_count() && pick == g_.edge_count(); ++i) {
                if (used[i])
                    continue;
                for (Vertex v : g_.edge(i))
                    if (touched[static_cast<std::size_t>(v)]) {
                        pick = i;
                        break;
                    }
            }
            if (pick == g_.edge_count())
                pick = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
            used[pick] = true;
            for (Vertex v : g_.edge(pick))
                touched[static_cast<std::size_t>(v)] = true;
            order.push_back(pick);
        }
        return order;
    }

    void dfs(std::size_t depth, int colors_used, int current_max)
    {
        if (++nodes_ > options_.budget)
            throw BudgetExceeded(options_.budget);
        if (options_.bound_pruning && current_max >= result_.value)
            return;
        if (depth == order_.size()) {
            if (current_max < result_.value) {
                result_.value = current_max;
                result_.coloring = assignment_;
            }
            return;
        }
        const std::size_t e = order_[depth];
        const Edge& edge = g_.edge(e);
        const int limit = std::min(r_, colors_used + 1);
        for (int c = 0; c < limit; ++c) {
            auto& forest = forests_[static_cast<std::size_t>(c)];
            int merged = 0;
            for (std::size_t i = 1; i < edge.size(); ++i)
                merged = std::max(merged, forest.unite(edge[0], edge[i]));
            assignment_[e] = c;
            dfs(depth + 1, std::max(colors_used, c + 1), std::max(current_max, merged));
            for (std::size_t i = 1; i < edge.size(); ++i)
                forest.undo();
        }
        assignment_[e] = -1;
    }

    const UniformHypergraph& g_;
    int r_;
    McOptions options_;
    std::vector<std::size_t> order_;
    std::vector<RollbackUnionFind> forests_;
    std::vector<int> assignment_;
    std::uint64_t nodes_ = 0;
    McResult result_;
};

} // namespace

UniformHypergraph::UniformHypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n)
    , k_(k)
    , edges_(std::move(edges))
{
    if (n < 0)
        throw PreconditionError("vertex count must be nonnegative");
    if (k < 1)
        throw PreconditionError("uniformity must be at least 1");
    std::set<Edge> seen;
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != k)
            throw PreconditionError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) + "-uniform hypergraph");
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n)
                throw PreconditionError("edge vertex " + std::to_string(e[i]) + " out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw PreconditionError("edge repeats vertex " + std::to_string(e[i]));
        }
        if (!seen.insert(e).second)
            throw PreconditionError("duplicate edge");
    }
    incident_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i])
            incident_[static_cast<std::size_t>(v)].push_back(i);
}

UniformHypergraph UniformHypergraph::complete(int n, int k)
{
    std::vector<Edge> edges;
    std::vector<Vertex> current;
    if (k <= n)
        combinations(n, k, current, 0, edges);
    return UniformHypergraph(n, k, std::move(edges));
}

bool UniformHypergraph::has_edge(const Edge& e) const
{
    Edge sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || sorted.front() < 0 || sorted.back() >= n_)
        return false;
    for (std::size_t i : incident_[static_cast<std::size_t>(sorted.front())])
        if (edges_[i] == sorted)
            return true;
    return false;
}

std::vector<VertexMask> UniformHypergraph::edge_masks() const
{
    if (n_ > max_mask_vertices)
        throw PreconditionError("bitmask solvers support at most 64 vertices");
    std::vector<VertexMask> masks;
    masks.reserve(edges_.size());
    for (const auto& e : edges_)
        masks.push_back(to_mask(e));
    return masks;
}

EdgeColoring::EdgeColoring(int r, std::vector<ColorSet> colors)
    : r_(r)
    , colors_(std::move(colors))
{
    if (r < 1 || r > max_colors)
        throw PreconditionError("color count must be in [1, 32]");
    const ColorSet allowed = r == max_colors ? ~ColorSet{0} : (ColorSet{1} << r) - 1;
    for (ColorSet c : colors_) {
        if (c == 0)
            throw PreconditionError("every edge needs at least one color");
        if (c & ~allowed)
            throw PreconditionError("color index exceeds r - 1");
    }
}

EdgeColoring EdgeColoring::from_indices(int r, const std::vector<int>& colors)
{
    std::vector<ColorSet> sets;
    sets.reserve(colors.size());
    for (int c : colors) {
        if (c < 0 || c >= r)
            throw PreconditionError("color index " + std::to_string(c) + " outside [0, r)");
        sets.push_back(ColorSet{1} << c);
    }
    return EdgeColoring(r, std::move(sets));
}

bool EdgeColoring::is_canonical() const
{
    return std::all_of(colors_.begin(), colors_.end(), [](ColorSet c) { return std::has_single_bit(c); });
}

void EdgeColoring::check_matches(const UniformHypergraph& g) const
{
    if (colors_.size() != g.edge_count())
        throw PreconditionError("coloring has " + std::to_string(colors_.size()) + " entries for " +
                                std::to_string(g.edge_count()) + " edges");
}

std::vector<Vertex> ComponentLabeling::members(int color, int component) const
{
    std::vector<Vertex> out;
    const auto& l = label[static_cast<std::size_t>(color)];
    for (Vertex v = 0; v < n; ++v)
        if (l[static_cast<std::size_t>(v)] == component)
            out.push_back(v);
    return out;
}

std::set<std::pair<Vertex, Vertex>> two_shadow(const UniformHypergraph& g, const std::vector<std::size_t>& edge_filter)
{
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i : edge_filter) {
        if (i >= g.edge_count())
            throw PreconditionError("edge filter index out of range");
        const Edge& e = g.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                pairs.emplace(e[a], e[b]);
    }
    return pairs;
}

std::set<std::pair<Vertex, Vertex>> two_shadow(const UniformHypergraph& g)
{
    std::vector<std::size_t> all(g.edge_count());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return two_shadow(g, all);
}

ComponentLabeling color_components(const UniformHypergraph& g, const EdgeColoring& coloring)
{
    coloring.check_matches(g);
    ComponentLabeling out;
    out.n = g.n();
    for (int c = 0; c < coloring.r(); ++c) {
        RollbackUnionFind forest(g.n());
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (!coloring.has(i, c))
                continue;
            const Edge& e = g.edge(i);
            for (std::size_t j = 1; j < e.size(); ++j)
                forest.unite(e[0], e[j]);
        }
        std::vector<int> root_label(static_cast<std::size_t>(g.n()), -1);
        std::vector<int> label(static_cast<std::size_t>(g.n()));
        std::vector<int> sizes;
        for (Vertex v = 0; v < g.n(); ++v) {
            int root = forest.find(v);
            int& id = root_label[static_cast<std::size_t>(root)];
            if (id < 0) {
                id = static_cast<int>(sizes.size());
                sizes.push_back(0);
            }
            label[static_cast<std::size_t>(v)] = id;
            ++sizes[static_cast<std::size_t>(id)];
        }
        out.label.push_back(std::move(label));
        out.sizes.push_back(std::move(sizes));
    }
    return out;
}

MonoComponent largest_mono_component(const UniformHypergraph& g, const EdgeColoring& coloring)
{
    const auto labeling = color_components(g, coloring);
    MonoComponent best;
    best.size = 0;
    int best_component = -1;
    for (int c = 0; c < coloring.r(); ++c) {
        const auto& sizes = labeling.sizes[static_cast<std::size_t>(c)];
        // ids follow smallest member, so the first maximum has the smallest minimum vertex
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            if (sizes[j] > best.size) {
                best.size = sizes[j];
                best.color = c;
                best_component = static_cast<int>(j);
            }
        }
    }
    if (best_component >= 0)
        best.vertices = labeling.members(best.color, best_component);
    return best;
}

EdgeColoring canonicalize(const EdgeColoring& coloring)
{
    std::vector<ColorSet> out;
    out.reserve(coloring.size());
    for (ColorSet c : coloring.colors())
        out.push_back(c & (~c + 1));
    return EdgeColoring(coloring.r(), std::move(out));
}

McResult mc_exact(const UniformHypergraph& g, int r, const McOptions& options)
{
    if (r < 1 || r > max_colors)
        throw PreconditionError("color count must be in [1, 32]");
    McSearch search(g, r, options);
    return search.run();
}

std::pair<UniformHypergraph, std::optional<EdgeColoring>> normalized(const UniformHypergraph& g,
                                                                     const std::optional<EdgeColoring>& coloring)
{
    if (coloring)
        coloring->check_matches(g);
    std::vector<std::size_t> perm(g.edge_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return g.edge(a) < g.edge(b); });
    std::vector<Edge> edges;
    std::vector<ColorSet> colors;
    for (std::size_t i : perm) {
        edges.push_back(g.edge(i));
        if (coloring)
            colors.push_back(coloring->at(i));
    }
    std::optional<EdgeColoring> c;
    if (coloring)
        c = EdgeColoring(coloring->r(), std::move(colors));
    return {UniformHypergraph(g.n(), g.k(), std::move(edges)), std::move(c)};
}

} // namespace holes
