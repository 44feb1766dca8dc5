#include "holes/duality.hpp"

#include <map>
#include <string>

namespace holes {

DualCorrespondence dual_of_coloring(const UniformHypergraph& g, const EdgeColoring& coloring)
{
    coloring.check_matches(g);
    if (!coloring.is_canonical())
        throw PreconditionError("dualization needs a canonical (single color per edge) coloring");
    if (coloring.r() < 2)
        throw PreconditionError("dualization needs at least 2 colors");
    const int r = coloring.r();
    auto labeling = color_components(g, coloring);

    std::vector<int> part_sizes;
    for (int c = 0; c < r; ++c)
        part_sizes.push_back(labeling.component_count(c));
    int offset = 0;
    std::vector<int> offsets;
    for (int size : part_sizes) {
        offsets.push_back(offset);
        offset += size;
    }

    std::map<std::vector<Vertex>, std::size_t> index;
    std::vector<MultiEdge> edges;
    std::vector<std::vector<Vertex>> members;
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<Vertex> verts;
        for (int c = 0; c < r; ++c)
            verts.push_back(offsets[static_cast<std::size_t>(c)] + labeling.label[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]);
        auto [it, inserted] = index.emplace(verts, edges.size());
        if (inserted) {
            edges.push_back({verts, 0});
            members.emplace_back();
        }
        ++edges[it->second].mult;
        members[it->second].push_back(v);
    }

    DualCorrespondence out{g, coloring, PartiteMultiHypergraph(part_sizes, edges), {}, {}, {}, std::move(labeling)};
    out.copy_of_vertex.assign(static_cast<std::size_t>(g.n()), -1);
    out.vertex_of_copy.assign(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t e = 0; e < members.size(); ++e) {
        std::int64_t copy = out.dual.copy_offset(e);
        for (Vertex v : members[e]) {
            out.copy_of_vertex[static_cast<std::size_t>(v)] = copy;
            out.vertex_of_copy[static_cast<std::size_t>(copy)] = v;
            ++copy;
        }
    }
    for (int c = 0; c < r; ++c)
        for (int j = 0; j < part_sizes[static_cast<std::size_t>(c)]; ++j)
            out.component_of_vertex.emplace_back(c, j);
    return out;
}

PrimalColoring primal_of_dual(const PartiteMultiHypergraph& h, int k)
{
    const int r = h.r();
    if (k < 2 || k > r)
        throw PreconditionError("primal uniformity k must satisfy 2 <= k <= r, got k = " + std::to_string(k));
    if (h.n() < 1)
        throw PreconditionError("the multi-hypergraph has no edges");
    if (h.n() > 64)
        throw PreconditionError("primal construction supports at most 64 edge copies");
    const int n = static_cast<int>(h.n());
    const auto owners = h.copy_owners();

    std::vector<Edge> edges;
    std::vector<ColorSet> colors;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        pick[static_cast<std::size_t>(i)] = i;
    while (k <= n) {
        ColorSet shared = 0;
        for (int part = 0; part < r; ++part) {
            Vertex first = h.edge(owners[static_cast<std::size_t>(pick[0])]).verts[static_cast<std::size_t>(part)];
            bool same = true;
            for (int i = 1; i < k && same; ++i)
                same = h.edge(owners[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]).verts[static_cast<std::size_t>(part)] == first;
            if (same)
                shared |= ColorSet{1} << part;
        }
        if (shared) {
            edges.emplace_back(pick.begin(), pick.end());
            colors.push_back(shared);
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {UniformHypergraph(n, k, std::move(edges)), EdgeColoring(r, std::move(colors))};
}

} // namespace holes
