#pragma once

// Deliberately naive reference implementations used to cross-check the
// solvers on tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "holes/hypergraph.hpp"
#include "holes/multi_hypergraph.hpp"

namespace oracle {

using holes::Edge;
using holes::UniformHypergraph;

/// Largest component over all colors, by repeated flood fill.
inline int largest_component(int n, const std::vector<Edge>& edges, const std::vector<int>& color, int r)
{
    int best = n > 0 ? 1 : 0;
    for (int c = 0; c < r; ++c) {
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (comp[static_cast<std::size_t>(s)] >= 0)
                continue;
            std::vector<int> stack{s};
            comp[static_cast<std::size_t>(s)] = s;
            int size = 0;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++size;
                for (std::size_t i = 0; i < edges.size(); ++i) {
                    if (color[i] != c || std::find(edges[i].begin(), edges[i].end(), u) == edges[i].end())
                        continue;
                    for (int w : edges[i])
                        if (comp[static_cast<std::size_t>(w)] < 0) {
                            comp[static_cast<std::size_t>(w)] = s;
                            stack.push_back(w);
                        }
                }
            }
            best = std::max(best, size);
        }
    }
    return best;
}

/// mc_r by trying every coloring.
inline int mc(const UniformHypergraph& g, int r)
{
    const std::size_t m = g.edge_count();
    std::vector<int> color(m, 0);
    int best = g.n();
    while (true) {
        best = std::min(best, largest_component(g.n(), g.edges(), color, r));
        std::size_t pos = 0;
        while (pos < m && ++color[pos] == r)
            color[pos++] = 0;
        if (pos == m)
            break;
    }
    return best;
}

/// alpha_k by assigning every vertex to one of k sets or none.
inline int alpha(const UniformHypergraph& g, int k)
{
    const int n = g.n();
    std::vector<int> part(static_cast<std::size_t>(n), 0);
    int best = 0;
    while (true) {
        std::vector<int> size(static_cast<std::size_t>(k) + 1, 0);
        for (int p : part)
            ++size[static_cast<std::size_t>(p)];
        int value = *std::min_element(size.begin() + 1, size.end());
        if (value > best) {
            bool ok = true;
            for (const auto& e : g.edges()) {
                std::vector<bool> hit(static_cast<std::size_t>(k) + 1, false);
                for (int v : e)
                    hit[static_cast<std::size_t>(part[static_cast<std::size_t>(v)])] = true;
                if (std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; })) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                best = value;
        }
        int pos = 0;
        while (pos < n && ++part[static_cast<std::size_t>(pos)] == k + 1)
            part[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n)
            break;
    }
    return best;
}

/// nu_k by assigning every edge copy to one of k families or none.
inline std::int64_t nu(const holes::PartiteMultiHypergraph& h, int k)
{
    const auto owners = h.copy_owners();
    const std::size_t copies = owners.size();
    std::vector<int> group(copies, 0);
    std::int64_t best = 0;
    while (true) {
        std::vector<std::int64_t> size(static_cast<std::size_t>(k) + 1, 0);
        std::vector<std::vector<bool>> covers(static_cast<std::size_t>(k) + 1,
                                              std::vector<bool>(static_cast<std::size_t>(h.vertex_count()), false));
        for (std::size_t c = 0; c < copies; ++c) {
            ++size[static_cast<std::size_t>(group[c])];
            for (int v : h.edge(owners[c]).verts)
                covers[static_cast<std::size_t>(group[c])][static_cast<std::size_t>(v)] = true;
        }
        std::int64_t value = *std::min_element(size.begin() + 1, size.end());
        if (value > best) {
            bool free = true;
            for (int v = 0; v < h.vertex_count() && free; ++v) {
                bool all = true;
                for (int g = 1; g <= k; ++g)
                    all = all && covers[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)];
                free = !all;
            }
            if (free)
                best = value;
        }
        std::size_t pos = 0;
        while (pos < copies && ++group[pos] == k + 1)
            group[pos++] = 0;
        if (pos == copies)
            break;
    }
    return best;
}

inline UniformHypergraph random_hypergraph(std::mt19937_64& rng, int n, int k, double p)
{
    std::vector<Edge> edges;
    std::bernoulli_distribution keep(p);
    std::function<void(Edge&, int)> go = [&](Edge& cur, int start) {
        if (static_cast<int>(cur.size()) == k) {
            if (keep(rng))
                edges.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            go(cur, v + 1);
            cur.pop_back();
        }
    };
    Edge cur;
    go(cur, 0);
    return UniformHypergraph(n, k, edges);
}

inline holes::PartiteMultiHypergraph random_multi(std::mt19937_64& rng, int r, int per_part, int distinct, int max_mult)
{
    std::vector<int> sizes(static_cast<std::size_t>(r), per_part);
    std::vector<holes::MultiEdge> edges;
    std::uniform_int_distribution<int> pick(0, per_part - 1);
    std::uniform_int_distribution<int> mult(1, max_mult);
    for (int e = 0; e < distinct; ++e) {
        holes::MultiEdge edge;
        for (int i = 0; i < r; ++i)
            edge.verts.push_back(i * per_part + pick(rng));
        bool dup = std::any_of(edges.begin(), edges.end(), [&](const holes::MultiEdge& f) { return f.verts == edge.verts; });
        if (dup)
            continue;
        edge.mult = mult(rng);
        edges.push_back(edge);
    }
    return holes::PartiteMultiHypergraph(sizes, edges);
}

} // namespace oracle
