#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "holes/errors.hpp"
#include "holes/vertex_set.hpp"

namespace holes {

using Edge = std::vector<Vertex>;

/// A k-uniform hypergraph on the labeled vertices 0..n-1.
///
/// Edges keep their input order (colorings index into it); each edge is
/// stored sorted. Construction rejects edges of the wrong size, out of range
/// or repeated vertices, and duplicate edges.
class UniformHypergraph
{
public:
    UniformHypergraph() = default;
    UniformHypergraph(int n, int k, std::vector<Edge> edges);

    static UniformHypergraph complete(int n, int k);
    static UniformHypergraph empty(int n, int k) { return UniformHypergraph(n, k, {}); }

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const Edge& edge(std::size_t i) const { return edges_[i]; }

    /// Indices of the edges containing v.
    const std::vector<std::size_t>& incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }

    bool has_edge(const Edge& e) const;

    /// Edge bitmasks; only available when n <= 64.
    std::vector<VertexMask> edge_masks() const;

    friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    int k_ = 2;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// Bitmask over colors 0..31.
using ColorSet = std::uint32_t;

inline constexpr int max_colors = 32;

/// One nonempty color set per edge. Canonical colorings use singletons.
class EdgeColoring
{
public:
    EdgeColoring() = default;
    EdgeColoring(int r, std::vector<ColorSet> colors);

    /// Singleton coloring from one color index per edge.
    static EdgeColoring from_indices(int r, const std::vector<int>& colors);

    int r() const noexcept { return r_; }
    const std::vector<ColorSet>& colors() const noexcept { return colors_; }
    std::size_t size() const noexcept { return colors_.size(); }
    ColorSet at(std::size_t edge) const { return colors_[edge]; }
    bool has(std::size_t edge, int color) const { return (colors_[edge] >> color) & 1U; }
    bool is_canonical() const;

    /// Throws PreconditionError if this coloring does not match g's edge list.
    void check_matches(const UniformHypergraph& g) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int r_ = 1;
    std::vector<ColorSet> colors_;
};

/// Per-color partition of all vertices into components of that color's
/// 2-shadow. Component ids are assigned in order of smallest member vertex.
struct ComponentLabeling
{
    int n = 0;
    std::vector<std::vector<int>> label;      ///< label[color][vertex]
    std::vector<std::vector<int>> sizes;      ///< sizes[color][component]

    int component_count(int color) const { return static_cast<int>(sizes[static_cast<std::size_t>(color)].size()); }
    std::vector<Vertex> members(int color, int component) const;
};

struct MonoComponent
{
    int color = 0;
    int size = 0;
    std::vector<Vertex> vertices;
};

std::set<std::pair<Vertex, Vertex>> two_shadow(const UniformHypergraph& g, const std::vector<std::size_t>& edge_filter);
std::set<std::pair<Vertex, Vertex>> two_shadow(const UniformHypergraph& g);

ComponentLabeling color_components(const UniformHypergraph& g, const EdgeColoring& coloring);

/// Largest component over all colors; ties go to the lowest color, then the
/// component with the smallest minimum vertex.
MonoComponent largest_mono_component(const UniformHypergraph& g, const EdgeColoring& coloring);

/// Keeps the least color of every color set.
EdgeColoring canonicalize(const EdgeColoring& coloring);

struct McOptions
{
    std::uint64_t budget = 100'000'000;
    /// Cut branches whose partial coloring already has a component at least
    /// as large as the incumbent. Disable only to cross-check the pruning.
    bool bound_pruning = true;
};

struct McResult
{
    int value = 0;
    std::vector<int> coloring; ///< an optimal singleton coloring, one color index per edge
    std::uint64_t nodes = 0;
};

/// mc_r(G): the minimum over all r-colorings of the largest monochromatic
/// component. Throws BudgetExceeded when the search visits more than
/// options.budget nodes.
McResult mc_exact(const UniformHypergraph& g, int r, const McOptions& options = {});

/// Sorts edges lexicographically, permuting the coloring along with them.
std::pair<UniformHypergraph, std::optional<EdgeColoring>> normalized(const UniformHypergraph& g,
                                                                     const std::optional<EdgeColoring>& coloring);

} // namespace holes
