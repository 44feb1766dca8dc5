#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "holes/hypergraph.hpp"
#include "holes/multi_hypergraph.hpp"

namespace holes {

/// The dual of a colored hypergraph: part i holds the color-i components,
/// and every vertex of G becomes one edge copy through its r components.
struct DualCorrespondence
{
    UniformHypergraph source;
    EdgeColoring coloring;
    PartiteMultiHypergraph dual;
    std::vector<std::int64_t> copy_of_vertex;             ///< G-vertex -> edge copy id
    std::vector<Vertex> vertex_of_copy;                   ///< edge copy id -> G-vertex
    std::vector<std::pair<int, int>> component_of_vertex; ///< H-vertex -> (color, component id)
    ComponentLabeling labeling;

    /// H-vertex standing for component `component` of color `color`.
    Vertex part_vertex(int color, int component) const { return dual.part_offset(color) + component; }
};

/// Requires a canonical coloring with r >= 2 colors. Distinct edges are
/// ordered by their smallest G-vertex.
DualCorrespondence dual_of_coloring(const UniformHypergraph& g, const EdgeColoring& coloring);

struct PrimalColoring
{
    UniformHypergraph primal; ///< vertex i is edge copy i of H
    EdgeColoring coloring;    ///< possibly several colors per edge
};

/// The k-uniform hypergraph on the edge copies of H in which a k-set is an
/// edge of color i when its copies share their part-i vertex. Requires
/// 2 <= k <= r and at least one edge copy.
PrimalColoring primal_of_dual(const PartiteMultiHypergraph& h, int k);

} // namespace holes
