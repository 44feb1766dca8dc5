#pragma once

#include <cstdint>
#include <vector>

#include "holes/errors.hpp"
#include "holes/vertex_set.hpp"

namespace holes {

/// A distinct edge of a partite multi-hypergraph: one vertex per part, in
/// part order, with its multiplicity.
struct MultiEdge
{
    std::vector<Vertex> verts;
    std::int64_t mult = 1;

    friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

/// An r-partite r-uniform multi-hypergraph. Vertices are numbered globally
/// with the parts contiguous. Copies of distinct edge e are the edge copies
/// copy_offset(e) .. copy_offset(e) + mult - 1.
class PartiteMultiHypergraph
{
public:
    PartiteMultiHypergraph() = default;
    PartiteMultiHypergraph(std::vector<int> part_sizes, std::vector<MultiEdge> edges);

    int r() const noexcept { return static_cast<int>(part_sizes_.size()); }
    const std::vector<int>& part_sizes() const noexcept { return part_sizes_; }
    int vertex_count() const noexcept { return vertex_count_; }
    int part_offset(int part) const { return part_offset_[static_cast<std::size_t>(part)]; }
    int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }

    const std::vector<MultiEdge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const MultiEdge& edge(std::size_t e) const { return edges_[e]; }

    /// Number of edge copies, counted with multiplicity.
    std::int64_t n() const noexcept { return copies_; }
    std::int64_t copy_offset(std::size_t e) const { return copy_offset_[e]; }
    /// Distinct edge owning the given copy id.
    std::size_t edge_of_copy(std::int64_t copy) const;

    std::int64_t degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
    std::int64_t max_degree() const noexcept { return max_degree_; }
    /// Lowest vertex of maximum degree, or -1 when there are no vertices.
    Vertex max_degree_vertex() const;

    /// Distinct edges through v.
    const std::vector<std::size_t>& incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }

    /// Copy ids of every edge copy in order, each mapped to its distinct edge.
    std::vector<std::size_t> copy_owners() const;

    friend bool operator==(const PartiteMultiHypergraph& a, const PartiteMultiHypergraph& b)
    {
        return a.part_sizes_ == b.part_sizes_ && a.edges_ == b.edges_;
    }

private:
    std::vector<int> part_sizes_;
    std::vector<int> part_offset_;
    std::vector<int> part_of_;
    int vertex_count_ = 0;
    std::vector<MultiEdge> edges_;
    std::vector<std::int64_t> copy_offset_;
    std::int64_t copies_ = 0;
    std::vector<std::int64_t> degree_;
    std::int64_t max_degree_ = 0;
    std::vector<std::vector<std::size_t>> incident_;
};

} // namespace holes
