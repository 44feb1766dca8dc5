#include "holes/multi_hypergraph.hpp"

#include <algorithm>
#include <string>

namespace holes {

PartiteMultiHypergraph::PartiteMultiHypergraph(std::vector<int> part_sizes, std::vector<MultiEdge> edges)
    : part_sizes_(std::move(part_sizes))
    , edges_(std::move(edges))
{
    if (part_sizes_.size() < 2)
        throw PreconditionError("a partite multi-hypergraph needs at least 2 parts");
    for (int i = 0; i < r(); ++i) {
        int size = part_sizes_[static_cast<std::size_t>(i)];
        if (size < 0)
            throw PreconditionError("part sizes must be nonnegative");
        part_offset_.push_back(vertex_count_);
        for (int j = 0; j < size; ++j)
            part_of_.push_back(i);
        vertex_count_ += size;
    }
    degree_.assign(static_cast<std::size_t>(vertex_count_), 0);
    incident_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const MultiEdge& edge = edges_[e];
        if (static_cast<int>(edge.verts.size()) != r())
            throw PreconditionError("edge " + std::to_string(e) + " does not have one vertex per part");
        if (edge.mult < 1)
            throw PreconditionError("edge " + std::to_string(e) + " has multiplicity below 1");
        for (int i = 0; i < r(); ++i) {
            Vertex v = edge.verts[static_cast<std::size_t>(i)];
            if (v < 0 || v >= vertex_count_ || part_of_[static_cast<std::size_t>(v)] != i)
                throw PreconditionError("edge " + std::to_string(e) + " vertex " + std::to_string(v) +
                                        " is not in part " + std::to_string(i));
            degree_[static_cast<std::size_t>(v)] += edge.mult;
            incident_[static_cast<std::size_t>(v)].push_back(e);
        }
        copy_offset_.push_back(copies_);
        copies_ += edge.mult;
    }
    for (auto d : degree_)
        max_degree_ = std::max(max_degree_, d);
}

std::size_t PartiteMultiHypergraph::edge_of_copy(std::int64_t copy) const
{
    if (copy < 0 || copy >= copies_)
        throw PreconditionError("edge copy id " + std::to_string(copy) + " out of range");
    auto it = std::upper_bound(copy_offset_.begin(), copy_offset_.end(), copy);
    return static_cast<std::size_t>(it - copy_offset_.begin()) - 1;
}

Vertex PartiteMultiHypergraph::max_degree_vertex() const
{
    if (vertex_count_ == 0)
        return -1;
    return static_cast<Vertex>(std::max_element(degree_.begin(), degree_.end()) - degree_.begin());
}

std::vector<std::size_t> PartiteMultiHypergraph::copy_owners() const
{
    std::vector<std::size_t> owners;
    owners.reserve(static_cast<std::size_t>(copies_));
    for (std::size_t e = 0; e < edges_.size(); ++e)
        owners.insert(owners.end(), static_cast<std::size_t>(edges_[e].mult), e);
    return owners;
}

} // namespace holes
