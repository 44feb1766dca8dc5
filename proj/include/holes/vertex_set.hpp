#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace holes {

using Vertex = int;

/// Vertex subset of a hypergraph with at most 64 vertices, one bit per vertex.
using VertexMask = std::uint64_t;

inline constexpr int max_mask_vertices = 64;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

constexpr int popcount(VertexMask m) noexcept { return std::popcount(m); }

constexpr VertexMask low_bits(int n) noexcept
{
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

template <class F>
constexpr void for_each_vertex(VertexMask m, F&& f)
{
    while (m) {
        f(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
}

inline std::vector<Vertex> to_vertices(VertexMask m)
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for_each_vertex(m, [&](Vertex v) { out.push_back(v); });
    return out;
}

inline VertexMask to_mask(const std::vector<Vertex>& vs)
{
    VertexMask m = 0;
    for (Vertex v : vs)
        m |= bit(v);
    return m;
}

} // namespace holes
