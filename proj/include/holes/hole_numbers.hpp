#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holes/hypergraph.hpp"
#include "holes/multi_hypergraph.hpp"

namespace holes {

enum class SolverMode
{
    branch_and_bound,
    exhaustive, ///< full enumeration, kept as an oracle for small instances
};

struct SolverOptions
{
    SolverMode mode = SolverMode::branch_and_bound;
    std::uint64_t budget = 1'000'000'000;
};

struct IndependentSet
{
    int size = 0;
    std::vector<Vertex> vertices;
};

/// Pairwise disjoint (or, for the hat variant, arbitrary) vertex sets of a
/// common size such that no edge meets all of them.
struct PartiteHole
{
    std::vector<std::vector<Vertex>> sets;

    int size() const { return sets.empty() ? 0 : static_cast<int>(sets.front().size()); }
    int k() const { return static_cast<int>(sets.size()); }

    friend bool operator==(const PartiteHole&, const PartiteHole&) = default;
};

struct HoleResult
{
    int value = 0;
    std::optional<PartiteHole> hole; ///< empty when value is 0
};

/// Disjoint families of edge copies, given by copy id, no vertex of which is
/// covered by every family.
struct CrossFreeFamily
{
    std::vector<std::vector<std::int64_t>> families;

    int k() const { return static_cast<int>(families.size()); }
    std::int64_t min_size() const;

    friend bool operator==(const CrossFreeFamily&, const CrossFreeFamily&) = default;
};

struct NuResult
{
    std::int64_t value = 0;
    std::optional<CrossFreeFamily> family; ///< empty when value is 0
};

/// Largest vertex set containing no edge. Requires n <= 64.
IndependentSet independence_number(const UniformHypergraph& g, const SolverOptions& options = {});

/// alpha_k(G): the largest k-partite hole. Requires n <= 64 and 2 <= k <= 6.
HoleResult alpha_k(const UniformHypergraph& g, int k, const SolverOptions& options = {});

/// The variant of alpha_k whose sets need not be disjoint. A violating edge
/// must meet the k sets in k distinct vertices, so an independent set repeated
/// k times is a hole.
HoleResult alpha_hat_k(const UniformHypergraph& g, int k, const SolverOptions& options = {});

/// nu_k(H): the largest common size of k disjoint families of edge copies
/// that are not cross-intersecting. Requires 2 <= k <= 6.
NuResult nu_k(const PartiteMultiHypergraph& h, int k, const SolverOptions& options = {});

/// Every (k-1)-tuple of sets larger than p has at least q neighbours, where v
/// is a neighbour when some edge through v meets the sets in k-1 other
/// distinct vertices.
bool is_expander(const UniformHypergraph& g, int p, int q);

/// As is_expander over disjoint tuples, counting the sets' union together
/// with the neighbours outside it.
bool is_outer_expander(const UniformHypergraph& g, int p, int q);

bool is_independent(const UniformHypergraph& g, const std::vector<Vertex>& set);

/// Checks equal nonempty sizes, vertex range, disjointness (unless
/// allow_overlap) and that no edge meets every set in distinct vertices.
bool verify_hole(const UniformHypergraph& g, const PartiteHole& hole, bool allow_overlap = false);

/// Checks that the families are nonempty, pairwise disjoint, use valid copy
/// ids, and leave no vertex covered by all of them.
bool verify_cross_free(const PartiteMultiHypergraph& h, const CrossFreeFamily& family);

} // namespace holes
