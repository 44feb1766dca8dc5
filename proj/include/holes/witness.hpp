#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "holes/duality.hpp"
#include "holes/hole_numbers.hpp"
#include "holes/multi_hypergraph.hpp"

namespace holes {

/// A multiset of edge copies given by a count per distinct edge.
using EdgeBag = std::vector<std::int64_t>;

std::int64_t bag_size(const EdgeBag& bag);

/// Bag holding every copy of every edge.
EdgeBag full_bag(const PartiteMultiHypergraph& h);

/// Bag of the given copy ids; throws PreconditionError on bad or repeated ids.
EdgeBag bag_of_copies(const PartiteMultiHypergraph& h, const std::vector<std::int64_t>& copies);

struct DegreeWitness
{
    Vertex vertex = -1;
    std::int64_t degree = 0;
    std::vector<std::size_t> edges; ///< distinct edges through the vertex

    friend bool operator==(const DegreeWitness&, const DegreeWitness&) = default;
};

struct MultiplicityWitness
{
    std::size_t edge = 0;
    std::int64_t multiplicity = 0;

    friend bool operator==(const MultiplicityWitness&, const MultiplicityWitness&) = default;
};

enum class WitnessTag
{
    degree,
    multiplicity,
    cross_free,
    hole,
};

const char* to_string(WitnessTag tag);

struct Witness
{
    std::variant<DegreeWitness, MultiplicityWitness, CrossFreeFamily, PartiteHole> payload;
    std::vector<std::string> trace;

    WitnessTag tag() const { return static_cast<WitnessTag>(payload.index()); }
};

/// Checks a Degree, Multiplicity or CrossFree witness against H.
bool verify_witness(const PartiteMultiHypergraph& h, const Witness& witness);

/// Checks a Hole witness against G.
bool verify_witness(const UniformHypergraph& g, const Witness& witness);

enum class DriverCase
{
    bipartite,  ///< s = 2, r = 2
    tripartite, ///< s = 2, r = 3
    r_partite,  ///< s = r >= 3
    shadow,     ///< s = r - 1, r >= 4
    weak,       ///< s = 2, r >= 4
};

const char* to_string(DriverCase which);

/// Proven precondition on the claimed hole bound and the degree it
/// guarantees, both compared in exact integer arithmetic.
struct Threshold
{
    int s = 2;
    int r = 2;
    DriverCase which = DriverCase::bipartite;

    bool precondition(std::int64_t n, std::int64_t nu) const;
    bool degree_ok(std::int64_t degree, std::int64_t n, std::int64_t nu) const;
    std::string precondition_text() const;
    std::string bound_text() const;
};

class ThresholdTable
{
public:
    static std::optional<Threshold> lookup(int s, int r);
    /// Every proven case for r colors.
    static std::vector<Threshold> entries(int r);
};

/// Outcome of the splitting lemmas. When concentrated, `vertex` lies in the
/// part and meets every family F_j in `incidences[j]` >= |F_j| - a_j nu
/// copies. Otherwise `families` is a tuple, each member drawn from
/// F[origin[k]], that is not cross-intersecting inside the part.
struct SplitOutcome
{
    bool concentrated = false;
    Vertex vertex = -1;
    std::vector<std::int64_t> incidences;
    std::vector<EdgeBag> families;
    std::vector<int> origin;
};

/// Requires |F_1| >= 3 a_1 nu + 1 and |F_j| >= 2 a_j nu + 1 for j >= 2.
/// Either concentration or two replaced families F_1' (>= a_1 nu + 1) and
/// F_j' (>= a_j nu + 1) with the rest unchanged. With a single family the
/// split outcome is two disjoint halves of F_1, each of size >= a_1 nu + 1.
SplitOutcome split_or_concentrate(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                                  const std::vector<std::int64_t>& weights, std::int64_t nu);

/// Requires |F_j| >= 3 a_j nu + 1 for every j. Every family in a split
/// outcome has at least a_j nu + 1 copies.
SplitOutcome split_or_concentrate_simple(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                                         const std::vector<std::int64_t>& weights, std::int64_t nu);

bool verify_split(const PartiteMultiHypergraph& h, int part, const std::vector<EdgeBag>& families,
                  const std::vector<std::int64_t>& weights, std::int64_t nu, const SplitOutcome& outcome);

/// Degree >= delta nu + 1 or a cross-free family of s families (two when
/// the remaining copies cannot fill s) of size nu + 1. Requires
/// 3^r delta nu <= n.
Witness high_degree_vertex(const PartiteMultiHypergraph& h, int s, std::int64_t delta, std::int64_t nu);

/// Multiplicity >= nu + 1, a degree witness for the case of s, or a
/// cross-free family. Requires r >= 3, s in {2, r-1, r} (s = r-1 needs
/// r >= 4) and Delta(H) >= 3^{C(r+1,2)} nu + 1.
Witness fat_edge_or_degree(const PartiteMultiHypergraph& h, int s, std::int64_t nu);

/// Degree >= n - 2 nu or cross-free. Requires r = 2 and 6 nu < n.
Witness bipartite_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu);

/// Degree >= n/2 - 2 nu or cross-free. Requires r = 3 and 3^9 nu <= n.
Witness tripartite_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu);

/// Degree >= n - (r-1) nu or cross-free for nu_r. Requires r >= 3 and
/// 3^{C(r+1,2)+r} nu <= n.
Witness r_partite_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu);

/// Degree >= (r-1)n/r - C(r,2) nu or cross-free for nu_{r-1}. Requires
/// r >= 4 and 3^{C(r+1,2)+r} nu <= n.
Witness shadow_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu);

/// Degree >= (n - nu)/r or cross-free. Requires r >= 4 and
/// 3^{C(r+1,2)+r} nu <= n.
Witness weak_degree_witness(const PartiteMultiHypergraph& h, std::int64_t nu);

/// Dispatches to the driver for (s, r) from the threshold table.
Witness degree_witness(const PartiteMultiHypergraph& h, int s, std::int64_t nu);

struct MonoComponentWitness
{
    std::int64_t nu = 0;
    int s = 2;
    DriverCase which = DriverCase::bipartite;
    Witness dual;                     ///< witness produced on the dual
    std::optional<MonoComponent> component; ///< set for a degree witness
    std::optional<PartiteHole> hole;  ///< set for a refutation
};

/// Dualizes (G, chi), runs the driver for (s, r) and maps the outcome back:
/// a monochromatic component of the guaranteed size, or an s-partite hole
/// of G with sets of size nu + 1. Requires a canonical coloring and s <= k.
MonoComponentWitness mono_component_witness(const UniformHypergraph& g, const EdgeColoring& coloring, int s,
                                            std::int64_t nu);

} // namespace holes
