#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holes/hole_numbers.hpp"
#include "holes/hypergraph.hpp"
#include "holes/multi_hypergraph.hpp"

namespace holes {

enum class Quantity
{
    alpha,                    ///< alpha_k(primal)
    nu,                       ///< nu_k(dual)
    largest_component,        ///< largest monochromatic component of (primal, coloring)
    color_largest_components, ///< largest component of each color
    component_sizes,          ///< every component of every color
    degrees,                  ///< dual degrees of the listed vertices
    max_degree,               ///< Delta(dual)
};

enum class Relation
{
    equals,
    at_most,
    at_least,
};

/// A claimed value together with what certify() measured for it. Relations
/// apply to every measured entry.
struct Claim
{
    std::string name;
    Quantity quantity = Quantity::alpha;
    Relation relation = Relation::equals;
    std::int64_t value = 0;
    int k = 0;                    ///< for alpha and nu
    std::vector<Vertex> vertices; ///< for degrees
    std::vector<std::int64_t> measured;
    std::optional<bool> verified;
};

struct ConstructionReport
{
    std::string name;
    std::map<std::string, double> params;
    std::optional<UniformHypergraph> primal;
    std::optional<PartiteMultiHypergraph> dual;
    std::optional<EdgeColoring> coloring;
    std::vector<Claim> claims;
    std::map<std::string, double> notes;

    /// True when every claim has been measured and holds.
    bool certified() const;
};

/// Measures every claim with the exact solvers. Throws VerificationError
/// naming the first claim that fails.
void certify(ConstructionReport& report, const SolverOptions& options = {});

/// Measures the claims without throwing.
void measure(ConstructionReport& report, const SolverOptions& options = {});

bool holds(Relation relation, std::int64_t measured, std::int64_t value);

/// Row cliques in color 0 and column cliques in color 1 over an s x t grid of
/// blocks of n/(st) vertices; edges inside a block get both colors. Block
/// A_ij holds vertices (i t + j) n/(st) onward. Requires 1 <= s <= t and
/// st | n. alpha_2 is computed exactly (n <= 64).
ConstructionReport construct_grid(int s, int t, int n, const SolverOptions& options = {});

/// The r-uniform layered hypergraph on V_0, V_1..V_r, V_{r+1} (in vertex
/// order, |V_0| = n - (r+1)a) with its multi-coloring. Requires r >= 2,
/// n >= r and 0 <= a <= n/(r+2).
ConstructionReport construct_layered(int r, int a, int n);

/// The dual form: part i holds u_i (its first vertex) and v_i. Requires
/// r >= 2, n >= r and 0 <= a <= n/(r+2).
ConstructionReport construct_layered_dual(int r, int a, int n);

/// K_{n-a}^k on the first n-a vertices plus a isolated vertices, with an
/// optimal r-coloring of the clique. Requires 2 <= k, 0 <= a <= n/k and
/// n - a >= k.
ConstructionReport construct_isolated_clique(int n, int a, int k, int r = 2, const SolverOptions& options = {});

/// Color i goes to every edge missing X_i. Requires a valid disjoint hole
/// of G with 2 <= r <= k sets.
EdgeColoring hole_based_coloring(const UniformHypergraph& g, const PartiteHole& hole);

bool is_prime(int q);

/// Affine plane coloring of K_n with q + 1 colors. Groups are the q^2 runs
/// of n/q^2 consecutive vertices; group x q + y is the point (x, y). Color m
/// < q is slope m, color q is vertical, and edges inside a group get color
/// 0. Requires q prime and q^2 | n.
ConstructionReport affine_plane_coloring(int q, int n);

/// Colors a graph so that every color-i component has at most
/// (n - Cr)/(r-1) + C vertices. A is split into r runs A_1..A_r of C
/// vertices in the given order; the rest is split into (r-1)^2 classes with
/// the first class holding every neighbour of A. Throws PreconditionError
/// naming the violated condition.
EdgeColoring capped_coloring(const UniformHypergraph& g, const std::vector<Vertex>& a, int r);

/// Bose Steiner triple system on n = 3m vertices, vertex i m + x standing
/// for (x, i). Requires n = 3 (mod 6).
UniformHypergraph bose_sts(int n);

/// True when every pair of vertices lies in exactly one edge.
bool is_steiner_triple_system(const UniformHypergraph& g);

/// H^k(n, p): k-subsets in lexicographic order, each kept when a uniform
/// draw from SplitMix64(seed) is below p.
UniformHypergraph sample_binomial_hypergraph(int n, int k, double p, std::uint64_t seed);

/// Natural log of the expected number of k-partite holes of size a in
/// H^k(n, p), or -infinity when no k disjoint a-sets fit.
long double log_expected_holes(int n, int k, double p, int a);

/// Smallest a >= 1 for which the expected number of k-partite holes of size
/// a is below 1. Requires 0 < p < 1.
int first_moment_alpha_bound(int n, int k, double p);

} // namespace holes
