#include "holes/hole_numbers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "holes/max_flow.hpp"

namespace holes {

namespace {

constexpr int max_hole_parts = 6;
constexpr int max_nu_groups = 6;

using PartMasks = std::array<VertexMask, max_hole_parts>;

void require_mask_size(const UniformHypergraph& g)
{
    if (g.n() > max_mask_vertices)
        throw PreconditionError("exact hole solvers support at most 64 vertices");
}

void require_exhaustive_size(double log2_states)
{
    if (log2_states > 34.0)
        throw PreconditionError("instance too large for exhaustive enumeration");
}

class Budget
{
public:
    explicit Budget(std::uint64_t limit)
        : limit_(limit)
    {
    }

    void tick()
    {
        if (++nodes_ > limit_)
            throw BudgetExceeded(limit_);
    }

private:
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
};

std::vector<Vertex> degree_order(const UniformHypergraph& g)
{
    std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.incident(a).size() > g.incident(b).size(); });
    return order;
}

PartiteHole truncated_hole(const PartMasks& parts, int k, int size)
{
    PartiteHole hole;
    for (int i = 0; i < k; ++i) {
        auto vs = to_vertices(parts[static_cast<std::size_t>(i)]);
        vs.resize(static_cast<std::size_t>(size));
        hole.sets.push_back(std::move(vs));
    }
    return hole;
}

// ---------------------------------------------------------------- independence

class CliqueSearch
{
public:
    CliqueSearch(std::vector<VertexMask> adjacency, Budget& budget)
        : adj_(std::move(adjacency))
        , budget_(budget)
    {
    }

    VertexMask run(VertexMask candidates)
    {
        expand(0, candidates);
        return best_;
    }

private:
    void expand(VertexMask current, VertexMask candidates)
    {
        budget_.tick();
        if (candidates == 0) {
            if (popcount(current) > popcount(best_))
                best_ = current;
            return;
        }
        // greedy coloring gives an upper bound per vertex
        std::vector<std::pair<Vertex, int>> colored;
        VertexMask uncolored = candidates;
        int color = 0;
        while (uncolored) {
            ++color;
            VertexMask available = uncolored;
            while (available) {
                Vertex v = std::countr_zero(available);
                available &= ~adj_[static_cast<std::size_t>(v)] & ~bit(v);
                uncolored &= ~bit(v);
                colored.emplace_back(v, color);
            }
        }
        const int size = popcount(current);
        for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
            if (size + it->second <= popcount(best_))
                return;
            Vertex v = it->first;
            expand(current | bit(v), candidates & adj_[static_cast<std::size_t>(v)]);
            candidates &= ~bit(v);
        }
    }

    std::vector<VertexMask> adj_;
    Budget& budget_;
    VertexMask best_ = 0;
};

class IndependentSearch
{
public:
    IndependentSearch(const UniformHypergraph& g, Budget& budget)
        : g_(g)
        , masks_(g.edge_masks())
        , budget_(budget)
    {
    }

    VertexMask run()
    {
        rec(0, low_bits(g_.n()));
        return best_;
    }

private:
    void rec(VertexMask chosen, VertexMask candidates)
    {
        budget_.tick();
        if (popcount(chosen) + popcount(candidates) <= popcount(best_))
            return;
        if (candidates == 0) {
            best_ = chosen;
            return;
        }
        Vertex v = std::countr_zero(candidates);
        candidates &= ~bit(v);
        VertexMask with = chosen | bit(v);
        VertexMask next = candidates;
        for (std::size_t e : g_.incident(v)) {
            VertexMask rest = masks_[e] & ~with;
            if (popcount(rest) == 1)
                next &= ~rest;
        }
        rec(with, next);
        rec(chosen, candidates);
    }

    const UniformHypergraph& g_;
    std::vector<VertexMask> masks_;
    Budget& budget_;
    VertexMask best_ = 0;
};

// ---------------------------------------------------------------- alpha_k

/// Decides whether a k-partite hole of size target exists. Vertices are
/// decided in static degree order; each joins one part or none. An edge with
/// one undecided vertex whose decided vertices already meet k-1 parts forbids
/// the remaining part for that vertex.
class HoleDecision
{
public:
    HoleDecision(const UniformHypergraph& g, int k, Budget& budget)
        : g_(g)
        , k_(k)
        , masks_(g.edge_masks())
        , order_(degree_order(g))
        , budget_(budget)
    {
    }

    std::optional<PartiteHole> find(int target)
    {
        target_ = target;
        PartMasks parts{};
        PartMasks forbid{};
        found_.reset();
        rec(0, low_bits(g_.n()), 0, parts, forbid);
        return found_;
    }

private:
    bool rec(std::size_t index, VertexMask undecided, VertexMask none, PartMasks& parts, PartMasks& forbid)
    {
        budget_.tick();
        int deficit = 0;
        VertexMask any_candidate = 0;
        bool complete = true;
        for (int i = 0; i < k_; ++i) {
            int size = popcount(parts[static_cast<std::size_t>(i)]);
            int need = target_ - size;
            if (need <= 0)
                continue;
            complete = false;
            VertexMask cand = undecided & ~forbid[static_cast<std::size_t>(i)];
            if (popcount(cand) < need)
                return false;
            deficit += need;
            any_candidate |= cand;
        }
        if (complete) {
            found_ = truncated_hole(parts, k_, target_);
            return true;
        }
        if (popcount(any_candidate) < deficit)
            return false;

        Vertex v = order_[index];
        VertexMask rest = undecided & ~bit(v);
        int used = 0;
        while (used < k_ && parts[static_cast<std::size_t>(used)])
            ++used;
        for (int i = 0; i < std::min(used + 1, k_); ++i) {
            if ((forbid[static_cast<std::size_t>(i)] >> v) & 1U)
                continue;
            if (popcount(parts[static_cast<std::size_t>(i)]) >= target_)
                continue;
            PartMasks saved = forbid;
            parts[static_cast<std::size_t>(i)] |= bit(v);
            if (propagate(v, rest, none, parts, forbid) && rec(index + 1, rest, none, parts, forbid))
                return true;
            parts[static_cast<std::size_t>(i)] &= ~bit(v);
            forbid = saved;
        }
        return rec(index + 1, rest, none | bit(v), parts, forbid);
    }

    bool propagate(Vertex v, VertexMask undecided, VertexMask none, const PartMasks& parts, PartMasks& forbid) const
    {
        for (std::size_t e : g_.incident(v)) {
            VertexMask em = masks_[e];
            if (em & none)
                continue;
            unsigned hit = 0;
            for (int j = 0; j < k_; ++j)
                if (em & parts[static_cast<std::size_t>(j)])
                    hit |= 1U << j;
            const unsigned full = (1U << k_) - 1;
            if (hit == full)
                return false;
            VertexMask open = em & undecided;
            if (popcount(open) == 1 && std::popcount(hit) == k_ - 1) {
                int missing = std::countr_zero(full & ~hit);
                forbid[static_cast<std::size_t>(missing)] |= open;
            }
        }
        return true;
    }

    const UniformHypergraph& g_;
    int k_;
    std::vector<VertexMask> masks_;
    std::vector<Vertex> order_;
    Budget& budget_;
    int target_ = 1;
    std::optional<PartiteHole> found_;
};

/// Whether the vertices, given the sets each belongs to, can represent
/// sets 0..count-1 with distinct vertices, one per set.
bool has_distinct_representatives(const unsigned* membership, int vertices, int count)
{
    // reach has bit u set when the sets in u can be covered so far
    std::uint64_t reach = 1;
    for (int j = 0; j < vertices; ++j) {
        std::uint64_t next = reach;
        for (std::uint64_t todo = reach; todo; todo &= todo - 1) {
            unsigned u = static_cast<unsigned>(std::countr_zero(todo));
            for (unsigned free = membership[j] & ~u; free; free &= free - 1)
                next |= std::uint64_t{1} << (u | (1U << std::countr_zero(free)));
        }
        reach = next;
    }
    return (reach >> ((1U << count) - 1)) & 1U;
}

/// N(S_1..S_m): vertices v lying in an edge e such that e - v meets the m
/// sets with distinct vertices.
VertexMask neighbourhood(const UniformHypergraph& g, const VertexMask* sets, int count)
{
    VertexMask out = 0;
    std::array<unsigned, 64> membership{};
    for (const auto& e : g.edges()) {
        for (std::size_t skip = 0; skip < e.size(); ++skip) {
            if ((out >> e[skip]) & 1U)
                continue;
            int used = 0;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j == skip)
                    continue;
                unsigned m = 0;
                for (int i = 0; i < count; ++i)
                    if ((sets[i] >> e[j]) & 1U)
                        m |= 1U << i;
                membership[static_cast<std::size_t>(used++)] = m;
            }
            if (has_distinct_representatives(membership.data(), used, count))
                out |= bit(e[skip]);
        }
    }
    return out;
}

HoleResult alpha_k_exhaustive(const UniformHypergraph& g, int k, Budget& budget)
{
    const int n = g.n();
    require_exhaustive_size(n * std::log2(static_cast<double>(k)));
    HoleResult best;
    PartMasks best_parts{};
    std::vector<int> assign(static_cast<std::size_t>(n), 0); // 0 = not in the first k-1 sets
    while (true) {
        budget.tick();
        PartMasks sets{};
        VertexMask outside = 0;
        for (Vertex v = 0; v < n; ++v) {
            int a = assign[static_cast<std::size_t>(v)];
            if (a == 0)
                outside |= bit(v);
            else
                sets[static_cast<std::size_t>(a - 1)] |= bit(v);
        }
        VertexMask last = outside & ~neighbourhood(g, sets.data(), k - 1);
        sets[static_cast<std::size_t>(k - 1)] = last;
        int value = popcount(last);
        for (int i = 0; i < k - 1; ++i)
            value = std::min(value, popcount(sets[static_cast<std::size_t>(i)]));
        if (value > best.value) {
            best.value = value;
            best_parts = sets;
        }
        int pos = 0;
        while (pos < n && ++assign[static_cast<std::size_t>(pos)] == k)
            assign[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n)
            break;
    }
    if (best.value > 0)
        best.hole = truncated_hole(best_parts, k, best.value);
    return best;
}

// ---------------------------------------------------------------- alpha_hat_k

/// Decision search for the overlapping variant. Each vertex receives a set of
/// parts, tracked as a bitmask S; allowed[v] is a bitset over the 2^k choices.
class HatDecision
{
public:
    HatDecision(const UniformHypergraph& g, int k, Budget& budget)
        : g_(g)
        , k_(k)
        , full_((1U << k) - 1)
        , masks_(g.edge_masks())
        , order_(degree_order(g))
        , budget_(budget)
    {
        for (unsigned s = 0; s <= full_; ++s)
            all_choices_ |= std::uint64_t{1} << s;
    }

    std::optional<PartiteHole> find(int target)
    {
        target_ = target;
        std::vector<std::uint64_t> allowed(static_cast<std::size_t>(g_.n()), all_choices_);
        std::vector<unsigned> choice(static_cast<std::size_t>(g_.n()), 0);
        PartMasks parts{};
        found_.reset();
        rec(0, low_bits(g_.n()), parts, allowed, choice);
        return found_;
    }

private:
    bool rec(std::size_t index, VertexMask undecided, PartMasks& parts, std::vector<std::uint64_t>& allowed,
             std::vector<unsigned>& choice)
    {
        budget_.tick();
        bool complete = true;
        for (int i = 0; i < k_; ++i) {
            int need = target_ - popcount(parts[static_cast<std::size_t>(i)]);
            if (need <= 0)
                continue;
            complete = false;
            int candidates = 0;
            for_each_vertex(undecided, [&](Vertex w) {
                if (allowed[static_cast<std::size_t>(w)] & with_part_[static_cast<std::size_t>(i)])
                    ++candidates;
            });
            if (candidates < need)
                return false;
        }
        if (complete) {
            found_ = truncated_hole(parts, k_, target_);
            return true;
        }
        if (index == order_.size())
            return false;

        Vertex v = order_[index];
        VertexMask rest = undecided & ~bit(v);
        unsigned closed = 0;
        for (int i = 0; i < k_; ++i)
            if (popcount(parts[static_cast<std::size_t>(i)]) >= target_)
                closed |= 1U << i;
        for (unsigned s = full_; s >= 1; --s) {
            if (!((allowed[static_cast<std::size_t>(v)] >> s) & 1U) || (s & closed))
                continue;
            auto saved = allowed;
            choice[static_cast<std::size_t>(v)] = s;
            for (int i = 0; i < k_; ++i)
                if ((s >> i) & 1U)
                    parts[static_cast<std::size_t>(i)] |= bit(v);
            if (propagate(v, rest, allowed, choice) && rec(index + 1, rest, parts, allowed, choice))
                return true;
            for (int i = 0; i < k_; ++i)
                parts[static_cast<std::size_t>(i)] &= ~bit(v);
            choice[static_cast<std::size_t>(v)] = 0;
            allowed = std::move(saved);
        }
        return rec(index + 1, rest, parts, allowed, choice);
    }

    bool propagate(Vertex v, VertexMask undecided, std::vector<std::uint64_t>& allowed, const std::vector<unsigned>& choice) const
    {
        std::array<unsigned, 64> membership{};
        for (std::size_t e : g_.incident(v)) {
            const Edge& edge = g_.edge(e);
            VertexMask open = masks_[e] & undecided;
            std::size_t slot = 0;
            for (std::size_t j = 0; j < edge.size(); ++j) {
                membership[j] = choice[static_cast<std::size_t>(edge[j])];
                if ((open >> edge[j]) & 1U)
                    slot = j;
            }
            const int size = static_cast<int>(edge.size());
            if (has_distinct_representatives(membership.data(), size, k_))
                return false;
            if (popcount(open) != 1)
                continue;
            auto& options = allowed[static_cast<std::size_t>(edge[slot])];
            for (unsigned s = 1; s <= full_; ++s) {
                if (!((options >> s) & 1U))
                    continue;
                membership[slot] = s;
                if (has_distinct_representatives(membership.data(), size, k_))
                    options &= ~(std::uint64_t{1} << s);
            }
        }
        return true;
    }

    const UniformHypergraph& g_;
    int k_;
    unsigned full_;
    std::vector<VertexMask> masks_;
    std::vector<Vertex> order_;
    Budget& budget_;
    std::uint64_t all_choices_ = 0;
    std::array<std::uint64_t, max_hole_parts> with_part_ = [] {
        std::array<std::uint64_t, max_hole_parts> out{};
        for (int i = 0; i < max_hole_parts; ++i)
            for (unsigned s = 0; s < 64; ++s)
                if ((s >> i) & 1U)
                    out[static_cast<std::size_t>(i)] |= std::uint64_t{1} << s;
        return out;
    }();
    int target_ = 1;
    std::optional<PartiteHole> found_;
};

HoleResult alpha_hat_k_exhaustive(const UniformHypergraph& g, int k, Budget& budget)
{
    const int n = g.n();
    require_exhaustive_size(static_cast<double>(n) * (k - 1));
    HoleResult best;
    PartMasks best_parts{};
    PartMasks sets{};
    const std::uint64_t per_set = std::uint64_t{1} << n;
    std::uint64_t total = 1;
    for (int i = 0; i < k - 1; ++i)
        total *= per_set;
    for (std::uint64_t code = 0; code < total; ++code) {
        budget.tick();
        std::uint64_t rest = code;
        for (int i = 0; i < k - 1; ++i) {
            sets[static_cast<std::size_t>(i)] = rest % per_set;
            rest /= per_set;
        }
        VertexMask last = low_bits(n) & ~neighbourhood(g, sets.data(), k - 1);
        sets[static_cast<std::size_t>(k - 1)] = last;
        int value = popcount(last);
        for (int i = 0; i < k - 1; ++i)
            value = std::min(value, popcount(sets[static_cast<std::size_t>(i)]));
        if (value > best.value) {
            best.value = value;
            best_parts = sets;
        }
    }
    if (best.value > 0)
        best.hole = truncated_hole(best_parts, k, best.value);
    return best;
}

// ---------------------------------------------------------------- nu_k

struct NuInstance
{
    int k = 2;
    unsigned full = 3;
    std::vector<std::int64_t> mult;
    std::vector<std::vector<Vertex>> verts;
};

/// Largest m such that copies with the given supports can be split into k
/// groups of size m, each copy going to a group in its support: by Hall's
/// condition, the minimum over nonempty T of (copies meeting T) / |T|.
std::int64_t supply_value(const std::vector<std::int64_t>& weight, int k)
{
    const unsigned full = (1U << k) - 1;
    std::vector<std::int64_t> inside(weight); // inside[T] = weight of supports contained in T
    for (int i = 0; i < k; ++i)
        for (unsigned s = 0; s <= full; ++s)
            if ((s >> i) & 1U)
                inside[s] += inside[s ^ (1U << i)];
    const std::int64_t total = inside[full];
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (unsigned t = 1; t <= full; ++t) {
        std::int64_t meeting = total - inside[full & ~t];
        best = std::min(best, meeting / std::popcount(t));
    }
    return best;
}

/// Assigns every vertex a group whose family must avoid it; an edge copy may
/// join any group not assigned to its vertices. Only vertices on two or more
/// distinct edges are branched on (plus one vertex of any edge without such
/// a vertex); the rest copy a group already present on their edge.
class NuSearch
{
public:
    NuSearch(const PartiteMultiHypergraph& h, int k, Budget& budget)
        : h_(h)
        , k_(k)
        , full_((1U << k) - 1)
        , budget_(budget)
    {
        const std::size_t m = h.edge_count();
        forbidden_.assign(m, 0);
        std::vector<bool> relevant(static_cast<std::size_t>(h.vertex_count()), false);
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            relevant[static_cast<std::size_t>(v)] = h.incident(v).size() >= 2;
        for (std::size_t e = 0; e < m; ++e) {
            const auto& vs = h.edge(e).verts;
            if (std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return relevant[static_cast<std::size_t>(v)]; }))
                relevant[static_cast<std::size_t>(vs.front())] = true;
        }
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            if (relevant[static_cast<std::size_t>(v)])
                order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        weight_.assign(full_ + 1, 0);
        for (std::size_t e = 0; e < m; ++e)
            weight_[full_] += h.edge(e).mult;
    }

    std::int64_t run()
    {
        rec(0, 0);
        return best_;
    }

    const std::vector<unsigned>& best_forbidden() const { return best_forbidden_; }

private:
    void rec(std::size_t index, int used)
    {
        budget_.tick();
        std::int64_t bound = supply_value(weight_, k_);
        if (bound <= best_)
            return;
        if (index == order_.size()) {
            best_ = bound;
            best_forbidden_ = forbidden_;
            return;
        }
        Vertex v = order_[index];
        for (int g = 0; g < std::min(used + 1, k_); ++g) {
            std::vector<std::pair<std::size_t, unsigned>> changed;
            for (std::size_t e : h_.incident(v)) {
                unsigned before = forbidden_[e];
                unsigned after = before | (1U << g);
                if (after == before)
                    continue;
                std::int64_t mult = h_.edge(e).mult;
                weight_[full_ & ~before] -= mult;
                weight_[full_ & ~after] += mult;
                forbidden_[e] = after;
                changed.emplace_back(e, before);
            }
            rec(index + 1, std::max(used, g + 1));
            for (auto [e, before] : changed) {
                std::int64_t mult = h_.edge(e).mult;
                weight_[full_ & ~forbidden_[e]] -= mult;
                weight_[full_ & ~before] += mult;
                forbidden_[e] = before;
            }
        }
    }

    const PartiteMultiHypergraph& h_;
    int k_;
    unsigned full_;
    Budget& budget_;
    std::vector<Vertex> order_;
    std::vector<unsigned> forbidden_;
    std::vector<std::int64_t> weight_;
    std::int64_t best_ = 0;
    std::vector<unsigned> best_forbidden_;
};

/// Splits copies into k groups of size m, each copy inside its support.
CrossFreeFamily distribute_copies(const PartiteMultiHypergraph& h, int k, const std::vector<unsigned>& forbidden, std::int64_t m)
{
    const unsigned full = (1U << k) - 1;
    const int edges = static_cast<int>(h.edge_count());
    const int source = edges + k;
    const int sink = source + 1;
    MaxFlow flow(sink + 1);
    std::vector<std::vector<std::pair<int, int>>> arcs(h.edge_count());
    for (int e = 0; e < edges; ++e) {
        unsigned support = full & ~forbidden[static_cast<std::size_t>(e)];
        if (support == 0)
            continue;
        flow.add_arc(source, e, h.edge(static_cast<std::size_t>(e)).mult);
        for (int g = 0; g < k; ++g)
            if ((support >> g) & 1U)
                arcs[static_cast<std::size_t>(e)].emplace_back(g, flow.add_arc(e, edges + g, MaxFlow::infinite));
    }
    for (int g = 0; g < k; ++g)
        flow.add_arc(edges + g, sink, m);
    if (flow.run(source, sink) != m * k)
        throw std::logic_error("group assignment flow fell short of the Hall bound");
    CrossFreeFamily family;
    family.families.assign(static_cast<std::size_t>(k), {});
    for (int e = 0; e < edges; ++e) {
        std::int64_t copy = h.copy_offset(static_cast<std::size_t>(e));
        for (auto [g, arc] : arcs[static_cast<std::size_t>(e)])
            for (std::int64_t c = 0; c < flow.flow(arc); ++c)
                family.families[static_cast<std::size_t>(g)].push_back(copy++);
    }
    return family;
}

NuResult nu_k_exhaustive(const PartiteMultiHypergraph& h, int k, Budget& budget)
{
    if (h.vertex_count() > max_mask_vertices)
        throw PreconditionError("exhaustive nu supports at most 64 vertices");
    const auto owners = h.copy_owners();
    const std::size_t copies = owners.size();
    require_exhaustive_size(static_cast<double>(copies) * std::log2(static_cast<double>(k + 1)));
    std::vector<VertexMask> edge_mask;
    for (const auto& e : h.edges())
        edge_mask.push_back(to_mask(e.verts));
    NuResult best;
    std::vector<int> assign(copies, 0); // 0 = unused, g + 1 = family g
    std::vector<int> best_assign;
    while (true) {
        budget.tick();
        std::array<VertexMask, max_nu_groups> cover{};
        std::array<std::int64_t, max_nu_groups> size{};
        for (std::size_t c = 0; c < copies; ++c) {
            int a = assign[c];
            if (a == 0)
                continue;
            cover[static_cast<std::size_t>(a - 1)] |= edge_mask[owners[c]];
            ++size[static_cast<std::size_t>(a - 1)];
        }
        VertexMask common = ~VertexMask{0};
        std::int64_t value = std::numeric_limits<std::int64_t>::max();
        for (int g = 0; g < k; ++g) {
            common &= cover[static_cast<std::size_t>(g)];
            value = std::min(value, size[static_cast<std::size_t>(g)]);
        }
        if (common == 0 && value > best.value) {
            best.value = value;
            best_assign = assign;
        }
        std::size_t pos = 0;
        while (pos < copies && ++assign[pos] == k + 1)
            assign[pos++] = 0;
        if (pos == copies)
            break;
    }
    if (best.value > 0) {
        CrossFreeFamily family;
        family.families.assign(static_cast<std::size_t>(k), {});
        for (std::size_t c = 0; c < copies; ++c) {
            int a = best_assign[c];
            auto& f = family.families[static_cast<std::size_t>(std::max(a, 1) - 1)];
            if (a != 0 && static_cast<std::int64_t>(f.size()) < best.value)
                f.push_back(static_cast<std::int64_t>(c));
        }
        best.family = std::move(family);
    }
    return best;
}

void require_parts(int k, int limit)
{
    if (k < 2 || k > limit)
        throw PreconditionError("k must be in [2, " + std::to_string(limit) + "]");
}

template <class Family>
bool pairwise_disjoint(const std::vector<Family>& sets)
{
    std::vector<typename Family::value_type> all;
    for (const auto& s : sets)
        all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

/// Calls f on every (count)-tuple of (size)-subsets of [0, n), stopping when f returns false.
template <class F>
bool all_tuples(int n, int size, int count, bool disjoint, F&& f)
{
    std::vector<VertexMask> subsets;
    for (VertexMask m = low_bits(size); m && m <= low_bits(n) && popcount(m) == size;) {
        subsets.push_back(m);
        // next mask with the same popcount
        VertexMask c = m & (~m + 1);
        VertexMask r = m + c;
        if (r == 0)
            break;
        m = (((r ^ m) >> 2) / c) | r;
    }
    std::vector<VertexMask> tuple(static_cast<std::size_t>(count));
    auto go = [&](auto&& self, int depth, VertexMask used) -> bool {
        if (depth == count)
            return f(tuple);
        for (VertexMask s : subsets) {
            if (disjoint && (s & used))
                continue;
            tuple[static_cast<std::size_t>(depth)] = s;
            if (!self(self, depth + 1, used | s))
                return false;
        }
        return true;
    };
    return go(go, 0, 0);
}

} // namespace

std::int64_t CrossFreeFamily::min_size() const
{
    if (families.empty())
        return 0;
    std::size_t m = families.front().size();
    for (const auto& f : families)
        m = std::min(m, f.size());
    return static_cast<std::int64_t>(m);
}

IndependentSet independence_number(const UniformHypergraph& g, const SolverOptions& options)
{
    require_mask_size(g);
    Budget budget(options.budget);
    VertexMask best = 0;
    if (options.mode == SolverMode::exhaustive) {
        require_exhaustive_size(g.n());
        const auto masks = g.edge_masks();
        for (VertexMask s = 0; s <= low_bits(g.n()); ++s) {
            budget.tick();
            if (popcount(s) > popcount(best) &&
                std::none_of(masks.begin(), masks.end(), [&](VertexMask em) { return (em & s) == em; }))
                best = s;
            if (s == low_bits(g.n()))
                break;
        }
    } else if (g.k() == 2) {
        std::vector<VertexMask> complement(static_cast<std::size_t>(g.n()), low_bits(g.n()));
        for (Vertex v = 0; v < g.n(); ++v)
            complement[static_cast<std::size_t>(v)] &= ~bit(v);
        for (const auto& e : g.edges()) {
            complement[static_cast<std::size_t>(e[0])] &= ~bit(e[1]);
            complement[static_cast<std::size_t>(e[1])] &= ~bit(e[0]);
        }
        CliqueSearch search(std::move(complement), budget);
        best = search.run(low_bits(g.n()));
    } else {
        IndependentSearch search(g, budget);
        best = search.run();
    }
    return {popcount(best), to_vertices(best)};
}

HoleResult alpha_k(const UniformHypergraph& g, int k, const SolverOptions& options)
{
    require_parts(k, max_hole_parts);
    require_mask_size(g);
    Budget budget(options.budget);
    if (options.mode == SolverMode::exhaustive)
        return alpha_k_exhaustive(g, k, budget);
    HoleResult result;
    HoleDecision search(g, k, budget);
    for (int target = 1; target * k <= g.n(); ++target) {
        auto hole = search.find(target);
        if (!hole)
            break;
        result.value = target;
        result.hole = std::move(hole);
    }
    return result;
}

HoleResult alpha_hat_k(const UniformHypergraph& g, int k, const SolverOptions& options)
{
    require_parts(k, 6);
    require_mask_size(g);
    Budget budget(options.budget);
    if (options.mode == SolverMode::exhaustive)
        return alpha_hat_k_exhaustive(g, k, budget);
    HoleResult result;
    HatDecision search(g, k, budget);
    for (int target = 1; target <= g.n(); ++target) {
        auto hole = search.find(target);
        if (!hole)
            break;
        result.value = target;
        result.hole = std::move(hole);
    }
    return result;
}

NuResult nu_k(const PartiteMultiHypergraph& h, int k, const SolverOptions& options)
{
    require_parts(k, max_nu_groups);
    Budget budget(options.budget);
    if (options.mode == SolverMode::exhaustive)
        return nu_k_exhaustive(h, k, budget);
    NuSearch search(h, k, budget);
    NuResult result;
    result.value = search.run();
    if (result.value > 0)
        result.family = distribute_copies(h, k, search.best_forbidden(), result.value);
    return result;
}

bool is_expander(const UniformHypergraph& g, int p, int q)
{
    require_mask_size(g);
    if (p < 0 || p >= g.n())
        throw PreconditionError("expander parameter p must lie in [0, n)");
    return all_tuples(g.n(), p + 1, g.k() - 1, false, [&](const std::vector<VertexMask>& sets) {
        return popcount(neighbourhood(g, sets.data(), g.k() - 1)) >= q;
    });
}

bool is_outer_expander(const UniformHypergraph& g, int p, int q)
{
    require_mask_size(g);
    if (p < 0 || p >= g.n())
        throw PreconditionError("expander parameter p must lie in [0, n)");
    return all_tuples(g.n(), p + 1, g.k() - 1, true, [&](const std::vector<VertexMask>& sets) {
        VertexMask inside = 0;
        for (VertexMask s : sets)
            inside |= s;
        return popcount(neighbourhood(g, sets.data(), g.k() - 1) | inside) >= q;
    });
}

bool is_independent(const UniformHypergraph& g, const std::vector<Vertex>& set)
{
    std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
    for (Vertex v : set) {
        if (v < 0 || v >= g.n() || in[static_cast<std::size_t>(v)])
            return false;
        in[static_cast<std::size_t>(v)] = true;
    }
    return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[static_cast<std::size_t>(v)]; });
    });
}

bool verify_hole(const UniformHypergraph& g, const PartiteHole& hole, bool allow_overlap)
{
    if (hole.sets.empty() || hole.size() < 1)
        return false;
    std::vector<std::vector<bool>> member;
    for (const auto& s : hole.sets) {
        if (static_cast<int>(s.size()) != hole.size())
            return false;
        std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
        for (Vertex v : s) {
            if (v < 0 || v >= g.n() || in[static_cast<std::size_t>(v)])
                return false;
            in[static_cast<std::size_t>(v)] = true;
        }
        member.push_back(std::move(in));
    }
    if (!allow_overlap && !pairwise_disjoint(hole.sets))
        return false;
    if (hole.k() > max_hole_parts)
        return false;
    std::array<unsigned, 64> membership{};
    for (const auto& e : g.edges()) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            membership[j] = 0;
            for (int i = 0; i < hole.k(); ++i)
                if (member[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[j])])
                    membership[j] |= 1U << i;
        }
        if (has_distinct_representatives(membership.data(), static_cast<int>(e.size()), hole.k()))
            return false;
    }
    return true;
}

bool verify_cross_free(const PartiteMultiHypergraph& h, const CrossFreeFamily& family)
{
    if (family.families.size() < 2)
        return false;
    if (!pairwise_disjoint(family.families))
        return false;
    std::vector<int> covered_by(static_cast<std::size_t>(h.vertex_count()), 0);
    for (const auto& f : family.families) {
        if (f.empty())
            return false;
        std::vector<bool> covers(static_cast<std::size_t>(h.vertex_count()), false);
        for (std::int64_t copy : f) {
            if (copy < 0 || copy >= h.n())
                return false;
            for (Vertex v : h.edge(h.edge_of_copy(copy)).verts)
                covers[static_cast<std::size_t>(v)] = true;
        }
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            covered_by[static_cast<std::size_t>(v)] += covers[static_cast<std::size_t>(v)] ? 1 : 0;
    }
    return std::none_of(covered_by.begin(), covered_by.end(), [&](int c) { return c == family.k(); });
}

} // namespace holes
