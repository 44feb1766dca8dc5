#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holes/io.hpp"

namespace holes {

enum class Generator
{
    binomial, ///< H^k(n, p) with p = d / n^{k-1}
    bose_sts, ///< Bose Steiner triple system; k = 3, d and seed unused
};

struct SweepSpec
{
    Generator generator = Generator::binomial;
    std::vector<int> n;
    int k = 2;
    std::vector<double> d;
    std::vector<std::uint64_t> seeds;
    bool alpha = true;        ///< exact alpha_k
    bool first_moment = true; ///< first-moment bound (binomial only)
    bool witness = false;     ///< mono-component witness on a seeded 2-coloring (k = 2)
    std::uint64_t budget = 50'000'000;
    int threads = 0; ///< 0 uses the hardware concurrency
};

/// Every field is a function of (generator, params, seed) except wall_ms.
struct ExperimentRecord
{
    std::string generator;
    int n = 0;
    int k = 0;
    int r = 0;
    double d = 0;
    double p = 0;
    std::uint64_t seed = 0;
    std::size_t edges = 0;
    std::optional<int> alpha; ///< empty when the solver ran out of budget or was skipped
    std::string alpha_status; ///< exact, budget, skipped
    std::optional<int> first_moment;
    std::optional<int> mc_lower; ///< n - 2 alpha_3 for Steiner triple systems
    std::string outcome;
    double wall_ms = 0;
};

/// Reads `{"generator", "n", "k", "d", "seeds", "analyses", "budget"}`.
SweepSpec sweep_from_json(const io::Json& j);

/// Cells in spec order (n, then d, then seed); cells run in parallel.
std::vector<ExperimentRecord> run_sweep(const SweepSpec& spec);

/// Fixed columns, one row per record, then one median row per (n, d) cell
/// over the records with an exact alpha. wall_ms is appended only on request.
std::string to_csv(const std::vector<ExperimentRecord>& records, bool with_wall_ms = false);

io::Json to_json(const ExperimentRecord& record);

/// Median of exact alpha over the seeds of each (n, d) cell, in spec order.
struct CellMedian
{
    int n = 0;
    double d = 0;
    double median_alpha = 0;
    std::optional<int> first_moment;
    int exact = 0;
    int total = 0;
};

std::vector<CellMedian> cell_medians(const std::vector<ExperimentRecord>& records);

} // namespace holes
