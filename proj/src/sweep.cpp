#include "holes/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

#include "holes/rng.hpp"

namespace holes {

namespace {

const char* generator_name(Generator g) { return g == Generator::binomial ? "binomial" : "bose_sts"; }

std::string number(double x)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return ec == std::errc() ? std::string(buf, end) : std::to_string(x);
}

template <typename T>
std::string optional_cell(const std::optional<T>& value)
{
    return value ? std::to_string(*value) : std::string();
}

struct Cell
{
    int n;
    double d;
    std::uint64_t seed;
};

std::vector<Cell> cells_of(const SweepSpec& spec)
{
    std::vector<Cell> cells;
    const std::vector<double> ds = spec.generator == Generator::binomial ? spec.d : std::vector<double>{0};
    const std::vector<std::uint64_t> seeds =
        spec.generator == Generator::binomial ? spec.seeds : std::vector<std::uint64_t>{0};
    for (int n : spec.n)
        for (double d : ds)
            for (std::uint64_t seed : seeds)
                cells.push_back({n, d, seed});
    return cells;
}

std::string witness_outcome(const UniformHypergraph& g, std::uint64_t seed, int alpha)
{
    SplitMix64 rng = SplitMix64(seed).split();
    std::vector<int> colors;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        colors.push_back(static_cast<int>(rng.below(2)));
    try {
        auto w = mono_component_witness(g, EdgeColoring::from_indices(2, colors), 2, alpha);
        if (w.component)
            return "component:" + std::to_string(w.component->size);
        return "hole:" + std::to_string(w.hole->size());
    }
    catch (const PreconditionError&) {
        return "precondition";
    }
    catch (const DriverError&) {
        return "driver_error";
    }
}

ExperimentRecord run_cell(const SweepSpec& spec, const Cell& cell)
{
    const auto start = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.generator = generator_name(spec.generator);
    rec.n = cell.n;
    rec.seed = cell.seed;
    UniformHypergraph g;
    if (spec.generator == Generator::binomial) {
        rec.k = spec.k;
        rec.r = spec.witness ? 2 : 0;
        rec.d = cell.d;
        rec.p = std::min(1.0, cell.d / std::pow(static_cast<double>(cell.n), spec.k - 1));
        g = sample_binomial_hypergraph(cell.n, spec.k, rec.p, cell.seed);
        if (spec.first_moment && rec.p > 0 && rec.p < 1)
            rec.first_moment = first_moment_alpha_bound(cell.n, spec.k, rec.p);
    }
    else {
        rec.k = 3;
        g = bose_sts(cell.n);
    }
    rec.edges = g.edge_count();
    rec.alpha_status = "skipped";
    if (spec.alpha) {
        try {
            rec.alpha = alpha_k(g, rec.k, {SolverMode::branch_and_bound, spec.budget}).value;
            rec.alpha_status = "exact";
        }
        catch (const BudgetExceeded&) {
            rec.alpha_status = "budget";
        }
    }
    if (spec.generator == Generator::bose_sts && rec.alpha)
        rec.mc_lower = rec.n - 2 * *rec.alpha;
    if (spec.witness && rec.k == 2)
        rec.outcome = rec.alpha ? witness_outcome(g, cell.seed, *rec.alpha) : "skipped";
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

} // namespace

SweepSpec sweep_from_json(const io::Json& j)
{
    SweepSpec spec;
    try {
        const auto gen = j.value("generator", std::string("binomial"));
        if (gen == "binomial")
            spec.generator = Generator::binomial;
        else if (gen == "bose_sts")
            spec.generator = Generator::bose_sts;
        else
            throw PreconditionError("unknown generator \"" + gen + "\"");
        spec.n = j.value("n", std::vector<int>{});
        spec.k = j.value("k", spec.generator == Generator::bose_sts ? 3 : 2);
        spec.d = j.value("d", std::vector<double>{});
        spec.seeds = j.value("seeds", std::vector<std::uint64_t>{});
        spec.budget = j.value("budget", spec.budget);
        spec.threads = j.value("threads", 0);
        if (j.contains("analyses")) {
            auto analyses = j.at("analyses").get<std::vector<std::string>>();
            auto has = [&](const char* name) { return std::find(analyses.begin(), analyses.end(), name) != analyses.end(); };
            spec.alpha = has("alpha") || has("witness");
            spec.first_moment = has("first_moment");
            spec.witness = has("witness");
        }
    }
    catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed sweep description: ") + e.what());
    }
    if (spec.k < 2 || (spec.generator == Generator::bose_sts && spec.k != 3))
        throw PreconditionError("sweep needs k >= 2 (k = 3 for bose_sts)");
    return spec;
}

std::vector<ExperimentRecord> run_sweep(const SweepSpec& spec)
{
    const auto cells = cells_of(spec);
    std::vector<ExperimentRecord> records(cells.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1U, std::min<unsigned>(spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                                                              : std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(cells.size())));
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            records[i] = run_cell(spec, cells[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    return records;
}

std::vector<CellMedian> cell_medians(const std::vector<ExperimentRecord>& records)
{
    std::vector<CellMedian> out;
    std::map<std::pair<int, double>, std::vector<int>> values;
    for (const auto& rec : records) {
        auto key = std::make_pair(rec.n, rec.d);
        auto it = std::find_if(out.begin(), out.end(), [&](const CellMedian& m) { return m.n == rec.n && m.d == rec.d; });
        if (it == out.end()) {
            out.push_back({rec.n, rec.d, 0, rec.first_moment, 0, 0});
            it = out.end() - 1;
        }
        ++it->total;
        if (rec.alpha) {
            ++it->exact;
            values[key].push_back(*rec.alpha);
        }
    }
    for (auto& m : out) {
        auto& v = values[{m.n, m.d}];
        if (v.empty())
            continue;
        std::sort(v.begin(), v.end());
        const std::size_t mid = v.size() / 2;
        m.median_alpha = v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
    }
    return out;
}

std::string to_csv(const std::vector<ExperimentRecord>& records, bool with_wall_ms)
{
    std::ostringstream out;
    out << "generator,n,k,r,d,p,seed,rng,edges,alpha,alpha_status,first_moment,mc_lower,outcome";
    if (with_wall_ms)
        out << ",wall_ms";
    out << '\n';
    for (const auto& rec : records) {
        out << rec.generator << ',' << rec.n << ',' << rec.k << ',' << rec.r << ',' << number(rec.d) << ','
            << number(rec.p) << ',' << rec.seed << ',' << SplitMix64::algorithm << ',' << rec.edges << ','
            << optional_cell(rec.alpha) << ',' << rec.alpha_status << ',' << optional_cell(rec.first_moment) << ','
            << optional_cell(rec.mc_lower) << ',' << rec.outcome;
        if (with_wall_ms)
            out << ',' << number(rec.wall_ms);
        out << '\n';
    }
    for (const auto& m : cell_medians(records)) {
        const auto& first = *std::find_if(records.begin(), records.end(),
                                          [&](const ExperimentRecord& r) { return r.n == m.n && r.d == m.d; });
        out << first.generator << ',' << m.n << ',' << first.k << ',' << first.r << ',' << number(m.d) << ','
            << number(first.p) << ",median," << SplitMix64::algorithm << ",,"
            << (m.exact ? number(m.median_alpha) : std::string()) << ",median of " << m.exact << '/' << m.total << ','
            << optional_cell(m.first_moment) << ",,";
        if (with_wall_ms)
            out << ',';
        out << '\n';
    }
    return out.str();
}

io::Json to_json(const ExperimentRecord& rec)
{
    io::Json j = {{"generator", rec.generator}, {"n", rec.n},       {"k", rec.k},
                  {"r", rec.r},                 {"d", rec.d},       {"p", rec.p},
                  {"seed", rec.seed},           {"rng", SplitMix64::algorithm}, {"edges", rec.edges}};
    j["alpha"] = rec.alpha ? io::Json(*rec.alpha) : io::Json(nullptr);
    j["alpha_status"] = rec.alpha_status;
    j["first_moment"] = rec.first_moment ? io::Json(*rec.first_moment) : io::Json(nullptr);
    j["mc_lower"] = rec.mc_lower ? io::Json(*rec.mc_lower) : io::Json(nullptr);
    j["outcome"] = rec.outcome;
    j["wall_ms"] = rec.wall_ms;
    return j;
}

} // namespace holes
