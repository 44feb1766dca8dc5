#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "holes/acceptance.hpp"
#include "holes/constructions.hpp"
#include "holes/duality.hpp"
#include "holes/io.hpp"
#include "holes/sweep.hpp"
#include "holes/witness.hpp"

using namespace holes;
using io::Json;

namespace {

struct Common
{
    std::string in;
    std::string out = "-";
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
};

void add_common(CLI::App* cmd, Common& c, bool needs_input = true)
{
    if (needs_input)
        cmd->add_option("--in", c.in, "input JSON file")->required();
    cmd->add_option("--out", c.out, "output file, - for stdout");
    cmd->add_option("--seed", c.seed, "RNG seed");
    cmd->add_option("--budget", c.budget, "search node budget");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
}

SolverOptions solver(const Common& c)
{
    SolverOptions options;
    if (c.budget)
        options.budget = *c.budget;
    return options;
}

/// Accepts a bare instance or any document carrying one under `key`.
const Json& section(const Json& j, const char* key) { return j.is_object() && j.contains(key) ? j.at(key) : j; }

UniformHypergraph load_hypergraph(const std::string& path) { return io::hypergraph_from_json(section(io::read_file(path), "instance")); }

PartiteMultiHypergraph load_multi(const std::string& path) { return io::multi_from_json(section(io::read_file(path), "multi")); }

EdgeColoring load_coloring(const std::string& coloring_path, const std::string& instance_path)
{
    if (!coloring_path.empty())
        return io::coloring_from_json(section(io::read_file(coloring_path), "coloring"));
    const Json doc = io::read_file(instance_path);
    if (!doc.is_object() || !doc.contains("coloring"))
        throw PreconditionError("no coloring given: pass --coloring or an input with a \"coloring\" field");
    return io::coloring_from_json(doc.at("coloring"));
}

void emit(const Common& c, const Json& j, const std::string& csv_header = {}, const std::string& csv_row = {})
{
    if (c.format == "csv") {
        if (csv_header.empty())
            throw PreconditionError("this subcommand has no CSV form");
        io::write_file(c.out, csv_header + "\n" + csv_row + "\n");
        return;
    }
    io::write_file(c.out, j.dump(2) + "\n");
}

Json hole_json(const HoleResult& result) { return result.hole ? io::to_json(*result.hole) : Json(nullptr); }

int run_alpha(const Common& c, std::optional<int> k, bool hat)
{
    const auto g = load_hypergraph(c.in);
    const int kk = k.value_or(g.k());
    const auto result = hat ? alpha_hat_k(g, kk, solver(c)) : alpha_k(g, kk, solver(c));
    const bool verified = !result.hole || verify_hole(g, *result.hole, hat);
    if (!verified)
        throw VerificationError("returned hole fails verification");
    const char* name = hat ? "alpha_hat" : "alpha";
    emit(c, {{"quantity", name}, {"k", kk}, {"value", result.value}, {"hole", hole_json(result)}, {"verified", verified}},
         "quantity,k,value", std::string(name) + "," + std::to_string(kk) + "," + std::to_string(result.value));
    return 0;
}

int run_nu(const Common& c, std::optional<int> k)
{
    const auto h = load_multi(c.in);
    const int kk = k.value_or(h.r());
    const auto result = nu_k(h, kk, solver(c));
    const bool verified = !result.family || verify_cross_free(h, *result.family);
    if (!verified)
        throw VerificationError("returned cross-free family fails verification");
    emit(c,
         {{"quantity", "nu"},
          {"k", kk},
          {"value", result.value},
          {"family", result.family ? io::to_json(*result.family) : Json(nullptr)},
          {"verified", verified}},
         "quantity,k,value", "nu," + std::to_string(kk) + "," + std::to_string(result.value));
    return 0;
}

int run_mc(const Common& c, int r, const std::string& coloring_path)
{
    const auto g = load_hypergraph(c.in);
    if (!coloring_path.empty()) {
        const auto coloring = canonicalize(load_coloring(coloring_path, c.in));
        const auto component = largest_mono_component(g, coloring);
        emit(c, {{"quantity", "largest_mono_component"}, {"r", coloring.r()}, {"value", component.size}, {"component", io::to_json(component)}},
             "quantity,r,value", "largest_mono_component," + std::to_string(coloring.r()) + "," + std::to_string(component.size));
        return 0;
    }
    McOptions options;
    if (c.budget)
        options.budget = *c.budget;
    const auto result = mc_exact(g, r, options);
    emit(c,
         {{"quantity", "mc"},
          {"r", r},
          {"value", result.value},
          {"coloring", io::to_json(EdgeColoring::from_indices(r, result.coloring))},
          {"nodes", result.nodes}},
         "quantity,r,value", "mc," + std::to_string(r) + "," + std::to_string(result.value));
    return 0;
}

int run_dualize(const Common& c, const std::string& coloring_path)
{
    const auto g = load_hypergraph(c.in);
    const auto coloring = canonicalize(load_coloring(coloring_path, c.in));
    emit(c, io::to_json(dual_of_coloring(g, coloring)));
    return 0;
}

int run_primalize(const Common& c, int k)
{
    emit(c, io::to_json(primal_of_dual(load_multi(c.in), k)));
    return 0;
}

struct ConstructArgs
{
    std::string name;
    int n = 0, k = 2, r = 2, a = 0, s = 1, t = 1, q = 2;
    double p = 0.5;
    bool certify = false;
    std::string coloring_out;
};

ConstructionReport build(const ConstructArgs& a, const Common& c)
{
    if (a.name == "grid")
        return construct_grid(a.s, a.t, a.n, solver(c));
    if (a.name == "layered")
        return construct_layered(a.r, a.a, a.n);
    if (a.name == "layered-dual")
        return construct_layered_dual(a.r, a.a, a.n);
    if (a.name == "isolated-clique")
        return construct_isolated_clique(a.n, a.a, a.k, a.r, solver(c));
    if (a.name == "affine")
        return affine_plane_coloring(a.q, a.n);
    ConstructionReport report;
    report.name = a.name;
    if (a.name == "bose-sts") {
        report.primal = bose_sts(a.n);
        report.params = {{"n", a.n}};
        report.notes["steiner"] = is_steiner_triple_system(*report.primal);
        return report;
    }
    if (a.name == "binomial") {
        const std::uint64_t seed = c.seed.value_or(0);
        report.primal = sample_binomial_hypergraph(a.n, a.k, a.p, seed);
        report.params = {{"n", a.n}, {"k", a.k}, {"p", a.p}, {"seed", static_cast<double>(seed)}};
        return report;
    }
    throw PreconditionError("unknown construction \"" + a.name
                            + "\" (grid, layered, layered-dual, isolated-clique, affine, bose-sts, binomial)");
}

int run_construct(const ConstructArgs& a, const Common& c)
{
    auto report = build(a, c);
    if (a.certify)
        certify(report, solver(c));
    if (!a.coloring_out.empty()) {
        if (!report.coloring)
            throw PreconditionError("construction \"" + a.name + "\" has no coloring");
        io::write_file(a.coloring_out, io::to_json(*report.coloring).dump(2) + "\n");
    }
    emit(c, io::to_json(report));
    return 0;
}

/// Accepts 2, r-1, r, optionally prefixed with "s=".
int parse_case(std::string text, int r)
{
    if (text.rfind("s=", 0) == 0)
        text = text.substr(2);
    if (text == "r")
        return r;
    if (text == "r-1")
        return r - 1;
    try {
        std::size_t used = 0;
        const int s = std::stoi(text, &used);
        if (used == text.size())
            return s;
    }
    catch (const std::exception&) {
    }
    throw PreconditionError("--case must be 2, r-1 or r, got \"" + text + "\"");
}

int run_witness(const Common& c, const std::string& which, std::optional<std::int64_t> nu_hat)
{
    const auto h = load_multi(c.in);
    const int s = parse_case(which, h.r());
    const std::int64_t nu = nu_hat ? *nu_hat : nu_k(h, s, solver(c)).value;
    const auto t = ThresholdTable::lookup(s, h.r());
    if (!t)
        throw PreconditionError("no proven case for s = " + std::to_string(s) + ", r = " + std::to_string(h.r()));
    const auto w = degree_witness(h, s, nu);
    const bool verified = verify_witness(h, w);
    Json j = io::to_json(w);
    j["s"] = s;
    j["r"] = h.r();
    j["case"] = to_string(t->which);
    j["nu_hat"] = nu;
    j["n"] = h.n();
    j["bound"] = t->bound_text();
    j["verified"] = verified;
    emit(c, j);
    if (!verified)
        throw VerificationError("witness fails verification");
    return 0;
}

int run_mono_witness(const Common& c, const std::string& coloring_path, int s, std::optional<std::int64_t> nu_hat)
{
    const auto g = load_hypergraph(c.in);
    const auto coloring = canonicalize(load_coloring(coloring_path, c.in));
    const std::int64_t nu = nu_hat ? *nu_hat : alpha_k(g, s, solver(c)).value;
    const auto w = mono_component_witness(g, coloring, s, nu);
    bool verified = w.hole ? verify_hole(g, *w.hole) : w.component.has_value();
    if (w.component) {
        const auto labeling = color_components(g, coloring);
        const auto& members = w.component->vertices;
        verified = verified && static_cast<int>(members.size()) == w.component->size
            && std::all_of(members.begin(), members.end(), [&](Vertex v) {
                   return labeling.label[static_cast<std::size_t>(w.component->color)][static_cast<std::size_t>(v)]
                       == labeling.label[static_cast<std::size_t>(w.component->color)][static_cast<std::size_t>(members.front())];
               });
    }
    Json j = io::to_json(w);
    j["verified"] = verified;
    emit(c, j);
    if (!verified)
        throw VerificationError("mono-component witness fails verification");
    return 0;
}

int run_sweep_cmd(const Common& c, int threads, bool timing)
{
    auto spec = sweep_from_json(io::read_file(c.in));
    if (c.seed && spec.seeds.empty())
        spec.seeds = {*c.seed};
    if (c.budget)
        spec.budget = *c.budget;
    if (threads > 0)
        spec.threads = threads;
    const auto records = run_sweep(spec);
    if (c.format == "csv") {
        io::write_file(c.out, to_csv(records, timing));
        return 0;
    }
    Json rows = Json::array();
    for (const auto& rec : records) {
        Json row = to_json(rec);
        if (!timing)
            row.erase("wall_ms");
        rows.push_back(std::move(row));
    }
    Json medians = Json::array();
    for (const auto& m : cell_medians(records))
        medians.push_back({{"n", m.n},
                           {"d", m.d},
                           {"median_alpha", m.exact ? Json(m.median_alpha) : Json(nullptr)},
                           {"first_moment", m.first_moment ? Json(*m.first_moment) : Json(nullptr)},
                           {"exact", m.exact},
                           {"total", m.total}});
    io::write_file(c.out, Json{{"records", std::move(rows)}, {"medians", std::move(medians)}}.dump(2) + "\n");
    return 0;
}

int run_verify(const Common& c, const std::string& level, const std::vector<int>& only, bool as_json)
{
    const auto results = run_acceptance(level == "full" ? SuiteLevel::full : SuiteLevel::fast, only);
    bool ok = true;
    std::ostringstream text;
    if (c.format == "csv")
        text << "id,name,passed,seconds,limit_seconds\n";
    Json rows = Json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        if (c.format == "csv")
            text << r.id << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << ',' << r.seconds << ','
                 << r.limit_seconds << '\n';
        else
            text << format_result(r) << '\n';
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"warnings", r.warnings}});
    }
    io::write_file(c.out, as_json ? rows.dump(2) + "\n" : text.str());
    if (!ok)
        throw VerificationError("acceptance criteria failed");
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partite holes, monochromatic components and their duals"};
    app.require_subcommand(1);

    Common c;
    std::optional<int> k;
    int r = 2;
    std::string coloring_path;
    std::optional<std::int64_t> nu_hat;
    int s = 2;
    ConstructArgs construct;
    std::string which = "2";
    int threads = 0;
    bool timing = false;
    std::string level = "fast";
    std::vector<int> only;

    auto* alpha = app.add_subcommand("alpha", "largest k-partite hole alpha_k");
    add_common(alpha, c);
    alpha->add_option("-k,--k", k, "number of parts (default: uniformity)");

    auto* alpha_hat = app.add_subcommand("alpha-hat", "largest k-partite hole with overlapping sets");
    add_common(alpha_hat, c);
    alpha_hat->add_option("-k,--k", k, "number of parts (default: uniformity)");

    auto* nu = app.add_subcommand("nu", "dual hole number nu_k of a partite multi-hypergraph");
    add_common(nu, c);
    nu->add_option("-k,--k", k, "number of families (default: r)");

    auto* mc = app.add_subcommand("mc", "exact mc_r, or the largest component of a given coloring");
    add_common(mc, c);
    mc->add_option("-r,--r", r, "number of colors")->check(CLI::Range(1, 32));
    mc->add_option("--coloring", coloring_path, "coloring JSON; skips the search");

    auto* dualize = app.add_subcommand("dualize", "multi-hypergraph of a colored hypergraph");
    add_common(dualize, c);
    dualize->add_option("--coloring", coloring_path, "coloring JSON (default: the input's \"coloring\")");

    auto* primalize = app.add_subcommand("primalize", "colored hypergraph of a partite multi-hypergraph");
    add_common(primalize, c);
    primalize->add_option("-k,--k", s, "uniformity of the primal")->default_val(2);

    auto* cons = app.add_subcommand("construct", "build an extremal construction");
    add_common(cons, c, false);
    cons->add_option("name", construct.name, "grid, layered, layered-dual, isolated-clique, affine, bose-sts, binomial")
        ->required();
    cons->add_option("--n", construct.n, "vertices (edges for layered-dual)")->required();
    cons->add_option("--k", construct.k, "uniformity");
    cons->add_option("--r", construct.r, "colors");
    cons->add_option("--a", construct.a, "hole size");
    cons->add_option("--s", construct.s, "grid rows");
    cons->add_option("--t", construct.t, "grid columns");
    cons->add_option("--q", construct.q, "affine plane order");
    cons->add_option("--p", construct.p, "edge probability");
    cons->add_flag("--certify", construct.certify, "measure every claim; exit 4 if one fails");
    cons->add_option("--coloring", construct.coloring_out, "also write the coloring here");

    auto* witness = app.add_subcommand("witness", "degree witness or refutation of a claimed nu");
    add_common(witness, c);
    witness->add_option("--case", which, "s = 2, r-1 or r");
    witness->add_option("--nu-hat", nu_hat, "claimed bound (default: exact nu_s)");

    auto* mono = app.add_subcommand("mono-witness", "large monochromatic component or a partite hole");
    add_common(mono, c);
    mono->add_option("--coloring", coloring_path, "coloring JSON (default: the input's \"coloring\")");
    mono->add_option("--s", s, "hole parts")->default_val(2);
    mono->add_option("--nu-hat", nu_hat, "claimed alpha_s (default: exact)");

    auto* sweep = app.add_subcommand("sweep", "random-instance experiment grid");
    add_common(sweep, c);
    sweep->add_option("--threads", threads, "worker threads (default: hardware)");
    sweep->add_flag("--timing", timing, "include wall_ms");

    auto* verify = app.add_subcommand("verify", "acceptance battery");
    add_common(verify, c, false);
    verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--only", only, "criterion ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*alpha)
            return run_alpha(c, k, false);
        if (*alpha_hat)
            return run_alpha(c, k, true);
        if (*nu)
            return run_nu(c, k);
        if (*mc)
            return run_mc(c, r, coloring_path);
        if (*dualize)
            return run_dualize(c, coloring_path);
        if (*primalize)
            return run_primalize(c, s);
        if (*cons)
            return run_construct(construct, c);
        if (*witness)
            return run_witness(c, which, nu_hat);
        if (*mono)
            return run_mono_witness(c, coloring_path, s, nu_hat);
        if (*sweep)
            return run_sweep_cmd(c, threads, timing);
        if (*verify)
            return run_verify(c, level, only, verify->count("--format") > 0 && c.format == "json");
    }
    catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return 2;
    }
    catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 3;
    }
    catch (const VerificationError& e) {
        std::cerr << "verification: " << e.what() << '\n';
        return 4;
    }
    catch (const DriverError& e) {
        std::cerr << "driver: " << e.what() << '\n' << e.dump() << '\n';
        return 4;
    }
    return 0;
}
