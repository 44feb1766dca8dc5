#include "holes/io.hpp"

#include <fstream>
#include <iostream>

namespace holes::io {

namespace {

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw PreconditionError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

template <typename T>
T get(const Json& j, const char* name)
{
    try {
        return field(j, name).get<T>();
    }
    catch (const nlohmann::json::exception&) {
        throw PreconditionError(std::string("field \"") + name + "\" has the wrong type");
    }
}

WitnessTag tag_from_string(const std::string& tag)
{
    for (auto t : {WitnessTag::degree, WitnessTag::multiplicity, WitnessTag::cross_free, WitnessTag::hole})
        if (tag == to_string(t))
            return t;
    throw PreconditionError("unknown witness tag \"" + tag + "\"");
}

} // namespace

Json to_json(const UniformHypergraph& g)
{
    return {{"n", g.n()}, {"k", g.k()}, {"edges", g.edges()}};
}

Json to_json(const EdgeColoring& coloring)
{
    Json colors = Json::array();
    for (ColorSet set : coloring.colors()) {
        Json list = Json::array();
        for (int c = 0; c < coloring.r(); ++c)
            if ((set >> c) & 1U)
                list.push_back(c);
        colors.push_back(std::move(list));
    }
    return {{"r", coloring.r()}, {"colors", std::move(colors)}};
}

Json to_json(const PartiteMultiHypergraph& h)
{
    Json edges = Json::array();
    for (const auto& e : h.edges())
        edges.push_back({{"verts", e.verts}, {"mult", e.mult}});
    return {{"r", h.r()}, {"part_sizes", h.part_sizes()}, {"edges", std::move(edges)}};
}

Json to_json(const PartiteHole& hole) { return {{"sets", hole.sets}}; }

Json to_json(const CrossFreeFamily& family) { return {{"families", family.families}}; }

Json to_json(const MonoComponent& component)
{
    return {{"color", component.color}, {"size", component.size}, {"vertices", component.vertices}};
}

Json to_json(const Witness& witness)
{
    Json payload = std::visit(
        [](const auto& p) -> Json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, DegreeWitness>)
                return {{"vertex", p.vertex}, {"degree", p.degree}, {"edges", p.edges}};
            else if constexpr (std::is_same_v<T, MultiplicityWitness>)
                return {{"edge", p.edge}, {"multiplicity", p.multiplicity}};
            else
                return to_json(p);
        },
        witness.payload);
    return {{"tag", to_string(witness.tag())}, {"payload", std::move(payload)}, {"trace", witness.trace}};
}

Json to_json(const DualCorrespondence& dual)
{
    Json parts = Json::array();
    for (std::size_t v = 0; v < dual.component_of_vertex.size(); ++v) {
        auto [color, component] = dual.component_of_vertex[v];
        parts.push_back({{"vertex", v}, {"color", color}, {"component", dual.labeling.members(color, component)}});
    }
    return {{"multi", to_json(dual.dual)},
            {"copy_of_vertex", dual.copy_of_vertex},
            {"vertex_of_copy", dual.vertex_of_copy},
            {"parts", std::move(parts)}};
}

Json to_json(const PrimalColoring& primal)
{
    return {{"instance", to_json(primal.primal)}, {"coloring", to_json(primal.coloring)}};
}

Json to_json(const ConstructionReport& report)
{
    Json claims = Json::array();
    for (const auto& c : report.claims) {
        Json claim = {{"name", c.name},
                      {"quantity", to_string(c.quantity)},
                      {"relation", to_string(c.relation)},
                      {"value", c.value}};
        if (c.quantity == Quantity::alpha || c.quantity == Quantity::nu)
            claim["k"] = c.k;
        if (!c.vertices.empty())
            claim["vertices"] = c.vertices;
        claim["measured"] = c.measured;
        claim["verified"] = c.verified ? Json(*c.verified) : Json(nullptr);
        claims.push_back(std::move(claim));
    }
    Json out = {{"name", report.name}, {"params", report.params}};
    if (report.primal)
        out["instance"] = to_json(*report.primal);
    if (report.coloring)
        out["coloring"] = to_json(*report.coloring);
    if (report.dual)
        out["multi"] = to_json(*report.dual);
    out["claims"] = std::move(claims);
    out["notes"] = report.notes;
    out["certified"] = report.certified();
    return out;
}

Json to_json(const MonoComponentWitness& witness)
{
    Json out = {{"nu_hat", witness.nu}, {"s", witness.s}, {"case", to_string(witness.which)},
                {"dual_witness", to_json(witness.dual)}};
    if (witness.component)
        out["component"] = to_json(*witness.component);
    if (witness.hole)
        out["hole"] = to_json(*witness.hole);
    return out;
}

UniformHypergraph hypergraph_from_json(const Json& j)
{
    return UniformHypergraph(get<int>(j, "n"), get<int>(j, "k"), get<std::vector<Edge>>(j, "edges"));
}

EdgeColoring coloring_from_json(const Json& j)
{
    const int r = get<int>(j, "r");
    if (r < 1 || r > 32)
        throw PreconditionError("coloring needs 1 <= r <= 32");
    std::vector<ColorSet> colors;
    for (const auto& list : get<std::vector<std::vector<int>>>(j, "colors")) {
        ColorSet set = 0;
        for (int c : list) {
            if (c < 0 || c >= r)
                throw PreconditionError("color " + std::to_string(c) + " out of range");
            set |= ColorSet{1} << c;
        }
        colors.push_back(set);
    }
    return EdgeColoring(r, std::move(colors));
}

PartiteMultiHypergraph multi_from_json(const Json& j)
{
    const int r = get<int>(j, "r");
    auto sizes = get<std::vector<int>>(j, "part_sizes");
    if (static_cast<int>(sizes.size()) != r)
        throw PreconditionError("part_sizes must list r sizes");
    std::vector<MultiEdge> edges;
    for (const auto& e : field(j, "edges"))
        edges.push_back({get<std::vector<Vertex>>(e, "verts"), get<std::int64_t>(e, "mult")});
    return PartiteMultiHypergraph(std::move(sizes), std::move(edges));
}

PartiteHole hole_from_json(const Json& j) { return {get<std::vector<std::vector<Vertex>>>(j, "sets")}; }

CrossFreeFamily cross_free_from_json(const Json& j)
{
    return {get<std::vector<std::vector<std::int64_t>>>(j, "families")};
}

Witness witness_from_json(const Json& j)
{
    const auto& p = field(j, "payload");
    Witness w;
    switch (tag_from_string(get<std::string>(j, "tag"))) {
    case WitnessTag::degree:
        w.payload = DegreeWitness{get<Vertex>(p, "vertex"), get<std::int64_t>(p, "degree"),
                                  get<std::vector<std::size_t>>(p, "edges")};
        break;
    case WitnessTag::multiplicity:
        w.payload = MultiplicityWitness{get<std::size_t>(p, "edge"), get<std::int64_t>(p, "multiplicity")};
        break;
    case WitnessTag::cross_free:
        w.payload = cross_free_from_json(p);
        break;
    case WitnessTag::hole:
        w.payload = hole_from_json(p);
        break;
    }
    if (j.contains("trace"))
        w.trace = get<std::vector<std::string>>(j, "trace");
    return w;
}

Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open " + path);
    try {
        return Json::parse(in);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw PreconditionError("cannot write " + path);
    out << text;
}

const char* to_string(Quantity quantity)
{
    switch (quantity) {
    case Quantity::alpha:
        return "alpha";
    case Quantity::nu:
        return "nu";
    case Quantity::largest_component:
        return "largest_component";
    case Quantity::color_largest_components:
        return "color_largest_components";
    case Quantity::component_sizes:
        return "component_sizes";
    case Quantity::degrees:
        return "degrees";
    case Quantity::max_degree:
        return "max_degree";
    }
    return "?";
}

const char* to_string(Relation relation)
{
    switch (relation) {
    case Relation::equals:
        return "equals";
    case Relation::at_most:
        return "at_most";
    case Relation::at_least:
        return "at_least";
    }
    return "?";
}

} // namespace holes::io
