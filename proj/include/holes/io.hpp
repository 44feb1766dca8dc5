#pragma once

#include <string>

#include "json.hpp"

#include "holes/constructions.hpp"
#include "holes/duality.hpp"
#include "holes/hole_numbers.hpp"
#include "holes/witness.hpp"

namespace holes::io {

using Json = nlohmann::ordered_json;

/// `{"n", "k", "edges"}` with edges in stored order. Call normalized() first
/// for the sorted form.
Json to_json(const UniformHypergraph& g);
/// `{"r", "colors"}`, one list of color indices per edge.
Json to_json(const EdgeColoring& coloring);
/// `{"r", "part_sizes", "edges": [{"verts", "mult"}]}`.
Json to_json(const PartiteMultiHypergraph& h);
Json to_json(const PartiteHole& hole);
Json to_json(const CrossFreeFamily& family);
Json to_json(const MonoComponent& component);
Json to_json(const Witness& witness);
Json to_json(const DualCorrespondence& dual);
Json to_json(const PrimalColoring& primal);
Json to_json(const ConstructionReport& report);
Json to_json(const MonoComponentWitness& witness);

/// Parsers throw PreconditionError naming the offending field.
UniformHypergraph hypergraph_from_json(const Json& j);
EdgeColoring coloring_from_json(const Json& j);
PartiteMultiHypergraph multi_from_json(const Json& j);
PartiteHole hole_from_json(const Json& j);
CrossFreeFamily cross_free_from_json(const Json& j);
Witness witness_from_json(const Json& j);

Json read_file(const std::string& path);
/// Writes to stdout when path is empty or "-".
void write_file(const std::string& path, const std::string& text);

const char* to_string(Quantity quantity);
const char* to_string(Relation relation);

} // namespace holes::io
