#pragma once

#include <string>

#include <json.hpp>

#include "edp/catalog.hpp"
#include "edp/ed_solver.hpp"
#include "edp/galois_module.hpp"
#include "edp/group.hpp"

namespace edp {

using Json = nlohmann::ordered_json;

// Group refs: {"type":"cyclic","order":n} | {"type":"product","factors":[...]} |
// {"type":"table","cayley":[[...]]}. Product elements are numbered i * |b| + j.
GroupPtr group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

// {"group":..., "free_rank":n, "torsion":[...], "action":{"<element>":[[...]]}}. Integers may be
// decimal strings or JSON numbers; torsion may be listed in any order.
GaloisModule module_from_json(const Json& j);
Json module_to_json(const GaloisModule& m);

// {"group":..., "orbits":[[subgroup elements], ...], "m":[...]}
Presentation presentation_from_json(const Json& j);

Json subgroup_to_json(const SubgroupClass& h);
Json result_to_json(const EdResult& r);

/// Parses a file; malformed JSON and schema errors surface as ValidationError.
Json read_json_file(const std::string& path);

}  // namespace edp
