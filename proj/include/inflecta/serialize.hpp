#pragma once

#include <string>

#include "json.hpp"

#include "inflecta/permutation.hpp"
#include "inflecta/poly.hpp"
#include "inflecta/solver.hpp"
#include "inflecta/tracker.hpp"

namespace inflecta {

using json = nlohmann::json;

// Complex numbers travel as [re, im] pairs; curves as sparse monomial records
// so files stay readable; permutations as plain image arrays. Every *_from_json
// throws std::invalid_argument with a field name on malformed input, so CLI
// errors point at the offending key.

json complex_to_json(const cplx& z);
cplx complex_from_json(const json& j);

json curve_to_json(const HomPoly3& curve);
HomPoly3 curve_from_json(const json& j);

json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j);

json chart_to_json(const CoordChange& chart);
CoordChange chart_from_json(const json& j);

json fiber_to_json(const InflectionSet& set);
InflectionSet fiber_from_json(const json& j);

// provenance (when nonempty) names the generating recipe, e.g. a pencil family
json path_to_json(const CoeffPath& path, const std::string& provenance = "");
CoeffPath path_from_json(const json& j);

json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

// order as a decimal string, transitivity flags, one cycle type per generator
json group_report(const std::vector<Permutation>& gens, int n);

void write_json_file(const json& j, const std::string& path);
json read_json_file(const std::string& path);

} // namespace inflecta
