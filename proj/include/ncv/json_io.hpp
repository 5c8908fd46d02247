#pragma once

#include <string>

#include <json.hpp>

#include "ncv/cyclic.hpp"
#include "ncv/geometry.hpp"
#include "ncv/punctured.hpp"
#include "ncv/solvers.hpp"
#include "ncv/tournament.hpp"

namespace ncv {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
/// Accepts "p/q", "p", or a JSON integer. Throws InvalidInput otherwise.
Rational rational_from_json(const Json& j);

Json point_json(const Point& p);
Point point_from_json(const Json& j);

/// A punctured set, its witnesses, and free-form construction metadata.
struct Instance {
  PuncturedSet set;
  WitnessSet witnesses;
  Json meta = Json::object();
};

Json instance_json(const Instance& inst);
/// Validates the geometry and the witnesses.
Instance instance_from_json(const Json& j);

/// {"n": n, "upper": [[...], ...]}: row u lists v = u+1..n-1 with 1 for u -> v.
Json tournament_json(const Tournament& t);
Tournament tournament_from_json(const Json& j);

/// Same layout with colors 1..3.
Json coloring3_json(const EdgeColoring3& c);
EdgeColoring3 coloring3_from_json(const Json& j);

Json polytope_json(const CyclicPolytope& p);
CyclicPolytope polytope_from_json(const Json& j);

Json cover_json(const CoverCertificate& c);
CoverCertificate cover_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace ncv
