#include "ncv/json_io.hpp"

#include <fstream>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<Point> points_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a point list");
  std::vector<Point> out;
  out.reserve(j.size());
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

template <class Get>
Json upper_json(std::size_t n, Get get) {
  Json rows = Json::array();
  for (std::size_t u = 0; u < n; ++u) {
    Json row = Json::array();
    for (std::size_t v = u + 1; v < n; ++v) row.push_back(get(u, v));
    rows.push_back(std::move(row));
  }
  return Json{{"n", n}, {"upper", std::move(rows)}};
}

template <class Set>
std::size_t upper_from_json(const Json& j, Set set) {
  const auto n = field(j, "n").get<std::size_t>();
  const auto& rows = field(j, "upper");
  if (!rows.is_array() || rows.size() != n) throw InvalidInput("upper array must have n rows");
  for (std::size_t u = 0; u < n; ++u) {
    if (!rows[u].is_array() || rows[u].size() != n - u - 1) throw InvalidInput("malformed upper row");
    for (std::size_t v = u + 1; v < n; ++v) set(u, v, rows[u][v - u - 1].get<int>());
  }
  return n;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InvalidInput("expected a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(rational_json(c));
  return a;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a coordinate array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Point(std::move(c));
}

Json instance_json(const Instance& inst) {
  Json ambient;
  if (const auto* poly = std::get_if<Polytope>(&inst.set.ambient())) {
    ambient = {{"type", "polytope"}, {"vertices", points_json(poly->vertices)}};
  } else {
    const auto& disc = std::get<Disc>(inst.set.ambient());
    ambient = {{"type", "disc"}, {"center", point_json(disc.center)}, {"radius2", rational_json(disc.radius2)}};
  }
  return Json{{"ambient", std::move(ambient)},
              {"holes", points_json(inst.set.holes())},
              {"witnesses", points_json(inst.witnesses)},
              {"meta", inst.meta}};
}

Instance instance_from_json(const Json& j) {
  try {
    const auto& a = field(j, "ambient");
    const auto type = field(a, "type").get<std::string>();
    ConvexAmbient ambient;
    if (type == "polytope") {
      ambient = Polytope{points_from_json(field(a, "vertices"))};
    } else if (type == "disc") {
      ambient = Disc{point_from_json(field(a, "center")), rational_from_json(field(a, "radius2"))};
    } else {
      throw InvalidInput("unknown ambient type '" + type + "'");
    }
    PuncturedSet set(std::move(ambient), points_from_json(field(j, "holes")));
    WitnessSet w = j.contains("witnesses") ? points_from_json(j.at("witnesses")) : WitnessSet{};
    validate_witnesses(set, w);
    Json meta = j.contains("meta") ? j.at("meta") : Json::object();
    return {std::move(set), std::move(w), std::move(meta)};
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

Json tournament_json(const Tournament& t) {
  return upper_json(t.size(), [&](std::size_t u, std::size_t v) { return t.beats(u, v) ? 1 : 0; });
}

Tournament tournament_from_json(const Json& j) {
  try {
    Tournament t(field(j, "n").get<std::size_t>());
    upper_from_json(j, [&](std::size_t u, std::size_t v, int bit) {
      if (bit != 0 && bit != 1) throw InvalidInput("tournament entries are 0 or 1");
      bit ? t.orient(u, v) : t.orient(v, u);
    });
    return t;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed tournament: ") + e.what());
  }
}

Json coloring3_json(const EdgeColoring3& c) {
  return upper_json(c.size(), [&](std::size_t u, std::size_t v) { return c.color(u, v); });
}

EdgeColoring3 coloring3_from_json(const Json& j) {
  try {
    EdgeColoring3 c(field(j, "n").get<std::size_t>());
    upper_from_json(j, [&](std::size_t u, std::size_t v, int col) { c.set_color(u, v, col); });
    return c;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed coloring: ") + e.what());
  }
}

Json polytope_json(const CyclicPolytope& p) {
  Json params = Json::array();
  for (const auto& t : p.params()) params.push_back(rational_json(t));
  return Json{{"d", p.dim()}, {"params", std::move(params)}};
}

CyclicPolytope polytope_from_json(const Json& j) {
  try {
    std::vector<Rational> params;
    for (const auto& t : field(j, "params")) params.push_back(rational_from_json(t));
    return CyclicPolytope(field(j, "d").get<std::size_t>(), std::move(params));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed polytope: ") + e.what());
  }
}

Json cover_json(const CoverCertificate& c) { return Json{{"parts", c.parts}}; }

CoverCertificate cover_from_json(const Json& j) {
  try {
    return {field(j, "parts").get<std::vector<std::vector<std::size_t>>>()};
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed cover: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace ncv
