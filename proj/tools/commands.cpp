#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ncv/build5.hpp"
#include "ncv/build6.hpp"
#include "ncv/cyclic.hpp"
#include "ncv/errors.hpp"
#include "ncv/gadgets.hpp"
#include "ncv/json_io.hpp"
#include "ncv/punctured.hpp"
#include "ncv/solvers.hpp"
#include "ncv/svg.hpp"

namespace ncv::cli {

namespace {

using Clock = std::chrono::steady_clock;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

int emit(const Options& o, Json report, Clock::time_point start, bool pass = true) {
  report["pass"] = pass;
  report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  write_text(o.out, report.dump(2) + "\n");
  return pass ? 0 : 1;
}

Json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Json a = Json::array();
  for (const auto& [u, v] : pairs) a.push_back({u, v});
  return a;
}

Json summary(const Instance& inst) {
  Json s{{"dim", inst.set.dim()}, {"holes", inst.set.holes().size()}, {"witnesses", inst.witnesses.size()}};
  if (inst.meta.contains("kind")) s["kind"] = inst.meta["kind"];
  return s;
}

Capacities capacities(const Options& o) {
  Capacities caps;
  if (o.capacity) caps.clique = caps.chromatic = caps.cover = caps.tournament = caps.rainbow = *o.capacity;
  return caps;
}

std::size_t required(std::size_t v, const char* flag) {
  if (v == 0) throw InvalidInput(std::string(flag) + " is required");
  return v;
}

std::set<Point> as_set(const std::vector<Point>& pts) { return {pts.begin(), pts.end()}; }

Json heights_json(const Construction5& c) {
  Json rows = Json::array();
  for (const auto& [key, h] : c.heights) {
    rows.push_back({{"i", key.first}, {"j", key.second}, {"height", rational_json(h)}});
  }
  return rows;
}

Construction6 construction6_of(const Instance& inst) {
  if (inst.meta.value("kind", "") != "six") throw InvalidInput("instance is not a six construction");
  auto c = build6(tournament_from_json(inst.meta.at("tournament")));
  if (as_set(c.set.holes()) != as_set(inst.set.holes())) {
    throw InvalidInput("instance holes do not match its tournament");
  }
  return c;
}

Construction5 construction5_of(const Instance& inst) {
  if (inst.meta.value("kind", "") != "five") throw InvalidInput("instance is not a five construction");
  auto c = build5(inst.meta.at("n").get<std::size_t>());
  if (as_set(c.set.holes()) != as_set(inst.set.holes())) {
    throw InvalidInput("instance holes do not match the five construction");
  }
  return c;
}

Json walks_json(const CycleSearch& s, std::size_t max_len) {
  return {{"max_len", max_len}, {"sequences_examined", s.sequences}, {"cycles", s.cycles}};
}

int verify_certificate(const Options& o, Clock::time_point start) {
  const Instance inst = instance_from_json(read_json_file(o.instance));
  const Json rep = read_json_file(o.certificate);
  const auto measure = rep.at("measure").get<std::string>();
  const auto value = rep.at("value").get<std::size_t>();
  const Json& cert = rep.at("certificate");
  const std::size_t m = inst.witnesses.size();
  std::vector<std::string> problems;

  if (measure == "omega" || measure == "chi") {
    const Graph g = invisibility_graph(inst.set, inst.witnesses);
    if (measure == "omega") {
      const auto clique = cert.at("clique").get<std::vector<std::size_t>>();
      if (clique.size() != value) problems.push_back("clique size differs from value");
      for (std::size_t a = 0; a < clique.size(); ++a) {
        if (clique[a] >= m) throw InvalidInput("certificate refers to a missing witness");
        for (std::size_t b = a + 1; b < clique.size(); ++b) {
          if (clique[a] == clique[b] || !g.has_edge(clique[a], clique[b])) {
            problems.push_back("pair " + std::to_string(clique[a]) + "," + std::to_string(clique[b]) +
                               " is not an invisibility edge");
          }
        }
      }
    } else {
      const auto coloring = cert.at("coloring").get<std::vector<int>>();
      if (coloring.size() != m) throw InvalidInput("coloring must list one color per witness");
      if (std::set<int>(coloring.begin(), coloring.end()).size() != value) {
        problems.push_back("number of colors differs from value");
      }
      for (const auto& [u, v] : g.edges()) {
        if (coloring[u] == coloring[v]) {
          problems.push_back("edge " + std::to_string(u) + "," + std::to_string(v) + " is monochromatic");
        }
      }
    }
  } else if (measure == "gamma") {
    const auto cover = cover_from_json(cert);
    for (const auto& part : cover.parts) {
      for (auto i : part) {
        if (i >= m) throw InvalidInput("certificate refers to a missing witness");
      }
    }
    if (cover.parts.size() != value) problems.push_back("number of parts differs from value");
    const SubsetPredicate feasible = [&](const std::vector<std::size_t>& s) {
      return hull_hole_free(inst.set, inst.witnesses, s);
    };
    if (!is_valid_cover(m, cover, feasible)) problems.push_back("parts do not form a hole-free cover");
  } else {
    throw InvalidInput("unknown measure '" + measure + "'");
  }
  Json report{{"command", "verify"}, {"check", "certificate"}, {"measure", measure}, {"value", value},
              {"instance", summary(inst)}, {"problems", problems}};
  return emit(o, std::move(report), start, problems.empty());
}

}  // namespace

int construct(const Options& o) {
  Instance inst{PuncturedSet(Disc{Point{0, 0}, 1}, {}), {}, Json::object()};
  if (o.kind == "disc") {
    auto d = build_disc_D(required(o.lambda, "--lambda"));
    if (o.refine) d.witnesses = refine_boundary_witnesses(d.witnesses);
    inst = {std::move(d.set), std::move(d.witnesses),
            Json{{"kind", "disc"},
                 {"lambda", d.lambda},
                 {"ring", rational_json(d.ring)},
                 {"offset", rational_json(d.offset)},
                 {"refined", o.refine}}};
  } else if (o.kind == "six") {
    const auto r = find_triangle_tournament(required(o.n, "--n"), o.max_tries, o.seed);
    auto c = build6(r.tournament);
    auto w = witnesses6(c);
    Json meta{{"kind", "six"},
              {"n", o.n},
              {"seed", o.seed},
              {"trial_seed", r.seed},
              {"tries", r.tries},
              {"max_transitive", r.max_transitive},
              {"threshold", r.threshold},
              {"polytope", polytope_json(c.polytope)},
              {"tournament", tournament_json(c.tournament)},
              {"directed_faces", c.directed_faces}};
    inst = {std::move(c.set), std::move(w), std::move(meta)};
  } else if (o.kind == "five") {
    auto c = build5(required(o.n, "--n"));
    auto w = witnesses5(c);
    Json meta{{"kind", "five"}, {"n", o.n}, {"polytope", polytope_json(c.polytope)}, {"heights", heights_json(c)}};
    inst = {std::move(c.set), std::move(w), std::move(meta)};
  } else {
    throw InvalidInput("unknown construction '" + o.kind + "'");
  }
  write_text(o.out, instance_json(inst).dump(2) + "\n");
  return 0;
}

int solve(const Options& o) {
  const auto start = Clock::now();
  const Instance inst = instance_from_json(read_json_file(o.instance));
  const Capacities caps = capacities(o);
  Json report{{"command", "solve"}, {"measure", o.measure}, {"instance", summary(inst)}};
  if (o.measure == "omega") {
    const auto r = omega_witness(inst.set, inst.witnesses, caps);
    report["value"] = r.size;
    report["certificate"] = {{"clique", r.vertices}};
  } else if (o.measure == "chi") {
    const auto r = chi_witness(inst.set, inst.witnesses, caps);
    report["value"] = r.colors;
    report["certificate"] = {{"coloring", r.coloring}};
  } else if (o.measure == "gamma") {
    const auto r = gamma_witness(inst.set, inst.witnesses, caps);
    report["value"] = r.parts.size();
    report["certificate"] = cover_json(r);
  } else {
    throw InvalidInput("unknown measure '" + o.measure + "'");
  }
  return emit(o, std::move(report), start);
}

int verify(const Options& o) {
  const auto start = Clock::now();
  const Capacities caps = capacities(o);
  Json report{{"command", "verify"}, {"check", o.check}};

  if (o.check == "certificate") {
    if (o.instance.empty() || o.certificate.empty()) {
      throw InvalidInput("--instance and --certificate are required");
    }
    return verify_certificate(o, start);
  }

  if (o.check == "coloring") {
    if (o.instance.empty()) throw InvalidInput("--instance is required");
    const Instance inst = instance_from_json(read_json_file(o.instance));
    report["instance"] = summary(inst);
    if (inst.meta.value("kind", "") == "six") {
      const auto c = construction6_of(inst);
      const auto r = verify_coloring6(c, inst.witnesses);
      report["witnesses"] = r.witnesses;
      report["edges"] = r.edges;
      report["violations"] = pairs_json(r.violations);
      report["gamma_lower_bound"] = rational_json(gamma_lower_bound6(c));
      return emit(o, std::move(report), start, r.violations.empty());
    }
    const auto c = construction5_of(inst);
    const auto r = verify_coloring5(c, inst.witnesses);
    report["witnesses"] = r.witnesses;
    report["edges"] = r.edges;
    report["violations"] = pairs_json(r.violations);
    return emit(o, std::move(report), start, r.violations.empty());
  }

  if (o.check == "acyclic") {
    std::size_t n = o.n;
    if (!o.instance.empty()) n = construction5_of(instance_from_json(read_json_file(o.instance))).n();
    const auto c = build5(required(n, "--n"));
    const auto sys = NeighborSystem::of(c);
    const auto odd = find_odd_cycles(sys, o.max_len);
    const std::size_t even_len = o.max_len - o.max_len % 2;
    const auto even = find_closed_walks(sys, even_len, false, true);
    const auto hr = check_height_ratio(c, o.samples, o.seed);
    report["n"] = n;
    report["holes"] = heights_json(c);
    report["odd_cycles"] = walks_json(odd, o.max_len);
    report["even_cycles"] = walks_json(even, even_len);
    report["height_ratio"] = {{"checks", hr.checks}, {"violations", hr.violations}};
    return emit(o, std::move(report), start, odd.cycles.empty() && even.cycles.empty() && hr.violations.empty());
  }

  if (o.check == "neighborly") {
    const std::size_t d = o.d ? o.d : 6, n = o.n ? o.n : 10;
    const auto p = CyclicPolytope::standard(d, n);
    const bool ok = is_k_neighborly(p, d / 2);
    report["d"] = d;
    report["n"] = n;
    report["k"] = d / 2;
    report["facets"] = p.facets().size();
    return emit(o, std::move(report), start, ok);
  }

  if (o.check == "faces") {
    const std::size_t d = o.d ? o.d : 5, n = o.n ? o.n : 8;
    if (d != 5) throw InvalidInput("face classification is defined for d = 5");
    const auto faces = two_faces_classified(CyclicPolytope::standard(d, n));
    Json list = Json::array();
    for (const auto& [face, types] : faces) {
      Json tags = Json::array();
      for (auto t : types) tags.push_back(std::string(to_string(t)));
      list.push_back({{"face", face}, {"types", std::move(tags)}});
    }
    report["d"] = d;
    report["n"] = n;
    report["faces"] = std::move(list);
    return emit(o, std::move(report), start);
  }

  if (o.check == "gadget") {
    const std::string kind = o.kind.empty() ? "tournament" : o.kind;
    report["kind"] = kind;
    if (kind == "tournament") {
      const std::size_t n = o.n ? o.n : 8;
      const auto r = find_triangle_tournament(n, o.max_tries, o.seed, caps.tournament);
      const auto exact = max_transitive_subtournament(r.tournament, caps.tournament);
      const Rational ub = directed_triangle_union_bound(n, r.threshold);
      report["n"] = n;
      report["seed"] = r.seed;
      report["tries"] = r.tries;
      report["threshold"] = r.threshold;
      report["max_transitive"] = exact.size;
      report["transitive_subset"] = exact.vertices;
      report["union_bound"] = rational_json(ub);
      report["tournament"] = tournament_json(r.tournament);
      return emit(o, std::move(report), start, exact.size < r.threshold);
    }
    if (kind == "rainbow") {
      const std::size_t n = o.n ? o.n : 12;
      const auto r = find_rainbow_coloring(n, o.max_tries, o.seed, o.target, caps.rainbow);
      const auto exact = max_rainbow_free_subset(r.coloring, caps.rainbow);
      report["n"] = n;
      report["seed"] = r.seed;
      report["tries"] = r.tries;
      report["target"] = o.target;
      report["max_rainbow_free"] = exact.size;
      report["rainbow_free_subset"] = exact.vertices;
      report["coloring"] = coloring3_json(r.coloring);
      return emit(o, std::move(report), start, exact.size <= o.target);
    }
    throw InvalidInput("unknown gadget kind '" + kind + "'");
  }

  throw InvalidInput("unknown check '" + o.check + "'");
}

int plot(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance));
  if (!o.face.empty()) {
    IndexSet face;
    std::stringstream ss(o.face);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        face.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InvalidInput("--face expects labels i,j,k");
      }
    }
    write_text(o.out, plot_face6(construction6_of(inst), face));
    return 0;
  }
  PlotOptions opts;
  if (!o.certificate.empty()) {
    const Json rep = read_json_file(o.certificate);
    const auto measure = rep.value("measure", "");
    const Json& cert = rep.at("certificate");
    if (measure == "gamma") {
      opts.cover = cover_from_json(cert);
    } else if (measure == "chi") {
      opts.classes = cert.at("coloring").get<std::vector<int>>();
    } else if (measure == "omega") {
      std::vector<int> cls(inst.witnesses.size(), -1);
      for (auto i : cert.at("clique").get<std::vector<std::size_t>>()) {
        if (i >= cls.size()) throw InvalidInput("certificate refers to a missing witness");
        cls[i] = 0;
      }
      opts.classes = std::move(cls);
    } else {
      throw InvalidInput("certificate has no plottable measure");
    }
  }
  write_text(o.out, plot_planar(inst.set, inst.witnesses, opts));
  return 0;
}

}  // namespace ncv::cli
