#include "ncv/build6.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "ncv/errors.hpp"
#include "ncv/gadgets.hpp"
#include "ncv/solvers.hpp"

namespace ncv {

namespace {

using Bary = std::array<Rational, 3>;

const Rational kThird(1, 3);

ColorBW color_on_edge(const Tournament& t, int u, int v, const Rational& from_u) {
  const bool u_tail = t.beats(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  return edge_color6(u_tail ? from_u : 1 - from_u);
}

// Boundary point of the triangle where the ray from the barycenter through
// q (q != barycenter) leaves it; `sign` -1 walks the opposite way.
Bary ray_exit(const Bary& q, int sign) {
  Bary dir;
  for (int i = 0; i < 3; ++i) dir[i] = sign * (q[i] - kThird);
  std::optional<Rational> mu;
  for (int i = 0; i < 3; ++i) {
    if (dir[i] < 0) {
      const Rational m = kThird / -dir[i];
      if (!mu || m < *mu) mu = m;
    }
  }
  Bary out;
  for (int i = 0; i < 3; ++i) out[i] = kThird + *mu * dir[i];
  return out;
}

ColorBW boundary_color(const Construction6& c, const IndexSet& face, const Bary& q) {
  int zeros = 0, zero_at = -1;
  for (int i = 0; i < 3; ++i) {
    if (q[i] == 0) {
      ++zeros;
      zero_at = i;
    }
  }
  if (zeros != 1) return ColorBW::Black;
  const int i = (zero_at + 1) % 3, j = (zero_at + 2) % 3;
  return color_on_edge(c.tournament, face[i], face[j], q[j]);
}

Point from_bary(const CyclicPolytope& p, const IndexSet& face, const Bary& q) {
  return q[0] * p.vertex(face[0]) + q[1] * p.vertex(face[1]) + q[2] * p.vertex(face[2]);
}

const std::array<Rational, 7> kEdgeParams = {Rational(3, 10), Rational(1, 3), Rational(11, 30),
                                             Rational(1, 2),  Rational(19, 30), Rational(2, 3),
                                             Rational(7, 10)};

}  // namespace

Construction6 build6(const Tournament& t, bool require_triangle_property) {
  const std::size_t n = t.size();
  if (n < 7) throw InvalidInput("build6 needs n >= 7");
  if (require_triangle_property &&
      max_transitive_subtournament(t, std::max<std::size_t>(n, Capacities{}.tournament)).size >=
          directed_triangle_threshold(n)) {
    throw InvalidInput("tournament has a large transitive subset");
  }
  auto poly = CyclicPolytope::standard(6, n);
  std::vector<IndexSet> faces;
  std::vector<Point> holes;
  for (const auto& s : label_subsets(n, 3)) {
    if (t.is_cyclic_triple(s[0] - 1, s[1] - 1, s[2] - 1)) {
      holes.push_back(face_barycenter(poly, s));
      faces.push_back(s);
    }
  }
  PuncturedSet set(Polytope{poly.vertices()}, std::move(holes));
  return {std::move(poly), t, std::move(faces), std::move(set)};
}

Construction6 build6(std::size_t n, std::uint64_t seed, std::size_t max_tries) {
  return build6(find_triangle_tournament(n, max_tries, seed).tournament);
}

ColorBW edge_color6(const Rational& s) {
  return (s > kThird && s <= Rational(2, 3)) ? ColorBW::White : ColorBW::Black;
}

ColorBW color6(const Construction6& c, const Point& p) {
  if (c.set.is_hole(p)) throw InvalidInput("color6 of a hole");
  const auto& poly = c.polytope;
  const int n = static_cast<int>(poly.size());
  for (int v = 1; v <= n; ++v) {
    if (poly.vertex(v) == p) return ColorBW::Black;
  }
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const auto t = line_parameter(poly.vertex(u), poly.vertex(v), p);
      if (t && *t >= 0 && *t <= 1) return color_on_edge(c.tournament, u, v, *t);
    }
  }
  for (const auto& face : c.directed_faces) {
    const auto xy = affine_coordinates(poly.vertex(face[0]), poly.vertex(face[1]),
                                       poly.vertex(face[2]), p);
    if (!xy) continue;
    const Bary q = {1 - xy->first - xy->second, xy->first, xy->second};
    if (q[0] <= 0 || q[1] <= 0 || q[2] <= 0) continue;
    return boundary_color(c, face, ray_exit(q, 1));
  }
  return ColorBW::Black;
}

WitnessSet witnesses6(const Construction6& c) {
  const auto& poly = c.polytope;
  const int n = static_cast<int>(poly.size());
  WitnessSet w;
  std::set<Point> seen;
  auto add = [&](Point p) {
    if (seen.insert(p).second) w.push_back(std::move(p));
  };
  for (int v = 1; v <= n; ++v) add(poly.vertex(v));
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      const bool u_tail = c.tournament.beats(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
      const Point& tail = poly.vertex(u_tail ? u : v);
      const Point& head = poly.vertex(u_tail ? v : u);
      for (const auto& s : kEdgeParams) add(lerp(tail, head, s));
    }
  }
  for (const auto& face : c.directed_faces) {
    std::vector<Bary> boundary;
    for (int i = 0; i < 3; ++i) {
      Bary q = {0, 0, 0};
      q[i] = 1;
      boundary.push_back(q);
    }
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const bool i_tail = c.tournament.beats(static_cast<std::size_t>(face[i] - 1),
                                             static_cast<std::size_t>(face[j] - 1));
      for (const auto& s : kEdgeParams) {
        Bary q = {0, 0, 0};
        q[i_tail ? j : i] = s;
        q[i_tail ? i : j] = 1 - s;
        boundary.push_back(q);
      }
    }
    std::vector<Bary> targets = boundary;
    for (const auto& q : boundary) targets.push_back(ray_exit(q, -1));
    for (const auto& q : targets) {
      add(from_bary(poly, face, q));
      for (const Rational& tau : {Rational(1, 4), Rational(3, 4)}) {
        Bary r;
        for (int i = 0; i < 3; ++i) r[i] = kThird + tau * (q[i] - kThird);
        add(from_bary(poly, face, r));
      }
    }
  }
  return w;
}

ColoringReport verify_coloring6(const Construction6& c, const WitnessSet& w,
                                const PointColoring6& coloring) {
  const Graph g = invisibility_graph(c.set, w);
  std::vector<ColorBW> colors;
  colors.reserve(w.size());
  for (const auto& p : w) colors.push_back(coloring ? coloring(p) : color6(c, p));
  ColoringReport report{w.size(), g.edge_count(), {}};
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) report.violations.emplace_back(u, v);
  }
  return report;
}

Rational gamma_lower_bound6(const Construction6& c) {
  const std::size_t n = c.tournament.size();
  const auto tt = max_transitive_subtournament(c.tournament,
                                               std::max<std::size_t>(n, Capacities{}.tournament));
  return Rational(static_cast<unsigned long>(n)) / static_cast<unsigned long>(tt.size);
}

bool within_log_bound(std::size_t m, std::size_t n) {
  if (m <= 2) return true;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 2, m - 2);
  return power <= mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
}

std::optional<IndexSet> hull_equivalence_counterexample6(const Construction6& c) {
  const std::size_t n = c.polytope.size();
  if (n > 20) throw CapacityError("hull equivalence check", n, 20);
  const auto& holes = c.set.holes();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    IndexSet labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) labels.push_back(static_cast<int>(i + 1));
    }
    const auto pts = c.polytope.vertices_of(labels);
    const bool hole_free = std::none_of(holes.begin(), holes.end(),
                                        [&](const Point& h) { return point_in_hull(h, pts); });
    const bool triangle = std::any_of(c.directed_faces.begin(), c.directed_faces.end(),
                                      [&](const IndexSet& f) {
                                        return std::includes(labels.begin(), labels.end(),
                                                             f.begin(), f.end());
                                      });
    if (hole_free == triangle) return labels;
  }
  return std::nullopt;
}

}  // namespace ncv
