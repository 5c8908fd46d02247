#include "ncv/punctured.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

struct AmbientDim {
  std::size_t operator()(const Polytope& p) const { return p.vertices.front().dim(); }
  std::size_t operator()(const Disc& d) const { return d.center.dim(); }
};

Rational cross2(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

Point perp(const Point& v) { return Point{-v[1], v[0]}; }

// Nearby rational for a double, on a fixed grid.
Rational approx(double v) { return ratio(std::lround(v * 1000.0), 1000); }

Point rotate(const Point& p, const Rational& t, int direction) {
  const Rational q = 1 + t * t;
  const Rational c = (1 - t * t) / q;
  const Rational s = direction * 2 * t / q;
  return Point{p[0] * c - p[1] * s, p[0] * s + p[1] * c};
}

double angle_of(const Point& p) {
  double a = std::atan2(p[1].get_d(), p[0].get_d());
  if (a < 0) a += 2 * std::numbers::pi;
  return a;
}

// Parameter of L1 = p1 + s d1 at its crossing with L2 = p2 + u d2.
Rational crossing(const Point& p1, const Point& d1, const Point& p2, const Point& d2) {
  return cross2(p2 - p1, d2) / cross2(d1, d2);
}

std::vector<Point> pinwheel(const Point& a, const Point& b, const Point& c, const Rational& eps) {
  const Point da = (b - a) + eps * perp(b - a);
  const Point db = (c - b) + eps * perp(c - b);
  const Point dc = (a - c) + eps * perp(a - c);
  const Rational sab = crossing(a, da, b, db);
  const Rational sca = crossing(a, da, c, dc);
  const Rational sbc = crossing(b, db, c, dc);
  const Rational sba = crossing(b, db, a, da);
  const Rational scb = crossing(c, dc, b, db);
  const Rational sac = crossing(c, dc, a, da);
  // Each hole must sit strictly inside its side of the triangle.
  if (sgn(sab) * sgn(sca) >= 0 || sgn(sbc) * sgn(sba) >= 0 || sgn(scb) * sgn(sac) >= 0) return {};
  return {a + sab * da, b + sbc * db, a + sca * da};
}

}  // namespace

std::size_t ambient_dim(const ConvexAmbient& ambient) { return std::visit(AmbientDim{}, ambient); }

bool ambient_contains(const ConvexAmbient& ambient, const Point& p) {
  if (const auto* disc = std::get_if<Disc>(&ambient)) {
    if (p.dim() != disc->center.dim()) throw InvalidInput("dimension mismatch");
    return squared_norm(p - disc->center) <= disc->radius2;
  }
  return point_in_hull(p, std::get<Polytope>(ambient).vertices);
}

PuncturedSet::PuncturedSet(ConvexAmbient ambient, std::vector<Point> holes)
    : ambient_(std::move(ambient)), holes_(std::move(holes)) {
  if (const auto* disc = std::get_if<Disc>(&ambient_)) {
    if (disc->center.dim() != 2) throw InvalidInput("disc ambient must be planar");
    if (disc->radius2 <= 0) throw InvalidInput("disc radius must be positive");
  } else {
    const auto& verts = std::get<Polytope>(ambient_).vertices;
    if (verts.empty()) throw InvalidInput("polytope needs vertices");
    const std::size_t d = verts.front().dim();
    for (const auto& v : verts) {
      if (v.dim() != d) throw InvalidInput("polytope vertices differ in dimension");
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < verts.size(); ++i) rows.push_back((verts[i] - verts[0]).coords());
    std::size_t rank = 0;
    // Rank by elimination on the difference vectors.
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const Rational f = rows[r][col] / rows[rank][col];
        for (std::size_t k = col; k < d; ++k) rows[r][k] -= f * rows[rank][k];
      }
      ++rank;
    }
    if (rank != d) throw InvalidInput("polytope is not full-dimensional");
  }
  for (const auto& h : holes_) {
    if (!ambient_contains(ambient_, h)) throw InvalidInput("hole outside the ambient body");
  }
  sorted_holes_ = holes_;
  std::sort(sorted_holes_.begin(), sorted_holes_.end());
  if (std::adjacent_find(sorted_holes_.begin(), sorted_holes_.end()) != sorted_holes_.end()) {
    throw InvalidInput("repeated hole");
  }
}

bool PuncturedSet::is_hole(const Point& p) const {
  return std::binary_search(sorted_holes_.begin(), sorted_holes_.end(), p);
}

bool contains(const PuncturedSet& x, const Point& p) {
  if (p.dim() != x.dim()) throw InvalidInput("dimension mismatch");
  return !x.is_hole(p) && ambient_contains(x.ambient(), p);
}

bool visible(const PuncturedSet& x, const Point& p, const Point& q) {
  if (!contains(x, p) || !contains(x, q)) throw InvalidInput("visible() needs points of X");
  return std::none_of(x.holes().begin(), x.holes().end(),
                      [&](const Point& h) { return segment_contains(p, q, h); });
}

void validate_witnesses(const PuncturedSet& x, const WitnessSet& w) {
  for (const auto& p : w) {
    if (!contains(x, p)) throw InvalidInput("witness outside X");
  }
  std::vector<Point> sorted(w);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("repeated witness");
  }
}

Graph invisibility_graph(const PuncturedSet& x, const WitnessSet& w) {
  validate_witnesses(x, w);
  Graph g(w.size());
  for (const auto& h : x.holes()) {
    // Direction from h scaled so its first nonzero coordinate is 1.
    std::map<Point, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> rays;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Point v = w[i] - h;
      std::size_t k = 0;
      while (v[k] == 0) ++k;
      const bool forward = v[k] > 0;
      const Rational scale = 1 / v[k];
      v *= scale;
      auto& slot = rays[v];
      (forward ? slot.first : slot.second).push_back(i);
    }
    for (const auto& [dir, sides] : rays) {
      for (auto a : sides.first) {
        for (auto b : sides.second) g.add_edge(a, b);
      }
    }
  }
  return g;
}

Graph invisibility_graph_naive(const PuncturedSet& x, const WitnessSet& w) {
  validate_witnesses(x, w);
  Graph g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!visible(x, w[i], w[j])) g.add_edge(i, j);
    }
  }
  return g;
}

bool hull_hole_free(const PuncturedSet& x, const WitnessSet& w,
                    const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw InvalidInput("hull_hole_free needs a nonempty subset");
  std::vector<Point> pts;
  pts.reserve(subset.size());
  for (auto i : subset) pts.push_back(w.at(i));
  if (x.dim() != 2) {
    return std::none_of(x.holes().begin(), x.holes().end(),
                        [&](const Point& h) { return point_in_hull_lp(h, pts); });
  }
  const auto hull = planar_hull(pts);
  for (const auto& h : x.holes()) {
    bool inside;
    if (hull.size() == 1) {
      inside = hull[0] == h;
    } else if (hull.size() == 2) {
      inside = segment_contains(hull[0], hull[1], h);
    } else {
      inside = true;
      for (std::size_t i = 0; i < hull.size() && inside; ++i) {
        const Point tri[3] = {hull[i], hull[(i + 1) % hull.size()], h};
        inside = orientation(tri) != Sign::Negative;
      }
    }
    if (inside) return false;
  }
  return true;
}

Point circle_point(const Rational& t) {
  const Rational q = 1 + t * t;
  return Point{(1 - t * t) / q, 2 * t / q};
}

DiscInstance build_disc_D(std::size_t lambda, const Rational& ring, const Rational& offset) {
  if (lambda < 3) throw InvalidInput("build_disc_D needs lambda >= 3");
  if (ring <= 0 || ring >= 1) throw InvalidInput("ring parameter must lie in (0, 1)");
  if (offset <= 0 || offset >= 1) throw InvalidInput("witness offset must lie in (0, 1)");
  const double step = 2 * std::numbers::pi / static_cast<double>(lambda);
  std::vector<Point> dirs;
  for (std::size_t k = 0; k < lambda; ++k) {
    dirs.push_back(circle_point(approx(std::tan(step * (static_cast<double>(k) + 0.25) / 2))));
  }
  std::vector<Point> holes;
  for (const auto& u : dirs) holes.push_back(ring * u);

  WitnessSet w;
  for (const auto& u : dirs) {
    w.push_back(rotate(u, offset, -1));
    w.push_back(rotate(u, offset, +1));
    w.push_back(((ring + 1) / 2) * u);
  }
  for (std::size_t k = 0; k < lambda; ++k) {
    w.push_back(circle_point(approx(std::tan(step * (static_cast<double>(k) + 0.75) / 2))));
  }
  w.push_back(Point::zero(2));

  PuncturedSet set(Disc{Point::zero(2), 1}, holes);
  const Point& a = holes[0];
  const Point& b = holes[lambda / 3];
  const Point& c = holes[2 * lambda / 3];
  std::vector<Point> tri;
  for (Rational eps(1, 50); tri.empty(); eps /= 2) {
    for (int s : {1, -1}) {
      auto cand = pinwheel(a, b, c, s * eps);
      const bool ok = !cand.empty() && std::all_of(cand.begin(), cand.end(), [&](const Point& p) {
        return squared_norm(p) < 1 && !set.is_hole(p) &&
               std::find(w.begin(), w.end(), p) == w.end();
      });
      if (ok) {
        tri = std::move(cand);
        break;
      }
    }
    if (eps < Rational(1, 1 << 20)) throw InternalError("no pinwheel triangle found");
  }
  w.insert(w.end(), tri.begin(), tri.end());
  return {lambda, ring, offset, std::move(set), std::move(w)};
}

WitnessSet refine_boundary_witnesses(const WitnessSet& w) {
  std::vector<std::pair<double, Point>> boundary;
  for (const auto& p : w) {
    if (p.dim() == 2 && squared_norm(p) == 1) boundary.emplace_back(angle_of(p), p);
  }
  std::sort(boundary.begin(), boundary.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  WitnessSet out = w;
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const auto& [a1, p] = boundary[i];
    auto [a2, q] = boundary[(i + 1) % boundary.size()];
    if (boundary.size() == 1) break;
    if (a2 <= a1) a2 += 2 * pi;
    if (a1 <= pi && pi <= a2) {
      // cot(theta / 2) is monotone and finite across theta = pi.
      const Rational s = (p[1] / (1 - p[0]) + q[1] / (1 - q[0])) / 2;
      const Rational r = s * s + 1;
      out.push_back(Point{(s * s - 1) / r, 2 * s / r});
    } else {
      out.push_back(circle_point((p[1] / (1 + p[0]) + q[1] / (1 + q[0])) / 2));
    }
  }
  return out;
}

SubsetResult omega_witness(const PuncturedSet& x, const WitnessSet& w, const Capacities& caps) {
  return max_clique(invisibility_graph(x, w), caps.clique);
}

ColoringResult chi_witness(const PuncturedSet& x, const WitnessSet& w, const Capacities& caps) {
  return chromatic_number(invisibility_graph(x, w), caps.chromatic);
}

CoverCertificate gamma_witness(const PuncturedSet& x, const WitnessSet& w, const Capacities& caps) {
  validate_witnesses(x, w);
  return min_cover(
      w.size(), [&](const std::vector<std::size_t>& s) { return hull_hole_free(x, w, s); },
      caps.cover, x.dim() == 2 ? 3 : 0);
}

}  // namespace ncv
