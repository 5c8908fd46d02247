#include "ncv/build5.hpp"

#include <algorithm>
#include <deque>

#include "ncv/errors.hpp"
#include "ncv/gadgets.hpp"

namespace ncv {

namespace {

struct Interval {
  Rational lo, hi;
};

// Image of `in` under the map e_i -> e_j with hole (x_h, y_h), restricted
// to the map's domain [x_h / (1 - y_h), 1].
std::optional<Interval> push_interval(const Interval& in, const Rational& x_h, const Rational& y_h) {
  const Rational lo = std::max(in.lo, Rational(x_h / (1 - y_h)));
  const Rational hi = std::min(in.hi, Rational(1));
  if (lo > hi) return std::nullopt;
  auto f = [&](const Rational& x) { return Rational(y_h * x / (x - x_h)); };
  return Interval{f(hi), f(lo)};
}

using FacePoint = std::pair<Rational, Rational>;  // (x along e_i, y along e_j)

// Last point of the face triangle on the ray from `from` in direction `dir`.
FacePoint ray_exit(const FacePoint& from, const FacePoint& dir) {
  std::optional<Rational> mu;
  auto take = [&](const Rational& m) {
    if (!mu || m < *mu) mu = m;
  };
  if (dir.first < 0) take(from.first / -dir.first);
  if (dir.second < 0) take(from.second / -dir.second);
  const Rational s = dir.first + dir.second;
  if (s > 0) take((1 - from.first - from.second) / s);
  return {from.first + *mu * dir.first, from.second + *mu * dir.second};
}

FacePoint face_hole(const Construction5& c, int i, int j) {
  const Rational q = (1 - c.height(i, j)) / 2;
  return {q, q};
}

bool on_ij_edge(const FacePoint& p) {
  return p.first > 0 && p.second > 0 && p.first + p.second == 1;
}

// Boundary point on the far side of the hole from p.
FacePoint partner(const FacePoint& hole, const FacePoint& p) {
  return ray_exit(hole, {hole.first - p.first, hole.second - p.second});
}

Point face_point(const Construction5& c, int i, int j, const FacePoint& q) {
  const auto& v1 = c.polytope.vertex(1);
  return v1 + q.first * (c.polytope.vertex(i) - v1) + q.second * (c.polytope.vertex(j) - v1);
}

}  // namespace

Mat2 neighbor_map(const Rational& x_h, const Rational& y_h) { return {y_h, 0, 1, -x_h}; }

std::optional<Rational> apply_map(const Mat2& m, const Rational& x) {
  const Rational den = m.c * x + m.d;
  if (den == 0) return std::nullopt;
  Rational y = (m.a * x + m.b) / den;
  if (y <= 0 || y > 1) return std::nullopt;
  return y;
}

std::optional<Rational> fixed_point(const Mat2& m) {
  if (m.b != 0) throw InvalidInput("fixed_point needs a lower-triangular matrix");
  if (m.c == 0) return std::nullopt;
  Rational x = (m.a - m.d) / m.c;
  if (x <= 0 || x > 1) return std::nullopt;
  return x;
}

Rational hole_height5(std::size_t n, int i, int j) {
  const long e = static_cast<long>(n) * i + j - static_cast<long>(n * n);
  return rational_pow(Rational(3), e) / 2;
}

Construction5 build5(std::size_t n) {
  if (n < 6 || n > 8) throw CapacityError("build5 supports 6 <= n <= 8; n", n, 8);
  auto poly = CyclicPolytope::standard(5, n);
  std::map<std::pair<int, int>, Rational> heights;
  std::map<std::pair<int, int>, Point> holes;
  std::vector<Point> hole_list;
  const auto& v1 = poly.vertex(1);
  for (int i = 2; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      const Rational h = hole_height5(n, i, j);
      const Point m = Rational(1, 2) * (poly.vertex(i) + poly.vertex(j));
      const Point p = m + h * (v1 - m);
      heights.emplace(std::make_pair(i, j), h);
      holes.emplace(std::make_pair(i, j), p);
      hole_list.push_back(p);
    }
  }
  PuncturedSet set(Polytope{poly.vertices()}, std::move(hole_list));
  return {std::move(poly), std::move(heights), std::move(holes), std::move(set)};
}

Rational relheight(const Point& p, const Point& v1, const Point& x) {
  if (v1 == x) throw InvalidInput("relheight needs x != v1");
  const auto t = line_parameter(x, v1, p);
  if (!t || *t < 0 || *t > 1) throw InvalidInput("point is not on the segment from v1 to x");
  return *t;
}

void NeighborSystem::set_hole(int i, int j, const Rational& x_h, const Rational& y_h) {
  if (i == j) throw InvalidInput("a hole joins two distinct edges");
  if (x_h <= 0 || y_h <= 0 || x_h + y_h >= 1) throw InvalidInput("hole must lie inside the face");
  if (i < j) {
    holes_[{i, j}] = {x_h, y_h};
  } else {
    holes_[{j, i}] = {y_h, x_h};
  }
  for (int l : {i, j}) {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) labels_.insert(it, l);
  }
}

NeighborSystem NeighborSystem::of(const Construction5& c) {
  NeighborSystem s;
  for (const auto& [key, h] : c.heights) {
    const Rational q = (1 - h) / 2;
    s.set_hole(key.first, key.second, q, q);
  }
  return s;
}

Mat2 NeighborSystem::map(int i, int j) const {
  const auto& [x, y] = holes_.at(std::minmax(i, j));
  return i < j ? neighbor_map(x, y) : neighbor_map(y, x);
}

Rational NeighborSystem::height(int i, int j) const {
  const auto& [x, y] = holes_.at(std::minmax(i, j));
  return 1 - x - y;
}

CycleSearch find_closed_walks(const NeighborSystem& s, std::size_t max_len, bool odd,
                              bool non_backtracking) {
  CycleSearch out;
  std::vector<int> seq;
  auto hole_of = [&](int i, int j) {
    const Mat2 m = s.map(i, j);
    return std::pair<Rational, Rational>(-m.d, m.a);  // (x_h, y_h) as seen from e_i
  };
  auto valid_walk = [&](const Rational& start) {
    Rational x = start;
    for (std::size_t t = 0; t < seq.size(); ++t) {
      const auto y = apply_map(s.map(seq[t], seq[(t + 1) % seq.size()]), x);
      if (!y) return false;
      x = *y;
    }
    return x == start;
  };
  auto dfs = [&](auto&& self, const Mat2& m, const Interval& range) -> void {
    const std::size_t k = seq.size();
    const int first = seq.front(), last = seq.back();
    if (k >= 2 && (k % 2 == 1) == odd && last != first && s.has_hole(last, first) &&
        !(non_backtracking && (seq[k - 2] == first || seq[1] == last))) {
      const auto [xh, yh] = hole_of(last, first);
      if (const auto img = push_interval(range, xh, yh)) {
        ++out.sequences;
        const Mat2 closed = s.map(last, first) * m;
        std::optional<Rational> start;
        if (closed.c == 0 && closed.a == closed.d) {
          start = img->lo;  // identity: every point of the image is fixed
        } else {
          start = fixed_point(closed);
        }
        if (start && valid_walk(*start)) {
          out.cycles.push_back(seq);
          out.starts.push_back(*start);
        }
      }
    }
    if (k == max_len) return;
    for (int next : s.labels()) {
      // Rotations of a closed walk are closed walks: enumerate the ones
      // starting at their least label and rotate afterwards.
      if (next < first || next == last || !s.has_hole(last, next)) continue;
      if (non_backtracking && k >= 2 && next == seq[k - 2]) continue;
      const auto [xh, yh] = hole_of(last, next);
      const auto img = push_interval(range, xh, yh);
      if (!img) continue;
      seq.push_back(next);
      self(self, s.map(last, next) * m, *img);
      seq.pop_back();
    }
  };
  for (int start : s.labels()) {
    seq.assign(1, start);
    dfs(dfs, Mat2{1, 0, 0, 1}, Interval{0, 1});
  }
  std::map<std::vector<int>, Rational> all;
  for (std::size_t k = 0; k < out.cycles.size(); ++k) {
    auto cyc = out.cycles[k];
    Rational x = out.starts[k];
    for (std::size_t r = 0; r < cyc.size(); ++r) {
      all.emplace(cyc, x);
      x = *apply_map(s.map(cyc[0], cyc[1 % cyc.size()]), x);
      std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    }
  }
  out.cycles.clear();
  out.starts.clear();
  for (auto& [cyc, x] : all) {
    out.cycles.push_back(cyc);
    out.starts.push_back(x);
  }
  return out;
}

CycleSearch find_odd_cycles(const NeighborSystem& s, std::size_t max_len) {
  if (max_len > 9) throw CapacityError("find_odd_cycles length", max_len, 9);
  return find_closed_walks(s, max_len, true, false);
}

CycleSearch find_odd_cycles(const Construction5& c, std::size_t max_len) {
  return find_odd_cycles(NeighborSystem::of(c), max_len);
}

HeightRatioReport check_height_ratio(const Construction5& c, std::size_t samples_per_pair,
                                     std::uint64_t seed) {
  const auto sys = NeighborSystem::of(c);
  HeightRatioReport report;
  Rng rng(seed);
  const Rational grid(1u << 20);
  for (int k : sys.labels()) {
    for (int l : sys.labels()) {
      if (k == l) continue;
      const Rational h = c.height(k, l);
      const Mat2 m = sys.map(k, l);
      const Rational lo = -m.d / (1 - m.a);
      for (std::size_t s = 0; s < samples_per_pair; ++s) {
        const Rational u = Rational(static_cast<unsigned long>(rng.uniform(1u << 20) + 1)) / grid;
        const Rational x = lo + (1 - lo) * u;
        const auto y = apply_map(m, x);
        ++report.checks;
        const std::string where = std::to_string(k) + "->" + std::to_string(l) + " at " + to_string(x);
        if (!y) {
          report.violations.push_back(where + ": outside the map domain");
          continue;
        }
        const Rational rs = 1 - x, rt = 1 - *y;
        if (std::max(rs, rt) < h || rs >= 2 * h || rt >= 2 * h) report.violations.push_back(where);
      }
    }
  }
  return report;
}

bool median_observation_check(const Point& a, const Point& b, const Point& c, const Point& p) {
  const auto uv = affine_coordinates(a, b, c, p);
  if (!uv || uv->first != uv->second || uv->first < 0 || uv->first >= Rational(1, 2)) {
    throw InvalidInput("point must lie on the median from a, short of the midpoint");
  }
  const Rational& u = uv->first;
  const Rational s0 = 2 * u;          // P0 = a + s0 (b - a)
  const Rational sx = u / (1 - u);    // X = a + sx (b - a)
  const Rational lhs = (1 - s0) * (1 - s0);
  const Rational rhs = (s0 - sx) * (s0 - sx);
  return lhs > rhs;
}

Colorer5::Colorer5(const Construction5& c, std::size_t component_cap)
    : c_(c), system_(NeighborSystem::of(c)), cap_(component_cap) {}

std::set<std::pair<int, Rational>> Colorer5::component(int i, const Rational& t) const {
  std::set<std::pair<int, Rational>> seen{{i, t}};
  std::deque<std::pair<int, Rational>> queue{{i, t}};
  while (!queue.empty()) {
    const auto [k, x] = queue.front();
    queue.pop_front();
    for (int l : system_.labels()) {
      if (l == k) continue;
      const auto y = apply_map(system_.map(k, l), x);
      if (y && seen.emplace(l, *y).second) {
        if (seen.size() > cap_) throw CapacityError("edge-visibility component", seen.size(), cap_);
        queue.emplace_back(l, *y);
      }
    }
  }
  return seen;
}

int Colorer5::edge_color(int i, const Rational& t) {
  const auto key = std::make_pair(i, t);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto comp = component(i, t);
  // Root: least (label, parameter) node gets color 1; colors alternate.
  std::map<std::pair<int, Rational>, int> parity{{*comp.begin(), 0}};
  std::deque<std::pair<int, Rational>> queue{*comp.begin()};
  while (!queue.empty()) {
    const auto node = queue.front();
    queue.pop_front();
    const int par = parity.at(node);
    for (int l : system_.labels()) {
      if (l == node.first) continue;
      const auto y = apply_map(system_.map(node.first, l), node.second);
      if (!y) continue;
      const auto next = std::make_pair(l, *y);
      auto [it, fresh] = parity.emplace(next, 1 - par);
      if (fresh) {
        queue.push_back(next);
      } else if (it->second == par) {
        throw InternalError("odd cycle in the edge-visibility graph");
      }
    }
  }
  for (const auto& [node, par] : parity) cache_[node] = 1 + par;
  return cache_.at(key);
}

int Colorer5::boundary_color(int i, int j, const Rational& x, const Rational& y) {
  if (x == 0 && y == 0) return 1;
  if (y == 0) return edge_color(i, x);
  if (x == 0) return edge_color(j, y);
  const FacePoint other = partner(face_hole(c_, i, j), {x, y});
  return 3 - boundary_color(i, j, other.first, other.second);
}

int Colorer5::color(const Point& p) {
  if (c_.set.is_hole(p)) throw InvalidInput("color5 of a hole");
  const auto& poly = c_.polytope;
  const int n = static_cast<int>(poly.size());
  const auto& v1 = poly.vertex(1);
  if (p == v1) return 1;
  for (int i = 2; i <= n; ++i) {
    const auto t = line_parameter(v1, poly.vertex(i), p);
    if (t && *t > 0 && *t <= 1) return edge_color(i, *t);
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto s = line_parameter(poly.vertex(i), poly.vertex(j), p);
      if (s && *s > 0 && *s < 1) return boundary_color(i, j, 1 - *s, *s);
    }
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto xy = affine_coordinates(v1, poly.vertex(i), poly.vertex(j), p);
      if (!xy || xy->first <= 0 || xy->second <= 0 || xy->first + xy->second >= 1) continue;
      const FacePoint h = face_hole(c_, i, j);
      const FacePoint b = ray_exit(h, {xy->first - h.first, xy->second - h.second});
      return boundary_color(i, j, b.first, b.second);
    }
  }
  return 1;
}

int color5(const Construction5& c, const Point& p) { return Colorer5(c).color(p); }

WitnessSet witnesses5(const Construction5& c) {
  const int n = static_cast<int>(c.n());
  Colorer5 colorer(c);
  std::set<std::pair<int, Rational>> nodes;
  for (int i = 2; i <= n; ++i) {
    for (const Rational& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      if (nodes.count({i, t})) continue;
      const auto comp = colorer.component(i, t);
      nodes.insert(comp.begin(), comp.end());
    }
  }
  WitnessSet w;
  std::set<Point> seen;
  auto add = [&](Point p) {
    if (seen.insert(p).second) w.push_back(std::move(p));
  };
  const auto& v1 = c.polytope.vertex(1);
  add(v1);
  for (const auto& [i, t] : nodes) add(v1 + t * (c.polytope.vertex(i) - v1));
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const FacePoint h = face_hole(c, i, j);
      std::vector<FacePoint> boundary = {{0, 0}, {1, 0}, {0, 1}};
      for (const auto& [l, t] : nodes) {
        if (l == i) boundary.emplace_back(t, 0);
        if (l == j) boundary.emplace_back(0, t);
      }
      const std::size_t edge_points = boundary.size();
      for (std::size_t k = 0; k < edge_points; ++k) {
        const FacePoint q = partner(h, boundary[k]);
        if (on_ij_edge(q)) boundary.push_back(q);
      }
      for (const Rational& s : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const FacePoint q{1 - s, s};
        boundary.push_back(q);
        boundary.push_back(partner(h, q));
      }
      std::vector<FacePoint> targets = boundary;
      for (const auto& q : boundary) targets.push_back(partner(h, q));
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      for (const auto& q : targets) {
        add(face_point(c, i, j, q));
        for (const Rational& tau : {Rational(1, 3), Rational(2, 3)}) {
          add(face_point(c, i, j,
                         {h.first + tau * (q.first - h.first), h.second + tau * (q.second - h.second)}));
        }
      }
    }
  }
  return w;
}

ColoringReport5 verify_coloring5(const Construction5& c, const WitnessSet& w) {
  const Graph g = invisibility_graph(c.set, w);
  Colorer5 colorer(c);
  std::vector<int> colors;
  colors.reserve(w.size());
  for (const auto& p : w) colors.push_back(colorer.color(p));
  ColoringReport5 report{w.size(), g.edge_count(), {}};
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) report.violations.emplace_back(u, v);
  }
  return report;
}

}  // namespace ncv
