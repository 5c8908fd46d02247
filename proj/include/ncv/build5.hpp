#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncv/cyclic.hpp"
#include "ncv/punctured.hpp"

namespace ncv {

/// 2x2 rational matrix [[a, b], [c, d]] acting on x as (a x + b) / (c x + d).
struct Mat2 {
  Rational a, b, c, d;

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// [[y_h, 0], [1, -x_h]]: sends x on one edge to y_h x / (x - x_h) on the
/// other edge through the hole with face coordinates (x_h, y_h).
Mat2 neighbor_map(const Rational& x_h, const Rational& y_h);

/// The image of x if it is defined and lies in (0, 1].
std::optional<Rational> apply_map(const Mat2& m, const Rational& x);

/// Fixed point (a - d) / c of a lower-triangular map, if c != 0 and it lies
/// in (0, 1]. Throws InvalidInput if b != 0.
std::optional<Rational> fixed_point(const Mat2& m);

/// Five-dimensional cyclic polytope (t_i = i) minus the holes p_ij,
/// 2 <= i < j <= n, where p_ij lies on the median from v_1 to the midpoint
/// m_ij of v_i v_j at relative height 3^(n i + j - n^2) / 2.
struct Construction5 {
  CyclicPolytope polytope;
  std::map<std::pair<int, int>, Rational> heights;
  std::map<std::pair<int, int>, Point> holes;
  PuncturedSet set;

  std::size_t n() const { return polytope.size(); }
  /// Hole of the face {1, i, j} in either index order.
  const Point& hole(int i, int j) const { return holes.at(std::minmax(i, j)); }
  const Rational& height(int i, int j) const { return heights.at(std::minmax(i, j)); }
};

Rational hole_height5(std::size_t n, int i, int j);

/// 6 <= n <= 8 (CapacityError otherwise).
Construction5 build5(std::size_t n);

/// t with p = x + t (v1 - x); InvalidInput unless p lies on segment v1 x.
Rational relheight(const Point& p, const Point& v1, const Point& x);

/// Hole positions, in face coordinates, for pairs of half-open edges
/// e_i = (v_1, v_i]. A point at parameter x on e_i is v_1 + x (v_i - v_1).
class NeighborSystem {
 public:
  NeighborSystem() = default;
  /// x_h along e_i and y_h along e_j, for i < j.
  void set_hole(int i, int j, const Rational& x_h, const Rational& y_h);
  static NeighborSystem of(const Construction5& c);

  const std::vector<int>& labels() const { return labels_; }
  bool has_hole(int i, int j) const { return holes_.count(std::minmax(i, j)) != 0; }
  /// Map from e_i to e_j.
  Mat2 map(int i, int j) const;
  /// Hole height 1 - x_h - y_h of the pair.
  Rational height(int i, int j) const;

 private:
  std::map<std::pair<int, int>, std::pair<Rational, Rational>> holes_;
  std::vector<int> labels_;
};

struct CycleSearch {
  /// Closed label sequences i_1 ... i_k (back to i_1) that carry a closed walk.
  std::vector<std::vector<int>> cycles;
  /// The start parameter on e_{i_1} of each reported walk.
  std::vector<Rational> starts;
  std::size_t sequences = 0;  // sequences whose chain domain stayed nonempty
};

/// All closed label sequences of length k, 2 <= k <= max_len, with the given
/// parity, whose composed neighbor map has a valid fixed point. Consecutive
/// labels differ; `non_backtracking` also forbids i_{t-1} = i_{t+1}
/// (cyclically). Sequences whose partial chains have empty domain are pruned.
CycleSearch find_closed_walks(const NeighborSystem& s, std::size_t max_len, bool odd,
                              bool non_backtracking);

/// Odd closed walks of the edge-visibility graph, up to length max_len <= 9.
CycleSearch find_odd_cycles(const NeighborSystem& s, std::size_t max_len);
CycleSearch find_odd_cycles(const Construction5& c, std::size_t max_len);

struct HeightRatioReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Samples points x on e_k in the domain of each map e_k -> e_l and checks
/// that the larger endpoint height is at least the hole height and both are
/// below twice the hole height.
HeightRatioReport check_height_ratio(const Construction5& c, std::size_t samples_per_pair,
                                     std::uint64_t seed);

/// For P on the median from A to the midpoint M of BC, P != M: with P0 on
/// AB such that P P0 is parallel to BC, and X = AB meet CP, whether
/// |B - P0| > |P0 - X|.
bool median_observation_check(const Point& a, const Point& b, const Point& c, const Point& p);

/// Caches the two-colorings of the components of the edge-visibility graph.
class Colorer5 {
 public:
  explicit Colorer5(const Construction5& c, std::size_t component_cap = 200000);

  /// Color 1 or 2 of a point of X.
  int color(const Point& p);
  /// Color of the point at parameter t on e_i.
  int edge_color(int i, const Rational& t);
  /// The component of (i, t), as (label, parameter) nodes.
  std::set<std::pair<int, Rational>> component(int i, const Rational& t) const;

 private:
  int boundary_color(int i, int j, const Rational& x, const Rational& y);

  const Construction5& c_;
  NeighborSystem system_;
  std::size_t cap_;
  std::map<std::pair<int, Rational>, int> cache_;
};

int color5(const Construction5& c, const Point& p);

/// Verification sample: v_1; parameters 1/4, 1/2, 3/4, 1 on every e_i
/// together with their whole components; per face {1, i, j}, the points at
/// 1/4, 1/2, 3/4 of v_i v_j and the ij-edge exits of rays from the e_i and
/// e_j witnesses through the hole, with their partners; then every boundary
/// witness of the face, its antipode through the hole, and points at 1/3
/// and 2/3 of the way from the hole to each.
WitnessSet witnesses5(const Construction5& c);

struct ColoringReport5 {
  std::size_t witnesses = 0;
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

ColoringReport5 verify_coloring5(const Construction5& c, const WitnessSet& w);

}  // namespace ncv
