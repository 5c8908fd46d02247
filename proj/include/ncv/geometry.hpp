#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncv/config.hpp"
#include "ncv/rational.hpp"

namespace ncv {

/// A point of R^d with exact rational coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const Rational& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rational& s, Point p) { return p *= s; }
  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order; lower dimension first.
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign to_sign(int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

Rational dot(const Point& a, const Point& b);
Rational squared_norm(const Point& a);
/// Arithmetic mean of a nonempty point list.
Point barycenter(std::span<const Point> points);
/// a + t (b - a)
Point lerp(const Point& a, const Point& b, const Rational& t);

/// Determinant of a square rational matrix (row-major), by exact elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Sign of det(p2 - p1, ..., p_{d+1} - p1) for d+1 points of R^d.
Sign orientation(std::span<const Point> tuple);

/// True iff h lies on the closed segment pq.
bool segment_contains(const Point& p, const Point& q, const Point& h);

/// If h = p + t (q - p) for some rational t, returns t (p != q required).
std::optional<Rational> line_parameter(const Point& p, const Point& q, const Point& h);

/// (x, y) with p = a + x (b - a) + y (c - a), if p lies in the plane of the
/// non-degenerate triangle abc.
std::optional<std::pair<Rational, Rational>> affine_coordinates(const Point& a, const Point& b,
                                                                const Point& c, const Point& p);

/// True iff x is a convex combination of the generators. Planar input uses an
/// exact convex hull; every other dimension goes through point_in_hull_lp.
bool point_in_hull(const Point& x, std::span<const Point> generators);

/// Exact phase-one simplex over the rationals: is {lambda >= 0, sum lambda = 1,
/// sum lambda_i g_i = x} feasible?
bool point_in_hull_lp(const Point& x, std::span<const Point> generators);

/// Counter-clockwise convex hull of planar points without collinear vertices.
std::vector<Point> planar_hull(std::span<const Point> points);

/// Size of the largest collinear subset of planar points.
std::size_t max_collinear(std::span<const Point> points);

/// Size of the largest subset in strictly convex position (no three collinear).
/// Collinear input yields 2.
std::size_t max_convex_position(std::span<const Point> points);

/// True iff no d+1 of the points lie on a common hyperplane.
bool in_general_position(std::span<const Point> points);

/// Ordered same-side test: general position, and for each index-increasing
/// d-tuple every later point lies strictly on one side of its hyperplane.
bool is_same_side_position(std::span<const Point> ordered);

/// Largest subset admitting a same-side ordering, by exhaustive search over
/// orderings. Throws CapacityError above `capacity` points.
std::size_t max_same_side_subset(std::span<const Point> points,
                                 std::size_t capacity = Capacities{}.exhaustive);

}  // namespace ncv
