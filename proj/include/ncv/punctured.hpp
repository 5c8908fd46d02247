#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ncv/config.hpp"
#include "ncv/geometry.hpp"
#include "ncv/graph.hpp"
#include "ncv/solvers.hpp"

namespace ncv {

/// Convex hull of finitely many points.
struct Polytope {
  std::vector<Point> vertices;
};

/// Closed disc {p : |p - center|^2 <= radius2} in the plane.
struct Disc {
  Point center;
  Rational radius2;
};

using ConvexAmbient = std::variant<Polytope, Disc>;

std::size_t ambient_dim(const ConvexAmbient& ambient);
bool ambient_contains(const ConvexAmbient& ambient, const Point& p);

/// A convex ambient body minus finitely many one-point holes.
class PuncturedSet {
 public:
  /// Throws InvalidInput for a degenerate ambient, a hole outside it, or a
  /// repeated hole.
  PuncturedSet(ConvexAmbient ambient, std::vector<Point> holes);

  const ConvexAmbient& ambient() const { return ambient_; }
  const std::vector<Point>& holes() const { return holes_; }
  std::size_t dim() const { return ambient_dim(ambient_); }
  bool is_hole(const Point& p) const;

 private:
  ConvexAmbient ambient_;
  std::vector<Point> holes_;
  std::vector<Point> sorted_holes_;
};

/// Finite sample of X on which the measures are computed.
using WitnessSet = std::vector<Point>;

bool contains(const PuncturedSet& x, const Point& p);

/// Segment pq avoids every hole. Both endpoints must lie in X.
bool visible(const PuncturedSet& x, const Point& p, const Point& q);

/// Edge {i, j} iff W[i] and W[j] do not see each other. Groups witnesses by
/// their direction from each hole, so only pairs on opposite rays are joined.
Graph invisibility_graph(const PuncturedSet& x, const WitnessSet& w);

/// Pairwise visible() tests; reference implementation.
Graph invisibility_graph_naive(const PuncturedSet& x, const WitnessSet& w);

/// Throws InvalidInput unless every witness lies in X and none repeats.
void validate_witnesses(const PuncturedSet& x, const WitnessSet& w);

/// No hole lies in the convex hull of the chosen witnesses.
bool hull_hole_free(const PuncturedSet& x, const WitnessSet& w,
                    const std::vector<std::size_t>& subset);

struct DiscInstance {
  std::size_t lambda = 0;
  Rational ring;
  Rational offset;
  PuncturedSet set;
  WitnessSet witnesses;
};

/// Unit disc with lambda holes on the circle of radius `ring`.
///
/// Hole k sits at angle roughly 2 pi (k + 1/4) / lambda, realised as an
/// exact rational circle point. Witnesses, in order: per hole the two
/// boundary points rotated by +-offset (offset is the tangent of half the
/// rotation angle) and the radial point halfway between hole and boundary;
/// one boundary point per arc between consecutive holes; the centre; and
/// three points of a small pinwheel triangle whose sides pass through three
/// spread-out holes, so the family contains a 3-clique.
DiscInstance build_disc_D(std::size_t lambda, const Rational& ring = Rational(9, 10),
                          const Rational& offset = Rational(1, 50));

/// Inserts one boundary witness between each angularly consecutive pair of
/// boundary witnesses (points with |p| = 1), doubling their number.
WitnessSet refine_boundary_witnesses(const WitnessSet& w);

/// Unit-circle point ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
Point circle_point(const Rational& t);

SubsetResult omega_witness(const PuncturedSet& x, const WitnessSet& w,
                           const Capacities& caps = {});
ColoringResult chi_witness(const PuncturedSet& x, const WitnessSet& w,
                           const Capacities& caps = {});
/// Minimum cover of W by parts with hole-free hulls.
CoverCertificate gamma_witness(const PuncturedSet& x, const WitnessSet& w,
                               const Capacities& caps = {});

}  // namespace ncv
