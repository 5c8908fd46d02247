#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ncv/cyclic.hpp"
#include "ncv/punctured.hpp"
#include "ncv/tournament.hpp"

namespace ncv {

/// Six-dimensional cyclic polytope (t_i = i) with a one-point hole at the
/// barycenter of every triangle whose edges form a directed 3-cycle of the
/// tournament. Tournament vertex v corresponds to polytope label v + 1.
struct Construction6 {
  CyclicPolytope polytope;
  Tournament tournament;
  std::vector<IndexSet> directed_faces;  // sorted label triples
  PuncturedSet set;
};

/// Builds from an explicit tournament. With `require_triangle_property` the
/// tournament must have no transitive subset of size
/// directed_triangle_threshold(n) (InvalidInput otherwise).
Construction6 build6(const Tournament& t, bool require_triangle_property = false);

/// Builds from the tournament found by find_triangle_tournament(n, max_tries, seed).
Construction6 build6(std::size_t n, std::uint64_t seed, std::size_t max_tries = 1000);

enum class ColorBW { Black, White };

/// Color of a point at parameter s in [0, 1] from the tail of a directed
/// edge: white exactly on (1/3, 2/3].
ColorBW edge_color6(const Rational& s);

/// The two-coloring of X: vertices black; edges by edge_color6; a point
/// inside a directed-boundary triangle takes the color of the boundary point
/// hit by the ray from the barycenter through it; everything else black.
ColorBW color6(const Construction6& c, const Point& p);

/// Verification sample: all vertices; 7 points per edge at parameters
/// 3/10, 1/3, 11/30, 1/2, 19/30, 2/3, 7/10 from the tail; per directed
/// triangle, every boundary witness, its antipode through the barycenter, and
/// points at 1/4 and 3/4 of the way from the barycenter to each of them.
WitnessSet witnesses6(const Construction6& c);

struct ColoringReport {
  std::size_t witnesses = 0;
  std::size_t edges = 0;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

using PointColoring6 = std::function<ColorBW(const Point&)>;

/// Monochromatic edges of the invisibility graph on W under `coloring`
/// (color6 when empty).
ColoringReport verify_coloring6(const Construction6& c, const WitnessSet& w,
                                const PointColoring6& coloring = {});

/// n / (largest transitive subtournament).
Rational gamma_lower_bound6(const Construction6& c);

/// True iff m <= 2 log2(n) + 2, decided in integers.
bool within_log_bound(std::size_t m, std::size_t n);

/// Checks, for every vertex subset, that its hull avoids all holes iff it
/// spans no directed triangle. Returns the first subset (labels) where the
/// two disagree.
std::optional<IndexSet> hull_equivalence_counterexample6(const Construction6& c);

}  // namespace ncv
