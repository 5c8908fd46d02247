#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncv/build6.hpp"
#include "ncv/errors.hpp"
#include "ncv/gadgets.hpp"
#include "ncv/solvers.hpp"

using namespace ncv;

namespace {

std::set<IndexSet> cyclic_triples(const Tournament& t) {
  std::set<IndexSet> out;
  const auto n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const bool cyc = (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) ||
                         (t.beats(b, a) && t.beats(c, b) && t.beats(a, c));
        if (cyc) out.insert({int(a) + 1, int(b) + 1, int(c) + 1});
      }
  return out;
}

Point mean3(const CyclicPolytope& p, const IndexSet& s) {
  Point m = Point::zero(p.dim());
  for (int i : s) m += p.vertex(i);
  return ratio(1, 3) * m;
}

}  // namespace

TEST_CASE("transitive tournament leaves no holes") {
  const auto c = build6(Tournament::transitive(7));
  CHECK(c.directed_faces.empty());
  CHECK(c.set.holes().empty());
}

TEST_CASE("a single 3-cycle gives one hole at its barycenter") {
  auto t2 = Tournament::transitive(7);
  t2.orient(2, 0);  // 0 -> 1 -> 2 -> 0
  const auto c2 = build6(t2);
  REQUIRE(c2.directed_faces.size() == 1);
  CHECK(c2.directed_faces[0] == IndexSet{1, 2, 3});
  REQUIRE(c2.set.holes().size() == 1);
  CHECK(c2.set.holes()[0] == mean3(c2.polytope, {1, 2, 3}));
}

TEST_CASE("holes are the barycenters of the cyclic triples") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto t = sample_tournament(8, seed);
    const auto c = build6(t);
    const auto expected = cyclic_triples(t);
    CHECK(std::set<IndexSet>(c.directed_faces.begin(), c.directed_faces.end()) == expected);
    std::set<Point> holes(c.set.holes().begin(), c.set.holes().end());
    std::set<Point> want;
    for (const auto& s : expected) want.insert(mean3(c.polytope, s));
    CHECK(holes == want);
  }
}

TEST_CASE("edge coloring thresholds") {
  CHECK(edge_color6(Rational(0)) == ColorBW::Black);
  CHECK(edge_color6(ratio(3, 10)) == ColorBW::Black);
  CHECK(edge_color6(ratio(1, 3)) == ColorBW::Black);
  CHECK(edge_color6(ratio(11, 30)) == ColorBW::White);
  CHECK(edge_color6(ratio(1, 2)) == ColorBW::White);
  CHECK(edge_color6(ratio(2, 3)) == ColorBW::White);
  CHECK(edge_color6(ratio(7, 10)) == ColorBW::Black);
  CHECK(edge_color6(Rational(1)) == ColorBW::Black);
}

TEST_CASE("vertices are black") {
  const auto c = build6(8, 1);
  for (const auto& v : c.polytope.vertices()) CHECK(color6(c, v) == ColorBW::Black);
}

TEST_CASE("the two-coloring is proper on the witnesses") {
  for (std::size_t n : {7, 8}) {
    const auto c = build6(n, 1);
    REQUIRE_FALSE(c.directed_faces.empty());
    const auto w = witnesses6(c);
    const auto r = verify_coloring6(c, w);
    CHECK(r.edges > 0);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("broken colorings are caught") {
  const auto c = build6(7, 1);
  const auto w = witnesses6(c);
  const auto all_black = verify_coloring6(c, w, [](const Point&) { return ColorBW::Black; });
  CHECK_FALSE(all_black.violations.empty());
  // vertices turned white, everything else as before
  const auto shifted = verify_coloring6(c, w, [&](const Point& p) {
    for (const auto& v : c.polytope.vertices())
      if (p == v) return ColorBW::White;
    return color6(c, p);
  });
  CHECK_FALSE(shifted.violations.empty());
}

TEST_CASE("hull avoids holes iff no directed triangle is spanned") {
  const auto c = build6(7, 1);
  CHECK_FALSE(hull_equivalence_counterexample6(c).has_value());
  auto t = Tournament::transitive(7);
  t.orient(2, 0);
  CHECK_FALSE(hull_equivalence_counterexample6(build6(t)).has_value());
}

TEST_CASE("gamma lower bound from the tournament") {
  for (std::size_t n : {8, 16}) {
    const auto c = build6(n, 1);
    const auto best = max_transitive_subtournament(c.tournament);
    CHECK(best.size < directed_triangle_threshold(n));
    CHECK(gamma_lower_bound6(c) == Rational(static_cast<long>(n)) / Rational(static_cast<long>(best.size)));
    CHECK(gamma_lower_bound6(c) * Rational(static_cast<long>(directed_triangle_threshold(n))) >
          Rational(static_cast<long>(n)));
  }
  CHECK(within_log_bound(8, 8));
  CHECK_FALSE(within_log_bound(9, 8));
  CHECK(within_log_bound(10, 16));
  CHECK_FALSE(within_log_bound(11, 16));
}

TEST_CASE("triangle property is enforced on request") {
  CHECK_THROWS_AS(build6(Tournament::transitive(8), true), InvalidInput);
  CHECK_NOTHROW(build6(Tournament::transitive(8), false));
}
