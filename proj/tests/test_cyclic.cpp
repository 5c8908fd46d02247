#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncv/cyclic.hpp"
#include "ncv/errors.hpp"
#include "oracles.hpp"

using namespace ncv;

namespace {

// facet iff every remaining vertex is strictly on one side of the d-subset's hyperplane
std::set<IndexSet> facets_oracle(const CyclicPolytope& p) {
  std::set<IndexSet> out;
  const auto n = p.size();
  for (const auto& s : label_subsets(n, p.dim())) {
    int side = 0;
    bool ok = true;
    for (std::size_t x = 1; x <= n && ok; ++x) {
      if (std::find(s.begin(), s.end(), static_cast<int>(x)) != s.end()) continue;
      std::vector<Point> pts = p.vertices_of(s);
      pts.push_back(p.vertex(static_cast<int>(x)));
      const int o = oracle::orient(pts);
      if (o == 0 || (side != 0 && o != side)) ok = false;
      side = o;
    }
    if (ok) out.insert(s);
  }
  return out;
}

bool contained_in_some(const std::set<IndexSet>& facets, const IndexSet& s) {
  return std::any_of(facets.begin(), facets.end(), [&](const IndexSet& f) {
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

// family tags read directly off the index inequalities
std::vector<FaceType5> tags_oracle(int n, int a, int b, int c) {
  std::vector<FaceType5> t;
  if (a == 1 && 1 < b && b < c && c <= n) t.push_back(FaceType5::T1ij);
  if (1 <= a && a < b && c == n) t.push_back(FaceType5::Tijn);
  if (b == a + 1 && 1 < a && a < c - 1 && c - 1 < n) t.push_back(FaceType5::Ti_i1_j);
  if (c == b + 1 && 1 < a && a < b && b < n - 1) t.push_back(FaceType5::Tij_j1);
  return t;
}

}  // namespace

TEST_CASE("pentagon facets are its edges") {
  const auto p = CyclicPolytope::standard(2, 5);
  const std::vector<IndexSet> expected{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(p.facets() == expected);
}

TEST_CASE("evenness facets match supporting hyperplanes") {
  for (std::size_t d = 2; d <= 5; ++d) {
    for (std::size_t n = d + 1; n <= d + 4; ++n) {
      const auto p = CyclicPolytope::standard(d, n);
      const auto oracle = facets_oracle(p);
      const std::set<IndexSet> gale(p.facets().begin(), p.facets().end());
      CHECK_MESSAGE(gale == oracle, "d=" << d << " n=" << n);
      const auto hyper = facets_by_hyperplanes(p);
      CHECK(std::set<IndexSet>(hyper.begin(), hyper.end()) == oracle);
      for (const auto& f : p.facets()) CHECK(f.size() == d);
    }
  }
}

TEST_CASE("non-standard parameters give the same combinatorics") {
  const CyclicPolytope p(4, {ratio(-3, 1), ratio(-1, 2), Rational(0), ratio(2, 3), Rational(5), Rational(7)});
  const std::set<IndexSet> gale(p.facets().begin(), p.facets().end());
  CHECK(gale == facets_oracle(p));
  CHECK(p.facets() == CyclicPolytope::standard(4, 6).facets());
}

TEST_CASE("face membership examples") {
  const auto p6 = CyclicPolytope::standard(6, 7);
  CHECK(is_face(p6, {2, 4, 6}));
  const auto p5_7 = CyclicPolytope::standard(5, 7);
  const auto p5_8 = CyclicPolytope::standard(5, 8);
  CHECK_FALSE(is_face(p5_7, {2, 4, 6}));
  CHECK_FALSE(is_face(p5_8, {2, 4, 6}));
  CHECK(is_face(p5_8, {1, 3, 5}));
  CHECK(is_face(p5_8, {3, 5, 8}));
  CHECK(is_face(p5_8, {2, 3, 6}));
  CHECK(is_face(p5_8, {2, 5, 6}));
  CHECK_FALSE(is_face(p5_8, {2, 5, 7}));
}

TEST_CASE("six-dimensional cyclic polytopes are 3-neighborly") {
  for (std::size_t n = 7; n <= 12; ++n) {
    const auto p = CyclicPolytope::standard(6, n);
    CHECK(is_k_neighborly(p, 3));
    if (n > 7) CHECK_FALSE(is_k_neighborly(p, 4));  // n = 7 is a simplex
  }
  // against supporting hyperplanes directly
  for (std::size_t n = 7; n <= 9; ++n) {
    const auto p = CyclicPolytope::standard(6, n);
    const auto facets = facets_oracle(p);
    for (const auto& s : label_subsets(n, 3)) CHECK(contained_in_some(facets, s));
  }
}

TEST_CASE("five-dimensional 2-faces are exactly the four families") {
  for (std::size_t n = 6; n <= 10; ++n) {
    const auto p = CyclicPolytope::standard(5, n);
    const auto facets = facets_oracle(p);
    const auto classified = two_faces_classified(p);
    std::size_t faces = 0;
    for (const auto& s : label_subsets(n, 3)) {
      const bool face = contained_in_some(facets, s);
      auto tags = tags_oracle(static_cast<int>(n), s[0], s[1], s[2]);
      CHECK_MESSAGE(face == !tags.empty(), "n=" << n << " " << s[0] << s[1] << s[2]);
      auto got = face_types5(n, s);
      std::sort(got.begin(), got.end());
      std::sort(tags.begin(), tags.end());
      CHECK(got == tags);
      if (face) {
        ++faces;
        REQUIRE(classified.count(s) == 1);
      } else {
        CHECK(classified.count(s) == 0);
      }
    }
    CHECK(classified.size() == faces);
  }
}

TEST_CASE("family tag examples") {
  const auto t = face_types5(8, {1, 3, 5});
  CHECK(std::find(t.begin(), t.end(), FaceType5::T1ij) != t.end());
  const auto u = face_types5(8, {2, 3, 6});
  CHECK(u == std::vector<FaceType5>{FaceType5::Ti_i1_j});
  CHECK(face_types5(8, {2, 4, 6}).empty());
  CHECK(to_string(FaceType5::Tijn) == "ijn");
}

TEST_CASE("face barycenter") {
  const auto p = CyclicPolytope::standard(5, 8);
  const IndexSet s{2, 3, 6};
  const auto b = face_barycenter(p, s);
  for (std::size_t k = 0; k < 5; ++k) {
    Rational sum = 0;
    for (int i : s) sum += p.vertex(i)[k];
    CHECK(b[k] == sum / 3);
  }
  CHECK(point_in_hull(b, p.vertices_of(s)));
  CHECK_THROWS_AS(face_barycenter(p, {2, 4, 6}), InvalidInput);
}
