#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ncv/cover_bound.hpp"
#include "ncv/errors.hpp"

using namespace ncv;

namespace {

PartInterval piece(Rational lo, Rational hi, bool lc, bool hc, int part) {
  return PartInterval{std::move(lo), std::move(hi), lc, hc, part};
}

// number of sequences of distinct parts with one closed end per junction
mpz_class count_types(std::size_t k) {
  mpz_class total = 0, perms = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    perms *= static_cast<unsigned long>(k - m + 1);
    total += perms * (mpz_class(1) << static_cast<mp_bitcnt_t>(m - 1));
  }
  return total;
}

bool same_type(const EdgePartition& a, const EdgePartition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].part != b[i].part || a[i].lo_closed != b[i].lo_closed || a[i].hi_closed != b[i].hi_closed)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("type count bound values") {
  CHECK(type_count_bound(1) == 2);
  CHECK(type_count_bound(2) == 16);
  CHECK(type_count_bound(3) == 192);
  CHECK(type_count_bound(4) == 3072);
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(count_types(k) <= type_count_bound(k));
    CHECK(type_count_bound(k + 1) > type_count_bound(k));
  }
}

TEST_CASE("gamma floor") {
  CHECK(gamma_floor(2) == 1);
  CHECK(gamma_floor(3) == 1);
  CHECK(gamma_floor(4) == 2);
  CHECK(gamma_floor(17) == 2);
  CHECK(gamma_floor(18) == 3);
  CHECK(gamma_floor(193) == 3);
  CHECK(gamma_floor(200) == 4);
  std::size_t prev = 0;
  for (std::size_t n = 2; n <= 4000; ++n) {
    const auto g = gamma_floor(n);
    CHECK(g >= prev);
    CHECK(mpz_class(static_cast<unsigned long>(n)) <= type_count_bound(g) + 1);
    if (g > 1) CHECK(mpz_class(static_cast<unsigned long>(n)) > type_count_bound(g - 1) + 1);
    prev = g;
  }
}

TEST_CASE("partition validation") {
  const EdgePartition ok{piece(0, ratio(1, 2), false, true, 1), piece(ratio(1, 2), 1, false, true, 2)};
  CHECK_NOTHROW(validate_partition(ok, 2));
  CHECK_THROWS_AS(validate_partition(ok, 1), InvalidInput);
  const EdgePartition gap{piece(0, ratio(1, 3), false, true, 1), piece(ratio(1, 2), 1, false, true, 2)};
  CHECK_THROWS_AS(validate_partition(gap), InvalidInput);
  const EdgePartition repeat{piece(0, ratio(1, 3), false, true, 1), piece(ratio(1, 3), ratio(2, 3), false, true, 2),
                             piece(ratio(2, 3), 1, false, true, 1)};
  CHECK_THROWS_AS(validate_partition(repeat), InvalidInput);
  const EdgePartition overlap{piece(0, ratio(1, 2), false, true, 1), piece(ratio(1, 2), 1, true, true, 2)};
  CHECK_THROWS_AS(validate_partition(overlap), InvalidInput);
  const EdgePartition missing{piece(0, ratio(1, 2), false, false, 1), piece(ratio(1, 2), 1, false, true, 2)};
  CHECK_THROWS_AS(validate_partition(missing), InvalidInput);
  const EdgePartition point{piece(0, ratio(1, 2), false, false, 1), piece(ratio(1, 2), ratio(1, 2), true, true, 3),
                            piece(ratio(1, 2), 1, false, true, 2)};
  CHECK_NOTHROW(validate_partition(point, 3));
  const EdgePartition open_point{piece(0, ratio(1, 2), false, true, 1), piece(ratio(1, 2), ratio(1, 2), false, true, 3),
                                 piece(ratio(1, 2), 1, false, true, 2)};
  CHECK_THROWS_AS(validate_partition(open_point), InvalidInput);
  const EdgePartition short_end{piece(0, ratio(1, 2), false, true, 1)};
  CHECK_THROWS_AS(validate_partition(short_end), InvalidInput);
}

TEST_CASE("partition type keeps parts and end flags") {
  const EdgePartition p{piece(0, ratio(1, 4), false, false, 3), piece(ratio(1, 4), 1, true, true, 1)};
  const PartitionType expected{{3, false, false}, {1, true, true}};
  CHECK(partition_type(p) == expected);
}

TEST_CASE("random partitions are valid and their types stay under the bound") {
  Rng rng(11);
  for (int k = 1; k <= 4; ++k) {
    std::set<PartitionType> seen;
    for (int s = 0; s < 3000; ++s) {
      const auto p = random_partition(k, rng);
      CHECK_NOTHROW(validate_partition(p, k));
      seen.insert(partition_type(p));
    }
    CHECK(mpz_class(static_cast<unsigned long>(seen.size())) <= count_types(static_cast<std::size_t>(k)));
  }
}

TEST_CASE("pigeonhole finds equal types") {
  for (int k = 1; k <= 3; ++k) {
    const auto bound = type_count_bound(static_cast<std::size_t>(k)).get_ui();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      std::vector<EdgePartition> edges;
      for (std::size_t e = 0; e < bound + 1; ++e) edges.push_back(random_partition(k, rng));
      const auto pair = find_same_type_pair(edges);
      REQUIRE(pair.has_value());
      CHECK(pair->first < pair->second);
      CHECK(same_type(edges[pair->first], edges[pair->second]));
      for (std::size_t j = 0; j < pair->second; ++j) {
        for (std::size_t i = 0; i < j; ++i) CHECK_FALSE(same_type(edges[i], edges[j]));
      }
    }
  }
  CHECK_FALSE(find_same_type_pair({}).has_value());
}
