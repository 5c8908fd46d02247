#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncv/gadgets.hpp"
#include "ncv/rational.hpp"

namespace ncv {

/// One piece of an edge partition: an interval of the edge parameter and the
/// index (1-based) of the convex part it belongs to.
struct PartInterval {
  Rational lo, hi;
  bool lo_closed = false;
  bool hi_closed = true;
  int part = 1;
};

/// Ordered intervals tiling (0,1]. A convex part meets an edge in an
/// interval, so each part index appears at most once.
using EdgePartition = std::vector<PartInterval>;

struct TypeEntry {
  int part = 0;
  bool left_closed = false;
  bool right_closed = false;
  auto operator<=>(const TypeEntry&) const = default;
};

/// Part indices (absolute, not renumbered) with interval end flags.
using PartitionType = std::vector<TypeEntry>;

/// Throws InvalidInput unless p tiles (0,1] with distinct parts in 1..k
/// (k = 0 skips the upper check).
void validate_partition(const EdgePartition& p, int k = 0);

PartitionType partition_type(const EdgePartition& p);

/// 2^k * k! * 2^(k-1)
mpz_class type_count_bound(std::size_t k);

/// Least k with n <= type_count_bound(k) + 1 (n >= 2).
std::size_t gamma_floor(std::size_t n);

/// First pair (by index) of edges with equal types.
std::optional<std::pair<std::size_t, std::size_t>> find_same_type_pair(
    const std::vector<EdgePartition>& edges);

/// Random partition into at most k parts drawn from 1..k, with occasional
/// one-point intervals.
EdgePartition random_partition(int k, Rng& rng);

}  // namespace ncv
