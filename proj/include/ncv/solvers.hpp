#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ncv/config.hpp"
#include "ncv/graph.hpp"
#include "ncv/tournament.hpp"

namespace ncv {

/// A size together with the (sorted) vertex subset that realises it.
struct SubsetResult {
  std::size_t size = 0;
  std::vector<std::size_t> vertices;
};

/// Maximum clique by branch and bound with greedy-coloring bounds. Among all
/// maximum cliques the lexicographically least one is returned.
SubsetResult max_clique(const Graph& g, std::size_t capacity = Capacities{}.clique);

struct ColoringResult {
  std::size_t colors = 0;
  /// 0-based colors, relabelled in order of first appearance.
  std::vector<int> coloring;
};

/// Exact chromatic number: clique lower bound, DSATUR upper bound tightened
/// by seeded tabu search, then an exact DSATUR k-colorability search for
/// each k in between.
ColoringResult chromatic_number(const Graph& g, std::size_t capacity = Capacities{}.chromatic);

/// Exact k-colorability search. Returns a coloring or an empty vector.
std::vector<int> k_coloring(const Graph& g, std::size_t k);

/// Feasibility of a subset of element indices (passed sorted ascending).
using SubsetPredicate = std::function<bool(const std::vector<std::size_t>&)>;

struct CoverCertificate {
  /// Sorted parts, each sorted ascending.
  std::vector<std::vector<std::size_t>> parts;
};

/// All inclusion-maximal feasible subsets of {0..n-1} as bitmasks. The
/// predicate must be monotone (subsets of feasible sets are feasible).
///
/// A nonzero `rank` r <= 3 declares that a set is feasible iff all its
/// subsets of size <= r are (planar hull tests have r = 3 by
/// Caratheodory); the predicate is then only queried on those small sets.
std::vector<std::uint64_t> maximal_feasible_sets(std::size_t n, const SubsetPredicate& feasible,
                                                std::size_t rank = 0);

/// Minimum-cardinality exact set cover of {0..n-1} by the given sets.
CoverCertificate exact_set_cover(std::size_t n, const std::vector<std::uint64_t>& sets);

/// Minimum number of feasible parts covering {0..n-1}. Requires a monotone
/// predicate with every singleton feasible (InvalidInput otherwise).
CoverCertificate min_cover(std::size_t n, const SubsetPredicate& feasible,
                           std::size_t capacity = Capacities{}.cover, std::size_t rank = 0);

/// Checks a cover certificate against the predicate.
bool is_valid_cover(std::size_t n, const CoverCertificate& cover, const SubsetPredicate& feasible);

/// Largest vertex subset inducing a transitive subtournament
/// (lexicographically least among the largest).
SubsetResult max_transitive_subtournament(const Tournament& t,
                                          std::size_t capacity = Capacities{}.tournament);

/// Largest vertex subset spanning no rainbow triangle
/// (lexicographically least among the largest).
SubsetResult max_rainbow_free_subset(const EdgeColoring3& c,
                                     std::size_t capacity = Capacities{}.rainbow);

}  // namespace ncv
