#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ncv/config.hpp"
#include "ncv/graph.hpp"
#include "ncv/rational.hpp"
#include "ncv/tournament.hpp"

namespace ncv {

/// SplitMix64 stream. The output sequence for a given seed is fixed across
/// platforms and releases; any change must bump kName.
class Rng {
 public:
  static constexpr std::string_view kName = "splitmix64/v1";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t uniform(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

  /// Seed of an independent child stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

struct ShiftGraph {
  std::size_t n = 0;
  std::size_t k = 0;
  /// Vertex labels: k-subsets of {1..n} in lexicographic order.
  std::vector<std::vector<int>> labels;
  Graph graph;
};

/// S(n, k): k-subsets of [n], with {i1..ik} ~ {i2..ik+1} for i1 < ... < ik+1.
/// S(n, n) is a single vertex.
ShiftGraph shift_graph(std::size_t n, std::size_t k, std::size_t capacity = 4096);

Tournament sample_tournament(std::size_t n, std::uint64_t seed);
EdgeColoring3 sample_coloring3(std::size_t n, std::uint64_t seed);

/// Smallest k with k >= 2 log2(n) + 2, computed in integers.
std::size_t directed_triangle_threshold(std::size_t n);

struct TournamentSearchResult {
  Tournament tournament;
  std::uint64_t seed = 0;      // seed that produced it
  std::size_t tries = 0;       // trials used, including the successful one
  std::size_t max_transitive = 0;
  std::size_t threshold = 0;   // every subset this large has a directed triangle
};

/// Resamples seeded tournaments until the largest transitive subtournament
/// is below directed_triangle_threshold(n). Lowest successful trial wins.
TournamentSearchResult find_triangle_tournament(std::size_t n, std::size_t max_tries,
                                                std::uint64_t seed_base,
                                                std::size_t capacity = Capacities{}.tournament);

struct ColoringSearchResult {
  EdgeColoring3 coloring;
  std::uint64_t seed = 0;
  std::size_t tries = 0;
  std::size_t max_rainbow_free = 0;
  std::size_t target = 0;
};

/// Resamples seeded 3-colorings until the largest rainbow-free subset has at
/// most `target` vertices.
ColoringSearchResult find_rainbow_coloring(std::size_t n, std::size_t max_tries,
                                           std::uint64_t seed_base, std::size_t target,
                                           std::size_t capacity = Capacities{}.rainbow);

Rational factorial(std::size_t k);
Rational binomial(std::size_t n, std::size_t k);

/// Fraction of orientations of K_k that are acyclic: k! / 2^{k(k-1)/2}.
Rational acyclic_fraction_bound(std::size_t k);

/// C(n, k) * acyclic_fraction_bound(k): expected number of transitive k-sets.
Rational directed_triangle_union_bound(std::size_t n, std::size_t k);

/// Probability that a fixed triangle of a uniform 3-coloring is not rainbow.
Rational bad_triple_probability();

}  // namespace ncv
