#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncv/graph.hpp"

namespace ncv {

/// Orientation of every edge of K_n. beats(u, v) means the edge is directed
/// from its tail u to its head v.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(std::size_t n) : out_(n, VertexSet(n)) {}

  /// Transitive tournament: u -> v whenever u < v.
  static Tournament transitive(std::size_t n);

  std::size_t size() const { return out_.size(); }
  bool beats(std::size_t u, std::size_t v) const { return out_[u][v]; }
  /// Directs the edge {u, v} as u -> v, replacing any previous direction.
  void orient(std::size_t tail, std::size_t head);
  const VertexSet& out(std::size_t v) const { return out_[v]; }

  /// {a, b, c} forms a directed 3-cycle.
  bool is_cyclic_triple(std::size_t a, std::size_t b, std::size_t c) const;
  /// Induced subtournament is acyclic (equivalently, transitive).
  bool is_transitive_subset(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Tournament& a, const Tournament& b) { return a.out_ == b.out_; }

 private:
  std::vector<VertexSet> out_;
};

/// Edge 3-coloring of K_n with colors 1, 2, 3.
class EdgeColoring3 {
 public:
  EdgeColoring3() = default;
  explicit EdgeColoring3(std::size_t n, int fill = 1)
      : n_(n), color_(n * n, static_cast<std::uint8_t>(fill)) {}

  std::size_t size() const { return n_; }
  int color(std::size_t u, std::size_t v) const { return color_[u * n_ + v]; }
  void set_color(std::size_t u, std::size_t v, int c);

  bool is_rainbow(std::size_t a, std::size_t b, std::size_t c) const;
  bool is_rainbow_free(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const EdgeColoring3& a, const EdgeColoring3& b) {
    return a.n_ == b.n_ && a.color_ == b.color_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> color_;
};

}  // namespace ncv
