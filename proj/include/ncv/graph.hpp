#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ncv {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  std::size_t size() const { return adj_.size(); }

  /// Ignores loops; adding an existing edge is a no-op.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u][v]; }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Subgraph induced by `vertices` (relabelled in the given order).
  Graph induced(const std::vector<std::size_t>& vertices) const;

 private:
  std::vector<VertexSet> adj_;
};

bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices);
/// Colors are 0-based; checks every edge is bichromatic.
bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);

}  // namespace ncv
