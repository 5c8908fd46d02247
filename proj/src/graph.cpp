#include "ncv/graph.hpp"

#include "ncv/errors.hpp"

namespace ncv {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw InvalidInput("edge endpoint out of range");
  if (u == v) return;
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

bool is_clique(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (coloring.size() != g.size()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

}  // namespace ncv
