#include "ncv/tournament.hpp"

#include <algorithm>

#include "ncv/errors.hpp"

namespace ncv {

Tournament Tournament::transitive(std::size_t n) {
  Tournament t(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) t.orient(u, v);
  }
  return t;
}

void Tournament::orient(std::size_t tail, std::size_t head) {
  if (tail >= size() || head >= size() || tail == head) {
    throw InvalidInput("invalid tournament edge");
  }
  out_[tail].set(head);
  out_[head].reset(tail);
}

bool Tournament::is_cyclic_triple(std::size_t a, std::size_t b, std::size_t c) const {
  return (beats(a, b) && beats(b, c) && beats(c, a)) ||
         (beats(b, a) && beats(c, b) && beats(a, c));
}

bool Tournament::is_transitive_subset(const std::vector<std::size_t>& vertices) const {
  // A tournament is transitive iff its score sequence is 0, 1, ..., m-1.
  std::vector<std::size_t> scores;
  for (auto u : vertices) {
    std::size_t s = 0;
    for (auto v : vertices) {
      if (u != v && beats(u, v)) ++s;
    }
    scores.push_back(s);
  }
  std::sort(scores.begin(), scores.end());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] != i) return false;
  }
  return true;
}

void EdgeColoring3::set_color(std::size_t u, std::size_t v, int c) {
  if (u >= n_ || v >= n_ || u == v || c < 1 || c > 3) {
    throw InvalidInput("invalid edge coloring entry");
  }
  color_[u * n_ + v] = static_cast<std::uint8_t>(c);
  color_[v * n_ + u] = static_cast<std::uint8_t>(c);
}

bool EdgeColoring3::is_rainbow(std::size_t a, std::size_t b, std::size_t c) const {
  const int x = color(a, b), y = color(b, c), z = color(a, c);
  return x != y && y != z && x != z;
}

bool EdgeColoring3::is_rainbow_free(const std::vector<std::size_t>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      for (std::size_t k = j + 1; k < vertices.size(); ++k) {
        if (is_rainbow(vertices[i], vertices[j], vertices[k])) return false;
      }
    }
  }
  return true;
}

}  // namespace ncv
