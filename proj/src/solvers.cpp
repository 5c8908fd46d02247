#include "ncv/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

constexpr std::size_t kMaskBits = 64;

std::vector<std::size_t> mask_elements(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t element_mask(const std::vector<std::size_t>& elems) {
  std::uint64_t m = 0;
  for (auto e : elems) m |= std::uint64_t{1} << e;
  return m;
}

// ---------------------------------------------------------------- max clique

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  // Largest clique within `candidates`; stops early once `stop_at` is reached.
  std::size_t run(const VertexSet& candidates, std::size_t stop_at) {
    best_ = 0;
    stop_at_ = stop_at;
    cur_ = 0;
    expand(candidates);
    return best_;
  }

 private:
  void expand(VertexSet p) {
    if (p.none()) {
      best_ = std::max(best_, cur_);
      return;
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    VertexSet q = p;
    std::size_t color = 0;
    while (q.any()) {
      ++color;
      VertexSet u = q;
      for (auto v = u.find_first(); v != VertexSet::npos; v = u.find_next(v)) {
        u -= g_.neighbors(v);
        q.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (cur_ + bound[i] <= best_ || best_ >= stop_at_) return;
      const auto v = order[i];
      ++cur_;
      expand(p & g_.neighbors(v));
      --cur_;
      p.reset(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
  std::size_t stop_at_ = 0;
  std::size_t cur_ = 0;
};

// ---------------------------------------------------------------- coloring

class ColorSearch {
 public:
  ColorSearch(const Graph& g, std::size_t k)
      : g_(g), k_(k), color_(g.size(), -1), counts_(g.size() * k, 0), sat_(g.size(), 0), free_deg_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) free_deg_[v] = g.degree(v);
  }

  bool run() { return dfs(0, 0); }
  const std::vector<int>& coloring() const { return color_; }

 private:
  void assign(std::size_t v, int c) {
    color_[v] = c;
    const auto& nb = g_.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      if (counts_[u * k_ + c]++ == 0) ++sat_[u];
      --free_deg_[u];
    }
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    color_[v] = -1;
    const auto& nb = g_.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      if (--counts_[u * k_ + c] == 0) --sat_[u];
      ++free_deg_[u];
    }
  }

  bool dfs(std::size_t colored, int used) {
    const std::size_t n = g_.size();
    if (colored == n) return true;
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (color_[v] >= 0) continue;
      if (pick == n || sat_[v] > sat_[pick] ||
          (sat_[v] == sat_[pick] && free_deg_[v] > free_deg_[pick])) {
        pick = v;
      }
    }
    if (sat_[pick] >= k_) return false;
    const int limit = std::min<int>(used + 1, static_cast<int>(k_));
    for (int c = 0; c < limit; ++c) {
      if (counts_[pick * k_ + c] != 0) continue;
      assign(pick, c);
      if (dfs(colored + 1, std::max(used, c + 1))) return true;
      unassign(pick);
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<int> color_;
  std::vector<int> counts_;
  std::vector<std::size_t> sat_;
  std::vector<std::size_t> free_deg_;  // neighbours still uncolored
};

std::vector<int> relabel_by_first_appearance(const std::vector<int>& coloring) {
  std::unordered_map<int, int> map;
  std::vector<int> out(coloring.size());
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    auto it = map.find(coloring[v]);
    if (it == map.end()) it = map.emplace(coloring[v], static_cast<int>(map.size())).first;
    out[v] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------- cover

class MaximalSetEnumerator {
 public:
  MaximalSetEnumerator(std::size_t n, const SubsetPredicate& feasible)
      : n_(n), feasible_(feasible) {}

  std::vector<std::uint64_t> run() {
    std::vector<std::size_t> p(n_);
    std::iota(p.begin(), p.end(), 0);
    recurse(0, p, {});
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  bool test(std::uint64_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    const bool ok = feasible_(mask_elements(mask));
    memo_.emplace(mask, ok);
    return ok;
  }

  void recurse(std::uint64_t r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
    if (p.empty()) {
      if (x.empty()) out_.push_back(r);
      return;
    }
    while (!p.empty()) {
      const auto v = p.front();
      const std::uint64_t rv = r | (std::uint64_t{1} << v);
      std::vector<std::size_t> p2, x2;
      for (std::size_t i = 1; i < p.size(); ++i) {
        if (test(rv | (std::uint64_t{1} << p[i]))) p2.push_back(p[i]);
      }
      for (auto u : x) {
        if (test(rv | (std::uint64_t{1} << u))) x2.push_back(u);
      }
      recurse(rv, std::move(p2), std::move(x2));
      p.erase(p.begin());
      x.push_back(v);
    }
  }

  std::size_t n_;
  const SubsetPredicate& feasible_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::vector<std::uint64_t> out_;
};

// Enumerator for predicates decided by their subsets of size <= 3: a set is
// feasible iff it contains no infeasible pair or triple. Uses a pivot rule
// valid for such systems to skip branches that cannot lead to new maximal sets.
class SmallRankEnumerator {
 public:
  SmallRankEnumerator(std::size_t n, const SubsetPredicate& feasible, std::size_t rank)
      : n_(n), bad_pair_(n, 0), bad_triple_(n * n, 0) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rank >= 2 && !feasible({a, b})) {
          bad_pair_[a] |= bit(b);
          bad_pair_[b] |= bit(a);
        }
      }
    }
    if (rank < 3) return;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (bad_pair_[a] & bit(b)) continue;
        for (std::size_t c = b + 1; c < n; ++c) {
          if ((bad_pair_[a] | bad_pair_[b]) & bit(c)) continue;
          if (feasible({a, b, c})) continue;
          bad_triple_[a * n + b] |= bit(c);
          bad_triple_[b * n + a] |= bit(c);
          bad_triple_[a * n + c] |= bit(b);
          bad_triple_[c * n + a] |= bit(b);
          bad_triple_[b * n + c] |= bit(a);
          bad_triple_[c * n + b] |= bit(a);
        }
      }
    }
  }

  std::vector<std::uint64_t> run() {
    recurse(0, n_ == kMaskBits ? ~std::uint64_t{0} : bit(n_) - 1, 0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  // Elements that cannot join a set containing v and `with`.
  std::uint64_t blocked(std::size_t v, std::uint64_t with) const {
    std::uint64_t b = bad_pair_[v];
    for (; with; with &= with - 1) b |= bad_triple_[v * n_ + std::countr_zero(with)];
    return b;
  }

  void recurse(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (!p) {
      if (!x) out_.push_back(r);
      return;
    }
    // Every maximal set avoiding the pivot u contains a P-element blocked
    // together with u, so only those (and u itself) need branching.
    std::uint64_t branch = p;
    for (std::uint64_t cand = p | x; cand; cand &= cand - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(cand));
      const std::uint64_t b = (p & blocked(u, r | p)) | (p & bit(u));
      if (std::popcount(b) < std::popcount(branch)) branch = b;
    }
    for (; branch; branch &= branch - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(branch));
      const std::uint64_t block = blocked(v, r) | bit(v);
      recurse(r | bit(v), p & ~block, x & ~block);
      p &= ~bit(v);
      x |= bit(v);
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> bad_pair_;
  std::vector<std::uint64_t> bad_triple_;
  std::vector<std::uint64_t> out_;
};

class SetCoverSearch {
 public:
  SetCoverSearch(std::size_t n, const std::vector<std::uint64_t>& sets)
      : n_(n), sets_(sets), containing_(n), together_(n, 0) {
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (auto e : mask_elements(sets_[s])) {
        if (e < n_) {
          containing_[e].push_back(s);
          together_[e] |= sets_[s];
        }
      }
    }
  }

  std::vector<std::size_t> run() {
    const std::uint64_t all = n_ == kMaskBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    for (std::size_t e = 0; e < n_; ++e) {
      if (containing_[e].empty()) throw InvalidInput("element not covered by any set");
    }
    best_ = greedy(all);
    std::vector<std::size_t> chosen;
    search(all, chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy(std::uint64_t uncovered) const {
    std::vector<std::size_t> chosen;
    while (uncovered) {
      std::size_t pick = 0;
      int gain = -1;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const int g = std::popcount(sets_[s] & uncovered);
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      chosen.push_back(pick);
      uncovered &= ~sets_[pick];
    }
    return chosen;
  }

  // Elements no two of which share a set each need their own part.
  std::size_t lower_bound(std::uint64_t uncovered) const {
    std::size_t count = 0;
    std::uint64_t blocked = 0;
    for (auto e : mask_elements(uncovered)) {
      if (blocked & (std::uint64_t{1} << e)) continue;
      ++count;
      blocked |= together_[e];
    }
    return count;
  }

  void search(std::uint64_t uncovered, std::vector<std::size_t>& chosen) {
    if (!uncovered) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + std::max<std::size_t>(1, lower_bound(uncovered)) >= best_.size()) return;
    std::size_t pivot = n_;
    for (auto e : mask_elements(uncovered)) {
      if (pivot == n_ || containing_[e].size() < containing_[pivot].size()) pivot = e;
    }
    auto options = containing_[pivot];
    std::stable_sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(sets_[a] & uncovered) > std::popcount(sets_[b] & uncovered);
    });
    for (auto s : options) {
      chosen.push_back(s);
      search(uncovered & ~sets_[s], chosen);
      chosen.pop_back();
    }
  }

  std::size_t n_;
  const std::vector<std::uint64_t>& sets_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::uint64_t> together_;
  std::vector<std::size_t> best_;
};

void check_mask_capacity(const char* what, std::size_t n, std::size_t capacity) {
  const std::size_t limit = std::min(capacity, kMaskBits);
  if (n > limit) throw CapacityError(what, n, limit);
}

// TabuCol local search for a proper k-coloring; empty if none is found
// within the move budget. Seeded, so runs are reproducible.
std::vector<int> tabu_coloring(const Graph& g, std::size_t k, std::size_t max_moves) {
  const std::size_t n = g.size();
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL ^ (n * 131 + k));
  std::vector<int> color(n);
  for (auto& c : color) c = static_cast<int>(gen() % k);
  std::vector<long> adj(n * k, 0);  // neighbours of v with color c
  long conflicts = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      ++adj[v * k + static_cast<std::size_t>(color[u])];
      if (u > v && color[u] == color[v]) ++conflicts;
    }
  }
  std::vector<std::size_t> tabu(n * k, 0);
  for (std::size_t move = 1; move <= max_moves && conflicts > 0; ++move) {
    long best = std::numeric_limits<long>::max();
    std::size_t bv = n, bc = 0, ties = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const long own = adj[v * k + static_cast<std::size_t>(color[v])];
      if (own == 0) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (static_cast<int>(c) == color[v]) continue;
        const long delta = adj[v * k + c] - own;
        // aspiration: a tabu move is allowed if it reaches a new best
        if (tabu[v * k + c] >= move && conflicts + delta > 0) continue;
        if (delta < best) {
          best = delta;
          bv = v;
          bc = c;
          ties = 1;
        } else if (delta == best && gen() % ++ties == 0) {
          bv = v;
          bc = c;
        }
      }
    }
    if (bv == n) continue;
    const auto old = static_cast<std::size_t>(color[bv]);
    color[bv] = static_cast<int>(bc);
    conflicts += best;
    tabu[bv * k + old] = move + static_cast<std::size_t>(conflicts * 6 / 10) + gen() % 10;
    const auto& nb = g.neighbors(bv);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      --adj[u * k + old];
      ++adj[u * k + bc];
    }
  }
  if (conflicts > 0) return {};
  return color;
}

}  // namespace

SubsetResult max_clique(const Graph& g, std::size_t capacity) {
  const std::size_t n = g.size();
  if (n > capacity) throw CapacityError("max_clique", n, capacity);
  if (n == 0) return {};
  CliqueSearch search(g);
  VertexSet all(n);
  all.set();
  const std::size_t omega = search.run(all, n);

  // Lexicographically least maximum clique, one vertex at a time.
  SubsetResult result{omega, {}};
  VertexSet cand = all;
  for (std::size_t v = 0; v < n && result.vertices.size() < omega; ++v) {
    if (!cand[v]) continue;
    VertexSet rest = cand & g.neighbors(v);
    for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
    const std::size_t need = omega - result.vertices.size() - 1;
    if (need == 0 || search.run(rest, need) >= need) {
      result.vertices.push_back(v);
      cand = rest;
    }
  }
  return result;
}

std::vector<int> k_coloring(const Graph& g, std::size_t k) {
  if (g.size() == 0) return {};
  if (k == 0) return {};
  ColorSearch search(g, k);
  if (!search.run()) return {};
  return relabel_by_first_appearance(search.coloring());
}

ColoringResult chromatic_number(const Graph& g, std::size_t capacity) {
  const std::size_t n = g.size();
  if (n > capacity) throw CapacityError("chromatic_number", n, capacity);
  if (n == 0) return {};
  const std::size_t lower = max_clique(g, std::max(capacity, n)).size;
  // Unbounded DSATUR never backtracks: it is the greedy upper bound.
  auto best = k_coloring(g, n);
  std::size_t upper = static_cast<std::size_t>(*std::max_element(best.begin(), best.end())) + 1;
  // Heuristic upper bounds first; the exact search below settles the rest.
  while (upper > lower) {
    auto c = tabu_coloring(g, upper - 1, 50000);
    if (c.empty()) break;
    best = std::move(c);
    --upper;
  }
  for (std::size_t k = lower; k < upper; ++k) {
    auto c = k_coloring(g, k);
    if (!c.empty()) {
      best = std::move(c);
      upper = k;
      break;
    }
  }
  return {upper, relabel_by_first_appearance(best)};
}

std::vector<std::uint64_t> maximal_feasible_sets(std::size_t n, const SubsetPredicate& feasible,
                                                std::size_t rank) {
  check_mask_capacity("maximal_feasible_sets", n, kMaskBits);
  if (rank >= 1 && rank <= 3) return SmallRankEnumerator(n, feasible, rank).run();
  return MaximalSetEnumerator(n, feasible).run();
}

CoverCertificate exact_set_cover(std::size_t n, const std::vector<std::uint64_t>& sets) {
  check_mask_capacity("exact_set_cover", n, kMaskBits);
  CoverCertificate cert;
  if (n == 0) return cert;
  for (auto s : SetCoverSearch(n, sets).run()) cert.parts.push_back(mask_elements(sets[s]));
  std::sort(cert.parts.begin(), cert.parts.end());
  return cert;
}

CoverCertificate min_cover(std::size_t n, const SubsetPredicate& feasible, std::size_t capacity,
                           std::size_t rank) {
  check_mask_capacity("min_cover", n, capacity);
  for (std::size_t i = 0; i < n; ++i) {
    if (!feasible({i})) throw InvalidInput("singleton " + std::to_string(i) + " is infeasible");
  }
  return exact_set_cover(n, maximal_feasible_sets(n, feasible, rank));
}

bool is_valid_cover(std::size_t n, const CoverCertificate& cover, const SubsetPredicate& feasible) {
  std::vector<bool> seen(n, false);
  for (const auto& part : cover.parts) {
    if (part.empty() || !std::is_sorted(part.begin(), part.end())) return false;
    for (auto e : part) {
      if (e >= n) return false;
      seen[e] = true;
    }
    if (!feasible(part)) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

SubsetResult max_transitive_subtournament(const Tournament& t, std::size_t capacity) {
  const std::size_t n = t.size();
  check_mask_capacity("max_transitive_subtournament", n, capacity);
  if (n == 0) return {};
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && t.beats(u, v)) out[u] |= std::uint64_t{1} << v;
    }
  }
  // A transitive subset is a chain source -> ... -> sink; each vertex is
  // chosen among the out-neighbours common to all earlier ones.
  std::uint64_t best_mask = 0;
  std::size_t best = 0;
  std::vector<std::size_t> chain;
  auto better = [&](std::uint64_t mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size != best) return size > best;
    // Lexicographically smaller sorted set: compare lowest differing element.
    const std::uint64_t diff = mask ^ best_mask;
    return (mask & (diff & -diff)) != 0;
  };
  auto dfs = [&](auto&& self, std::uint64_t cand, std::uint64_t chosen) -> void {
    const auto depth = static_cast<std::size_t>(std::popcount(chosen));
    if (depth + static_cast<std::size_t>(std::popcount(cand)) < best) return;
    if (!cand) {
      if (better(chosen)) {
        best = depth;
        best_mask = chosen;
      }
      return;
    }
    for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      self(self, cand & out[v], chosen | (std::uint64_t{1} << v));
    }
  };
  dfs(dfs, n == kMaskBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1), 0);
  return {best, mask_elements(best_mask)};
}

SubsetResult max_rainbow_free_subset(const EdgeColoring3& c, std::size_t capacity) {
  const std::size_t n = c.size();
  check_mask_capacity("max_rainbow_free_subset", n, capacity);
  if (n == 0) return {};
  // bad[u][v]: third vertices w making {u, v, w} rainbow.
  std::vector<std::uint64_t> bad(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != u && w != v && c.is_rainbow(u, v, w)) bad[u * n + v] |= std::uint64_t{1} << w;
      }
    }
  }
  std::uint64_t best_mask = 0;
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  // Ascending inclusion order visits sets lexicographically, so the first set
  // reaching the final optimum is the lexicographically least one.
  auto dfs = [&](auto&& self, std::uint64_t cand) -> void {
    if (chosen.size() > best) {
      best = chosen.size();
      best_mask = element_mask(chosen);
    }
    if (chosen.size() + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
    for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      std::uint64_t next = rest & (rest - 1);  // strictly larger candidates
      for (auto r : chosen) next &= ~bad[r * n + v];
      chosen.push_back(v);
      self(self, next);
      chosen.pop_back();
      if (chosen.size() + static_cast<std::size_t>(std::popcount(rest)) - 1 <= best) return;
    }
  };
  dfs(dfs, n == kMaskBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  return {best, mask_elements(best_mask)};
}

}  // namespace ncv
