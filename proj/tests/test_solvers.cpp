#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "ncv/errors.hpp"
#include "ncv/gadgets.hpp"
#include "ncv/solvers.hpp"
#include "oracles.hpp"

using namespace ncv;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph random_graph(Rng& rng, std::size_t n, std::uint64_t density_of_16) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform(16) < density_of_16) g.add_edge(i, j);
    }
  }
  return g;
}

bool proper(const Graph& g, const std::vector<int>& c) {
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

bool clique_check(const Graph& g, const std::vector<std::size_t>& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.has_edge(s[a], s[b])) return false;
    }
  }
  return true;
}

std::size_t brute_transitive(const Tournament& t) {
  std::size_t best = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << t.size()); ++m) {
    const auto s = oracle::members(m);
    if (s.size() <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) {
        for (std::size_t c = b + 1; c < s.size() && ok; ++c) ok = !t.is_cyclic_triple(s[a], s[b], s[c]);
      }
    }
    if (ok) best = s.size();
  }
  return best;
}

std::size_t brute_rainbow_free(const EdgeColoring3& col) {
  std::size_t best = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << col.size()); ++m) {
    const auto s = oracle::members(m);
    if (s.size() <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) {
        for (std::size_t c = b + 1; c < s.size() && ok; ++c) {
          const int x = col.color(s[a], s[b]), y = col.color(s[b], s[c]), z = col.color(s[a], s[c]);
          ok = !(x != y && y != z && x != z);
        }
      }
    }
    if (ok) best = s.size();
  }
  return best;
}

}  // namespace

TEST_CASE("clique examples") {
  CHECK(max_clique(Graph(4)).size == 1);
  CHECK(max_clique(complete(5)).size == 5);
  const auto c5 = max_clique(cycle(5));
  CHECK(c5.size == 2);
  CHECK(c5.vertices == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(max_clique(Graph(10), 8), CapacityError);
}

TEST_CASE("chromatic examples") {
  CHECK(chromatic_number(Graph(3)).colors == 1);
  CHECK(chromatic_number(cycle(7)).colors == 3);
  CHECK(chromatic_number(cycle(8)).colors == 2);
  CHECK(chromatic_number(complete(6)).colors == 6);
  const auto s82 = shift_graph(8, 2);
  CHECK(s82.graph.size() == 28);
  CHECK(chromatic_number(s82.graph).colors == 3);
  CHECK(k_coloring(cycle(5), 2).empty());
  CHECK_THROWS_AS(chromatic_number(Graph(70)), CapacityError);
}

TEST_CASE("clique and chromatic number match brute force") {
  Rng rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng.uniform(11);
    const Graph g = random_graph(rng, n, 1 + rng.uniform(14));
    const auto om = max_clique(g);
    const auto chi = chromatic_number(g);
    CHECK(om.size == oracle::clique_number(g));
    CHECK(clique_check(g, om.vertices));
    CHECK(chi.colors == oracle::chromatic_number(g));
    CHECK(proper(g, chi.coloring));
    CHECK(om.size <= chi.colors);
    // colors relabelled by first appearance
    int next = 0;
    for (int c : chi.coloring) {
      CHECK(c <= next);
      if (c == next) ++next;
    }
  }
}

TEST_CASE("lexicographically least maximum clique") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.uniform(10);
    const Graph g = random_graph(rng, n, 8);
    const auto om = max_clique(g);
    std::vector<std::size_t> least;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      const auto s = oracle::members(m);
      if (s.size() == om.size && clique_check(g, s) && (least.empty() || s < least)) least = s;
    }
    CHECK(om.vertices == least);
  }
}

TEST_CASE("minimum cover examples") {
  const SubsetPredicate all = [](const std::vector<std::size_t>&) { return true; };
  CHECK(min_cover(6, all).parts.size() == 1);

  for (std::size_t k = 1; k <= 4; ++k) {
    // no antipodal pair i, i + k may share a part
    const SubsetPredicate no_antipodes = [k](const std::vector<std::size_t>& s) {
      for (auto a : s) {
        if (std::find(s.begin(), s.end(), (a + k) % (2 * k)) != s.end() && k > 0 && a < k) return false;
      }
      return true;
    };
    const auto cover = min_cover(2 * k, no_antipodes);
    CHECK(cover.parts.size() == oracle::min_cover(2 * k, no_antipodes));
    CHECK(is_valid_cover(2 * k, cover, no_antipodes));
  }

  const SubsetPredicate bad_singleton = [](const std::vector<std::size_t>& s) { return s != std::vector<std::size_t>{2}; };
  CHECK_THROWS_AS(min_cover(4, bad_singleton), InvalidInput);
  CHECK_THROWS_AS(min_cover(30, all, 24), CapacityError);
}

TEST_CASE("minimum cover matches exhaustive search on random monotone predicates") {
  Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng.uniform(12);
    // forbidden pairs and triples; feasible = contains none of them
    std::vector<std::vector<std::size_t>> forbidden;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rng.uniform(8) == 0) forbidden.push_back({a, b});
        for (std::size_t c = b + 1; c < n; ++c) {
          if (rng.uniform(12) == 0) forbidden.push_back({a, b, c});
        }
      }
    }
    const SubsetPredicate feasible = [&](const std::vector<std::size_t>& s) {
      for (const auto& f : forbidden) {
        if (std::includes(s.begin(), s.end(), f.begin(), f.end())) return false;
      }
      return true;
    };
    const auto generic = min_cover(n, feasible);
    const auto fast = min_cover(n, feasible, 64, 3);
    const std::size_t expected = oracle::min_cover(n, feasible);
    CHECK(generic.parts.size() == expected);
    CHECK(fast.parts.size() == expected);
    CHECK(is_valid_cover(n, generic, feasible));
    CHECK(is_valid_cover(n, fast, feasible));

    auto m0 = maximal_feasible_sets(n, feasible);
    auto m3 = maximal_feasible_sets(n, feasible, 3);
    std::sort(m0.begin(), m0.end());
    std::sort(m3.begin(), m3.end());
    CHECK(m0 == m3);
    for (auto m : m0) {
      CHECK(feasible(oracle::members(m)));
      for (std::size_t e = 0; e < n; ++e) {
        if (!(m >> e & 1)) CHECK_FALSE(feasible(oracle::members(m | (std::uint64_t(1) << e))));
      }
    }
  }
}

TEST_CASE("exact set cover") {
  const std::vector<std::uint64_t> sets{0b0011, 0b0110, 0b1100, 0b1001, 0b0111};
  const auto c = exact_set_cover(4, sets);
  CHECK(c.parts.size() == 2);
  CHECK_THROWS_AS(exact_set_cover(3, {0b011}), InvalidInput);
}

TEST_CASE("transitive subtournaments") {
  CHECK(max_transitive_subtournament(Tournament::transitive(9)).size == 9);
  Tournament tri(3);
  tri.orient(0, 1);
  tri.orient(1, 2);
  tri.orient(2, 0);
  CHECK(max_transitive_subtournament(tri).size == 2);

  const auto t16 = sample_tournament(16, 99);
  const auto r16 = max_transitive_subtournament(t16);
  CHECK(r16.size >= 5);
  CHECK(r16.size <= 9);
  CHECK(r16.size == brute_transitive(t16));
  CHECK(max_transitive_subtournament(sample_tournament(16, 99)).vertices == r16.vertices);

  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.uniform(13);
    const auto t = sample_tournament(n, rng.next());
    const auto r = max_transitive_subtournament(t);
    CHECK(r.size == brute_transitive(t));
    CHECK(t.is_transitive_subset(r.vertices));
    const auto floor_log = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n))));
    CHECK(r.size >= floor_log + 1);
  }
  CHECK_THROWS_AS(max_transitive_subtournament(Tournament(41)), CapacityError);
}

TEST_CASE("rainbow-free subsets") {
  CHECK(max_rainbow_free_subset(EdgeColoring3(7, 2)).size == 7);
  EdgeColoring3 k3(3);
  k3.set_color(0, 1, 1);
  k3.set_color(1, 2, 2);
  k3.set_color(0, 2, 3);
  CHECK(max_rainbow_free_subset(k3).size == 2);

  const auto c12 = sample_coloring3(12, 2024);
  const auto r12 = max_rainbow_free_subset(c12);
  CHECK(r12.size == brute_rainbow_free(c12));
  CHECK(c12.is_rainbow_free(r12.vertices));

  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = sample_coloring3(3 + rng.uniform(9), rng.next());
    CHECK(max_rainbow_free_subset(c).size == brute_rainbow_free(c));
  }
}
