#include "ncv/gadgets.hpp"

#include <map>

#include "ncv/errors.hpp"
#include "ncv/solvers.hpp"

namespace ncv {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("uniform bound must be positive");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t stream) {
  Rng a(stream ^ 0x6a09e667f3bcc909ULL);
  Rng b(seed ^ a.next());
  return b.next();
}

ShiftGraph shift_graph(std::size_t n, std::size_t k, std::size_t capacity) {
  if (k < 1 || k > n) throw InvalidInput("shift graph needs 1 <= k <= n");
  const Rational count = binomial(n, k);
  if (count > static_cast<unsigned long>(capacity)) {
    throw CapacityError("shift_graph", static_cast<std::size_t>(count.get_d()), capacity);
  }
  ShiftGraph s{n, k, {}, {}};
  std::vector<int> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = static_cast<int>(i + 1);
  std::map<std::vector<int>, std::size_t> index;
  for (;;) {
    index.emplace(comb, s.labels.size());
    s.labels.push_back(comb);
    std::size_t i = k;
    while (i-- > 0 && comb[i] == static_cast<int>(n - k + i + 1)) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++comb[i];
    for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  s.graph = Graph(s.labels.size());
  for (const auto& lower : s.labels) {
    // Extend each k-set by a larger element to get the shifted partner.
    for (int top = lower.back() + 1; top <= static_cast<int>(n); ++top) {
      std::vector<int> upper(lower.begin() + 1, lower.end());
      upper.push_back(top);
      s.graph.add_edge(index.at(lower), index.at(upper));
    }
  }
  return s;
}

Tournament sample_tournament(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Tournament t(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.coin()) {
        t.orient(u, v);
      } else {
        t.orient(v, u);
      }
    }
  }
  return t;
}

EdgeColoring3 sample_coloring3(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  EdgeColoring3 c(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      c.set_color(u, v, 1 + static_cast<int>(rng.uniform(3)));
    }
  }
  return c;
}

std::size_t directed_triangle_threshold(std::size_t n) {
  if (n == 0) throw InvalidInput("directed_triangle_threshold needs n >= 1");
  // k >= 2 log2 n + 2  <=>  2^(k-2) >= n^2
  const mpz_class square = mpz_class(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  std::size_t e = 0;
  mpz_class power = 1;
  while (power < square) {
    power *= 2;
    ++e;
  }
  return e + 2;
}

TournamentSearchResult find_triangle_tournament(std::size_t n, std::size_t max_tries,
                                                std::uint64_t seed_base, std::size_t capacity) {
  if (n < 7) throw InvalidInput("find_triangle_tournament needs n >= 7");
  const std::size_t k = directed_triangle_threshold(n);
  long best = -1;
  for (std::size_t trial = 0; trial < max_tries; ++trial) {
    const std::uint64_t seed = Rng::derive(seed_base, trial);
    Tournament t = sample_tournament(n, seed);
    const auto tt = max_transitive_subtournament(t, capacity).size;
    if (tt < k) return {std::move(t), seed, trial + 1, tt, k};
    if (best < 0 || static_cast<long>(tt) < best) best = static_cast<long>(tt);
  }
  throw SearchFailure("no tournament with every " + std::to_string(k) +
                          "-set containing a directed triangle within " +
                          std::to_string(max_tries) + " tries",
                      best);
}

ColoringSearchResult find_rainbow_coloring(std::size_t n, std::size_t max_tries,
                                           std::uint64_t seed_base, std::size_t target,
                                           std::size_t capacity) {
  if (n < 3) throw InvalidInput("find_rainbow_coloring needs n >= 3");
  long best = -1;
  for (std::size_t trial = 0; trial < max_tries; ++trial) {
    const std::uint64_t seed = Rng::derive(seed_base, trial);
    EdgeColoring3 c = sample_coloring3(n, seed);
    const auto free = max_rainbow_free_subset(c, capacity).size;
    if (free <= target) return {std::move(c), seed, trial + 1, free, target};
    if (best < 0 || static_cast<long>(free) < best) best = static_cast<long>(free);
  }
  throw SearchFailure("no coloring with rainbow-free subsets of size <= " +
                          std::to_string(target) + " within " + std::to_string(max_tries) +
                          " tries",
                      best);
}

Rational factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational acyclic_fraction_bound(std::size_t k) {
  if (k < 1) throw InvalidInput("acyclic_fraction_bound needs k >= 1");
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, k * (k - 1) / 2);
  Rational q = factorial(k) / Rational(denom);
  q.canonicalize();
  return q;
}

Rational directed_triangle_union_bound(std::size_t n, std::size_t k) {
  if (k > n) throw InvalidInput("directed_triangle_union_bound needs k <= n");
  Rational q = binomial(n, k) * acyclic_fraction_bound(k);
  q.canonicalize();
  return q;
}

Rational bad_triple_probability() {
  // 3! of the 27 colorings of a triangle are rainbow.
  return ratio(27 - 6, 27);
}

}  // namespace ncv
