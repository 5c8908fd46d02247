#include "ncv/cover_bound.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ncv/errors.hpp"

namespace ncv {

void validate_partition(const EdgePartition& p, int k) {
  if (p.empty()) throw InvalidInput("empty edge partition");
  if (p.front().lo != 0 || p.front().lo_closed) throw InvalidInput("partition must start open at 0");
  if (p.back().hi != 1 || !p.back().hi_closed) throw InvalidInput("partition must end closed at 1");
  std::set<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& iv = p[i];
    if (iv.part < 1 || (k > 0 && iv.part > k)) throw InvalidInput("part index out of range");
    if (!parts.insert(iv.part).second) throw InvalidInput("part index repeated along an edge");
    if (iv.lo > iv.hi || (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed))) {
      throw InvalidInput("empty interval in partition");
    }
    if (i + 1 < p.size()) {
      const auto& next = p[i + 1];
      if (iv.hi != next.lo || iv.hi_closed == next.lo_closed) {
        throw InvalidInput("intervals must meet with exactly one closed end");
      }
    }
  }
}

PartitionType partition_type(const EdgePartition& p) {
  validate_partition(p);
  PartitionType t;
  t.reserve(p.size());
  for (const auto& iv : p) t.push_back({iv.part, iv.lo_closed, iv.hi_closed});
  return t;
}

mpz_class type_count_bound(std::size_t k) {
  if (k == 0) throw InvalidInput("type_count_bound needs k >= 1");
  mpz_class f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  mpz_class p2;
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * k - 1);
  return p2 * f;
}

std::size_t gamma_floor(std::size_t n) {
  if (n < 2) throw InvalidInput("gamma_floor needs n >= 2");
  std::size_t k = 1;
  while (mpz_class(static_cast<unsigned long>(n)) > type_count_bound(k) + 1) ++k;
  return k;
}

std::optional<std::pair<std::size_t, std::size_t>> find_same_type_pair(
    const std::vector<EdgePartition>& edges) {
  std::map<PartitionType, std::size_t> first;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [it, fresh] = first.emplace(partition_type(edges[i]), i);
    if (!fresh) return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

EdgePartition random_partition(int k, Rng& rng) {
  if (k < 1) throw InvalidInput("random_partition needs k >= 1");
  const int m = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(k)));
  std::vector<int> labels(k);
  std::iota(labels.begin(), labels.end(), 1);
  for (int i = k - 1; i > 0; --i) std::swap(labels[i], labels[rng.uniform(i + 1)]);
  labels.resize(m);

  // m - 1 breakpoints on a grid; equal neighbours make a one-point interval.
  std::vector<Rational> cuts;
  do {
    cuts.clear();
    for (int i = 0; i + 1 < m; ++i) {
      cuts.push_back(ratio(static_cast<long>(rng.uniform(64) + 1), 66));
    }
    std::sort(cuts.begin(), cuts.end());
  } while (std::adjacent_find(cuts.begin(), cuts.end(), [&](const Rational& a, const Rational& b) {
             return a == b && &b != &cuts.back() && *(&b + 1) == b;
           }) != cuts.end());

  EdgePartition p;
  Rational lo = 0;
  bool lo_closed = false;
  for (int i = 0; i < m; ++i) {
    PartInterval iv{lo, i + 1 < m ? cuts[i] : Rational(1), lo_closed, true, labels[i]};
    if (i + 1 < m) {
      if (iv.lo == iv.hi) {
        iv.lo_closed = iv.hi_closed = true;
        if (i > 0) p.back().hi_closed = false;
      } else {
        iv.hi_closed = rng.coin();
      }
    }
    lo = iv.hi;
    lo_closed = !iv.hi_closed;
    p.push_back(iv);
  }
  return p;
}

}  // namespace ncv
