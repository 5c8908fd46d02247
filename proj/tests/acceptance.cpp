// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "instances.hpp"
#include "ncv/build5.hpp"
#include "ncv/build6.hpp"
#include "ncv/cover_bound.hpp"
#include "ncv/cyclic.hpp"
#include "ncv/gadgets.hpp"
#include "ncv/punctured.hpp"
#include "ncv/solvers.hpp"
#include "oracles.hpp"

using namespace ncv;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      detail << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, const std::function<void(Outcome&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s  %2d  %-28s %s[%.1f s]\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.str().c_str(), secs);
  std::fflush(stdout);
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t(1) << k) < n) ++k;
  return k;
}

std::string str(std::size_t v) { return std::to_string(v); }

}  // namespace

int main() {
  criterion(1, "disc values", [](Outcome& o) {
    for (std::size_t lambda = 4; lambda <= 8; ++lambda) {
      const auto d = build_disc_D(lambda);
      const std::size_t om = omega_witness(d.set, d.witnesses).size;
      const std::size_t ga = gamma_witness(d.set, d.witnesses).parts.size();
      const std::size_t refined = gamma_witness(d.set, refine_boundary_witnesses(d.witnesses)).parts.size();
      const std::size_t want = (lambda + 1) / 2 + 1;
      o.require(om == 3, "omega(D_" + str(lambda) + ") = " + str(om));
      o.require(ga == want, "gamma(D_" + str(lambda) + ") = " + str(ga));
      o.require(refined == ga, "refined gamma(D_" + str(lambda) + ") = " + str(refined));
      o.detail << "l=" << lambda << ":w" << om << ",g" << ga << ",r" << refined << " ";
    }
  });

  criterion(2, "shift graphs", [](Outcome& o) {
    for (std::size_t n = 2; n <= 16; ++n) {
      const auto s = shift_graph(n, 2);
      const auto chi = chromatic_number(s.graph, 128).colors;
      o.require(chi == ceil_log2(n), "chi(S(" + str(n) + ",2)) = " + str(chi));
    }
    for (std::size_t n = 5; n <= 8; ++n) {
      const auto chi = chromatic_number(shift_graph(n, 3).graph, 128).colors;
      o.require(chi >= 2, "chi(S(" + str(n) + ",3)) = " + str(chi));
    }
    o.detail << "n=2..16 k=2, n=5..8 k=3 ";
  });

  criterion(3, "triangle tournaments", [](Outcome& o) {
    for (std::size_t n : {8, 16, 32}) {
      const auto r = find_triangle_tournament(n, 1000, 1);
      const auto check = max_transitive_subtournament(r.tournament);
      const std::size_t k = directed_triangle_threshold(n);
      o.require(check.size < k, "n=" + str(n) + " transitive " + str(check.size));
      o.require(directed_triangle_union_bound(n, k) < 1, "union bound n=" + str(n));
      o.detail << "n=" << n << ":" << check.size << "<" << k << " (" << r.tries << " tries) ";
    }
  });

  criterion(4, "acyclic count", [](Outcome& o) {
    for (std::size_t k = 1; k <= 5; ++k) {
      // count orientations of K_k that some vertex order makes all forward
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
      std::size_t count = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t(1) << pairs.size()); ++m) {
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        bool acyclic = false;
        do {
          std::vector<std::size_t> pos(k);
          for (std::size_t i = 0; i < k; ++i) pos[perm[i]] = i;
          bool forward = true;
          for (std::size_t e = 0; e < pairs.size() && forward; ++e) {
            auto [a, b] = pairs[e];
            if ((m >> e) & 1) std::swap(a, b);
            forward = pos[a] < pos[b];
          }
          acyclic = forward;
        } while (!acyclic && std::next_permutation(perm.begin(), perm.end()));
        count += acyclic;
      }
      Rational total = 1;
      for (std::size_t e = 0; e < pairs.size(); ++e) total *= 2;
      const Rational predicted = acyclic_fraction_bound(k) * total;
      o.require(predicted == Rational(static_cast<long>(count)), "k=" + str(k));
      o.detail << "k=" << k << ":" << count << " ";
    }
  });

  criterion(5, "rainbow colorings", [](Outcome& o) {
    const std::size_t n = 12, target = 9;
    const auto r = find_rainbow_coloring(n, 1000, 1, target);
    std::size_t best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
      const auto vs = oracle::members(m);
      if (vs.size() <= best) continue;
      bool free = true;
      for (std::size_t a = 0; a < vs.size() && free; ++a)
        for (std::size_t b = a + 1; b < vs.size() && free; ++b)
          for (std::size_t c = b + 1; c < vs.size() && free; ++c) {
            const int x = r.coloring.color(vs[a], vs[b]), y = r.coloring.color(vs[b], vs[c]),
                      z = r.coloring.color(vs[a], vs[c]);
            free = !(x != y && y != z && x != z);
          }
      if (free) best = vs.size();
    }
    o.require(best == r.max_rainbow_free, "solver " + str(r.max_rainbow_free) + " vs brute force " + str(best));
    o.require(best <= target, "max rainbow-free " + str(best));
    o.detail << "n=12 max rainbow-free " << best << " <= " << target << " (seed " << r.seed << ") ";
  });

  criterion(6, "cyclic polytopes", [](Outcome& o) {
    for (std::size_t n = 7; n <= 12; ++n) {
      const auto p = CyclicPolytope::standard(6, n);
      for (const auto& s : label_subsets(n, 3)) o.require(is_face(p, s), "d=6 n=" + str(n));
    }
    for (std::size_t n = 6; n <= 10; ++n) {
      const auto p = CyclicPolytope::standard(5, n);
      const auto hyper = facets_by_hyperplanes(p);
      const int last = static_cast<int>(n);
      for (const auto& s : label_subsets(n, 3)) {
        bool face = false;
        for (const auto& f : hyper) face = face || std::includes(f.begin(), f.end(), s.begin(), s.end());
        const int i = s[0], j = s[1], k = s[2];
        const bool family = i == 1 || k == last || (j == i + 1 && i > 1 && k > j) ||
                            (k == j + 1 && i > 1 && k < last);
        o.require(face == family, "d=5 n=" + str(n) + " triple " + str(i) + str(j) + str(k));
      }
      two_faces_classified(p);  // throws on disagreement
    }
    o.detail << "d=6 n<=12 3-neighborly, d=5 n<=10 families ";
  });

  criterion(7, "R^6 construction", [](Outcome& o) {
    for (std::size_t n : {7, 8, 9}) {
      const auto c = build6(n, 1);
      const auto w = witnesses6(c);
      const auto r = verify_coloring6(c, w);
      o.require(r.violations.empty(), "n=" + str(n) + " violations " + str(r.violations.size()));
      o.require(!hull_equivalence_counterexample6(c).has_value(), "hull equivalence n=" + str(n));
      const auto t = max_transitive_subtournament(c.tournament).size;
      o.require(within_log_bound(t, n), "gamma bound n=" + str(n));
      o.detail << "n=" << n << ":|W|=" << w.size() << ",holes=" << c.set.holes().size()
               << ",gamma>=" << gamma_lower_bound6(c).get_str() << " ";
    }
  });

  criterion(8, "R^5 construction", [](Outcome& o) {
    for (std::size_t n : {6, 7}) {
      const auto c = build5(n);
      const auto cycles = find_odd_cycles(c, 9);
      o.require(cycles.cycles.empty(), "odd cycles n=" + str(n));
      const auto h = check_height_ratio(c, 500, 1);
      o.require(h.checks >= 10000 && h.violations.empty(), "height ratio n=" + str(n));
      const auto w = witnesses5(c);
      const auto r = verify_coloring5(c, w);
      o.require(r.violations.empty(), "n=" + str(n) + " violations " + str(r.violations.size()));
      o.detail << "n=" << n << ":ratio checks " << h.checks << ",|W|=" << w.size() << " ";
    }
  });

  criterion(9, "covering floor", [](Outcome& o) {
    for (std::size_t k = 1; k <= 6; ++k) {
      mpz_class want = 1;
      for (std::size_t i = 1; i <= k; ++i) want *= static_cast<unsigned long>(i);
      want <<= static_cast<mp_bitcnt_t>(2 * k - 1);  // 2^k * 2^(k-1)
      o.require(type_count_bound(k) == want, "k=" + str(k));
    }
    for (int k : {2, 3}) {
      const std::size_t edges = type_count_bound(static_cast<std::size_t>(k)).get_ui() + 2;
      std::size_t found = 0;
      for (std::uint64_t trial = 0; trial < 100; ++trial) {
        Rng rng(Rng::derive(9, trial));
        std::vector<EdgePartition> parts;
        for (std::size_t e = 0; e < edges; ++e) parts.push_back(random_partition(k, rng));
        const auto pair = find_same_type_pair(parts);
        found += pair && partition_type(parts[pair->first]) == partition_type(parts[pair->second]);
      }
      o.require(found == 100, "k=" + std::to_string(k) + " found " + str(found));
      o.detail << "k=" << k << ":" << found << "/100 ";
    }
  });

  criterion(10, "chain invariant", [](Outcome& o) {
    Rng rng(2024);
    std::size_t holes = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto inst = testgen::random_instance(rng, 12, 5);
      const auto& x = inst.set;
      const auto& w = inst.witnesses;
      const Graph g = oracle::invisibility_graph(x, w);
      const std::size_t om = omega_witness(x, w).size;
      const std::size_t chi = chi_witness(x, w).colors;
      const std::size_t ga = gamma_witness(x, w).parts.size();
      const std::string tag = "trial " + std::to_string(trial);
      o.require(om <= chi && chi <= ga, tag + " chain");
      o.require(om == oracle::clique_number(g), tag + " omega");
      o.require(chi == oracle::chromatic_number(g), tag + " chi");
      o.require(ga == oracle::gamma(x, w), tag + " gamma");
      holes += x.holes().size();
    }
    o.detail << "200 instances, " << holes << " holes total ";
  });

  return failures == 0 ? 0 : 1;
}
