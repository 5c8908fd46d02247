#pragma once

// Random small planar punctured sets on an integer grid, where collinear
// triples are common.

#include <algorithm>

#include "ncv/gadgets.hpp"
#include "ncv/punctured.hpp"

namespace testgen {

struct SmallInstance {
  ncv::PuncturedSet set;
  ncv::WitnessSet witnesses;
};

inline SmallInstance random_instance(ncv::Rng& rng, std::size_t max_witnesses = 12, std::size_t max_holes = 5) {
  using ncv::Point;
  std::vector<Point> pool;
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) pool.push_back({x, y});
  }
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.uniform(i)]);
  const std::size_t holes = rng.uniform(max_holes + 1);
  const std::size_t wits = 1 + rng.uniform(max_witnesses);
  std::vector<Point> h(pool.begin(), pool.begin() + holes);
  ncv::WitnessSet w(pool.begin() + holes, pool.begin() + holes + wits);
  ncv::ConvexAmbient ambient;
  if (rng.coin()) {
    ambient = ncv::Disc{Point{0, 0}, 18};
  } else {
    ambient = ncv::Polytope{{{-4, -4}, {4, -4}, {4, 4}, {-4, 4}}};
  }
  return {ncv::PuncturedSet(ambient, std::move(h)), std::move(w)};
}

}  // namespace testgen
