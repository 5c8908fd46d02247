#pragma once

#include <cstddef>

namespace ncv {

/// Instance-size limits for the exact searches. Exceeding one raises
/// CapacityError instead of falling back to an approximation.
struct Capacities {
  std::size_t exhaustive = 12;   // ordered-subset searches in exact-core
  std::size_t clique = 64;
  std::size_t chromatic = 64;
  std::size_t cover = 64;        // hard ceiling (bitmask representation)
  std::size_t tournament = 40;   // hard ceiling 64
  std::size_t rainbow = 24;      // hard ceiling 64
};

}  // namespace ncv
