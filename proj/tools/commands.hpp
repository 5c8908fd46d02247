#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace ncv::cli {

struct Options {
  std::string kind;         // construct: disc | six | five; gadget: tournament | rainbow
  std::string measure;      // omega | chi | gamma
  std::string check;        // coloring | acyclic | neighborly | faces | gadget | certificate
  std::string instance;
  std::string certificate;
  std::string face;         // "i,j,k"
  std::string out;
  std::size_t n = 0;
  std::size_t lambda = 0;
  std::size_t d = 0;
  std::size_t max_tries = 1000;
  std::size_t max_len = 9;
  std::size_t samples = 500;
  std::size_t target = 9;
  std::optional<std::size_t> capacity;
  std::uint64_t seed = 1;
  bool refine = false;
};

/// Each returns the process exit code (0 pass, 1 failed check). Errors
/// propagate as exceptions.
int construct(const Options& o);
int solve(const Options& o);
int verify(const Options& o);
int plot(const Options& o);

}  // namespace ncv::cli
