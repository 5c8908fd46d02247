#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncv/build6.hpp"
#include "ncv/punctured.hpp"
#include "ncv/solvers.hpp"

namespace ncv {

struct PlotOptions {
  /// Cover parts drawn as translucent hulls; witnesses take the color of
  /// their first part.
  std::optional<CoverCertificate> cover;
  /// Per-witness color classes (used when no cover is given).
  std::optional<std::vector<int>> classes;
};

/// SVG 1.1 drawing of a planar punctured set: ambient outline, holes as
/// crosses, witnesses as dots. Throws InvalidInput unless dim == 2.
std::string plot_planar(const PuncturedSet& x, const WitnessSet& w, const PlotOptions& opts = {});

/// Two-tone drawing of color6 on the triangular face with the given labels,
/// laid out as an equilateral triangle.
std::string plot_face6(const Construction6& c, const IndexSet& face);

}  // namespace ncv
