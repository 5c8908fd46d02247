#include "ncv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

constexpr double kSize = 400.0;
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  double min_x, min_y, scale;
  double x(const Point& p) const { return 10 + (p[0].get_d() - min_x) * scale; }
  double y(const Point& p) const { return kSize - 10 - (p[1].get_d() - min_y) * scale; }
};

std::string header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kSize) +
         "\" height=\"" + num(kSize) + "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
}

std::string polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
  std::string s = "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(pts[i].first) + ',' + num(pts[i].second);
  }
  return s + "\" " + style + "/>\n";
}

}  // namespace

std::string plot_planar(const PuncturedSet& x, const WitnessSet& w, const PlotOptions& opts) {
  if (x.dim() != 2) throw InvalidInput("plot needs a planar instance or a face selection");
  double lo_x, lo_y, span;
  std::vector<Point> outline;
  const Disc* disc = std::get_if<Disc>(&x.ambient());
  if (disc) {
    const double r = std::sqrt(disc->radius2.get_d());
    lo_x = disc->center[0].get_d() - r;
    lo_y = disc->center[1].get_d() - r;
    span = 2 * r;
  } else {
    outline = planar_hull(std::get<Polytope>(x.ambient()).vertices);
    double hx = -1e300, hy = -1e300;
    lo_x = lo_y = 1e300;
    for (const auto& p : outline) {
      lo_x = std::min(lo_x, p[0].get_d());
      lo_y = std::min(lo_y, p[1].get_d());
      hx = std::max(hx, p[0].get_d());
      hy = std::max(hy, p[1].get_d());
    }
    span = std::max(hx - lo_x, hy - lo_y);
  }
  const Frame f{lo_x, lo_y, (kSize - 20) / span};

  std::ostringstream out;
  out << header();
  if (disc) {
    out << "<circle cx=\"" << num(f.x(disc->center)) << "\" cy=\"" << num(f.y(disc->center)) << "\" r=\""
        << num(std::sqrt(disc->radius2.get_d()) * f.scale) << "\" fill=\"none\" stroke=\"black\"/>\n";
  } else {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : outline) pts.emplace_back(f.x(p), f.y(p));
    out << polygon(pts, "fill=\"none\" stroke=\"black\"");
  }

  std::vector<int> cls(w.size(), -1);
  if (opts.cover) {
    for (std::size_t k = 0; k < opts.cover->parts.size(); ++k) {
      std::vector<Point> part;
      for (auto i : opts.cover->parts[k]) {
        if (i >= w.size()) throw InvalidInput("cover refers to a missing witness");
        part.push_back(w[i]);
        if (cls[i] < 0) cls[i] = static_cast<int>(k);
      }
      const auto hull = part.size() > 2 ? planar_hull(part) : part;
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : hull) pts.emplace_back(f.x(p), f.y(p));
      const std::string color = kPalette[k % 10];
      out << polygon(pts, "fill=\"" + color + "\" fill-opacity=\"0.2\" stroke=\"" + color + "\"");
    }
  } else if (opts.classes) {
    if (opts.classes->size() != w.size()) throw InvalidInput("one class per witness expected");
    cls = *opts.classes;
  }

  for (const auto& h : x.holes()) {
    const double cx = f.x(h), cy = f.y(h);
    out << "<path d=\"M" << num(cx - 4) << ' ' << num(cy - 4) << " L" << num(cx + 4) << ' ' << num(cy + 4)
        << " M" << num(cx - 4) << ' ' << num(cy + 4) << " L" << num(cx + 4) << ' ' << num(cy - 4)
        << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::string color = cls[i] < 0 ? "black" : kPalette[cls[i] % 10];
    out << "<circle cx=\"" << num(f.x(w[i])) << "\" cy=\"" << num(f.y(w[i])) << "\" r=\"2.5\" fill=\"" << color
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string plot_face6(const Construction6& c, const IndexSet& face) {
  if (face.size() != 3) throw InvalidInput("face slice needs three labels");
  IndexSet f = face;
  std::sort(f.begin(), f.end());
  const auto& poly = c.polytope;
  for (int l : f) {
    if (l < 1 || l > static_cast<int>(poly.size())) throw InvalidInput("face label out of range");
  }
  const Point a = poly.vertex(f[0]), b = poly.vertex(f[1]), d = poly.vertex(f[2]);
  // Barycentric (u, v, w) -> plane and -> R^6.
  auto to_plane = [](const Rational& v, const Rational& w) {
    const double s = kSize - 40;
    const double px = 20 + s * (v.get_d() + 0.5 * w.get_d());
    const double py = kSize - 20 - s * (std::sqrt(3.0) / 2) * w.get_d();
    return std::make_pair(px, py);
  };
  auto to_space = [&](const Rational& v, const Rational& w) { return a + v * (b - a) + w * (d - a); };
  auto fill = [](ColorBW col) { return col == ColorBW::White ? std::string("white") : std::string("black"); };

  // Boundary walk a -> b -> d -> a with breakpoints at thirds.
  const std::pair<Rational, Rational> corner[3] = {{0, 0}, {1, 0}, {0, 1}};
  std::vector<std::pair<Rational, Rational>> walk;
  for (int e = 0; e < 3; ++e) {
    const auto& p = corner[e];
    const auto& q = corner[(e + 1) % 3];
    for (const Rational& t : {Rational(0), Rational(1, 3), Rational(2, 3)}) {
      walk.emplace_back(p.first + t * (q.first - p.first), p.second + t * (q.second - p.second));
    }
  }
  const Rational third(1, 3);
  std::ostringstream out;
  out << header();
  out << polygon({to_plane(0, 0), to_plane(1, 0), to_plane(0, 1)}, "fill=\"black\" stroke=\"none\"");
  const bool directed = std::binary_search(c.directed_faces.begin(), c.directed_faces.end(), f);
  for (std::size_t k = 0; k < walk.size(); ++k) {
    const auto& p = walk[k];
    const auto& q = walk[(k + 1) % walk.size()];
    const Rational mv = (p.first + q.first) / 2, mw = (p.second + q.second) / 2;
    const ColorBW col = color6(c, to_space(mv, mw));
    if (directed) {
      out << polygon({to_plane(third, third), to_plane(p.first, p.second), to_plane(q.first, q.second)},
                     "fill=\"" + fill(col) + "\" stroke=\"none\"");
    }
    const auto s = to_plane(p.first, p.second), e = to_plane(q.first, q.second);
    out << "<line x1=\"" << num(s.first) << "\" y1=\"" << num(s.second) << "\" x2=\"" << num(e.first)
        << "\" y2=\"" << num(e.second) << "\" stroke=\"" << (col == ColorBW::White ? "#bbbbbb" : "black")
        << "\" stroke-width=\"4\"/>\n";
  }
  out << polygon({to_plane(0, 0), to_plane(1, 0), to_plane(0, 1)}, "fill=\"none\" stroke=\"gray\"");
  if (directed) {
    const auto g = to_plane(third, third);
    out << "<path d=\"M" << num(g.first - 4) << ' ' << num(g.second - 4) << " L" << num(g.first + 4) << ' '
        << num(g.second + 4) << " M" << num(g.first - 4) << ' ' << num(g.second + 4) << " L"
        << num(g.first + 4) << ' ' << num(g.second - 4) << "\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ncv
