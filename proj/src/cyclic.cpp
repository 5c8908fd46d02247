#include "ncv/cyclic.hpp"

#include <algorithm>

#include "ncv/errors.hpp"

namespace ncv {

namespace {

bool gale_even(const IndexSet& s, std::size_t n) {
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    if (std::binary_search(s.begin(), s.end(), i)) continue;
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      const auto between = std::count_if(s.begin(), s.end(), [&](int v) { return i < v && v < j; });
      if (between % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<IndexSet> label_subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<int>(i + 1);
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == static_cast<int>(n - k + i)) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

CyclicPolytope::CyclicPolytope(std::size_t d, std::vector<Rational> params)
    : d_(d), params_(std::move(params)) {
  if (d < 2) throw InvalidInput("cyclic polytope needs d >= 2");
  if (params_.size() < d + 1) throw InvalidInput("cyclic polytope needs n >= d + 1");
  for (std::size_t i = 1; i < params_.size(); ++i) {
    if (params_[i - 1] >= params_[i]) throw InvalidInput("parameters must increase strictly");
  }
  for (const auto& t : params_) {
    std::vector<Rational> c(d);
    Rational power = t;
    for (std::size_t k = 0; k < d; ++k) {
      c[k] = power;
      power *= t;
    }
    vertices_.emplace_back(std::move(c));
  }
  for (auto& s : label_subsets(params_.size(), d)) {
    if (gale_even(s, params_.size())) facets_.push_back(std::move(s));
  }
}

CyclicPolytope CyclicPolytope::standard(std::size_t d, std::size_t n) {
  std::vector<Rational> params;
  for (std::size_t i = 1; i <= n; ++i) params.emplace_back(static_cast<unsigned long>(i));
  return CyclicPolytope(d, std::move(params));
}

std::vector<Point> CyclicPolytope::vertices_of(const IndexSet& s) const {
  std::vector<Point> out;
  for (int v : s) out.push_back(vertex(v));
  return out;
}

std::vector<IndexSet> facets_by_hyperplanes(const CyclicPolytope& p) {
  std::vector<IndexSet> out;
  for (auto& s : label_subsets(p.size(), p.dim())) {
    auto tuple = p.vertices_of(s);
    tuple.emplace_back();
    Sign side = Sign::Zero;
    bool supporting = true;
    for (int v = 1; v <= static_cast<int>(p.size()) && supporting; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      tuple.back() = p.vertex(v);
      const Sign o = orientation(tuple);
      if (o == Sign::Zero || (side != Sign::Zero && o != side)) supporting = false;
      side = o;
    }
    if (supporting) out.push_back(std::move(s));
  }
  return out;
}

bool is_face(const CyclicPolytope& p, const IndexSet& s) {
  if (s.empty()) throw InvalidInput("is_face needs a nonempty set");
  return std::any_of(p.facets().begin(), p.facets().end(), [&](const IndexSet& f) {
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

bool is_k_neighborly(const CyclicPolytope& p, std::size_t k) {
  const auto subsets = label_subsets(p.size(), k);
  return std::all_of(subsets.begin(), subsets.end(), [&](const IndexSet& s) { return is_face(p, s); });
}

std::string_view to_string(FaceType5 t) {
  switch (t) {
    case FaceType5::T1ij: return "1ij";
    case FaceType5::Tijn: return "ijn";
    case FaceType5::Ti_i1_j: return "i(i+1)j";
    case FaceType5::Tij_j1: return "ij(j+1)";
  }
  return "?";
}

std::vector<FaceType5> face_types5(std::size_t n, const IndexSet& triple) {
  if (triple.size() != 3) throw InvalidInput("face_types5 needs a triple");
  const int a = triple[0], b = triple[1], c = triple[2];
  const int last = static_cast<int>(n);
  std::vector<FaceType5> tags;
  if (a == 1) tags.push_back(FaceType5::T1ij);
  if (c == last) tags.push_back(FaceType5::Tijn);
  if (a > 1 && b == a + 1 && c > b) tags.push_back(FaceType5::Ti_i1_j);
  if (a > 1 && c == b + 1 && c < last) tags.push_back(FaceType5::Tij_j1);
  return tags;
}

std::map<IndexSet, std::vector<FaceType5>> two_faces_classified(const CyclicPolytope& p) {
  if (p.dim() != 5 || p.size() < 6) throw InvalidInput("classification needs d = 5 and n >= 6");
  std::map<IndexSet, std::vector<FaceType5>> out;
  for (const auto& s : label_subsets(p.size(), 3)) {
    auto tags = face_types5(p.size(), s);
    if (is_face(p, s) != !tags.empty()) {
      throw InternalError("2-face families disagree with the facet structure");
    }
    if (!tags.empty()) out.emplace(s, std::move(tags));
  }
  return out;
}

Point face_barycenter(const CyclicPolytope& p, const IndexSet& s) {
  if (!is_face(p, s)) throw InvalidInput("barycenter of a non-face");
  const auto pts = p.vertices_of(s);
  return barycenter(pts);
}

}  // namespace ncv
