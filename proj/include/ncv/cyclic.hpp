#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "ncv/geometry.hpp"

namespace ncv {

/// Sorted vertex labels. Cyclic-polytope vertices are labelled 1..n.
using IndexSet = std::vector<int>;

/// Convex hull of v_i = (t_i, t_i^2, ..., t_i^d) for t_1 < ... < t_n.
class CyclicPolytope {
 public:
  CyclicPolytope(std::size_t d, std::vector<Rational> params);
  /// Parameters t_i = i.
  static CyclicPolytope standard(std::size_t d, std::size_t n);

  std::size_t dim() const { return d_; }
  std::size_t size() const { return params_.size(); }
  const std::vector<Rational>& params() const { return params_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int label) const { return vertices_.at(static_cast<std::size_t>(label - 1)); }
  std::vector<Point> vertices_of(const IndexSet& s) const;

  /// Facets by Gale's evenness condition, lexicographically sorted.
  const std::vector<IndexSet>& facets() const { return facets_; }

 private:
  std::size_t d_;
  std::vector<Rational> params_;
  std::vector<Point> vertices_;
  std::vector<IndexSet> facets_;
};

/// Facets found by exact supporting-hyperplane tests on every d-subset.
std::vector<IndexSet> facets_by_hyperplanes(const CyclicPolytope& p);

/// S is contained in some facet (the polytope is simplicial).
bool is_face(const CyclicPolytope& p, const IndexSet& s);

/// Every k-subset of vertices is a face.
bool is_k_neighborly(const CyclicPolytope& p, std::size_t k);

enum class FaceType5 { T1ij, Tijn, Ti_i1_j, Tij_j1 };

std::string_view to_string(FaceType5 t);

/// Families of 5-dimensional 2-faces that the triple belongs to:
/// {1,i,j}; {i,j,n}; {i,i+1,j} with 1 < i, i+1 < j; {i,j,j+1} with 1 < i < j, j+1 < n.
std::vector<FaceType5> face_types5(std::size_t n, const IndexSet& triple);

/// All 2-faces of a 5-dimensional cyclic polytope with their family tags.
/// Throws InternalError if the faces and the union of families differ.
std::map<IndexSet, std::vector<FaceType5>> two_faces_classified(const CyclicPolytope& p);

/// Mean of the vertices of a face. Throws InvalidInput if S is not a face.
Point face_barycenter(const CyclicPolytope& p, const IndexSet& s);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> label_subsets(std::size_t n, std::size_t k);

}  // namespace ncv
