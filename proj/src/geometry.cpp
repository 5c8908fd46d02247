#include "ncv/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ncv/errors.hpp"

namespace ncv {

Point& Point::operator+=(const Point& other) {
  if (dim() != other.dim()) throw InvalidInput("point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  if (dim() != other.dim()) throw InvalidInput("point dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw InvalidInput("point dimension mismatch");
}

// Row echelon in place; returns rank.
std::size_t eliminate(std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_rank(std::span<const Point> pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back((pts[i] - pts[0]).coords());
  return eliminate(m);
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

}  // namespace

Rational dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational squared_norm(const Point& a) { return dot(a, a); }

Point barycenter(std::span<const Point> points) {
  if (points.empty()) throw InvalidInput("barycenter of an empty set");
  Point sum = Point::zero(points[0].dim());
  for (const auto& p : points) sum += p;
  sum *= Rational(1, static_cast<unsigned long>(points.size()));
  return sum;
}

Point lerp(const Point& a, const Point& b, const Rational& t) { return a + t * (b - a); }

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Sign orientation(std::span<const Point> tuple) {
  if (tuple.empty()) throw InvalidInput("orientation of an empty tuple");
  const std::size_t d = tuple[0].dim();
  if (tuple.size() != d + 1) throw InvalidInput("orientation needs d+1 points in R^d");
  std::vector<std::vector<Rational>> m;
  m.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) {
    require_same_dim(tuple[i], tuple[0]);
    m.push_back((tuple[i] - tuple[0]).coords());
  }
  return to_sign(sgn(determinant(std::move(m))));
}

std::optional<Rational> line_parameter(const Point& p, const Point& q, const Point& h) {
  require_same_dim(p, q);
  require_same_dim(p, h);
  std::optional<Rational> t;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const Rational dir = q[i] - p[i];
    const Rational off = h[i] - p[i];
    if (dir == 0) {
      if (off != 0) return std::nullopt;
      continue;
    }
    Rational ti = off / dir;
    if (t && *t != ti) return std::nullopt;
    t = std::move(ti);
  }
  return t;
}

bool segment_contains(const Point& p, const Point& q, const Point& h) {
  require_same_dim(p, q);
  require_same_dim(p, h);
  if (p == q) return h == p;
  const auto t = line_parameter(p, q, h);
  return t && *t >= 0 && *t <= 1;
}

std::optional<std::pair<Rational, Rational>> affine_coordinates(const Point& a, const Point& b,
                                                                const Point& c, const Point& p) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  require_same_dim(a, p);
  const Point u = b - a, v = c - a, r = p - a;
  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      const Rational det = u[k] * v[l] - u[l] * v[k];
      if (det == 0) continue;
      const Rational x = (r[k] * v[l] - r[l] * v[k]) / det;
      const Rational y = (u[k] * r[l] - u[l] * r[k]) / det;
      for (std::size_t m = 0; m < d; ++m) {
        if (u[m] * x + v[m] * y != r[m]) return std::nullopt;
      }
      return std::make_pair(x, y);
    }
  }
  throw InvalidInput("degenerate triangle");
}

std::vector<Point> planar_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return sgn((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
  };
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool point_in_hull(const Point& x, std::span<const Point> generators) {
  if (generators.empty()) return false;
  for (const auto& g : generators) require_same_dim(g, x);
  if (x.dim() != 2) return point_in_hull_lp(x, generators);
  const auto hull = planar_hull(generators);
  if (hull.size() == 1) return hull[0] == x;
  if (hull.size() == 2) return segment_contains(hull[0], hull[1], x);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point tri[3] = {hull[i], hull[(i + 1) % hull.size()], x};
    if (orientation(tri) == Sign::Negative) return false;
  }
  return true;
}

bool point_in_hull_lp(const Point& x, std::span<const Point> generators) {
  if (generators.empty()) return false;
  const std::size_t d = x.dim();
  const std::size_t m = generators.size();
  const std::size_t rows = d + 1;
  const std::size_t cols = m + rows;  // lambdas, then artificials
  const std::size_t rhs = cols;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) {
      require_same_dim(generators[j], x);
      t[r][j] = r < d ? generators[j][r] : Rational(1);
    }
    t[r][rhs] = r < d ? x[r] : Rational(1);
    if (t[r][rhs] < 0) {
      for (std::size_t j = 0; j < m; ++j) t[r][j] = -t[r][j];
      t[r][rhs] = -t[r][rhs];
    }
    t[r][m + r] = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;
  // Reduced costs of the phase-one objective (minimise the artificial sum).
  std::vector<Rational> z(cols + 1);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < rows; ++r) z[j] -= t[r][j];
  }
  for (std::size_t r = 0; r < rows; ++r) z[rhs] -= t[r][rhs];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][rhs] / t[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase one
    const Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return z[rhs] == 0;
}

std::size_t max_collinear(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n <= 2) return n;
  std::size_t best = 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t count = 2;
      for (std::size_t k = j + 1; k < n; ++k) {
        const Point tri[3] = {points[i], points[j], points[k]};
        if (orientation(tri) == Sign::Zero) ++count;
      }
      best = std::max(best, count);
    }
  }
  return best;
}

std::size_t max_convex_position(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (const auto& p : points) {
    if (p.dim() != 2) throw InvalidInput("max_convex_position expects planar points");
  }
  std::size_t best = std::min<std::size_t>(n, 2);
  auto turn = [](const Point& a, const Point& b, const Point& c) {
    const Point tri[3] = {a, b, c};
    return orientation(tri);
  };
  // Each polygon is counted from its lowest (then leftmost) vertex; the other
  // vertices follow in increasing angle around it with strict left turns.
  for (std::size_t a = 0; a < n; ++a) {
    const Point& anchor = points[a];
    std::vector<Point> above;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = points[i];
      if (p[1] > anchor[1] || (p[1] == anchor[1] && p[0] > anchor[0])) above.push_back(p);
    }
    std::sort(above.begin(), above.end(), [&](const Point& p, const Point& q) {
      const Sign s = turn(anchor, p, q);
      if (s != Sign::Zero) return s == Sign::Positive;
      return squared_norm(p - anchor) < squared_norm(q - anchor);
    });
    const std::size_t m = above.size();
    // chain[i][j]: most vertices on a convex chain anchor, ..., above[i], above[j].
    std::vector<std::vector<std::size_t>> chain(m, std::vector<std::size_t>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (turn(anchor, above[i], above[j]) != Sign::Positive) continue;
        std::size_t len = 3;
        for (std::size_t k = 0; k < i; ++k) {
          if (chain[k][i] == 0) continue;
          if (turn(above[k], above[i], above[j]) == Sign::Positive) {
            len = std::max(len, chain[k][i] + 1);
          }
        }
        chain[i][j] = len;
        if (turn(above[i], above[j], anchor) == Sign::Positive) best = std::max(best, len);
      }
    }
  }
  return best;
}

bool in_general_position(std::span<const Point> points) {
  if (points.empty()) return true;
  const std::size_t d = points[0].dim();
  const std::size_t n = points.size();
  if (n <= d + 1) return affine_rank(points) == n - 1;
  auto comb = first_combination(d + 1);
  std::vector<Point> tuple(d + 1);
  do {
    for (std::size_t i = 0; i <= d; ++i) tuple[i] = points[comb[i]];
    if (orientation(tuple) == Sign::Zero) return false;
  } while (next_combination(comb, n));
  return true;
}

bool is_same_side_position(std::span<const Point> ordered) {
  if (ordered.empty()) return true;
  const std::size_t d = ordered[0].dim();
  const std::size_t n = ordered.size();
  if (!in_general_position(ordered)) return false;
  if (n <= d) return true;
  auto comb = first_combination(d);
  std::vector<Point> tuple(d + 1);
  do {
    const std::size_t last = comb.back();
    if (last + 1 >= n) continue;
    for (std::size_t i = 0; i < d; ++i) tuple[i] = ordered[comb[i]];
    tuple[d] = ordered[last + 1];
    const Sign side = orientation(tuple);
    for (std::size_t k = last + 2; k < n; ++k) {
      tuple[d] = ordered[k];
      if (orientation(tuple) != side) return false;
    }
  } while (next_combination(comb, n));
  return true;
}

namespace {

class SameSideSearch {
 public:
  explicit SameSideSearch(std::span<const Point> pts) : pts_(pts), d_(pts[0].dim()) {}

  std::size_t run() {
    used_.assign(pts_.size(), false);
    extend();
    return best_;
  }

 private:
  // Sign of orientation(points[idx[0]], ..., points[idx[d]]) in the given order.
  int oriented(std::vector<std::size_t> idx) {
    int parity = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        if (idx[j] < idx[i]) parity = -parity;
      }
    }
    std::sort(idx.begin(), idx.end());
    auto it = memo_.find(idx);
    if (it == memo_.end()) {
      std::vector<Point> tuple;
      for (auto i : idx) tuple.push_back(pts_[i]);
      it = memo_.emplace(idx, static_cast<int>(orientation(tuple))).first;
    }
    return parity * it->second;
  }

  bool can_append(std::size_t q) {
    const std::size_t m = seq_.size();
    if (m < d_) {
      std::vector<Point> sub;
      for (auto i : seq_) sub.push_back(pts_[i]);
      sub.push_back(pts_[q]);
      return affine_rank(sub) == sub.size() - 1;
    }
    auto comb = first_combination(d_);
    std::vector<std::size_t> idx(d_ + 1);
    do {
      for (std::size_t i = 0; i < d_; ++i) idx[i] = seq_[comb[i]];
      idx[d_] = q;
      const int side = oriented(idx);
      if (side == 0) return false;
      const std::size_t last = comb.back();
      if (last + 1 < m) {
        idx[d_] = seq_[last + 1];
        if (oriented(idx) != side) return false;
      }
    } while (next_combination(comb, m));
    return true;
  }

  void extend() {
    best_ = std::max(best_, seq_.size());
    if (best_ == pts_.size()) return;
    // Appendability only shrinks as the prefix grows, so the current
    // candidates bound every completion.
    std::vector<std::size_t> candidates;
    for (std::size_t q = 0; q < pts_.size(); ++q) {
      if (!used_[q] && can_append(q)) candidates.push_back(q);
    }
    if (seq_.size() + candidates.size() <= best_) return;
    for (const auto q : candidates) {
      used_[q] = true;
      seq_.push_back(q);
      extend();
      seq_.pop_back();
      used_[q] = false;
      if (best_ == pts_.size()) return;
    }
  }

  std::span<const Point> pts_;
  std::size_t d_;
  std::vector<bool> used_;
  std::vector<std::size_t> seq_;
  std::size_t best_ = 0;
  std::map<std::vector<std::size_t>, int> memo_;
};

}  // namespace

std::size_t max_same_side_subset(std::span<const Point> points, std::size_t capacity) {
  if (points.size() > capacity) {
    throw CapacityError("max_same_side_subset", points.size(), capacity);
  }
  if (points.empty()) return 0;
  return SameSideSearch(points).run();
}

}  // namespace ncv
