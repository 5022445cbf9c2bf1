#include <geogrow/hull.hpp>

#include <algorithm>
#include <set>

#include <geogrow/lp.hpp>

namespace geogrow {

bool Polytope::contains(const VecQ& x) const {
  for (const Facet& f : facets) {
    Rat lhs(0);
    for (int j = 0; j < m; ++j) lhs += Rat(f.normal[j]) * x[j];
    if (lhs > f.offset) return false;
  }
  return true;
}

bool Polytope::strictly_contains(const VecQ& x) const {
  for (const Facet& f : facets) {
    Rat lhs(0);
    for (int j = 0; j < m; ++j) lhs += Rat(f.normal[j]) * x[j];
    if (lhs >= f.offset) return false;
  }
  return true;
}

bool Polytope::origin_interior() const {
  for (const Facet& f : facets)
    if (f.offset <= 0) return false;
  return true;
}

Polytope Polytope::scaled(const Rat& s) const {
  require(s > 0, ErrorKind::config, "polytope scale must be positive");
  Polytope out = *this;
  for (VecQ& v : out.vertices)
    for (int j = 0; j < m; ++j) v[j] *= s;
  for (Facet& f : out.facets) f.offset *= s;
  return out;
}

int compare_vecq(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

VecQ to_vecq(const VecZ& v) {
  VecQ q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

int rational_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      Rat f = rows[r][c] / prow[c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * prow[j];
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return std::nullopt;
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

Int det_small(const MatZ& a) {
  Eigen::Index n = a.rows();
  require(n == a.cols(), ErrorKind::config, "determinant of non-square matrix");
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Int d = 0;
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k, sign = -sign) {
    if (a(0, k) == 0) continue;
    MatZ minor(n - 1, n - 1);
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, jj = 0; j < n; ++j) {
        if (j == k) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    d += sign * a(0, k) * det_small(minor);
  }
  return d;
}

VecZ kernel_direction(const std::vector<VecZ>& rows, int m) {
  require(static_cast<int>(rows.size()) == m - 1, ErrorKind::config,
          "kernel_direction expects m-1 rows");
  VecZ u = VecZ::Zero(m);
  int sign = 1;
  for (int j = 0; j < m; ++j, sign = -sign) {
    MatZ minor(m - 1, m - 1);
    for (int i = 0; i < m - 1; ++i)
      for (int c = 0, cc = 0; c < m; ++c) {
        if (c == j) continue;
        minor(i, cc++) = rows[static_cast<std::size_t>(i)][c];
      }
    u[j] = sign * det_small(minor);
  }
  return u;
}

namespace {

VecZ primitive(VecZ v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  if (g > 1)
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

struct FacetLess {
  bool operator()(const Facet& a, const Facet& b) const {
    int c = compare_vec(a.normal, b.normal);
    if (c != 0) return c < 0;
    return a.offset < b.offset;
  }
};

// True when p is a convex combination of the other points (exact LP).
bool in_hull_of_others(int m, const std::vector<VecQ>& pts, std::size_t skip) {
  std::size_t n = pts.size() - 1;
  if (n == 0) return false;
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(m) + 1,
                                  std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> b(static_cast<std::size_t>(m) + 1, Rat(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == skip) continue;
    for (int j = 0; j < m; ++j) a[static_cast<std::size_t>(j)][col] = pts[i][j];
    a[static_cast<std::size_t>(m)][col] = 1;
    ++col;
  }
  for (int j = 0; j < m; ++j) b[static_cast<std::size_t>(j)] = pts[skip][j];
  b[static_cast<std::size_t>(m)] = 1;
  return lp_feasible(a, b);
}

}  // namespace

Polytope convex_hull(int m, const std::vector<VecQ>& points) {
  require(m >= 1, ErrorKind::config, "hull dimension must be positive");
  require(m <= 4, ErrorKind::config, "hull supports dimension <= 4");
  std::vector<VecQ> pts;
  for (const VecQ& p : points) {
    require(p.size() == m, ErrorKind::config, "hull point dimension mismatch");
    bool dup = false;
    for (const VecQ& q : pts) dup = dup || compare_vecq(p, q) == 0;
    if (!dup) pts.push_back(p);
  }
  require(pts.size() >= static_cast<std::size_t>(m) + 1, ErrorKind::config,
          "hull is not full-dimensional");
  {
    std::vector<std::vector<Rat>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      std::vector<Rat> row(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(j)] = pts[i][j] - pts[0][j];
      diffs.push_back(std::move(row));
    }
    require(rational_rank(std::move(diffs)) == m, ErrorKind::config,
            "hull is not full-dimensional");
  }

  Polytope poly;
  poly.m = m;

  // Facets: every m-subset spanning a hyperplane that supports the set.
  std::set<Facet, FacetLess> facets;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m));
  auto scan = [&](auto&& self, std::size_t depth, std::size_t first) -> void {
    if (depth == idx.size()) {
      // Integer normal through the chosen points: clear denominators of the
      // difference vectors, then take the generalized cross product.
      std::vector<VecZ> rows;
      for (std::size_t i = 1; i < idx.size(); ++i) {
        Int lcm_den(1);
        for (int j = 0; j < m; ++j) {
          Rat d = pts[idx[i]][j] - pts[idx[0]][j];
          lcm_den = lcm(lcm_den, denominator(d));
        }
        VecZ row(m);
        for (int j = 0; j < m; ++j) {
          Rat d = (pts[idx[i]][j] - pts[idx[0]][j]) * lcm_den;
          row[j] = numerator(d);
        }
        rows.push_back(std::move(row));
      }
      VecZ normal = kernel_direction(rows, m);
      bool zero = true;
      for (int j = 0; j < m; ++j) zero = zero && normal[j] == 0;
      if (!zero) {
        normal = primitive(std::move(normal));
        Rat offset(0);
        for (int j = 0; j < m; ++j) offset += Rat(normal[j]) * pts[idx[0]][j];
        bool above = false, below = false;
        for (const VecQ& p : pts) {
          Rat v(0);
          for (int j = 0; j < m; ++j) v += Rat(normal[j]) * p[j];
          above = above || v > offset;
          below = below || v < offset;
        }
        if (!above)
          facets.insert({normal, offset});
        else if (!below) {
          for (int j = 0; j < m; ++j) normal[j] = -normal[j];
          facets.insert({std::move(normal), -offset});
        }
      }
      return;
    }
    for (std::size_t i = first; i < pts.size(); ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  scan(scan, 0, 0);
  poly.facets.assign(facets.begin(), facets.end());
  require(!poly.facets.empty(), ErrorKind::internal, "hull produced no facets");

  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!in_hull_of_others(m, pts, i)) poly.vertices.push_back(pts[i]);
  std::sort(poly.vertices.begin(), poly.vertices.end(),
            [](const VecQ& a, const VecQ& b) { return compare_vecq(a, b) < 0; });

  // Structural sanity: vertices satisfy every facet, with equality on at
  // least m of them.
  for (const VecQ& v : poly.vertices) {
    int tight = 0;
    for (const Facet& f : poly.facets) {
      Rat lhs(0);
      for (int j = 0; j < m; ++j) lhs += Rat(f.normal[j]) * v[j];
      require(lhs <= f.offset, ErrorKind::internal, "hull vertex violates facet");
      if (lhs == f.offset) ++tight;
    }
    require(tight >= m, ErrorKind::internal, "hull vertex under-determined");
  }
  return poly;
}

}  // namespace geogrow
