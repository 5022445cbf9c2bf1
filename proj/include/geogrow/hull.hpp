#pragma once

#include <optional>
#include <vector>

#include <geogrow/numeric.hpp>

namespace geogrow {

// Closed half-space normal.x <= offset with a primitive integer normal.
struct Facet {
  VecZ normal;
  Rat offset;
};

// Bounded full-dimensional rational polytope in vertex + facet form.
// Vertices are sorted lexicographically and facets by (normal, offset), so
// equal polytopes compare equal component-wise.
struct Polytope {
  int m = 0;
  std::vector<VecQ> vertices;
  std::vector<Facet> facets;

  bool contains(const VecQ& x) const;
  bool strictly_contains(const VecQ& x) const;
  bool origin_interior() const;  // all facet offsets positive
  Polytope scaled(const Rat& s) const;  // s > 0
};

// Exact rational comparison helpers shared by the geometry code.
int compare_vecq(const VecQ& a, const VecQ& b);
VecQ to_vecq(const VecZ& v);

// Rank of a list of rational row vectors, by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rat>> rows);

// Unique solution of a square rational system, or nullopt when singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b);

// One-dimensional kernel direction of m-1 integer row vectors in Z^m via
// signed maximal minors (the generalized cross product).  Zero vector when
// the rows do not have full rank m-1.
VecZ kernel_direction(const std::vector<VecZ>& rows, int m);

// Integer determinant by cofactor expansion; intended for m <= 4.
Int det_small(const MatZ& a);

// Convex hull of a finite rational point set, brute force over facet
// candidate subsets -- exact and adequate for dimension <= 4.  Throws
// Error(config) when the hull is not full-dimensional.
Polytope convex_hull(int m, const std::vector<VecQ>& points);

}  // namespace geogrow
