#pragma once

#include <vector>

#include <geogrow/numeric.hpp>

namespace geogrow {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat objective;        // meaningful when optimal
  std::vector<Rat> x;   // primal point, size = number of columns
};

// Solves min c.x subject to A x = b, x >= 0, in exact rational arithmetic.
// Two-phase primal simplex with Bland's rule, so it always terminates.
// Sized for the small systems of this library (a handful of rows, tens of
// columns); no attempt at sparsity.
LpSolution lp_minimize(const std::vector<std::vector<Rat>>& a,
                       const std::vector<Rat>& b, const std::vector<Rat>& c);

// Feasibility of {A x = b, x >= 0} (phase one only).
bool lp_feasible(const std::vector<std::vector<Rat>>& a,
                 const std::vector<Rat>& b);

}  // namespace geogrow
