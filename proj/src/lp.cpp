#include <geogrow/lp.hpp>

namespace geogrow {

namespace {

// Dense Gauss-Jordan tableau.  Rows 0..m-1 hold the constraints with the
// right hand side in the last column; row m holds reduced costs with the
// negated objective value in the corner.
struct Tableau {
  std::size_t m, n;  // constraint rows, structural+artificial columns
  std::vector<std::vector<Rat>> t;
  std::vector<std::size_t> basis;  // basis[i] = column basic in row i

  void pivot(std::size_t row, std::size_t col) {
    Rat p = t[row][col];
    for (auto& x : t[row]) x /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Primal simplex with Bland's rule: entering column = lowest index with
  // a negative reduced cost, leaving row = lowest basis column among the
  // minimum-ratio rows.  allowed(col) masks columns out (artificials in
  // phase two).  Returns false on unboundedness.
  template <typename Allowed>
  bool minimize(const Allowed& allowed) {
    for (;;) {
      std::size_t enter = n;
      for (std::size_t j = 0; j < n; ++j)
        if (allowed(j) && t[m][j] < 0) {
          enter = j;
          break;
        }
      if (enter == n) return true;  // optimal
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][n] / t[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpSolution lp_minimize(const std::vector<std::vector<Rat>>& a,
                       const std::vector<Rat>& b, const std::vector<Rat>& c) {
  std::size_t m = a.size(), n = c.size();
  require(b.size() == m, ErrorKind::config, "lp: rhs size mismatch");
  for (const auto& row : a)
    require(row.size() == n, ErrorKind::config, "lp: row size mismatch");

  Tableau tb;
  tb.m = m;
  tb.n = n + m;  // structural columns then one artificial per row
  tb.t.assign(m + 1, std::vector<Rat>(tb.n + 1, Rat(0)));
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = b[i] < 0 ? -1 : 1;  // keep rhs nonnegative
    for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = sign * a[i][j];
    tb.t[i][tb.n] = sign * b[i];
    tb.t[i][n + i] = 1;
    tb.basis[i] = n + i;
  }
  // Phase one: minimize the sum of artificials.
  for (std::size_t j = 0; j <= tb.n; ++j) {
    Rat s(0);
    for (std::size_t i = 0; i < m; ++i) s += tb.t[i][j];
    tb.t[m][j] = (j >= n && j < tb.n) ? Rat(0) : -s;
  }
  bool ok = tb.minimize([](std::size_t) { return true; });
  require(ok, ErrorKind::internal, "lp: phase one unbounded");
  if (tb.t[m][tb.n] != 0) return {LpStatus::infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; rows that cannot pivot on
  // a structural column are redundant and harmless (their rhs is zero).
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (tb.t[i][j] != 0) {
        tb.pivot(i, j);
        break;
      }
  }

  // Phase two: swap in the real costs and price out the basis.
  for (std::size_t j = 0; j <= tb.n; ++j) tb.t[m][j] = j < n ? c[j] : Rat(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.basis[i] >= n || tb.t[m][tb.basis[i]] == 0) continue;
    Rat f = tb.t[m][tb.basis[i]];
    for (std::size_t j = 0; j <= tb.n; ++j) tb.t[m][j] -= f * tb.t[i][j];
  }
  ok = tb.minimize([&](std::size_t j) { return j < n; });
  if (!ok) return {LpStatus::unbounded, Rat(0), {}};

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] < n) sol.x[tb.basis[i]] = tb.t[i][tb.n];
  sol.objective = -tb.t[m][tb.n];
  return sol;
}

bool lp_feasible(const std::vector<std::vector<Rat>>& a,
                 const std::vector<Rat>& b) {
  std::vector<Rat> zero(a.empty() ? 0 : a[0].size(), Rat(0));
  return lp_minimize(a, b, zero).status == LpStatus::optimal;
}

}  // namespace geogrow
