#pragma once

#include <string>
#include <vector>

#include <geogrow/numeric.hpp>
#include <geogrow/oracle.hpp>
#include <geogrow/profile_fsa.hpp>

namespace geogrow {

// Exact univariate polynomials with rational coefficients, stored by
// ascending power.  Trailing zero coefficients are trimmed by the helpers;
// the zero polynomial is the empty vector.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Quotient of a/b when b divides a exactly; requires b != 0.  The bool
// variant reports divisibility instead of failing.
Poly poly_div_exact(const Poly& a, const Poly& b);
bool poly_divides(const Poly& divisor, const Poly& dividend);
// Renders integer-coefficient polynomials like "1 + 2 t - t^3" (ascending).
std::string poly_text(const std::vector<Int>& p);

// Edge-count matrix of the live part of a geodesic automaton.  The fail
// state is dropped; live state s maps to row/column s - 1, so the start
// state is index 0.  M(t) = sum_w t^w * by_weight[w-index], where entry
// (i, j) counts the letters of the given weight moving state i to state j.
// The implied initial row vector is the indicator of `start` and the final
// column vector is all ones (every live state accepts), so the weight-n
// coefficient of v1 * M(t)^* * v2 counts accepted words of weight n.
// Entries are stored as exact rationals so that a parent-corrected copy
// (columns divided by parent counts) fits the same shape.
struct TransitionMatrix {
  int64_t n = 0;               // number of live states
  int64_t start = 0;           // live index of the automaton start state
  std::vector<int> weights;    // distinct letter weights, ascending
  std::vector<MatQ> by_weight; // one n x n matrix per entry of `weights`
};

// Builds the edge-count matrix.  Works on fresh and minimized automata.
TransitionMatrix transition_matrix(const GeodesicAutomaton& aut);

// Number of in-edges of eval(w) from elements exactly one edge-weight
// closer to the identity, read off the profile of the state reached by w:
// letter a contributes when the profile value at the offset of inverse(a)
// equals -weight(a).  Well-defined per state because profiles are exact on
// geodesically reached states.  The start and fail states report 1.
// Requires profile data and delta >= max(asymmetry constant, letter weight)
// so that every candidate parent offset lies inside the profile domain.
int64_t parent_count(const GeodesicAutomaton& aut, int32_t state);
// All states at once, indexed like TransitionMatrix rows (live index).
std::vector<int64_t> parent_counts(const GeodesicAutomaton& aut);

// Copy of m with column j divided by parents[j].  Weighting every accepted
// word by the product of 1/parent_count over its visited states makes the
// total weight of each group element exactly one, so the corrected series
// counts elements (sphere sizes) instead of geodesic words.
TransitionMatrix corrected_matrix(const TransitionMatrix& m,
                                  const std::vector<int64_t>& parents);

// Coefficients c_0..c_{n_terms} of v1 * (sum over words) * v2, i.e. the
// number (or corrected weight) of accepted words per total weight, computed
// by exact convolution over the weight grading.  Requires n_terms >= 1.
std::vector<Rat> growth_series(const TransitionMatrix& m, int n_terms);

// A growth function as a ratio of coprime integer polynomials, normalized
// so the denominator has constant term 1 (possible for any rational series
// with integer coefficients).  Powers ascend; num/den hold the
// coefficients.
struct RationalGF {
  std::vector<Int> num;
  std::vector<Int> den;

  std::string text() const;  // canonical "N(t) / D(t)" rendering
  // First n_terms + 1 Taylor coefficients of num/den at t = 0.
  std::vector<Rat> taylor(int n_terms) const;
};

// Finds the minimal linear recurrence of the series of m (Berlekamp-Massey
// over exact rationals) and returns the matching rational function.  The
// series is computed out to twice the denominator degree bound plus `guard`
// extra terms, and the result is required to reproduce every computed term.
RationalGF rational_form(const TransitionMatrix& m, int guard = 16);

// det(I - M(t)) by fraction-free (Bareiss) elimination over the polynomial
// ring -- an elimination-free-of-rounding cross-check that the denominator
// of rational_form divides the characteristic polynomial of the transition
// matrix.  Quadratic fill makes this practical only for small matrices;
// n <= 60 is enforced.
Poly char_denominator(const TransitionMatrix& m);

// True when series[n] equals the ball's directed sphere size for every n
// up to min(series length - 1, ball radius).
bool validate_growth(const std::vector<Rat>& series, const BallIndex& ball);

}  // namespace geogrow
