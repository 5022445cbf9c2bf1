#include <geogrow/growth.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace geogrow {

namespace {

Rat poly_coeff(const Poly& p, size_t i) {
  return i < p.size() ? p[i] : Rat(0);
}

}  // namespace

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = poly_coeff(a, i) + poly_coeff(b, i);
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) r[i] = poly_coeff(a, i) - poly_coeff(b, i);
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(r));
}

namespace {

// Long division a = q * b + r over the rationals; returns {q, r}.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  require(!poly_trim(b).empty(), ErrorKind::config, "polynomial division by zero");
  Poly d = poly_trim(b);
  a = poly_trim(std::move(a));
  Poly q;
  if (a.size() >= d.size()) q.assign(a.size() - d.size() + 1, Rat(0));
  while (a.size() >= d.size()) {
    Rat c = a.back() / d.back();
    size_t shift = a.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= c * d[i];
    a = poly_trim(std::move(a));  // the leading term cancels, so a shrinks
  }
  return {poly_trim(std::move(q)), std::move(a)};
}

}  // namespace

Poly poly_div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  require(r.empty(), ErrorKind::internal, "inexact polynomial division");
  return q;
}

bool poly_divides(const Poly& divisor, const Poly& dividend) {
  if (poly_trim(dividend).empty()) return true;
  if (poly_trim(divisor).empty()) return false;
  return poly_divmod(dividend, divisor).second.empty();
}

std::string poly_text(const std::vector<Int>& p) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Int mag = abs(p[i]);
    if (first) {
      if (p[i] < 0) out << "-";
      first = false;
    } else {
      out << (p[i] < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      if (mag != 1) out << " ";
      out << "t";
      if (i >= 2) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

TransitionMatrix transition_matrix(const GeodesicAutomaton& aut) {
  require(aut.nstates >= 2, ErrorKind::config, "automaton has no live states");
  TransitionMatrix m;
  m.n = aut.nstates - 1;  // drop the fail state; live state s -> index s - 1
  m.start = aut.start_state - 1;
  std::map<int, int> slot;  // letter weight -> index into by_weight
  for (int w : aut.letter_weights) slot.emplace(w, 0);
  for (auto& [w, idx] : slot) {
    idx = static_cast<int>(m.weights.size());
    m.weights.push_back(w);
    m.by_weight.emplace_back();
    m.by_weight.back().setZero(m.n, m.n);
  }
  int nl = static_cast<int>(aut.letter_names.size());
  for (int32_t s = 1; s < aut.nstates; ++s) {
    for (int a = 0; a < nl; ++a) {
      int32_t toSt = aut.trans[static_cast<size_t>(s) * nl + a];
      if (toSt == aut.fail_state) continue;
      m.by_weight[slot[aut.letter_weights[a]]](s - 1, toSt - 1) += 1;
    }
  }
  return m;
}

int64_t parent_count(const GeodesicAutomaton& aut, int32_t state) {
  require(aut.has_profiles, ErrorKind::config,
          "parent counts need profile data (unminimized automaton)");
  require(aut.delta >= aut.k, ErrorKind::config,
          "parent counts need delta >= asymmetry constant");
  int maxw = *std::max_element(aut.letter_weights.begin(), aut.letter_weights.end());
  require(aut.delta >= maxw, ErrorKind::config,
          "parent counts need delta >= max letter weight");
  if (state == aut.fail_state || state == aut.start_state) return 1;
  require(state >= 0 && state < aut.nstates, ErrorKind::config, "state out of range");
  const std::vector<int16_t>& prof = aut.profiles[static_cast<size_t>(state)];
  // Count letters a with profile(inverse(a)) == -weight(a): each is an edge
  // into the tracked element from one edge-weight closer.  Distinct letters
  // with distinct values give distinct parent elements, so this matches the
  // in-edge count of the Cayley graph.
  int64_t p = 0;
  for (size_t a = 0; a < aut.letter_names.size(); ++a) {
    int32_t off = aut.letter_inv_offset[a];
    require(off >= 0, ErrorKind::internal, "parent offset outside profile domain");
    if (prof[off] == -aut.letter_weights[a]) ++p;
  }
  require(p >= 1, ErrorKind::internal, "live state with no parent edge");
  return p;
}

std::vector<int64_t> parent_counts(const GeodesicAutomaton& aut) {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(aut.nstates) - 1);
  for (int32_t s = 1; s < aut.nstates; ++s) out.push_back(parent_count(aut, s));
  return out;
}

TransitionMatrix corrected_matrix(const TransitionMatrix& m,
                                  const std::vector<int64_t>& parents) {
  require(static_cast<int64_t>(parents.size()) == m.n, ErrorKind::config,
          "parent count vector size mismatch");
  for (int64_t p : parents)
    require(p >= 1, ErrorKind::config, "parent counts must be positive");
  TransitionMatrix out = m;
  for (auto& mat : out.by_weight)
    for (int64_t j = 0; j < m.n; ++j)
      for (int64_t i = 0; i < m.n; ++i)
        if (mat(i, j) != 0) mat(i, j) /= parents[static_cast<size_t>(j)];
  return out;
}

std::vector<Rat> growth_series(const TransitionMatrix& m, int n_terms) {
  require(n_terms >= 1, ErrorKind::config, "series needs at least one term");
  require(m.n >= 1, ErrorKind::config, "empty transition matrix");
  // r[n] = row vector of path weights of total weight n per end state;
  // r[n] = sum_w r[n - w] * M_w (convolution over the weight grading).
  std::vector<std::vector<Rat>> r(static_cast<size_t>(n_terms) + 1,
                                  std::vector<Rat>(static_cast<size_t>(m.n), Rat(0)));
  r[0][static_cast<size_t>(m.start)] = 1;
  for (int n = 1; n <= n_terms; ++n) {
    auto& cur = r[static_cast<size_t>(n)];
    for (size_t wi = 0; wi < m.weights.size(); ++wi) {
      int w = m.weights[wi];
      if (w > n) break;
      const auto& prev = r[static_cast<size_t>(n - w)];
      const MatQ& mat = m.by_weight[wi];
      for (int64_t j = 0; j < m.n; ++j) {
        Rat acc = cur[static_cast<size_t>(j)];
        for (int64_t i = 0; i < m.n; ++i) {
          const Rat& e = mat(i, j);
          if (e != 0 && prev[static_cast<size_t>(i)] != 0)
            acc += prev[static_cast<size_t>(i)] * e;
        }
        cur[static_cast<size_t>(j)] = std::move(acc);
      }
    }
  }
  std::vector<Rat> series(static_cast<size_t>(n_terms) + 1, Rat(0));
  for (int n = 0; n <= n_terms; ++n)
    for (int64_t j = 0; j < m.n; ++j)
      series[static_cast<size_t>(n)] += r[static_cast<size_t>(n)][static_cast<size_t>(j)];
  return series;
}

namespace {

// Minimal LFSR generating the sequence, by Berlekamp-Massey over the
// rationals.  `len` is the register length: the connection polynomial c
// (constant term 1, degree <= len) satisfies (c * f)_n = 0 for all n >= len,
// and no shorter register does.  len can exceed deg c when the series has a
// polynomial part, so it is reported separately.
struct Lfsr {
  Poly c;
  int len = 0;
};

Lfsr berlekamp_massey(const std::vector<Rat>& s) {
  Poly c{Rat(1)}, b{Rat(1)};
  int len = 0, m = 1;
  Rat bd(1);
  for (size_t n = 0; n < s.size(); ++n) {
    Rat d = s[n];
    for (int i = 1; i <= len; ++i)
      d += poly_coeff(c, static_cast<size_t>(i)) * s[n - static_cast<size_t>(i)];
    if (d == 0) {
      ++m;
      continue;
    }
    Poly shifted(static_cast<size_t>(m), Rat(0));
    shifted.insert(shifted.end(), b.begin(), b.end());
    for (auto& x : shifted) x *= d / bd;
    if (2 * len <= static_cast<int>(n)) {
      Poly keep = c;
      c = poly_sub(c, shifted);
      len = static_cast<int>(n) + 1 - len;
      b = std::move(keep);
      bd = d;
      m = 1;
    } else {
      c = poly_sub(c, shifted);
      ++m;
    }
  }
  return {poly_trim(std::move(c)), len};
}

}  // namespace

std::string RationalGF::text() const {
  bool parens_num = num.size() > 1;
  bool parens_den = den.size() > 1;
  std::string n = poly_text(num), d = poly_text(den);
  std::string out;
  out += parens_num ? "(" + n + ")" : n;
  out += " / ";
  out += parens_den ? "(" + d + ")" : d;
  return out;
}

std::vector<Rat> RationalGF::taylor(int n_terms) const {
  require(n_terms >= 0, ErrorKind::config, "negative term count");
  require(!den.empty() && den[0] != 0, ErrorKind::config,
          "denominator must be a unit at t = 0");
  std::vector<Rat> c(static_cast<size_t>(n_terms) + 1, Rat(0));
  for (size_t n = 0; n < c.size(); ++n) {
    Rat acc = n < num.size() ? Rat(num[n]) : Rat(0);
    for (size_t i = 1; i < den.size() && i <= n; ++i)
      acc -= Rat(den[i]) * c[n - i];
    c[n] = acc / Rat(den[0]);
  }
  return c;
}

RationalGF rational_form(const TransitionMatrix& m, int guard) {
  require(guard >= 1, ErrorKind::config, "guard must be positive");
  int maxw = m.weights.empty() ? 1 : m.weights.back();
  // deg det(I - M(t)) <= n * max weight bounds the recurrence order.
  int64_t bound = m.n * maxw + 1;
  require(bound <= 100000, ErrorKind::resource, "transition matrix too large");
  int terms = static_cast<int>(2 * bound) + guard;
  std::vector<Rat> s = growth_series(m, terms);
  Lfsr reg = berlekamp_massey(s);
  const Poly& conn = reg.c;
  // N = conn * series is a polynomial of degree < the register length;
  // every later coefficient of the product must cancel.
  size_t len = std::max<size_t>(static_cast<size_t>(reg.len), 1);
  Poly num_q(len, Rat(0));
  for (size_t nIdx = 0; nIdx < s.size(); ++nIdx) {
    Rat acc(0);
    for (size_t i = 0; i < conn.size() && i <= nIdx; ++i) acc += conn[i] * s[nIdx - i];
    if (nIdx < len)
      num_q[nIdx] = acc;
    else
      require(acc == 0, ErrorKind::internal,
              "recurrence guard failed: series is not generated by the "
              "minimal recurrence found");
  }
  num_q = poly_trim(std::move(num_q));
  // Scale both polynomials by one rational so coefficients become integers
  // with no common factor, then sign so the denominator is 1 at t = 0.
  Int lcm_den(1);
  auto fold = [&lcm_den](const Poly& p) {
    for (const Rat& x : p) lcm_den = lcm(lcm_den, denominator(x));
  };
  fold(num_q);
  fold(conn);
  std::vector<Int> ni, di;
  Int content(0);
  auto lift = [&](const Poly& p, std::vector<Int>& out) {
    for (const Rat& x : p) {
      Rat y = x * lcm_den;
      out.push_back(numerator(y));
      content = gcd(content, out.back());
    }
  };
  lift(num_q, ni);
  lift(conn, di);
  if (content == 0) content = 1;
  if (!di.empty() && di[0] < 0) content = -content;
  for (auto& x : ni) x /= content;
  for (auto& x : di) x /= content;
  require(!di.empty() && di[0] == 1, ErrorKind::internal,
          "normalized denominator does not have constant term 1");
  RationalGF gf{std::move(ni), std::move(di)};
  std::vector<Rat> back = gf.taylor(terms);
  require(back == s, ErrorKind::internal, "rational form fails to reproduce series");
  return gf;
}

Poly char_denominator(const TransitionMatrix& m) {
  require(m.n >= 1 && m.n <= 60, ErrorKind::config,
          "characteristic polynomial cross-check supports 1..60 states");
  size_t n = static_cast<size_t>(m.n);
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly e;
      if (i == j) e = Poly{Rat(1)};
      for (size_t wi = 0; wi < m.weights.size(); ++wi) {
        const Rat& cnt = m.by_weight[wi](static_cast<int64_t>(i), static_cast<int64_t>(j));
        if (cnt == 0) continue;
        Poly mono(static_cast<size_t>(m.weights[wi]) + 1, Rat(0));
        mono.back() = -cnt;
        e = poly_add(e, mono);
      }
      a[i][j] = std::move(e);
    }
  // Bareiss fraction-free elimination: divisions are exact in the
  // polynomial ring, and the final pivot is the determinant.
  Poly prev{Rat(1)};
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (poly_trim(a[k][k]).empty()) {
      size_t swap_row = k + 1;
      while (swap_row < n && poly_trim(a[swap_row][k]).empty()) ++swap_row;
      if (swap_row == n) return {};  // structurally singular
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = poly_div_exact(
            poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j])), prev);
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  if (sign < 0)
    for (auto& x : det) x = -x;
  return poly_trim(std::move(det));
}

bool validate_growth(const std::vector<Rat>& series, const BallIndex& ball) {
  std::vector<int64_t> spheres = ball.sphere_sizes();
  size_t upto = std::min(series.size(), spheres.size());
  for (size_t n = 0; n < upto; ++n)
    if (series[n] != spheres[n]) return false;
  return true;
}

}  // namespace geogrow
