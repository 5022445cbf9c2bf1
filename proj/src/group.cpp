#include "geogrow/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace geogrow {

namespace {

// Determinant by cofactor expansion; dimensions here are tiny.
Int det(const MatZ& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Int acc = 0;
  MatZ minor(n - 1, n - 1);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 1; i < n; ++i) {
      Eigen::Index jj = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == k) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    Int term = m(0, k) * det(minor);
    if (k % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

MatZ adjugate(const MatZ& m) {
  const Eigen::Index n = m.rows();
  MatZ adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  MatZ minor(n - 1, n - 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::Index ii = 0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (i == r) continue;
        Eigen::Index jj = 0;
        for (Eigen::Index j = 0; j < n; ++j) {
          if (j == c) continue;
          minor(ii, jj++) = m(i, j);
        }
        ++ii;
      }
      Int cof = det(minor);
      if ((r + c) % 2 != 0) cof = -cof;
      adj(c, r) = cof;
    }
  }
  return adj;
}

// Sign normalisation for projective matrices: first nonzero entry in
// row-major order is made positive.
void normalize_projective(MatZ& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (m(i, j) < 0) m = -m;
      return;
    }
  }
}

}  // namespace

GroupElement GroupPresentation::identity() const {
  if (kind == GroupKind::va) {
    VaElement e;
    e.v = VecZ::Zero(rank);
    e.f = 0;
    return GroupElement{e};
  }
  MatElement e;
  e.m = MatZ::Identity(dim, dim);
  return GroupElement{e};
}

GroupElement GroupPresentation::multiply(const GroupElement& a,
                                         const GroupElement& b) const {
  if (kind == GroupKind::va) {
    const auto& x = std::get<VaElement>(a.rep);
    const auto& y = std::get<VaElement>(b.rep);
    VaElement r;
    r.v = x.v + mul(f_action[x.f], y.v);
    r.f = f_table[x.f][y.f];
    return GroupElement{r};
  }
  const auto& x = std::get<MatElement>(a.rep);
  const auto& y = std::get<MatElement>(b.rep);
  MatElement r;
  r.m = mul(x.m, y.m);
  if (projective) normalize_projective(r.m);
  return GroupElement{r};
}

GroupElement GroupPresentation::inverse(const GroupElement& a) const {
  if (kind == GroupKind::va) {
    const auto& x = std::get<VaElement>(a.rep);
    VaElement r;
    r.f = f_inv[x.f];
    r.v = -mul(f_action[r.f], x.v);
    return GroupElement{r};
  }
  const auto& x = std::get<MatElement>(a.rep);
  Int d = det(x.m);
  require(d == 1 || d == -1, ErrorKind::config,
          "matrix element is not invertible over the integers");
  MatElement r;
  r.m = adjugate(x.m);
  if (d == -1) r.m = -r.m;
  if (projective) normalize_projective(r.m);
  return GroupElement{r};
}

bool GroupPresentation::is_identity(const GroupElement& a) const {
  return equal(a, identity());
}

bool GroupPresentation::equal(const GroupElement& a,
                              const GroupElement& b) const {
  return compare(a, b) == 0;
}

int GroupPresentation::compare(const GroupElement& a,
                               const GroupElement& b) const {
  if (kind == GroupKind::va) {
    const auto& x = std::get<VaElement>(a.rep);
    const auto& y = std::get<VaElement>(b.rep);
    if (x.f != y.f) return x.f < y.f ? -1 : 1;
    return compare_vec(x.v, y.v);
  }
  return compare_mat(std::get<MatElement>(a.rep).m,
                     std::get<MatElement>(b.rep).m);
}

std::size_t GroupPresentation::hash(const GroupElement& a) const {
  if (kind == GroupKind::va) {
    const auto& x = std::get<VaElement>(a.rep);
    std::size_t seed = static_cast<std::size_t>(x.f);
    hash_mix(seed, hash_vec(x.v));
    return seed;
  }
  return hash_mat(std::get<MatElement>(a.rep).m);
}

std::string GroupPresentation::describe(const GroupElement& a) const {
  std::ostringstream os;
  if (kind == GroupKind::va) {
    const auto& x = std::get<VaElement>(a.rep);
    os << "(";
    for (Eigen::Index i = 0; i < x.v.size(); ++i) {
      if (i) os << ",";
      os << x.v[i];
    }
    os << ")";
    if (f_order() > 1) os << ";f" << x.f;
  } else {
    const auto& x = std::get<MatElement>(a.rep);
    os << "[";
    for (Eigen::Index i = 0; i < x.m.rows(); ++i) {
      if (i) os << ";";
      for (Eigen::Index j = 0; j < x.m.cols(); ++j) {
        if (j) os << ",";
        os << x.m(i, j);
      }
    }
    os << "]";
  }
  return os.str();
}

void GroupPresentation::validate() const {
  if (kind == GroupKind::va) {
    require(rank >= 1, ErrorKind::config, "rank must be at least 1");
    const int n = f_order();
    require(n >= 1, ErrorKind::config, "f_table must be nonempty");
    require(static_cast<int>(f_action.size()) == n, ErrorKind::config,
            "f_action and f_table sizes differ");
    for (const auto& row : f_table) {
      require(static_cast<int>(row.size()) == n, ErrorKind::config,
              "f_table is not square");
      for (int v : row)
        require(v >= 0 && v < n, ErrorKind::config,
                "f_table entry out of range");
    }
    for (int j = 0; j < n; ++j) {
      require(f_table[0][j] == j && f_table[j][0] == j, ErrorKind::config,
              "f_table index 0 is not an identity");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          require(f_table[f_table[i][j]][k] == f_table[i][f_table[j][k]],
                  ErrorKind::config, "f_table is not associative");
    require(static_cast<int>(f_inv.size()) == n, ErrorKind::config,
            "f_inv size mismatch");
    for (int i = 0; i < n; ++i)
      require(f_table[i][f_inv[i]] == 0 && f_table[f_inv[i]][i] == 0,
              ErrorKind::config, "f_inv is not an inverse");
    for (int i = 0; i < n; ++i) {
      const MatZ& m = f_action[i];
      require(m.rows() == rank && m.cols() == rank, ErrorKind::config,
              "f_action matrix has wrong shape");
      Int d = det(m);
      require(d == 1 || d == -1, ErrorKind::config,
              "f_action matrix is not unimodular");
    }
    require(compare_mat(f_action[0], MatZ::Identity(rank, rank)) == 0,
            ErrorKind::config,
            "f_action[0] must be the identity matrix");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(compare_mat(mul(f_action[i], f_action[j]),
                            f_action[f_table[i][j]]) == 0,
                ErrorKind::config, "f_action is not a homomorphism");
  } else {
    require(dim >= 1, ErrorKind::config, "dimension must be at least 1");
  }
}

int GeneratingSet::max_weight() const {
  int w = 1;
  for (const auto& l : letters) w = std::max(w, l.weight);
  return w;
}

std::optional<int> GeneratingSet::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (letters[i].name == name) return i;
  return std::nullopt;
}

int word_weight(const GeneratingSet& gens, const Word& w) {
  int acc = 0;
  for (int32_t a : w) acc += gens.letters[a].weight;
  return acc;
}

GroupElement eval_word(const GroupPresentation& pres, const GeneratingSet& gens,
                       const Word& w) {
  GroupElement acc = pres.identity();
  for (int32_t a : w) acc = pres.multiply(acc, gens.letters[a].value);
  return acc;
}

std::string word_str(const GeneratingSet& gens, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += gens.letters[w[i]].name;
  }
  return s;
}

Word parse_word(const GeneratingSet& gens, const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto idx = gens.find(tok);
    require(idx.has_value(), ErrorKind::config, "unknown letter: " + tok);
    w.push_back(*idx);
  }
  return w;
}

void validate_generating_set(const GroupPresentation& pres,
                             const GeneratingSet& gens) {
  require(gens.size() >= 1, ErrorKind::config, "generating set is empty");
  std::set<std::string> names;
  for (const auto& l : gens.letters) {
    require(!l.name.empty(), ErrorKind::config, "letter name is empty");
    require(names.insert(l.name).second, ErrorKind::config,
            "duplicate letter name: " + l.name);
    require(l.weight >= 1, ErrorKind::config,
            "letter weight must be positive: " + l.name);
    if (pres.kind == GroupKind::va) {
      const auto* e = std::get_if<VaElement>(&l.value.rep);
      require(e != nullptr && e->v.size() == pres.rank && e->f >= 0 &&
                  e->f < pres.f_order(),
              ErrorKind::config, "letter value incompatible with group");
    } else {
      const auto* e = std::get_if<MatElement>(&l.value.rep);
      require(e != nullptr && e->m.rows() == pres.dim &&
                  e->m.cols() == pres.dim,
              ErrorKind::config, "letter value incompatible with group");
    }
    require(!pres.is_identity(l.value), ErrorKind::config,
            "letter evaluates to the identity: " + l.name);
  }
  if (gens.inverse_closed) {
    for (const auto& l : gens.letters) {
      GroupElement inv = pres.inverse(l.value);
      bool found = false;
      for (const auto& m : gens.letters)
        if (pres.equal(m.value, inv)) { found = true; break; }
      require(found, ErrorKind::config,
              "set declared inverse closed but misses the inverse of " +
                  l.name);
    }
  }
}

bool word_lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace geogrow
