#include "geogrow/polytope.hpp"

#include "geogrow/group_io.hpp"
#include "geogrow/lp.hpp"
#include "geogrow/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace geogrow {

namespace {

struct VeczLess {
  bool operator()(const VecZ& a, const VecZ& b) const {
    return compare_vec(a, b) < 0;
  }
};

Int idot(const VecZ& a, const VecZ& b) {
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int rat_floor(const Rat& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

VecZ primitive(VecZ v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  require(g != 0, ErrorKind::config, "zero vector is not a direction");
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

// Calls fn on every size-k index subset of {0..n-1}, ascending.
template <class Fn>
void for_subsets(int n, int k, Fn&& fn) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      fn(pick);
      return;
    }
    for (int i = from; i <= n - (k - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// Calls fn on every integer point of [lo, hi], lexicographically.
template <class Fn>
void for_box(const std::vector<Int>& lo, const std::vector<Int>& hi, Fn&& fn) {
  int m = static_cast<int>(lo.size());
  VecZ x(m);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m) {
      fn(x);
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

const VaElement& va_part(const GroupPresentation& pres, const GroupElement& g) {
  require(pres.kind == GroupKind::va, ErrorKind::config,
          "lattice machinery needs a semidirect (va) presentation");
  return std::get<VaElement>(g.rep);
}

// True when x lies in the cone spanned by the given rays.
bool in_cone(const Triangulation& tri, const std::vector<int>& simplex,
             const VecZ& x) {
  int m = tri.rank;
  std::size_t k = simplex.size();
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(k));
  std::vector<Rat> b(m);
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(tri.rays[simplex[j]].dir[i]);
    b[i] = Rat(x[i]);
  }
  return lp_feasible(a, b);
}

}  // namespace

Ray make_ray(const VecZ& v) { return Ray{primitive(v)}; }

bool ray_equal(const Ray& a, const Ray& b) {
  return a.dir.size() == b.dir.size() && compare_vec(a.dir, b.dir) == 0;
}

Triangulation parse_triangulation(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) lines.push_back(line);
  }
  std::size_t at = 0;
  auto next = [&]() -> std::istringstream {
    require(at < lines.size(), ErrorKind::config,
            "triangulation file ends early");
    return std::istringstream(lines[at++]);
  };

  {
    auto head = next();
    std::string magic;
    int version = 0;
    require(bool(head >> magic >> version) && magic == "geogrow-tri" &&
                version == 1,
            ErrorKind::config, "not a geogrow-tri version 1 file");
  }
  Triangulation tri;
  int nrays = 0;
  {
    auto line = next();
    std::string key;
    require(bool(line >> key >> tri.rank) && key == "rank" && tri.rank >= 1,
            ErrorKind::config, "triangulation needs a positive rank line");
  }
  {
    auto line = next();
    std::string key;
    require(bool(line >> key >> nrays) && key == "rays" && nrays >= 1,
            ErrorKind::config, "triangulation needs a rays count line");
  }
  for (int r = 0; r < nrays; ++r) {
    auto line = next();
    VecZ v(tri.rank);
    for (int i = 0; i < tri.rank; ++i) {
      long long c = 0;
      require(bool(line >> c), ErrorKind::config,
              "ray line has too few coordinates");
      v[i] = c;
    }
    Ray ray = make_ray(v);
    for (const Ray& seen : tri.rays)
      require(!ray_equal(seen, ray), ErrorKind::config,
              "duplicate ray direction");
    tri.rays.push_back(ray);
  }
  int nsimp = 0;
  {
    auto line = next();
    std::string key;
    require(bool(line >> key >> nsimp) && key == "simplices" && nsimp >= 0,
            ErrorKind::config, "triangulation needs a simplices count line");
  }
  for (int s = 0; s < nsimp; ++s) {
    auto line = next();
    std::vector<int> simplex;
    for (int idx = 0; line >> idx;) {
      require(idx >= 0 && idx < nrays, ErrorKind::config,
              "simplex ray index out of range");
      require(std::find(simplex.begin(), simplex.end(), idx) == simplex.end(),
              ErrorKind::config, "simplex repeats a ray");
      simplex.push_back(idx);
    }
    require(!simplex.empty() && static_cast<int>(simplex.size()) <= tri.rank,
            ErrorKind::config, "simplex size must be between 1 and the rank");
    tri.simplices.push_back(simplex);
  }
  require(at == lines.size(), ErrorKind::config,
          "trailing content after the simplices");
  return tri;
}

std::string serialize_triangulation(const Triangulation& tri) {
  std::ostringstream out;
  out << "geogrow-tri 1\n";
  out << "rank " << tri.rank << "\n";
  out << "rays " << tri.rays.size() << "\n";
  for (const Ray& r : tri.rays) {
    for (int i = 0; i < tri.rank; ++i) out << (i ? " " : "") << r.dir[i];
    out << "\n";
  }
  out << "simplices " << tri.simplices.size() << "\n";
  for (const auto& s : tri.simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << "\n";
  }
  return out.str();
}

Triangulation load_triangulation_file(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), ErrorKind::config, "cannot open triangulation " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

std::string resolve_tri_path(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::exists(name)) return name;
  fs::path p = fs::path(data_dir()) / "tri" / (name + ".tri");
  require(fs::exists(p), ErrorKind::config,
          "triangulation not found: " + name + " (looked at " + p.string() +
              ")");
  return p.string();
}

TriangulationCheck validate_triangulation(const Triangulation& tri, int box) {
  require(box >= 1, ErrorKind::config, "sample box must be positive");
  TriangulationCheck check;
  check.independent = true;
  for (const auto& simplex : tri.simplices) {
    std::vector<std::vector<Rat>> rows;
    for (int idx : simplex) {
      std::vector<Rat> row(tri.rank);
      for (int i = 0; i < tri.rank; ++i) row[i] = Rat(tri.rays[idx].dir[i]);
      rows.push_back(std::move(row));
    }
    if (rational_rank(rows) != static_cast<int>(simplex.size()))
      check.independent = false;
  }
  check.covers = true;
  std::vector<Int> lo(tri.rank, Int(-box)), hi(tri.rank, Int(box));
  for_box(lo, hi, [&](const VecZ& x) {
    if (!check.covers || x.isZero()) return;
    for (const auto& simplex : tri.simplices)
      if (in_cone(tri, simplex, x)) return;
    check.covers = false;
    check.uncovered = x;
  });
  return check;
}

bool triangulation_f_invariant(const Triangulation& tri,
                               const GroupPresentation& pres) {
  require(pres.kind == GroupKind::va, ErrorKind::config,
          "F-invariance needs a semidirect (va) presentation");
  require(pres.rank == tri.rank, ErrorKind::config,
          "triangulation rank does not match the presentation");
  for (const MatZ& f : pres.f_action) {
    for (const Ray& r : tri.rays) {
      Ray image{primitive(mul(f, r.dir))};
      bool found = false;
      for (const Ray& s : tri.rays) found = found || ray_equal(s, image);
      if (!found) return false;
    }
  }
  return true;
}

LatticeLetters lattice_letters(const GroupPresentation& pres,
                               const GeneratingSet& gens) {
  LatticeLetters out;
  for (int i = 0; i < gens.size(); ++i) {
    const VaElement& e = va_part(pres, gens.letters[i].value);
    if (e.f != 0) continue;
    out.letters.push_back(i);
    out.values.push_back(e.v);
    out.weights.push_back(gens.letters[i].weight);
  }
  return out;
}

Rat translation_length(const GroupPresentation& pres,
                       const GeneratingSet& gens, const VecZ& v) {
  require(v.size() == pres.rank, ErrorKind::config,
          "vector size does not match the lattice rank");
  LatticeLetters lat = lattice_letters(pres, gens);
  std::size_t n = lat.values.size();
  int m = pres.rank;
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
  std::vector<Rat> b(m), c(n);
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(lat.values[j][i]);
    b[i] = Rat(v[i]);
  }
  for (std::size_t j = 0; j < n; ++j) c[j] = Rat(lat.weights[j]);
  LpSolution sol = lp_minimize(a, b, c);
  require(sol.status != LpStatus::infeasible, ErrorKind::config,
          "vector is outside the positive span of the trivial-F letters");
  require(sol.status == LpStatus::optimal, ErrorKind::internal,
          "gauge program cannot be unbounded");
  return sol.objective;
}

Polytope translation_polytope(const GroupPresentation& pres,
                              const GeneratingSet& gens) {
  LatticeLetters lat = lattice_letters(pres, gens);
  std::vector<VecQ> points;
  for (std::size_t j = 0; j < lat.values.size(); ++j) {
    VecQ p(pres.rank);
    for (int i = 0; i < pres.rank; ++i)
      p[i] = Rat(lat.values[j][i]) / Rat(lat.weights[j]);
    points.push_back(std::move(p));
  }
  Polytope hull = convex_hull(pres.rank, points);
  require(hull.origin_interior(), ErrorKind::config,
          "trivial-F letters do not positively span the lattice");
  return hull;
}

bool hemisphere_check(const std::vector<VecZ>& dirs) {
  if (dirs.empty()) return true;
  int m = static_cast<int>(dirs[0].size());
  std::set<VecZ, VeczLess> reduced;
  for (const VecZ& d : dirs) {
    require(static_cast<int>(d.size()) == m, ErrorKind::config,
            "directions must share one dimension");
    reduced.insert(primitive(d));
  }
  std::vector<VecZ> s(reduced.begin(), reduced.end());

  std::vector<std::vector<Rat>> rows;
  for (const VecZ& d : s) {
    std::vector<Rat> row(m);
    for (int i = 0; i < m; ++i) row[i] = Rat(d[i]);
    rows.push_back(std::move(row));
  }
  if (rational_rank(rows) < m) return true;

  // The admissible normals form a pointed cone; any extreme normal is a
  // kernel direction of m-1 of the given vectors, so scanning those
  // candidates is exhaustive.
  bool found = false;
  for_subsets(static_cast<int>(s.size()), m - 1, [&](const std::vector<int>& pick) {
    if (found) return;
    std::vector<VecZ> sub;
    for (int idx : pick) sub.push_back(s[idx]);
    VecZ u = kernel_direction(sub, m);
    if (u.isZero()) return;
    bool nonneg = true, nonpos = true;
    for (const VecZ& d : s) {
      Int val = idot(u, d);
      nonneg = nonneg && val >= 0;
      nonpos = nonpos && val <= 0;
    }
    found = nonneg || nonpos;
  });
  return found;
}

bool hemisphere_check_symmetric(const std::vector<VecZ>& dirs) {
  std::set<VecZ, VeczLess> reduced;
  for (const VecZ& d : dirs) reduced.insert(primitive(d));
  std::vector<VecZ> sym;
  for (const VecZ& d : reduced)
    if (reduced.count(-d)) sym.push_back(d);
  if (sym.empty()) return true;
  return hemisphere_check(sym);
}

AbelianBound abelian_fft_bound(const GroupPresentation& pres,
                               const GeneratingSet& gens, int cap) {
  require(pres.kind == GroupKind::va && pres.f_order() == 1,
          ErrorKind::config, "the frontier search needs a free abelian group");
  require(cap >= 1, ErrorKind::config, "cap must be positive");
  BallIndex ball = build_ball(pres, gens, cap);

  int p = gens.size();
  std::vector<int> weights(p);
  std::vector<VecZ> vals(p);
  for (int i = 0; i < p; ++i) {
    weights[i] = gens.letters[i].weight;
    vals[i] = va_part(pres, gens.letters[i].value).v;
  }

  // Non-geodesic exponent vectors form an upward closed set (values add in
  // an abelian group), so their componentwise-minimal elements are the
  // whole story up to the cap.
  std::vector<std::vector<int>> bad;
  std::vector<int> expo(p, 0);
  VecZ acc = VecZ::Zero(pres.rank);
  auto rec = [&](auto&& self, int idx, int weight) -> void {
    if (idx == p) {
      if (weight == 0) return;
      GroupElement g{VaElement{acc, 0}};
      std::optional<int> len = element_length(ball, g);
      require(len.has_value(), ErrorKind::internal,
              "power value escaped its own weight ball");
      if (*len < weight) bad.push_back(expo);
      return;
    }
    for (int k = 0;; ++k) {
      if (weight + k * weights[idx] > cap) break;
      expo[idx] = k;
      if (k > 0) acc += vals[idx];
      self(self, idx + 1, weight + k * weights[idx]);
    }
    acc -= Int(expo[idx]) * vals[idx];
    expo[idx] = 0;
  };
  rec(rec, 0, 0);

  AbelianBound out;
  for (const auto& n : bad) {
    bool minimal = true;
    for (const auto& u : bad) {
      if (&u == &n) continue;
      bool leq = true, strict = false;
      for (int i = 0; i < p; ++i) {
        leq = leq && u[i] <= n[i];
        strict = strict || u[i] < n[i];
      }
      if (leq && strict) minimal = false;
    }
    if (minimal &&
        std::find(out.minimal.begin(), out.minimal.end(), n) ==
            out.minimal.end())
      out.minimal.push_back(n);
  }
  std::sort(out.minimal.begin(), out.minimal.end());

  int maxw = gens.max_weight();
  out.frontier_closed = true;
  for (const auto& n : out.minimal) {
    int w = 0;
    for (int i = 0; i < p; ++i) w += n[i] * weights[i];
    out.bound = std::max(out.bound, w);
    if (w > cap - maxw) out.frontier_closed = false;
  }
  return out;
}

GoodSetResult good_generating_set(const GroupPresentation& pres,
                                  const GeneratingSet& base, const Polytope& q,
                                  const GoodSetOptions& opts) {
  require(pres.kind == GroupKind::va, ErrorKind::config,
          "good sets are built over semidirect (va) presentations");
  require(q.m == pres.rank, ErrorKind::config,
          "model polytope dimension does not match the lattice rank");
  require(q.origin_interior(), ErrorKind::config,
          "model polytope must contain the origin in its interior");
  require(opts.mandate_depth >= 1 && opts.max_scale >= 1, ErrorKind::config,
          "mandate depth and max scale must be positive");
  for (const MatZ& f : pres.f_action) {
    for (const VecQ& v : q.vertices) {
      VecQ image(q.m);
      for (int i = 0; i < q.m; ++i) {
        Rat s = 0;
        for (int j = 0; j < q.m; ++j) s += Rat(f(i, j)) * v[j];
        image[i] = s;
      }
      require(q.contains(image), ErrorKind::config,
              "model polytope is not invariant under the F-action");
    }
  }

  // Correction vectors: lattice parts of short products, shifted back to
  // the trivial coset by every matching base letter when the F-part is not
  // trivial, then closed under the F-action.
  std::set<VecZ, VeczLess> mandated;
  auto add = [&](const VecZ& v) {
    if (!v.isZero()) mandated.insert(v);
  };
  int p = base.size();
  auto walk = [&](auto&& self, const GroupElement& g, int depth) -> void {
    const VaElement& e = std::get<VaElement>(g.rep);
    if (e.f == 0) {
      add(e.v);
    } else {
      for (const Letter& b : base.letters) {
        const VaElement& be = va_part(pres, b.value);
        if (be.f != e.f) continue;
        GroupElement shifted = pres.multiply(g, pres.inverse(b.value));
        add(std::get<VaElement>(shifted.rep).v);
      }
    }
    if (depth == opts.mandate_depth) return;
    for (int i = 0; i < p; ++i)
      self(self, pres.multiply(g, base.letters[i].value), depth + 1);
  };
  for (int i = 0; i < p; ++i) walk(walk, base.letters[i].value, 1);
  if (opts.include_differences) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        GroupElement d = pres.multiply(base.letters[i].value,
                                       pres.inverse(base.letters[j].value));
        const VaElement& e = std::get<VaElement>(d.rep);
        if (e.f == 0) add(e.v);
      }
    }
  }
  {
    std::vector<VecZ> snapshot(mandated.begin(), mandated.end());
    for (const VecZ& v : snapshot)
      for (const MatZ& f : pres.f_action) add(mul(f, v));
  }

  LatticeLetters lat = lattice_letters(pres, base);
  auto good_scale = [&](int n) {
    for (const VecQ& v : q.vertices)
      for (int i = 0; i < q.m; ++i)
        if (denominator(Rat(v[i] * n)) != 1) return false;
    for (const VecZ& v : mandated) {
      for (const Facet& f : q.facets) {
        Rat lhs = 0;
        for (int i = 0; i < q.m; ++i) lhs += Rat(f.normal[i] * v[i]);
        if (lhs > f.offset * n) return false;
      }
    }
    // Base gauge points value/weight must stay inside n.q.
    for (std::size_t j = 0; j < lat.values.size(); ++j) {
      for (const Facet& f : q.facets) {
        Rat lhs = Rat(idot(f.normal, lat.values[j]));
        if (lhs > f.offset * n * lat.weights[j]) return false;
      }
    }
    return true;
  };
  int scale = 0;
  for (int n = 1; n <= opts.max_scale && scale == 0; ++n)
    if (good_scale(n)) scale = n;
  require(scale != 0, ErrorKind::config,
          "no scale up to the limit makes the model polytope good");

  GoodSetResult out;
  out.scale = scale;
  out.mandated.assign(mandated.begin(), mandated.end());
  out.gens.letters = base.letters;

  Polytope nq = q.scaled(Rat(scale));
  std::vector<Int> lo(q.m), hi(q.m);
  for (int i = 0; i < q.m; ++i) {
    Rat mn = nq.vertices[0][i], mx = mn;
    for (const VecQ& v : nq.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }
  for_box(lo, hi, [&](const VecZ& x) {
    if (x.isZero()) return;
    for (const Facet& f : nq.facets)
      if (Rat(idot(f.normal, x)) > f.offset) return;
    GroupElement value{VaElement{x, 0}};
    for (const Letter& b : base.letters)
      if (b.weight == 1 && pres.equal(b.value, value)) return;
    std::string name = "v";
    for (int i = 0; i < q.m; ++i) {
      if (i) name += '_';
      std::ostringstream coord;
      coord << x[i];
      for (char c : coord.str()) name += c == '-' ? 'm' : c;
    }
    require(!out.gens.find(name).has_value(), ErrorKind::config,
            "lattice letter name collides with a base letter");
    out.gens.letters.push_back(Letter{name, value, 1});
  });

  out.gens.inverse_closed = true;
  for (const Letter& a : out.gens.letters) {
    GroupElement inv = pres.inverse(a.value);
    bool found = false;
    for (const Letter& b : out.gens.letters)
      found = found || pres.equal(b.value, inv);
    out.gens.inverse_closed = out.gens.inverse_closed && found;
  }
  validate_generating_set(pres, out.gens);

  out.polytope = translation_polytope(pres, out.gens);
  bool match = out.polytope.vertices.size() == nq.vertices.size();
  for (std::size_t i = 0; match && i < nq.vertices.size(); ++i)
    match = compare_vecq(out.polytope.vertices[i], nq.vertices[i]) == 0;
  require(match, ErrorKind::internal,
          "translation polytope of the good set must be the scaled model");
  return out;
}

ConeLanguage cone_language(const GroupPresentation& pres,
                           const GeneratingSet& gens, const Triangulation& tri,
                           int scale) {
  require(pres.kind == GroupKind::va, ErrorKind::config,
          "cone languages need a semidirect (va) presentation");
  require(tri.rank == pres.rank, ErrorKind::config,
          "triangulation rank does not match the presentation");
  require(scale >= 1, ErrorKind::config, "scale must be positive");

  ConeLanguage lang;
  lang.scale = scale;
  lang.tri = tri;

  // One lattice point per ray: where the ray leaves scale * C(A).
  std::vector<VecZ> points;
  for (const Ray& r : tri.rays) {
    Rat tau = translation_length(pres, gens, r.dir);
    require(tau > 0, ErrorKind::internal, "a ray cannot have zero gauge");
    VecZ x(tri.rank);
    for (int i = 0; i < tri.rank; ++i) {
      Rat c = Rat(scale) * Rat(r.dir[i]) / tau;
      require(denominator(c) == 1, ErrorKind::config,
              "scale does not clear the ray boundary point; increase it");
      x[i] = numerator(c);
    }
    points.push_back(std::move(x));
  }

  BallIndex ball = build_ball(pres, gens, scale);
  for (const VecZ& x : points) {
    int32_t id = ball.find(GroupElement{VaElement{x, 0}});
    require(id >= 0, ErrorKind::config,
            "ray point has no geodesic representative at this scale");
    require(ball.len[id] == scale, ErrorKind::config,
            "ray point is cheaper than the gauge predicts");
    lang.vertex_words.push_back(lex_least_geodesic(ball, id));
  }

  // Coset offsets: integer points of the half-open parallelepiped spanned
  // by the vertex points of each full-dimensional simplex.
  int m = tri.rank;
  std::set<VecZ, VeczLess> offsets;
  for (const auto& simplex : tri.simplices) {
    if (static_cast<int>(simplex.size()) != m) continue;
    MatZ cols(m, m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) cols(i, j) = points[simplex[j]][i];
    require(det_small(cols) != 0, ErrorKind::config,
            "full simplex has dependent rays");
    std::vector<Int> lo(m, Int(0)), hi(m, Int(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (cols(i, j) < 0) lo[i] += cols(i, j);
        if (cols(i, j) > 0) hi[i] += cols(i, j);
      }
    std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) rows[i][j] = Rat(cols(i, j));
    for_box(lo, hi, [&](const VecZ& x) {
      std::vector<Rat> b(m);
      for (int i = 0; i < m; ++i) b[i] = Rat(x[i]);
      auto alpha = solve_square(rows, b);
      if (!alpha) return;
      for (const Rat& a : *alpha)
        if (a < 0 || a >= 1) return;
      offsets.insert(x);
    });
  }
  require(offsets.count(VecZ::Zero(m)), ErrorKind::internal,
          "the zero offset is always a coset representative");

  std::vector<GroupElement> cosets;
  for (const VecZ& r : offsets)
    for (int f = 0; f < pres.f_order(); ++f)
      cosets.push_back(GroupElement{VaElement{r, f}});

  int radius = scale;
  for (;;) {
    BallIndex big = build_ball(pres, gens, radius);
    bool all = true;
    std::vector<Word> words;
    for (const GroupElement& g : cosets) {
      int32_t id = big.find(g);
      if (id < 0) {
        all = false;
        break;
      }
      words.push_back(lex_least_geodesic(big, id));
    }
    if (all) {
      lang.coset_words = std::move(words);
      break;
    }
    require(radius < 8 * scale * m + pres.f_order() + 64, ErrorKind::resource,
            "coset representatives escape the search radius");
    radius *= 2;
  }
  std::sort(lang.coset_words.begin(), lang.coset_words.end(),
            [&](const Word& a, const Word& b) {
              int wa = word_weight(gens, a), wb = word_weight(gens, b);
              if (wa != wb) return wa < wb;
              return word_lex_less(a, b);
            });
  return lang;
}

ConeCheck verify_cone_language(const GroupPresentation& pres,
                               const GeneratingSet& gens,
                               const ConeLanguage& lang, int radius) {
  require(radius >= 1, ErrorKind::config, "radius must be positive");
  int max_cw = 0;
  for (const Word& w : lang.coset_words)
    max_cw = std::max(max_cw, word_weight(gens, w));
  int core_cap = radius + max_cw;
  BallIndex ball = build_ball(pres, gens, core_cap);

  std::vector<GroupElement> coset_vals;
  std::vector<int> coset_w;
  for (const Word& w : lang.coset_words) {
    coset_vals.push_back(eval_word(pres, gens, w));
    coset_w.push_back(word_weight(gens, w));
  }
  std::vector<GroupElement> vertex_vals;
  std::vector<int> vertex_w;
  for (const Word& w : lang.vertex_words) {
    vertex_vals.push_back(eval_word(pres, gens, w));
    vertex_w.push_back(word_weight(gens, w));
  }

  ConeCheck check;
  check.geodesic_core = true;
  std::vector<int> best(ball.size(), -1);
  Word core;
  auto visit = [&](const GroupElement& val, int weight) {
    ++check.words_checked;
    if (!core.empty() && !is_geodesic(ball, core)) check.geodesic_core = false;
    for (std::size_t j = 0; j < coset_vals.size(); ++j) {
      int32_t id = ball.find(pres.multiply(val, coset_vals[j]));
      if (id < 0 || ball.len[id] > radius) continue;
      int total = weight + coset_w[j];
      if (best[id] < 0 || total < best[id]) best[id] = total;
    }
  };
  for (const auto& simplex : lang.tri.simplices) {
    // Exponent DFS over vertex powers in simplex order, keeping the spelled
    // word `core` in sync so it can be geodesic-tested at every leaf.
    auto walk = [&](auto&& self, std::size_t slot, const GroupElement& val,
                    int weight) -> void {
      if (slot == simplex.size()) {
        visit(val, weight);
        return;
      }
      std::size_t mark = core.size();
      GroupElement cur = val;
      for (int n = 0;; ++n) {
        int w = weight + n * vertex_w[simplex[slot]];
        if (w > core_cap) break;
        if (n > 0) {
          cur = pres.multiply(cur, vertex_vals[simplex[slot]]);
          for (int32_t letter : lang.vertex_words[simplex[slot]])
            core.push_back(letter);
        }
        self(self, slot + 1, cur, w);
      }
      core.resize(mark);
    };
    walk(walk, 0, pres.identity(), 0);
  }

  check.surjective = true;
  for (int64_t id = 0; id < ball.size(); ++id) {
    if (ball.len[id] > radius) continue;
    if (best[id] < 0) {
      check.surjective = false;
      if (!check.uncovered) check.uncovered = pres.describe(ball.elems[id]);
      continue;
    }
    check.max_slack = std::max(check.max_slack, best[id] - ball.len[id]);
  }
  return check;
}

NerodeTable nerode_separation(const GroupPresentation& pres,
                              const GeneratingSet& gens, int n_max,
                              int64_t ball_cap) {
  std::optional<int> t = gens.find("t"), c = gens.find("c");
  require(t.has_value() && c.has_value(), ErrorKind::config,
          "the separation family needs letters named t and c");
  require(n_max >= 2, ErrorKind::config, "need n_max >= 2 for pairs m < n");
  int radius = 2 * gens.letters[*t].weight +
               2 * n_max * gens.letters[*c].weight;
  BallIndex ball = build_ball(pres, gens, radius, Metric::directed, ball_cap);

  auto family = [&](int a, int b) {
    Word w{*t};
    w.insert(w.end(), a, *c);
    w.push_back(*t);
    w.insert(w.end(), b, *c);
    return w;
  };

  NerodeTable table;
  table.n_max = n_max;
  table.all_separated = true;
  for (int n = 2; n <= n_max; ++n) {
    for (int m = 1; m < n; ++m) {
      NerodeRow row;
      row.n = n;
      row.m = m;
      row.geodesic = family(n, m);
      row.ungeodesic = family(m, m);
      row.separated = is_geodesic(ball, row.geodesic) &&
                      !is_geodesic(ball, row.ungeodesic);
      table.all_separated = table.all_separated && row.separated;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

}  // namespace geogrow
