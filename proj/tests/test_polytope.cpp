#include <doctest.h>

#include "geogrow/fellow.hpp"
#include "geogrow/group_io.hpp"
#include "geogrow/hull.hpp"
#include "geogrow/lp.hpp"
#include "geogrow/oracle.hpp"
#include "geogrow/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace geogrow;

namespace {

GroupDescription load_g(const std::string& name) {
  return load_group_file(resolve_group_path(name));
}

Triangulation load_tri(const std::string& name) {
  return load_triangulation_file(data_dir() + "/tri/" + name + ".tri");
}

VecZ vz(std::initializer_list<long long> coords) {
  VecZ v(coords.size());
  int i = 0;
  for (auto c : coords) v[i++] = c;
  return v;
}

VecQ vq(std::initializer_list<long long> coords) {
  VecQ v(coords.size());
  int i = 0;
  for (auto c : coords) v[i++] = Rat(c);
  return v;
}

std::vector<VecZ> vertex_list(const Polytope& p) {
  std::vector<VecZ> out;
  for (const VecQ& v : p.vertices) {
    VecZ w(p.m);
    for (int i = 0; i < p.m; ++i) {
      REQUIRE(denominator(v[i]) == 1);
      w[i] = numerator(v[i]);
    }
    out.push_back(w);
  }
  return out;
}

// Independent half-space oracle: some nonzero u has u.d >= 0 for all d.
// Tries the 2m sign normalisations u_j = +-1 as exact feasibility programs
// with u split into positive and negative parts plus one slack per vector.
bool hemisphere_lp_oracle(const std::vector<VecZ>& dirs) {
  if (dirs.empty()) return true;
  int m = static_cast<int>(dirs[0].size());
  int n = static_cast<int>(dirs.size());
  for (int j = 0; j < m; ++j) {
    for (int sign : {1, -1}) {
      std::vector<std::vector<Rat>> a(n + 1,
                                      std::vector<Rat>(2 * m + n, Rat(0)));
      std::vector<Rat> b(n + 1, Rat(0));
      for (int r = 0; r < n; ++r) {
        for (int i = 0; i < m; ++i) {
          a[r][i] = Rat(dirs[r][i]);
          a[r][m + i] = -Rat(dirs[r][i]);
        }
        a[r][2 * m + r] = -1;
      }
      a[n][j] = 1;
      a[n][m + j] = -1;
      b[n] = sign;
      if (lp_feasible(a, b)) return true;
    }
  }
  return false;
}

int weighted_sum(const GeneratingSet& gens, const std::vector<int>& expo) {
  int w = 0;
  for (std::size_t i = 0; i < expo.size(); ++i)
    w += expo[i] * gens.letters[i].weight;
  return w;
}

GroupElement eval_powers(const GroupPresentation& pres,
                         const GeneratingSet& gens,
                         const std::vector<int>& expo) {
  GroupElement g = pres.identity();
  for (std::size_t i = 0; i < expo.size(); ++i)
    for (int k = 0; k < expo[i]; ++k)
      g = pres.multiply(g, gens.letters[i].value);
  return g;
}

}  // namespace

TEST_CASE("rays reduce to primitive directions") {
  Ray r = make_ray(vz({2, -4}));
  CHECK(compare_vec(r.dir, vz({1, -2})) == 0);
  CHECK(ray_equal(make_ray(vz({3, 3})), make_ray(vz({7, 7}))));
  CHECK(!ray_equal(make_ray(vz({1, 1})), make_ray(vz({-1, -1}))));
  CHECK_THROWS_AS((void)make_ray(vz({0, 0})), Error);
}

TEST_CASE("triangulation files parse validate and round trip") {
  auto z2 = load_g("z2");
  auto cannon = load_g("cannon");

  Triangulation quad = load_tri("quadrants");
  CHECK(quad.rank == 2);
  CHECK(quad.rays.size() == 4);
  CHECK(quad.simplices.size() == 4);
  TriangulationCheck check = validate_triangulation(quad, 4);
  CHECK(check.independent);
  CHECK(check.covers);
  CHECK(!check.uncovered.has_value());
  CHECK(triangulation_f_invariant(quad, z2.pres));
  CHECK(triangulation_f_invariant(quad, cannon.pres));

  Triangulation diag = load_tri("quadrants_diag");
  CHECK(diag.rays.size() == 5);
  CHECK(validate_triangulation(diag, 4).covers);
  CHECK(triangulation_f_invariant(diag, cannon.pres));

  Triangulation half = load_tri("halfline");
  TriangulationCheck hc = validate_triangulation(half, 4);
  CHECK(hc.independent);
  CHECK(!hc.covers);
  REQUIRE(hc.uncovered.has_value());
  CHECK((*hc.uncovered)[0] == -4);  // first point in scan order
  CHECK(validate_triangulation(load_tri("line"), 4).covers);

  // A ray set that is not closed under the coordinate swap.
  Triangulation lopsided;
  lopsided.rank = 2;
  lopsided.rays = {make_ray(vz({2, 1})), make_ray(vz({-1, 0}))};
  lopsided.simplices = {{0, 1}};
  CHECK(!triangulation_f_invariant(lopsided, cannon.pres));
  CHECK(triangulation_f_invariant(lopsided, z2.pres));  // trivial action

  for (const char* name : {"quadrants", "quadrants_diag", "halfline", "line"}) {
    std::string text = serialize_triangulation(load_tri(name));
    CHECK(serialize_triangulation(parse_triangulation(text)) == text);
  }

  CHECK_THROWS_AS((void)parse_triangulation("geogrow-tri 2\nrank 1\n"), Error);
  CHECK_THROWS_AS(
      (void)parse_triangulation(
          "geogrow-tri 1\nrank 2\nrays 2\n1 0\n2 0\nsimplices 0\n"),
      Error);  // duplicate direction after reduction
  CHECK_THROWS_AS(
      (void)parse_triangulation(
          "geogrow-tri 1\nrank 2\nrays 1\n1 0\nsimplices 1\n0 1\n"),
      Error);  // simplex index out of range
  CHECK_THROWS_AS(
      (void)parse_triangulation(
          "geogrow-tri 1\nrank 1\nrays 1\n1\nsimplices 0\nextra\n"),
      Error);
}

TEST_CASE("translation length solves the weighted gauge program") {
  auto z2 = load_g("z2");
  auto z2a = load_g("z2_asym");
  auto cannon = load_g("cannon");
  auto ce = load_g("cannon_enlarged");

  CHECK(translation_length(z2.pres, z2.gens, vz({2, 1})) == Rat(3));
  CHECK(translation_length(z2.pres, z2.gens, vz({0, 0})) == Rat(0));
  CHECK(translation_length(z2a.pres, z2a.gens, vz({1, 1})) == Rat(2));
  CHECK(translation_length(z2a.pres, z2a.gens, vz({-1, 0})) == Rat(2));
  CHECK(translation_length(z2a.pres, z2a.gens, vz({2, -1})) == Rat(4));
  CHECK(translation_length(cannon.pres, cannon.gens, vz({1, 1})) == Rat(1));
  // The cheapest fractional route to (0, 1) uses both diagonal letters.
  CHECK(translation_length(cannon.pres, cannon.gens, vz({0, 1})) == Rat(3, 2));
  CHECK(translation_length(ce.pres, ce.gens, vz({0, 1})) == Rat(1, 2));

  // Positive homogeneity and subadditivity on a sample box.
  for (int x = -3; x <= 3; ++x) {
    for (int y = -3; y <= 3; ++y) {
      Rat tau = translation_length(z2a.pres, z2a.gens, vz({x, y}));
      CHECK(translation_length(z2a.pres, z2a.gens, vz({3 * x, 3 * y})) ==
            3 * tau);
      Rat other = translation_length(z2a.pres, z2a.gens, vz({x + 1, y}));
      Rat step = translation_length(z2a.pres, z2a.gens, vz({1, 0}));
      CHECK(other <= tau + step);
    }
  }

  // The positive span of a single letter misses negative vectors.
  GeneratingSet monoid;
  monoid.letters = {z2.gens.letters[0]};  // a = (1, 0)
  CHECK(translation_length(z2.pres, monoid, vz({2, 0})) == Rat(2));
  CHECK_THROWS_AS((void)translation_length(z2.pres, monoid, vz({-1, 0})),
                  Error);
  CHECK_THROWS_AS((void)translation_length(z2.pres, z2.gens, vz({1})), Error);
}

TEST_CASE("translation polytope is the unit ball of the gauge") {
  auto z2 = load_g("z2");
  auto z2a = load_g("z2_asym");
  auto cannon = load_g("cannon");
  auto ce = load_g("cannon_enlarged");

  std::vector<VecZ> cross = vertex_list(translation_polytope(z2.pres, z2.gens));
  REQUIRE(cross.size() == 4);
  CHECK(compare_vec(cross[0], vz({-1, 0})) == 0);
  CHECK(compare_vec(cross[1], vz({0, -1})) == 0);
  CHECK(compare_vec(cross[2], vz({0, 1})) == 0);
  CHECK(compare_vec(cross[3], vz({1, 0})) == 0);

  std::vector<VecZ> tri = vertex_list(translation_polytope(z2a.pres, z2a.gens));
  REQUIRE(tri.size() == 3);
  CHECK(compare_vec(tri[0], vz({-1, -1})) == 0);
  CHECK(compare_vec(tri[1], vz({0, 1})) == 0);
  CHECK(compare_vec(tri[2], vz({1, 0})) == 0);

  CHECK(vertex_list(translation_polytope(cannon.pres, cannon.gens)).size() ==
        4);
  std::vector<VecZ> diamond = vertex_list(translation_polytope(ce.pres, ce.gens));
  REQUIRE(diamond.size() == 4);
  CHECK(compare_vec(diamond[0], vz({-2, 0})) == 0);
  CHECK(compare_vec(diamond[3], vz({2, 0})) == 0);

  // Gauge identity: v lies in n.C exactly when tau(v) <= n.  Membership is
  // decided by the facet description, an independent code path from the LP.
  for (const auto& g : {z2, z2a}) {
    Polytope c = translation_polytope(g.pres, g.gens);
    for (int x = -6; x <= 6; ++x) {
      for (int y = -6; y <= 6; ++y) {
        Rat tau = translation_length(g.pres, g.gens, vz({x, y}));
        for (int n = 1; n <= 12; ++n) {
          VecQ p(2);
          p[0] = Rat(x, n);
          p[1] = Rat(y, n);
          CHECK(c.contains(p) == (tau <= n));
        }
      }
    }
  }

  // Letters that span a halfplane only do not give a gauge.
  GeneratingSet half;
  half.letters = {z2.gens.letters[0], z2.gens.letters[1],
                  z2.gens.letters[2]};  // a, A, b
  CHECK_THROWS_AS((void)translation_polytope(z2.pres, half), Error);
}

TEST_CASE("translation length is the limit of stretched word lengths") {
  auto z2a = load_g("z2_asym");
  auto cannon = load_g("cannon");
  Polytope square = convex_hull(
      2, {vq({1, 1}), vq({1, -1}), vq({-1, 1}), vq({-1, -1})});
  GeneratingSet good = good_generating_set(cannon.pres, cannon.gens, square).gens;

  std::vector<std::pair<const GroupPresentation*, const GeneratingSet*>> cases =
      {{&z2a.pres, &z2a.gens}, {&cannon.pres, &good}};
  for (auto [pres, gens] : cases) {
    BallIndex ball = build_ball(*pres, *gens, 30);
    for (VecZ v : {vz({1, 1}), vz({2, -1}), vz({-1, -1}), vz({0, 1})}) {
      Rat tau = translation_length(*pres, *gens, v);
      for (int n : {4, 8, 12}) {
        if (Rat(n) * tau > 28) continue;
        VecZ nv = v * Int(n);
        auto len = element_length(ball, GroupElement{VaElement{nv, 0}});
        REQUIRE(len.has_value());
        Rat ratio = Rat(*len, n);
        CHECK(ratio >= tau);           // the gauge relaxes the word metric
        CHECK(ratio - tau <= Rat(2, n));
      }
    }
  }

  // On the original set the swap letter shortcuts past the lattice gauge:
  // (0, 16) is spelled t c^8 t in 10 letters while the trivial-F letters
  // alone would pay 24.  This failure of convergence is what marks the
  // generating set as bad.
  BallIndex ball = build_ball(cannon.pres, cannon.gens, 12);
  Rat tau = translation_length(cannon.pres, cannon.gens, vz({0, 1}));
  CHECK(tau == Rat(3, 2));
  auto len = element_length(ball, GroupElement{VaElement{vz({0, 16}), 0}});
  REQUIRE(len.has_value());
  CHECK(*len == 10);
  CHECK(Rat(*len, 16) < tau);
}

TEST_CASE("hemisphere check agrees with a linear programming oracle") {
  // Truth table over all nonempty subsets of the six signed axes of Z^3.
  std::vector<VecZ> axes;
  for (int i = 0; i < 3; ++i) {
    for (int sign : {1, -1}) {
      VecZ v = VecZ::Zero(3);
      v[i] = sign;
      axes.push_back(v);
    }
  }
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<VecZ> dirs;
    for (int i = 0; i < 6; ++i)
      if (mask & (1 << i)) dirs.push_back(axes[i]);
    CHECK(hemisphere_check(dirs) == hemisphere_lp_oracle(dirs));
  }

  // Compass subsets in the plane, including diagonals.
  std::vector<VecZ> compass = {vz({1, 0}),  vz({1, 1}),   vz({0, 1}),
                               vz({-1, 1}), vz({-1, 0}),  vz({-1, -1}),
                               vz({0, -1}), vz({1, -1})};
  for (int mask = 1; mask < 256; ++mask) {
    std::vector<VecZ> dirs;
    for (int i = 0; i < 8; ++i)
      if (mask & (1 << i)) dirs.push_back(compass[i]);
    CHECK(hemisphere_check(dirs) == hemisphere_lp_oracle(dirs));
  }

  CHECK(hemisphere_check({vz({2, 0}), vz({0, 2})}));
  CHECK(!hemisphere_check({vz({1}), vz({-1})}));
  CHECK(hemisphere_check({vz({5})}));
  CHECK(hemisphere_check(std::vector<VecZ>{}));

  // The symmetric variant ignores directions without their negatives.
  CHECK(hemisphere_check_symmetric({vz({1, 0}), vz({0, 1})}));
  CHECK(hemisphere_check_symmetric({vz({1, 0}), vz({-1, 0}), vz({0, 1})}));
  CHECK(!hemisphere_check_symmetric(
      {vz({1, 0}), vz({-1, 0}), vz({0, 1}), vz({0, -1})}));

  // Lattice letters of a generating set that spans the plane fail the
  // hemisphere test, as they should for a gauge to exist.
  auto cannon = load_g("cannon");
  LatticeLetters lat = lattice_letters(cannon.pres, cannon.gens);
  CHECK(lat.letters.size() == 6);
  CHECK(!hemisphere_check(lat.values));
  CHECK(!hemisphere_check_symmetric(lat.values));
}

TEST_CASE("abelian frontier bounds match minimal counterexamples") {
  auto z1 = load_g("z1");
  auto z2 = load_g("z2");
  auto z2a = load_g("z2_asym");

  AbelianBound b1 = abelian_fft_bound(z1.pres, z1.gens, 6);
  CHECK(b1.bound == 2);
  CHECK(b1.frontier_closed);
  REQUIRE(b1.minimal.size() == 1);
  CHECK(b1.minimal[0] == std::vector<int>{1, 1});

  AbelianBound b2 = abelian_fft_bound(z2.pres, z2.gens, 5);
  CHECK(b2.bound == 2);
  CHECK(b2.minimal == std::vector<std::vector<int>>{{0, 0, 1, 1}, {1, 1, 0, 0}});

  AbelianBound b3 = abelian_fft_bound(z2a.pres, z2a.gens, 6);
  CHECK(b3.bound == 3);
  CHECK(b3.minimal == std::vector<std::vector<int>>{{1, 1, 1}});

  // A positive-only letter set has no non-geodesic powers at all.
  GeneratingSet monoid;
  monoid.letters = {z2.gens.letters[0], z2.gens.letters[2]};
  AbelianBound b4 = abelian_fft_bound(z2.pres, monoid, 5);
  CHECK(b4.bound == 0);
  CHECK(b4.minimal.empty());
  CHECK(b4.frontier_closed);

  // Oracle: every minimal is itself non-geodesic while all its immediate
  // predecessors are geodesic, and every non-geodesic power dominates one.
  for (const auto& g : {z1, z2, z2a}) {
    int cap = 6;
    AbelianBound bound = abelian_fft_bound(g.pres, g.gens, cap);
    BallIndex ball = build_ball(g.pres, g.gens, cap);
    auto nongeodesic = [&](const std::vector<int>& expo) {
      auto len = element_length(ball, eval_powers(g.pres, g.gens, expo));
      REQUIRE(len.has_value());
      return *len < weighted_sum(g.gens, expo);
    };
    for (const auto& expo : bound.minimal) {
      CHECK(nongeodesic(expo));
      for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0) continue;
        std::vector<int> pred = expo;
        --pred[i];
        CHECK(!nongeodesic(pred));
      }
    }
    // Exhaustive sweep: non-geodesic vectors under the cap are exactly the
    // ones dominating some minimal.
    std::vector<int> expo(g.gens.size(), 0);
    auto sweep = [&](auto&& self, std::size_t idx) -> void {
      if (idx == expo.size()) {
        if (weighted_sum(g.gens, expo) == 0) return;
        bool dominated = false;
        for (const auto& mini : bound.minimal) {
          bool leq = true;
          for (std::size_t i = 0; i < expo.size(); ++i)
            leq = leq && mini[i] <= expo[i];
          dominated = dominated || leq;
        }
        CHECK(nongeodesic(expo) == dominated);
        return;
      }
      for (expo[idx] = 0; weighted_sum(g.gens, expo) <= cap; ++expo[idx])
        self(self, idx + 1);
      expo[idx] = 0;
    };
    sweep(sweep, 0);
  }

  auto cannon = load_g("cannon");
  CHECK_THROWS_AS((void)abelian_fft_bound(cannon.pres, cannon.gens, 4), Error);
}

TEST_CASE("good generating sets scale the model polytope") {
  auto cannon = load_g("cannon");
  Polytope square = convex_hull(
      2, {vq({1, 1}), vq({1, -1}), vq({-1, 1}), vq({-1, -1})});

  GoodSetResult good = good_generating_set(cannon.pres, cannon.gens, square);
  CHECK(good.scale == 2);
  CHECK(good.gens.size() == 25);
  CHECK(good.gens.inverse_closed);
  std::vector<VecZ> verts = vertex_list(good.polytope);
  REQUIRE(verts.size() == 4);
  CHECK(compare_vec(verts[0], vz({-2, -2})) == 0);
  CHECK(compare_vec(verts[1], vz({-2, 2})) == 0);
  CHECK(compare_vec(verts[2], vz({2, -2})) == 0);
  CHECK(compare_vec(verts[3], vz({2, 2})) == 0);

  std::set<std::string> names;
  for (const Letter& l : good.gens.letters) names.insert(l.name);
  CHECK(names.size() == 25);
  CHECK(names.count("t"));
  CHECK(names.count("c"));
  CHECK(names.count("v1_2"));
  CHECK(!names.count("v1_1"));  // already present as the base letter d
  CHECK(!names.count("v0_0"));

  // The mandated corrections are the F-orbit closure of the base values.
  std::vector<VecZ> want = {vz({-2, 0}), vz({-1, -1}), vz({-1, 0}),
                            vz({0, -2}), vz({0, -1}),  vz({0, 1}),
                            vz({0, 2}),  vz({1, 0}),   vz({1, 1}),
                            vz({2, 0})};
  REQUIRE(good.mandated.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(compare_vec(good.mandated[i], want[i]) == 0);

  // Scale 2 is minimal: the mandated vector (2, 0) escapes the unit square.
  VecQ outside(2);
  outside[0] = Rat(2);
  outside[1] = Rat(0);
  CHECK(!square.contains(outside));

  // The falsification property holds on the enlarged set.
  FellowTravelReport rep = verify_fft(cannon.pres, good.gens, 1, 6);
  CHECK(rep.holds);

  // Deeper mandates on a small base pull in longer correction vectors.
  auto z2 = load_g("z2");
  GeneratingSet small;
  small.letters = {z2.gens.letters[0], z2.gens.letters[2]};  // a, b
  GoodSetResult deep =
      good_generating_set(z2.pres, small, square, GoodSetOptions{3, true, 64});
  CHECK(deep.scale == 3);
  CHECK(deep.gens.size() == 48);
  bool has_diff = false, has_cube = false;
  for (const VecZ& v : deep.mandated) {
    has_diff = has_diff || compare_vec(v, vz({1, -1})) == 0;
    has_cube = has_cube || compare_vec(v, vz({3, 0})) == 0;
  }
  CHECK(has_diff);
  CHECK(has_cube);

  // A model that is not invariant under the coordinate swap is rejected.
  Polytope rect = convex_hull(
      2, {vq({2, 1}), vq({2, -1}), vq({-2, 1}), vq({-2, -1})});
  CHECK_THROWS_AS(
      (void)good_generating_set(cannon.pres, cannon.gens, rect), Error);
  // So is a model without the origin in its interior.
  Polytope shifted = convex_hull(
      2, {vq({0, 1}), vq({0, -1}), vq({3, 1}), vq({3, -1})});
  CHECK_THROWS_AS(
      (void)good_generating_set(cannon.pres, cannon.gens, shifted), Error);
}

TEST_CASE("cone language of the quadrant fan covers the plane exactly") {
  auto z2 = load_g("z2");
  Triangulation quad = load_tri("quadrants");
  ConeLanguage lang = cone_language(z2.pres, z2.gens, quad, 1);
  CHECK(lang.scale == 1);
  REQUIRE(lang.vertex_words.size() == 4);
  CHECK(word_str(z2.gens, lang.vertex_words[0]) == "a");
  CHECK(word_str(z2.gens, lang.vertex_words[1]) == "b");
  CHECK(word_str(z2.gens, lang.vertex_words[2]) == "A");
  CHECK(word_str(z2.gens, lang.vertex_words[3]) == "B");
  REQUIRE(lang.coset_words.size() == 1);
  CHECK(lang.coset_words[0].empty());

  ConeCheck check = verify_cone_language(z2.pres, z2.gens, lang, 10);
  CHECK(check.geodesic_core);
  CHECK(check.surjective);
  CHECK(check.max_slack == 0);
  CHECK(check.words_checked == 264);
  CHECK(!check.uncovered.has_value());
}

TEST_CASE("cone languages at higher scale list coset words") {
  auto z2 = load_g("z2");
  Triangulation diag = load_tri("quadrants_diag");

  // The diagonal ray leaves the unit ball at (1/2, 1/2), so scale one
  // cannot spell it as a lattice point.
  CHECK_THROWS_AS((void)cone_language(z2.pres, z2.gens, diag, 1), Error);

  ConeLanguage lang = cone_language(z2.pres, z2.gens, diag, 2);
  REQUIRE(lang.vertex_words.size() == 5);
  CHECK(word_str(z2.gens, lang.vertex_words[0]) == "a a");
  CHECK(word_str(z2.gens, lang.vertex_words[4]) == "a b");
  std::vector<std::string> cosets;
  for (const Word& w : lang.coset_words)
    cosets.push_back(word_str(z2.gens, w));
  CHECK(cosets == std::vector<std::string>{"", "a", "A", "b", "B", "a B",
                                           "A b", "A B"});

  ConeCheck check = verify_cone_language(z2.pres, z2.gens, lang, 8);
  CHECK(check.geodesic_core);
  CHECK(check.surjective);
  CHECK(check.max_slack == 0);

  // A fan that covers only half the line misses negative elements.
  auto z1 = load_g("z1");
  ConeLanguage half = cone_language(z1.pres, z1.gens, load_tri("halfline"), 1);
  ConeCheck hc = verify_cone_language(z1.pres, z1.gens, half, 5);
  CHECK(hc.geodesic_core);
  CHECK(!hc.surjective);
  REQUIRE(hc.uncovered.has_value());
  CHECK(hc.uncovered->find("-1") != std::string::npos);

  ConeLanguage line = cone_language(z1.pres, z1.gens, load_tri("line"), 1);
  ConeCheck lc = verify_cone_language(z1.pres, z1.gens, line, 6);
  CHECK(lc.surjective);
  CHECK(lc.max_slack == 0);
}

TEST_CASE("nerode rows separate prefix classes of the geodesic language") {
  auto cannon = load_g("cannon");
  NerodeTable table = nerode_separation(cannon.pres, cannon.gens, 5);
  CHECK(table.n_max == 5);
  CHECK(table.rows.size() == 10);
  CHECK(table.all_separated);
  for (const NerodeRow& row : table.rows) {
    CHECK(row.m < row.n);
    CHECK(row.separated);
    CHECK(row.geodesic.size() == static_cast<std::size_t>(row.n + row.m + 2));
  }

  // Oracle sweep straight against the ball: t c^n t c^m is geodesic
  // exactly when m < n.
  int t = *cannon.gens.find("t"), c = *cannon.gens.find("c");
  BallIndex ball = build_ball(cannon.pres, cannon.gens, 22);
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      Word w{t};
      w.insert(w.end(), n, c);
      w.push_back(t);
      w.insert(w.end(), m, c);
      CHECK(is_geodesic(ball, w) == (m < n));
    }
  }

  auto z2 = load_g("z2");
  CHECK_THROWS_AS((void)nerode_separation(z2.pres, z2.gens, 3), Error);
}

TEST_CASE("polytope operations reject bad arguments") {
  auto z2 = load_g("z2");
  auto psl = load_g("psl2z");
  Triangulation quad = load_tri("quadrants");

  CHECK_THROWS_AS((void)lattice_letters(psl.pres, psl.gens), Error);
  CHECK_THROWS_AS((void)translation_length(psl.pres, psl.gens, vz({1})),
                  Error);
  CHECK_THROWS_AS((void)cone_language(z2.pres, z2.gens, quad, 0), Error);
  CHECK_THROWS_AS(
      (void)cone_language(z2.pres, z2.gens, load_tri("halfline"), 1), Error);
  ConeLanguage lang = cone_language(z2.pres, z2.gens, quad, 1);
  CHECK_THROWS_AS((void)verify_cone_language(z2.pres, z2.gens, lang, 0),
                  Error);
  CHECK_THROWS_AS((void)validate_triangulation(quad, 0), Error);
  CHECK_THROWS_AS((void)nerode_separation(load_g("cannon").pres,
                                          load_g("cannon").gens, 1),
                  Error);
  CHECK_THROWS_AS((void)abelian_fft_bound(z2.pres, z2.gens, 0), Error);
  CHECK_THROWS_AS((void)triangulation_f_invariant(quad, psl.pres), Error);
}
