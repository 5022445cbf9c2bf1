#include <doctest.h>

#include "geogrow/fellow.hpp"
#include "geogrow/group_io.hpp"

#include <algorithm>
#include <vector>

using namespace geogrow;

namespace {

GroupDescription load(const std::string& name) {
  return load_group_file(resolve_group_path(name));
}

// All words listed by (weight, lex) order up to a weight bound.
std::vector<Word> words_by_weight(const GeneratingSet& gens, int max_weight) {
  if (max_weight < 0) return {};
  std::vector<std::vector<Word>> byw(max_weight + 1);
  byw[0].push_back({});
  for (int w = 0; w < max_weight; ++w) {
    for (std::size_t i = 0; i < byw[w].size(); ++i) {
      for (int a = 0; a < gens.size(); ++a) {
        int nw = w + gens.letters[a].weight;
        if (nw > max_weight) continue;
        Word ext = byw[w][i];
        ext.push_back(a);
        byw[nw].push_back(std::move(ext));
      }
    }
  }
  std::vector<Word> all;
  for (auto& bucket : byw) {
    std::sort(bucket.begin(), bucket.end(), word_lex_less);
    for (auto& w : bucket) all.push_back(std::move(w));
  }
  return all;
}

// Reference falsifier: scan every strictly shorter word in (weight, lex)
// order and test the definition directly.
std::optional<Word> brute_falsify(const BallIndex& ball, const Word& w,
                                  int delta) {
  const GroupPresentation& pres = *ball.pres;
  const GeneratingSet& gens = *ball.gens;
  GroupElement target = eval_word(pres, gens, w);
  int total = word_weight(gens, w);
  for (const Word& v : words_by_weight(gens, total - 1)) {
    if (!pres.equal(eval_word(pres, gens, v), target)) continue;
    if (async_fellow_travel(ball, v, w, delta)) return v;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("async fellow travel basics") {
  auto g = load("z2");
  BallIndex ball = build_ball(g.pres, g.gens, 8);
  Word abA = parse_word(g.gens, "a b A");
  Word b = parse_word(g.gens, "b");
  CHECK(async_fellow_travel(ball, b, abA, 1));
  CHECK_FALSE(async_fellow_travel(ball, b, abA, 0));
  // Every word fellow travels itself at delta 0.
  for (const Word& w : words_by_weight(g.gens, 3))
    CHECK(async_fellow_travel(ball, w, w, 0));
  // Synchronous implies asynchronous.
  Word ab = parse_word(g.gens, "a b");
  Word ba = parse_word(g.gens, "b a");
  for (int delta = 0; delta <= 3; ++delta) {
    if (sync_fellow_travel(ball, ab, ba, delta))
      CHECK(async_fellow_travel(ball, ab, ba, delta));
  }
  CHECK(sync_fellow_travel(ball, ab, ba, 2));
  CHECK_FALSE(sync_fellow_travel(ball, ab, ba, 0));
}

TEST_CASE("falsify matches the scanning reference") {
  struct Setup {
    const char* group;
    int max_weight;
    std::vector<int> deltas;
  };
  for (const Setup& s : {Setup{"z1", 5, {0, 1, 2}},
                         Setup{"z2", 4, {0, 1}},
                         Setup{"cannon", 4, {0, 1, 2}},
                         Setup{"z2_asym", 4, {0, 1, 2, 3}}}) {
    CAPTURE(s.group);
    auto g = load(s.group);
    BallIndex ball = build_ball(g.pres, g.gens, s.max_weight + 4);
    for (const Word& w : words_by_weight(g.gens, s.max_weight)) {
      for (int delta : s.deltas) {
        auto fast = falsify(ball, w, delta);
        auto ref = brute_falsify(ball, w, delta);
        CAPTURE(word_str(g.gens, w));
        CAPTURE(delta);
        REQUIRE(fast.has_value() == ref.has_value());
        if (fast) CHECK(*fast == *ref);
      }
    }
  }
}

TEST_CASE("falsify on weighted letters") {
  GroupDescription g = parse_group_json(R"({
    "kind": "va", "rank": 1,
    "generators": [
      {"name": "a", "vector": [1], "weight": 2},
      {"name": "A", "vector": [-1], "weight": 3}
    ],
    "inverse_closed": true
  })");
  BallIndex ball = build_ball(g.pres, g.gens, 14);
  for (const Word& w : words_by_weight(g.gens, 10)) {
    for (int delta = 0; delta <= 3; ++delta) {
      auto fast = falsify(ball, w, delta);
      auto ref = brute_falsify(ball, w, delta);
      CAPTURE(word_str(g.gens, w));
      CAPTURE(delta);
      REQUIRE(fast.has_value() == ref.has_value());
      if (fast) CHECK(*fast == *ref);
    }
  }
}

TEST_CASE("corridor tables agree with falsify on every word") {
  struct Setup {
    const char* group;
    int max_weight;
    std::vector<int> deltas;
  };
  for (const Setup& s : {Setup{"z1", 6, {0, 1, 2}},
                         Setup{"z2", 4, {0, 1, 2}},
                         Setup{"cannon", 5, {0, 1, 2}},
                         Setup{"z2_asym", 4, {1, 2, 3}}}) {
    CAPTURE(s.group);
    auto g = load(s.group);
    BallIndex ball = build_ball(g.pres, g.gens, s.max_weight + 4);
    for (int delta : s.deltas) {
      for (const Word& w : words_by_weight(g.gens, s.max_weight)) {
        CAPTURE(word_str(g.gens, w));
        CAPTURE(delta);
        CHECK(corridor_falsifiable(g.pres, g.gens, w, delta) ==
              falsify(ball, w, delta).has_value());
      }
    }
  }
}

TEST_CASE("corridor tables agree with falsify on weighted letters") {
  GroupDescription g = parse_group_json(R"({
    "kind": "va", "rank": 1,
    "generators": [
      {"name": "a", "vector": [1], "weight": 2},
      {"name": "A", "vector": [-1], "weight": 3}
    ],
    "inverse_closed": true
  })");
  BallIndex ball = build_ball(g.pres, g.gens, 14);
  for (int delta = 0; delta <= 4; ++delta) {
    for (const Word& w : words_by_weight(g.gens, 10)) {
      CAPTURE(word_str(g.gens, w));
      CAPTURE(delta);
      CHECK(corridor_falsifiable(g.pres, g.gens, w, delta) ==
            falsify(ball, w, delta).has_value());
    }
  }
}

TEST_CASE("pinned falsification examples") {
  auto z1 = load("z1");
  BallIndex zball = build_ball(z1.pres, z1.gens, 8);
  Word aA = parse_word(z1.gens, "a A");
  auto f1 = falsify(zball, aA, 1);
  REQUIRE(f1.has_value());
  CHECK(f1->empty());
  CHECK_FALSE(falsify(zball, aA, 0).has_value());

  auto c = load("cannon");
  BallIndex cball = build_ball(c.pres, c.gens, 8);
  Word tctc = parse_word(c.gens, "t c t c");
  auto f2 = falsify(cball, tctc, 2);
  REQUIRE(f2.has_value());
  CHECK(word_str(c.gens, *f2) == "d d");
  CHECK_FALSE(falsify(cball, tctc, 1).has_value());
  // t c c t c c has value (4, 4); d^4 reaches it but cannot track the
  // detour through (0, 4) at delta 2.
  Word tcctcc = parse_word(c.gens, "t c c t c c");
  GroupElement lhs = eval_word(c.pres, c.gens, tcctcc);
  GroupElement rhs = eval_word(c.pres, c.gens, parse_word(c.gens, "d d d d"));
  CHECK(c.pres.equal(lhs, rhs));
  CHECK_FALSE(is_geodesic(cball, tcctcc));
  CHECK_FALSE(falsify(cball, tcctcc, 2).has_value());
  REQUIRE(falsify(cball, tcctcc, 3).has_value());
}

TEST_CASE("falsifiability is monotone in delta") {
  auto g = load("cannon");
  BallIndex ball = build_ball(g.pres, g.gens, 8);
  for (const Word& w : words_by_weight(g.gens, 4)) {
    bool prev = false;
    for (int delta = 0; delta <= 3; ++delta) {
      bool cur = falsify(ball, w, delta).has_value();
      if (prev) CHECK(cur);
      prev = cur;
    }
  }
}

TEST_CASE("verify_fft agrees with an exhaustive falsification sweep") {
  struct Setup {
    const char* group;
    int radius;
    std::vector<int> deltas;
  };
  for (const Setup& s : {Setup{"z1", 6, {0, 1}},
                         Setup{"z2", 4, {0, 1}},
                         Setup{"cannon", 4, {0, 1, 2}},
                         Setup{"z2_asym", 4, {0, 1, 2, 3}}}) {
    CAPTURE(s.group);
    auto g = load(s.group);
    BallIndex ball = build_ball(g.pres, g.gens, s.radius + 4);
    for (int delta : s.deltas) {
      CAPTURE(delta);
      FellowTravelReport rep = verify_fft(g.pres, g.gens, delta, s.radius);
      // Reference: every non-geodesic word of weight <= radius must be
      // falsifiable; the first failure in (weight, lex) order is the
      // counterexample.
      std::optional<Word> least_bad;
      for (const Word& w : words_by_weight(g.gens, s.radius)) {
        if (w.empty() || is_geodesic(ball, w)) continue;
        if (!falsify(ball, w, delta).has_value()) {
          least_bad = w;
          break;
        }
      }
      CHECK(rep.holds == !least_bad.has_value());
      if (least_bad) {
        REQUIRE(rep.counterexample.has_value());
        CHECK(*rep.counterexample == *least_bad);
      }
    }
  }
}

TEST_CASE("verify_fft statistics on the line") {
  auto g = load("z1");
  FellowTravelReport rep = verify_fft(g.pres, g.gens, 1, 12);
  CHECK(rep.holds);
  // Minimal non-geodesic words are a^n A and A^n a, n = 1..11.
  CHECK(rep.minimal_checked == 22);
  CHECK(rep.falsified == 22);
}

TEST_CASE("verify_fft counterexamples are pinned") {
  auto g = load("cannon");
  FellowTravelReport r0 = verify_fft(g.pres, g.gens, 0, 6);
  REQUIRE_FALSE(r0.holds);
  CHECK(word_str(g.gens, *r0.counterexample) == "t t");
  FellowTravelReport r1 = verify_fft(g.pres, g.gens, 1, 6);
  REQUIRE_FALSE(r1.holds);
}

TEST_CASE("delta scan finds the least working delta") {
  auto g = load("z1");
  DeltaScan scan = min_fft_delta(g.pres, g.gens, 3, 8);
  REQUIRE(scan.delta.has_value());
  CHECK(*scan.delta == 1);
  CHECK(scan.reports.size() == 2);
  CHECK_FALSE(scan.reports[0].holds);
  CHECK(scan.reports[1].holds);
}

TEST_CASE("verify_fft honours the state cap") {
  auto g = load("z2");
  VerifyOptions opts;
  opts.state_cap = 4;
  CHECK_THROWS_AS(verify_fft(g.pres, g.gens, 1, 6, opts), Error);
}

TEST_CASE("pinned least deltas for the bundled sets") {
  struct Pin {
    const char* group;
    int delta;
  };
  for (const Pin& p : {Pin{"z1", 1}, Pin{"z2", 1}, Pin{"z3", 1},
                       Pin{"z2_asym", 2}, Pin{"cannon_enlarged", 1},
                       Pin{"psl2z", 2}}) {
    CAPTURE(p.group);
    auto g = load(p.group);
    DeltaScan scan = min_fft_delta(g.pres, g.gens, 4, 6);
    REQUIRE(scan.delta.has_value());
    CHECK(*scan.delta == p.delta);
  }
}

TEST_CASE("the swap extension defeats every small delta") {
  auto g = load("cannon");
  BallIndex ball = build_ball(g.pres, g.gens, 12);
  // Reported counterexamples at radius 12, cross-checked against falsify.
  struct Pin {
    int delta;
    const char* cex;
  };
  for (const Pin& p : {Pin{0, "t t"}, Pin{1, "t a t"}, Pin{2, "a c D D D"},
                       Pin{3, "t c c t C C t"}}) {
    CAPTURE(p.delta);
    FellowTravelReport rep = verify_fft(g.pres, g.gens, p.delta, 12);
    REQUIRE_FALSE(rep.holds);
    CHECK(word_str(g.gens, *rep.counterexample) == p.cex);
    Word cex = parse_word(g.gens, p.cex);
    CHECK_FALSE(is_geodesic(ball, cex));
    CHECK_FALSE(falsify(ball, cex, p.delta).has_value());
  }
  // Members of the doubled-horizontal family witness the failure directly.
  for (int delta = 0; delta <= 3; ++delta) {
    int n = std::max(1, delta);
    Word w = parse_word(g.gens, "t");
    for (int i = 0; i < n; ++i) w.push_back(*g.gens.find("c"));
    w.push_back(*g.gens.find("t"));
    for (int i = 0; i < n; ++i) w.push_back(*g.gens.find("c"));
    CAPTURE(delta);
    CHECK_FALSE(is_geodesic(ball, w));
    CHECK_FALSE(falsify(ball, w, delta).has_value());
  }
}
