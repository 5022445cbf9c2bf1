#include "geogrow/fellow.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace geogrow {

namespace {

// Element of the path at each integer time 0..weight(w).
std::vector<GroupElement> path_points(const GroupPresentation& pres,
                                      const GeneratingSet& gens,
                                      const Word& w) {
  std::vector<GroupElement> pts{pres.identity()};
  for (int32_t a : w) {
    GroupElement next = pres.multiply(pts.back(), gens.letters[a].value);
    int wt = gens.letters[a].weight;
    for (int s = 1; s < wt; ++s) pts.push_back(pts.back());
    pts.push_back(next);
  }
  return pts;
}

bool pair_ok(const BallIndex& dist, const GroupElement& a,
             const GroupElement& b, int delta) {
  auto d = directed_distance(dist, a, b);
  return d.has_value() && *d <= delta;
}

}  // namespace

bool async_fellow_travel(const BallIndex& dist, const Word& v, const Word& u,
                         int delta) {
  require(dist.metric == Metric::directed && dist.radius >= delta,
          ErrorKind::config, "fellow travel needs a directed ball of radius >= delta");
  auto vp = path_points(*dist.pres, *dist.gens, v);
  auto up = path_points(*dist.pres, *dist.gens, u);
  const int R = static_cast<int>(vp.size()) - 1;
  const int C = static_cast<int>(up.size()) - 1;
  // reach[i][j]: staircase from (0,0) to (i,j) through allowed pairs.
  std::vector<std::vector<char>> reach(R + 1, std::vector<char>(C + 1, 0));
  for (int i = 0; i <= R; ++i) {
    for (int j = 0; j <= C; ++j) {
      bool from = (i == 0 && j == 0) || (i > 0 && reach[i - 1][j]) ||
                  (j > 0 && reach[i][j - 1]) ||
                  (i > 0 && j > 0 && reach[i - 1][j - 1]);
      reach[i][j] = from && pair_ok(dist, vp[i], up[j], delta);
    }
  }
  return reach[R][C];
}

bool sync_fellow_travel(const BallIndex& dist, const Word& v, const Word& u,
                        int delta) {
  require(dist.metric == Metric::directed && dist.radius >= delta,
          ErrorKind::config, "fellow travel needs a directed ball of radius >= delta");
  auto vp = path_points(*dist.pres, *dist.gens, v);
  auto up = path_points(*dist.pres, *dist.gens, u);
  const int R = static_cast<int>(vp.size()) - 1;
  const int C = static_cast<int>(up.size()) - 1;
  for (int t = 0; t <= std::max(R, C); ++t) {
    if (!pair_ok(dist, vp[std::min(t, R)], up[std::min(t, C)], delta))
      return false;
  }
  return true;
}

namespace {

// Depth first search for the least falsifying word, one target weight at a
// time.  The frontier tracks which columns of the input path a staircase
// can currently occupy.
struct FalsifySearch {
  const BallIndex& ball;
  const GroupPresentation& pres;
  const GeneratingSet& gens;
  std::vector<GroupElement> upts;
  int cols;  // weight of the input word
  GroupElement target;
  int delta;
  int budget = 0;
  Word cur;

  FalsifySearch(const BallIndex& b, const Word& w, int d)
      : ball(b), pres(*b.pres), gens(*b.gens),
        upts(path_points(pres, gens, w)),
        cols(static_cast<int>(upts.size()) - 1),
        target(eval_word(pres, gens, w)), delta(d) {}

  bool allowed(const GroupElement& p, int j) {
    return pair_ok(ball, p, upts[j], delta);
  }

  void close_row(std::vector<char>& J, const GroupElement& p) {
    for (int j = 0; j + 1 <= cols; ++j)
      if (J[j] && !J[j + 1] && allowed(p, j + 1)) J[j + 1] = 1;
  }

  std::vector<char> step_row(const std::vector<char>& J,
                             const GroupElement& p) {
    std::vector<char> out(cols + 1, 0);
    for (int j = 0; j <= cols; ++j) {
      if (!J[j]) continue;
      if (allowed(p, j)) out[j] = 1;
      if (j + 1 <= cols && allowed(p, j + 1)) out[j + 1] = 1;
    }
    close_row(out, p);
    return out;
  }

  static bool empty(const std::vector<char>& J) {
    return std::find(J.begin(), J.end(), 1) == J.end();
  }

  bool dfs(int cumw, const GroupElement& elem, const std::vector<char>& J) {
    if (empty(J)) return false;
    const int remaining = budget - cumw;
    if (remaining == 0) return pres.equal(elem, target) && J[cols];
    auto need = directed_distance(ball, elem, target);
    if (!need || *need > remaining) return false;
    for (int a = 0; a < gens.size(); ++a) {
      const int wa = gens.letters[a].weight;
      if (wa > remaining) continue;
      GroupElement next = pres.multiply(elem, gens.letters[a].value);
      std::vector<char> Jr = J;
      for (int s = 1; s <= wa; ++s) {
        Jr = step_row(Jr, s < wa ? elem : next);
        if (empty(Jr)) break;
      }
      if (empty(Jr)) continue;
      cur.push_back(a);
      if (dfs(cumw + wa, next, Jr)) return true;
      cur.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Word> falsify(const BallIndex& ball, const Word& w, int delta) {
  require(ball.metric == Metric::directed, ErrorKind::config,
          "falsify needs a directed ball");
  require(ball.radius >= std::max(word_weight(*ball.gens, w), delta),
          ErrorKind::config, "ball radius too small for falsify");
  FalsifySearch search(ball, w, delta);
  std::vector<char> J0(search.cols + 1, 0);
  J0[0] = 1;  // d(identity, identity) = 0
  search.close_row(J0, ball.pres->identity());
  const int total = word_weight(*ball.gens, w);
  for (int L = 0; L < total; ++L) {
    search.budget = L;
    search.cur.clear();
    if (search.dfs(0, ball.pres->identity(), J0)) return search.cur;
  }
  return std::nullopt;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int16_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

// Composable falsifiability tables over X = {x : l(x^{-1}) <= delta}.
//
// E_u(x) = min weight of an asynchronous delta-fellow partner of u ending
// at eval(u) x, minus weight(u).  Stepping by a letter a:
//   T(x) = min( E(a x),  min_b E(a x b^{-1}) + weight(b) )
// where products must land in X, followed by the shortest-path closure
// T(x b) <= T(x) + weight(b) within X, and a final shift by -weight(a).
// The first term crosses the column block of a at a fixed partner point;
// the second crosses it simultaneously with the last row of a partner
// letter b (valid even when the intermediate offset leaves X).
class Corridor {
 public:
  static constexpr int16_t kInf = 30000;

  Corridor(const GroupPresentation& pres, const GeneratingSet& gens, int delta,
           int64_t cap)
      : pres_(pres), gens_(gens),
        xball_(build_ball(pres, gens, delta, Metric::reversed, cap)) {
    nx_ = static_cast<int>(xball_.size());
    nl_ = gens.size();
    maxw_ = gens.max_weight();
    fwd0_.assign(static_cast<std::size_t>(nl_) * nx_, -1);
    fwdD_.assign(static_cast<std::size_t>(nl_) * nl_ * nx_, -1);
    for (int a = 0; a < nl_; ++a) {
      GroupElement ainv = pres.inverse(gens.letters[a].value);
      for (int y = 0; y < nx_; ++y) {
        GroupElement e0 = pres.multiply(ainv, xball_.elems[y]);
        fwd0_[static_cast<std::size_t>(a) * nx_ + y] = xball_.find(e0);
        for (int b = 0; b < nl_; ++b) {
          GroupElement eD = pres.multiply(e0, gens.letters[b].value);
          fwdD_[(static_cast<std::size_t>(a) * nl_ + b) * nx_ + y] =
              xball_.find(eD);
        }
      }
    }
    // E of the empty word: walk distances from the identity within X.
    std::vector<int16_t> start(nx_, kInf);
    start[0] = 0;
    relax(start);
    intern(std::move(start));
  }

  int32_t start() const { return 0; }
  int64_t nstates() const { return static_cast<int64_t>(tables_.size()); }
  const std::vector<int16_t>& table(int32_t sid) const { return tables_[sid]; }

  // Returns the table for the extended word and its value at the identity
  // offset (kInf when no partner exists).
  std::pair<int32_t, int> step(int32_t sid, int a) {
    const uint64_t key = static_cast<uint64_t>(sid) * nl_ + a;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    std::vector<int16_t> T(nx_, kInf);
    {
      const std::vector<int16_t>& E = tables_[sid];
      for (int y = 0; y < nx_; ++y) {
        if (E[y] >= kInf) continue;
        int32_t x0 = fwd0_[static_cast<std::size_t>(a) * nx_ + y];
        if (x0 >= 0) T[x0] = std::min(T[x0], E[y]);
        for (int b = 0; b < nl_; ++b) {
          int32_t xd = fwdD_[(static_cast<std::size_t>(a) * nl_ + b) * nx_ + y];
          if (xd < 0) continue;
          int nv = E[y] + gens_.letters[b].weight;
          if (nv < T[xd]) T[xd] = static_cast<int16_t>(nv);
        }
      }
    }
    relax(T);
    const int wa = gens_.letters[a].weight;
    for (int x = 0; x < nx_; ++x)
      if (T[x] < kInf) T[x] = static_cast<int16_t>(T[x] - wa);
    const int check = T[0] >= kInf ? kInf : T[0];
    auto res = std::make_pair(intern(std::move(T)), check);
    cache_.emplace(key, res);
    return res;
  }

 private:
  int32_t intern(std::vector<int16_t> t) {
    auto it = index_.find(t);
    if (it != index_.end()) return it->second;
    int32_t id = static_cast<int32_t>(tables_.size());
    index_.emplace(t, id);
    tables_.push_back(std::move(t));
    return id;
  }

  // Shortest path closure under x -> x b within X, weights of letters.
  void relax(std::vector<int16_t>& t) {
    int lo = INT_MAX;
    for (int16_t v : t)
      if (v < kInf) lo = std::min<int>(lo, v);
    if (lo == INT_MAX) return;
    const int range = (nx_ + 1) * maxw_;
    buckets_.assign(range + 1, {});
    for (int x = 0; x < nx_; ++x)
      if (t[x] < kInf) buckets_[t[x] - lo].push_back(x);
    for (int d = 0; d <= range; ++d) {
      for (std::size_t qi = 0; qi < buckets_[d].size(); ++qi) {
        int x = buckets_[d][qi];
        if (t[x] != lo + d) continue;
        for (int b = 0; b < nl_; ++b) {
          int32_t x2 = xball_.move(x, b);
          if (x2 < 0) continue;
          int nv = lo + d + gens_.letters[b].weight;
          if (nv < t[x2]) {
            t[x2] = static_cast<int16_t>(nv);
            buckets_[nv - lo].push_back(x2);
          }
        }
      }
    }
  }

  const GroupPresentation& pres_;
  const GeneratingSet& gens_;
  BallIndex xball_;
  int nx_ = 0, nl_ = 0, maxw_ = 1;
  std::vector<int32_t> fwd0_, fwdD_;
  std::vector<std::vector<int16_t>> tables_;
  std::unordered_map<std::vector<int16_t>, int32_t, VecHash> index_;
  std::unordered_map<uint64_t, std::pair<int32_t, int>> cache_;
  std::vector<std::vector<int>> buckets_;
};

}  // namespace

bool corridor_falsifiable(const GroupPresentation& pres,
                          const GeneratingSet& gens, const Word& w, int delta,
                          int64_t cap) {
  Corridor cor(pres, gens, delta, cap);
  int32_t sid = cor.start();
  int check = 0;
  for (int32_t a : w) {
    auto [nsid, chk] = cor.step(sid, a);
    sid = nsid;
    check = chk;
  }
  return !w.empty() && check <= -1;
}

FellowTravelReport verify_fft(const GroupPresentation& pres,
                              const GeneratingSet& gens, int delta, int radius,
                              const VerifyOptions& opts) {
  FellowTravelReport rep;
  rep.delta = delta;
  rep.radius = radius;

  BallIndex ball = build_ball(pres, gens, radius, Metric::directed,
                              opts.ball_cap);
  Corridor cor(pres, gens, delta, opts.ball_cap);

  struct Node {
    int32_t gid, sid, parent;
    int16_t letter;
    Int count;
  };
  std::vector<Node> nodes;
  std::unordered_map<uint64_t, int32_t> seen;
  std::vector<std::vector<int32_t>> layers(radius + 1);
  struct Fail {
    int32_t parent;
    int16_t letter;
  };
  std::vector<std::vector<Fail>> fails(radius + 1);

  nodes.push_back({0, cor.start(), -1, -1, Int(1)});
  seen.emplace(0, 0);
  layers[0].push_back(0);

  auto rep_word = [&](int32_t n, int16_t extra) {
    Word w;
    if (extra >= 0) w.push_back(extra);
    while (n > 0) {
      w.push_back(nodes[n].letter);
      n = nodes[n].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  const bool mixed = gens.max_weight() > 1;
  const int nl = gens.size();

  for (int d = 0; d <= radius; ++d) {
    if (!fails[d].empty()) {
      Word best;
      for (const Fail& f : fails[d]) {
        Word w = rep_word(f.parent, f.letter);
        if (best.empty() || word_lex_less(w, best)) best = std::move(w);
      }
      rep.holds = false;
      rep.counterexample = best;
      rep.states = static_cast<int64_t>(nodes.size());
      return rep;
    }
    std::vector<int32_t> layer = layers[d];
    if (mixed && layer.size() > 1) {
      std::sort(layer.begin(), layer.end(), [&](int32_t a, int32_t b) {
        return word_lex_less(rep_word(a, -1), rep_word(b, -1));
      });
    }
    for (int32_t n : layer) {
      for (int a = 0; a < nl; ++a) {
        const int nd = d + gens.letters[a].weight;
        if (nd > radius) continue;
        const int32_t g2 = ball.move(nodes[n].gid, a);
        auto [sid2, chk] = cor.step(nodes[n].sid, a);
        if (ball.len[g2] == nd) {
          require(chk == 0, ErrorKind::internal,
                  "geodesic word with nonzero falsification value");
          const uint64_t key =
              (static_cast<uint64_t>(g2) << 32) | static_cast<uint32_t>(sid2);
          auto it = seen.find(key);
          if (it != seen.end()) {
            nodes[it->second].count += nodes[n].count;
          } else {
            require(static_cast<int64_t>(nodes.size()) < opts.state_cap,
                    ErrorKind::resource, "sweep exceeds state cap");
            int32_t idx = static_cast<int32_t>(nodes.size());
            nodes.push_back({g2, sid2, n, static_cast<int16_t>(a),
                             nodes[n].count});
            seen.emplace(key, idx);
            layers[nd].push_back(idx);
          }
        } else {
          rep.minimal_checked += nodes[n].count;
          if (chk <= -1) {
            rep.falsified += nodes[n].count;
          } else {
            fails[nd].push_back({n, static_cast<int16_t>(a)});
          }
        }
      }
    }
  }
  rep.holds = true;
  rep.states = static_cast<int64_t>(nodes.size());
  return rep;
}

DeltaScan min_fft_delta(const GroupPresentation& pres,
                        const GeneratingSet& gens, int delta_max, int radius,
                        const VerifyOptions& opts) {
  DeltaScan scan;
  for (int delta = 0; delta <= delta_max; ++delta) {
    FellowTravelReport r = verify_fft(pres, gens, delta, radius, opts);
    bool holds = r.holds;
    scan.reports.push_back(std::move(r));
    if (holds) {
      scan.delta = delta;
      return scan;
    }
  }
  return scan;
}

}  // namespace geogrow
