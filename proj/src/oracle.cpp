#include "geogrow/oracle.hpp"

#include <algorithm>

namespace geogrow {

int32_t BallIndex::find(const GroupElement& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int64_t> BallIndex::sphere_sizes() const {
  std::vector<int64_t> s(radius + 1, 0);
  for (int32_t l : len) ++s[l];
  return s;
}

BallIndex build_ball(const GroupPresentation& pres, const GeneratingSet& gens,
                     int radius, Metric metric, int64_t cap) {
  require(radius >= 0, ErrorKind::config, "radius must be nonnegative");
  require(cap >= 1, ErrorKind::config, "cap must be positive");

  BallIndex ball;
  ball.pres = &pres;
  ball.gens = &gens;
  ball.metric = metric;
  ball.radius = radius;
  ball.index_ = decltype(ball.index_)(16, BallIndex::Hash{&pres},
                                      BallIndex::Eq{&pres});

  const int nl = gens.size();

  // Edge set of the search: values to multiply by on the right and their
  // weights.  reversed uses inverted letter values so that the computed
  // distance is l(x^{-1}); undirected adds both directions.
  std::vector<GroupElement> steps;
  std::vector<int> costs;
  for (int a = 0; a < nl; ++a) {
    const GroupElement& v = gens.letters[a].value;
    const int w = gens.letters[a].weight;
    switch (metric) {
      case Metric::directed:
        steps.push_back(v);
        costs.push_back(w);
        break;
      case Metric::reversed:
        steps.push_back(pres.inverse(v));
        costs.push_back(w);
        break;
      case Metric::undirected:
        steps.push_back(v);
        costs.push_back(w);
        steps.push_back(pres.inverse(v));
        costs.push_back(w);
        break;
    }
  }

  // Dial's algorithm: weights are small positive integers, so buckets by
  // tentative distance give a deterministic length-ordered traversal.
  std::vector<std::vector<int32_t>> buckets(radius + 1);
  GroupElement id = pres.identity();
  ball.elems.push_back(id);
  ball.len.push_back(0);
  ball.index_.emplace(id, 0);
  buckets[0].push_back(0);

  for (int d = 0; d <= radius; ++d) {
    for (std::size_t qi = 0; qi < buckets[d].size(); ++qi) {
      int32_t cur = buckets[d][qi];
      if (ball.len[cur] != d) continue;  // settled earlier at a smaller d
      for (std::size_t s = 0; s < steps.size(); ++s) {
        int nd = d + costs[s];
        if (nd > radius) continue;
        GroupElement next = pres.multiply(ball.elems[cur], steps[s]);
        auto it = ball.index_.find(next);
        if (it == ball.index_.end()) {
          require(ball.size() < cap, ErrorKind::resource,
                  "ball exceeds element cap");
          int32_t nid = static_cast<int32_t>(ball.size());
          ball.elems.push_back(next);
          ball.len.push_back(nd);
          ball.index_.emplace(next, nid);
          buckets[nd].push_back(nid);
        } else if (nd < ball.len[it->second]) {
          ball.len[it->second] = nd;
          buckets[nd].push_back(it->second);
        }
      }
    }
  }

  // With positive weights the bucket sweep settles ids in nondecreasing
  // distance, but re-relaxations can leave ids out of order; normalise to
  // the canonical (length, first-discovery) order.
  std::vector<int32_t> order(ball.size());
  for (int64_t i = 0; i < ball.size(); ++i) order[i] = static_cast<int32_t>(i);
  std::stable_sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    return ball.len[a] < ball.len[b];
  });
  std::vector<int32_t> newid(ball.size());
  for (int64_t i = 0; i < ball.size(); ++i) newid[order[i]] = static_cast<int32_t>(i);
  {
    std::vector<GroupElement> elems(ball.size(), pres.identity());
    std::vector<int32_t> len(ball.size());
    for (int64_t i = 0; i < ball.size(); ++i) {
      elems[newid[i]] = ball.elems[i];
      len[newid[i]] = ball.len[i];
    }
    ball.elems = std::move(elems);
    ball.len = std::move(len);
    for (auto& kv : ball.index_) kv.second = newid[kv.second];
  }

  // Move table: plain right multiplication by letter values regardless of
  // the metric used to build the ball.
  ball.moves.assign(static_cast<std::size_t>(ball.size()) * nl, -1);
  for (int64_t i = 0; i < ball.size(); ++i) {
    for (int a = 0; a < nl; ++a) {
      GroupElement next = pres.multiply(ball.elems[i], gens.letters[a].value);
      ball.moves[static_cast<std::size_t>(i) * nl + a] = ball.find(next);
    }
  }
  return ball;
}

std::optional<int> element_length(const BallIndex& ball,
                                  const GroupElement& g) {
  int32_t id = ball.find(g);
  if (id < 0) return std::nullopt;
  return ball.len[id];
}

std::optional<int> directed_distance(const BallIndex& ball,
                                     const GroupElement& g,
                                     const GroupElement& h) {
  GroupElement rel = ball.pres->multiply(ball.pres->inverse(g), h);
  return element_length(ball, rel);
}

int asym_constant(const GroupPresentation& pres, const GeneratingSet& gens,
                  int64_t cap) {
  int radius = gens.max_weight();
  while (true) {
    BallIndex ball = build_ball(pres, gens, radius, Metric::directed, cap);
    int k = 0;
    bool all = true;
    for (const auto& l : gens.letters) {
      auto d = element_length(ball, pres.inverse(l.value));
      if (!d) { all = false; break; }
      k = std::max(k, *d);
    }
    if (all) return k;
    require(radius < (1 << 20), ErrorKind::resource,
            "letter inverses not reachable; group may not be symmetric");
    radius *= 2;
  }
}

bool is_geodesic(const BallIndex& ball, const Word& w) {
  require(ball.metric == Metric::directed, ErrorKind::config,
          "geodesity checks need a directed ball");
  int weight = word_weight(*ball.gens, w);
  require(weight <= ball.radius, ErrorKind::config,
          "word weight exceeds ball radius");
  int32_t id = 0;
  for (int32_t a : w) id = ball.move(id, a);
  return ball.len[id] == weight;
}

Word lex_least_geodesic(const BallIndex& ball, int32_t id) {
  require(ball.metric == Metric::directed, ErrorKind::config,
          "geodesic retrieval needs a directed ball");
  const GroupPresentation& pres = *ball.pres;
  const GeneratingSet& gens = *ball.gens;
  Word w;
  int32_t cur = id;
  while (ball.len[cur] > 0) {
    bool advanced = false;
    for (int a = 0; a < gens.size(); ++a) {
      // Letter a starts a geodesic iff removing it from the front drops the
      // length by exactly its weight.
      GroupElement rest = pres.multiply(pres.inverse(gens.letters[a].value),
                                        ball.elems[cur]);
      int32_t rid = ball.find(rest);
      if (rid >= 0 && ball.len[rid] == ball.len[cur] - gens.letters[a].weight) {
        w.push_back(a);
        cur = rid;
        advanced = true;
        break;
      }
    }
    require(advanced, ErrorKind::internal, "no geodesic first letter found");
  }
  return w;
}

}  // namespace geogrow
