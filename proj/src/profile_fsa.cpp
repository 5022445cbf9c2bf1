#include "geogrow/profile_fsa.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace geogrow {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int16_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

}  // namespace

bool GeodesicAutomaton::accepts(const Word& w) const {
  int32_t s = start_state;
  for (int32_t a : w) {
    s = step(s, a);
    if (s == fail_state) return false;
  }
  return true;
}

GeodesicAutomaton build_geodesic_automaton(const GroupPresentation& pres,
                                           const GeneratingSet& gens,
                                           int delta,
                                           const AutomatonOptions& opts) {
  require(delta >= 0, ErrorKind::config, "delta must be nonnegative");
  GeodesicAutomaton aut;
  aut.delta = delta;
  aut.k = asym_constant(pres, gens, opts.ball_cap);
  const int nl = gens.size();
  for (const auto& l : gens.letters) {
    aut.letter_names.push_back(l.name);
    aut.letter_weights.push_back(l.weight);
  }

  // Profile values live in [-delta, hi].  Clamping above at hi is sound
  // because hi bounds length(endpoint * offset) - time for every offset in
  // the domain, so clamped values never drop below that metric lower bound;
  // on geodesic words the same bound keeps every value at or above -delta,
  // so clamping below never distorts a live path and failure is decided at
  // the identity offset alone.
  const int hi = aut.k * delta;
  const int maxw = gens.max_weight();
  BallIndex xball = build_ball(pres, gens, delta, Metric::reversed,
                               opts.ball_cap);
  BallIndex dball = build_ball(pres, gens, hi, Metric::directed,
                               opts.ball_cap);
  const int nx = static_cast<int>(xball.size());

  aut.offsets = xball.elems;
  aut.letter_inv_offset.assign(nl, -1);
  for (int a = 0; a < nl; ++a)
    aut.letter_inv_offset[a] = xball.find(pres.inverse(gens.letters[a].value));

  // Same transition maps as the falsification corridor: for a source offset
  // y, fwd0 gives the offset of the same partner point after the input reads
  // a, and fwdD the offset after the partner additionally appends b.
  std::vector<int32_t> fwd0(static_cast<std::size_t>(nl) * nx, -1);
  std::vector<int32_t> fwdD(static_cast<std::size_t>(nl) * nl * nx, -1);
  for (int a = 0; a < nl; ++a) {
    GroupElement ainv = pres.inverse(gens.letters[a].value);
    for (int y = 0; y < nx; ++y) {
      GroupElement e0 = pres.multiply(ainv, xball.elems[y]);
      fwd0[static_cast<std::size_t>(a) * nx + y] = xball.find(e0);
      for (int b = 0; b < nl; ++b) {
        GroupElement eD = pres.multiply(e0, gens.letters[b].value);
        fwdD[(static_cast<std::size_t>(a) * nl + b) * nx + y] =
            xball.find(eD);
      }
    }
  }

  constexpr int kInf = 30000;
  std::vector<std::vector<int>> buckets;
  // Shortest-path closure under offset -> offset * b within the ball: a
  // partner may append letters while the input stays put.
  auto relax = [&](std::vector<int>& t) {
    int lo = INT_MAX;
    for (int v : t)
      if (v < kInf) lo = std::min(lo, v);
    if (lo == INT_MAX) return;
    const int range = (nx + 1) * maxw + hi + delta;
    buckets.assign(range + 1, {});
    for (int x = 0; x < nx; ++x)
      if (t[x] < kInf && t[x] - lo <= range) buckets[t[x] - lo].push_back(x);
    for (int d = 0; d <= range; ++d) {
      for (std::size_t qi = 0; qi < buckets[d].size(); ++qi) {
        int x = buckets[d][qi];
        if (t[x] != lo + d) continue;
        for (int b = 0; b < nl; ++b) {
          int32_t x2 = xball.move(x, b);
          if (x2 < 0) continue;
          int nv = lo + d + gens.letters[b].weight;
          if (nv < t[x2]) {
            t[x2] = nv;
            buckets[nv - lo].push_back(x2);
          }
        }
      }
    }
  };

  // Start profile: distance from the identity (at most hi on this domain).
  std::vector<int16_t> start(nx);
  for (int x = 0; x < nx; ++x) {
    auto l = element_length(dball, xball.elems[x]);
    start[x] = static_cast<int16_t>(l ? std::min(*l, hi) : hi);
  }
  require(start[0] == 0, ErrorKind::internal, "identity offset misplaced");

  std::unordered_map<std::vector<int16_t>, int32_t, VecHash> index;
  std::vector<std::vector<int16_t>> states{{}, start};
  index.emplace(start, 1);
  aut.trans.assign(static_cast<std::size_t>(2) * nl,
                   GeodesicAutomaton::fail_state);

  std::vector<int> T(nx);
  for (std::size_t cur = 1; cur < states.size(); ++cur) {
    for (int a = 0; a < nl; ++a) {
      const int wa = gens.letters[a].weight;
      // The partner either keeps its point while the input reads a, or
      // crosses the letter boundary together with its own last letter b.
      T.assign(nx, kInf);
      const std::vector<int16_t>& E = states[cur];
      for (int y = 0; y < nx; ++y) {
        int32_t x0 = fwd0[static_cast<std::size_t>(a) * nx + y];
        if (x0 >= 0) T[x0] = std::min<int>(T[x0], E[y]);
        for (int b = 0; b < nl; ++b) {
          int32_t xd = fwdD[(static_cast<std::size_t>(a) * nl + b) * nx + y];
          if (xd < 0) continue;
          int nv = E[y] + gens.letters[b].weight;
          if (nv < T[xd]) T[xd] = nv;
        }
      }
      relax(T);
      bool fail = false;
      std::vector<int16_t> psi(nx);
      for (int x = 0; x < nx; ++x) {
        int v = T[x] >= kInf ? hi : T[x] - wa;
        v = std::max(-delta, std::min(hi, v));
        if (x == 0 && v != 0) {
          fail = true;
          break;
        }
        psi[x] = static_cast<int16_t>(v);
      }
      int32_t next;
      if (fail) {
        next = GeodesicAutomaton::fail_state;
      } else {
        auto it = index.find(psi);
        if (it != index.end()) {
          next = it->second;
        } else {
          require(static_cast<int64_t>(states.size()) < opts.state_cap,
                  ErrorKind::resource, "automaton exceeds state cap");
          next = static_cast<int32_t>(states.size());
          index.emplace(psi, next);
          states.push_back(std::move(psi));
          aut.trans.resize(aut.trans.size() + nl,
                           GeodesicAutomaton::fail_state);
        }
      }
      aut.trans[cur * nl + a] = next;
    }
  }

  aut.nstates = static_cast<int64_t>(states.size());
  aut.profiles = std::move(states);
  aut.has_profiles = true;
  return aut;
}

ValidationReport cross_validate(const GeodesicAutomaton& aut,
                                const GroupPresentation& pres,
                                const GeneratingSet& gens, int radius,
                                int64_t ball_cap) {
  require(aut.nletters() == gens.size(), ErrorKind::config,
          "automaton letter count differs from the generating set");
  ValidationReport rep;
  rep.radius = radius;

  BallIndex ball = build_ball(pres, gens, radius, Metric::directed, ball_cap);
  const int nl = gens.size();

  struct Node {
    int32_t gid, state, parent;
    int16_t letter;
    Int count;
  };
  std::vector<Node> nodes;
  std::unordered_map<uint64_t, int32_t> seen;
  std::vector<std::vector<int32_t>> layers(radius + 1);
  nodes.push_back({0, GeodesicAutomaton::start_state, -1, -1, Int(1)});
  seen.emplace(static_cast<uint64_t>(GeodesicAutomaton::start_state), 0);
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
  for (int d = 0; d <= radius; ++d) {
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
        const int32_t s2 = aut.step(nodes[n].state, a);
        const bool geo = ball.len[g2] == nd;
        const bool acc = s2 != GeodesicAutomaton::fail_state;
        rep.words_checked += nodes[n].count;
        if (geo != acc) {
          rep.agree = false;
          rep.disagreement = rep_word(n, static_cast<int16_t>(a));
          rep.automaton_accepts = acc;
          return rep;
        }
        if (!geo) continue;  // rejected and non-geodesic: extensions agree
        const uint64_t key =
            (static_cast<uint64_t>(g2) << 32) | static_cast<uint32_t>(s2);
        auto it = seen.find(key);
        if (it != seen.end()) {
          nodes[it->second].count += nodes[n].count;
        } else {
          int32_t idx = static_cast<int32_t>(nodes.size());
          nodes.push_back(
              {g2, s2, n, static_cast<int16_t>(a), nodes[n].count});
          seen.emplace(key, idx);
          layers[nd].push_back(idx);
        }
      }
    }
  }
  rep.agree = true;
  return rep;
}

GeodesicAutomaton minimize(const GeodesicAutomaton& aut) {
  const int nl = aut.nletters();
  const int64_t n = aut.nstates;
  // Moore refinement; class 0 starts as {fail}, class 1 as the live states.
  std::vector<int32_t> cls(n, 1);
  cls[GeodesicAutomaton::fail_state] = 0;
  int64_t ncls = 2;
  while (true) {
    std::map<std::vector<int32_t>, int32_t> sig_ids;
    std::vector<int32_t> next_cls(n);
    for (int64_t s = 0; s < n; ++s) {
      std::vector<int32_t> sig(nl + 1);
      sig[0] = cls[s];
      for (int a = 0; a < nl; ++a) sig[a + 1] = cls[aut.step(s, a)];
      auto [it, fresh] = sig_ids.emplace(sig, static_cast<int32_t>(sig_ids.size()));
      (void)fresh;
      next_cls[s] = it->second;
    }
    if (static_cast<int64_t>(sig_ids.size()) == ncls) {
      cls = next_cls;
      break;
    }
    ncls = static_cast<int64_t>(sig_ids.size());
    cls = next_cls;
  }

  // Renumber: fail = 0, start = 1, rest in search order from the start.
  std::vector<int32_t> newid(ncls, -1);
  newid[cls[GeodesicAutomaton::fail_state]] = 0;
  newid[cls[GeodesicAutomaton::start_state]] = 1;
  std::vector<int32_t> order{cls[GeodesicAutomaton::start_state]};
  std::vector<int32_t> repstate(ncls, -1);
  for (int64_t s = 0; s < n; ++s)
    if (repstate[cls[s]] < 0) repstate[cls[s]] = static_cast<int32_t>(s);
  int32_t assigned = 2;
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int32_t c = order[qi];
    for (int a = 0; a < nl; ++a) {
      int32_t t = cls[aut.step(repstate[c], a)];
      if (newid[t] < 0) {
        newid[t] = assigned++;
        order.push_back(t);
      }
    }
  }

  GeodesicAutomaton out;
  out.delta = aut.delta;
  out.k = aut.k;
  out.letter_names = aut.letter_names;
  out.letter_weights = aut.letter_weights;
  out.nstates = assigned;
  out.trans.assign(static_cast<std::size_t>(assigned) * nl,
                   GeodesicAutomaton::fail_state);
  for (int32_t c = 0; c < static_cast<int32_t>(ncls); ++c) {
    if (newid[c] < 0) continue;  // unreachable
    if (newid[c] == 0) continue;
    for (int a = 0; a < nl; ++a) {
      int32_t t = cls[aut.step(repstate[c], a)];
      out.trans[static_cast<std::size_t>(newid[c]) * nl + a] =
          newid[t] < 0 ? GeodesicAutomaton::fail_state : newid[t];
    }
  }
  return out;
}

std::string export_dot(const GeodesicAutomaton& aut,
                       const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  entry [shape=point];\n";
  os << "  entry -> s1;\n";
  for (int64_t s = 1; s < aut.nstates; ++s) {
    os << "  s" << s << " [label=\"" << s << "\"];\n";
    for (int a = 0; a < aut.nletters(); ++a) {
      int32_t t = aut.step(static_cast<int32_t>(s), a);
      if (t == GeodesicAutomaton::fail_state) continue;
      os << "  s" << s << " -> s" << t << " [label=\"" << aut.letter_names[a]
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string serialize(const GeodesicAutomaton& aut) {
  std::ostringstream os;
  os << "geogrow-fsa 1\n";
  os << "delta " << aut.delta << "\n";
  os << "k " << aut.k << "\n";
  os << "letters " << aut.nletters() << "\n";
  for (int a = 0; a < aut.nletters(); ++a)
    os << aut.letter_names[a] << " " << aut.letter_weights[a] << "\n";
  os << "states " << aut.nstates << "\n";
  for (int64_t s = 0; s < aut.nstates; ++s) {
    for (int a = 0; a < aut.nletters(); ++a) {
      if (a) os << " ";
      os << aut.step(static_cast<int32_t>(s), a);
    }
    os << "\n";
  }
  return os.str();
}

GeodesicAutomaton parse_automaton(const std::string& text) {
  std::istringstream is(text);
  std::string magic;
  int version = 0;
  is >> magic >> version;
  require(magic == "geogrow-fsa" && version == 1, ErrorKind::config,
          "unsupported automaton format");
  GeodesicAutomaton aut;
  std::string key;
  int nl = 0;
  require(static_cast<bool>(is >> key >> aut.delta) && key == "delta",
          ErrorKind::config, "bad automaton header");
  require(static_cast<bool>(is >> key >> aut.k) && key == "k",
          ErrorKind::config, "bad automaton header");
  require(static_cast<bool>(is >> key >> nl) && key == "letters" && nl >= 1,
          ErrorKind::config, "bad automaton header");
  for (int a = 0; a < nl; ++a) {
    std::string name;
    int w = 0;
    require(static_cast<bool>(is >> name >> w) && w >= 1, ErrorKind::config,
            "bad letter line");
    aut.letter_names.push_back(name);
    aut.letter_weights.push_back(w);
  }
  require(static_cast<bool>(is >> key >> aut.nstates) && key == "states" &&
              aut.nstates >= 2,
          ErrorKind::config, "bad state count");
  aut.trans.assign(static_cast<std::size_t>(aut.nstates) * nl, 0);
  for (int64_t s = 0; s < aut.nstates; ++s)
    for (int a = 0; a < nl; ++a) {
      int32_t t;
      require(static_cast<bool>(is >> t) && t >= 0 && t < aut.nstates,
              ErrorKind::config, "bad transition entry");
      aut.trans[static_cast<std::size_t>(s) * nl + a] = t;
    }
  for (int a = 0; a < nl; ++a)
    require(aut.step(GeodesicAutomaton::fail_state, a) ==
                GeodesicAutomaton::fail_state,
            ErrorKind::config, "fail state must be absorbing");
  return aut;
}

}  // namespace geogrow
