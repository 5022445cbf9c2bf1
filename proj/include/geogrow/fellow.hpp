#pragma once

// Fellow travelling and falsification.
//
// Paths are sampled at integer times: u(t) is the value of the longest
// prefix of u whose weight is at most t.  A word v asynchronously
// delta-fellow-travels a word u when a monotone staircase (unit steps
// (+1,0), (0,+1), (+1,+1)) runs from (0,0) to (weight v, weight u) in the
// integer grid such that every visited pair (i, j) has d(v(i), u(j)) <=
// delta.  A non-geodesic word is falsified by a strictly shorter word with
// the same value that fellow-travels it.
//
// verify_fft checks that every non-geodesic word of weight <= radius is
// falsifiable at the given delta.  It is enough to check minimal
// non-geodesic words (geodesic prefix plus one letter): replacing the
// falsifiable prefix falsifies any extension.  Falsifiability of u is
// decided by an exact table E_u : X -> Z with X = {x : l(x^{-1}) <= delta},
// E_u(x) = min weight of a fellow-travelling partner of u ending at
// eval(u) x, minus weight(u); u is falsifiable iff E_u(identity) < 0.  The
// tables compose letter by letter, so the sweep runs over a product of the
// ball and the finitely many reachable tables.

#include "geogrow/group.hpp"
#include "geogrow/oracle.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace geogrow {

// True when v asynchronously (resp. synchronously) delta-fellow-travels u;
// pair constraints read d(v(i), u(j)) <= delta.
bool async_fellow_travel(const BallIndex& dist, const Word& v, const Word& u,
                         int delta);

bool sync_fellow_travel(const BallIndex& dist, const Word& v, const Word& u,
                        int delta);

// Least (weight, then lex) strictly shorter word with the same value that
// asynchronously delta-fellow-travels w, or nullopt.  The ball must be
// directed with radius >= max(weight(w), delta).
std::optional<Word> falsify(const BallIndex& ball, const Word& w, int delta);

// Exact falsifiability of a single word via the composable tables; used to
// cross-check falsify and as the workhorse of verify_fft.
bool corridor_falsifiable(const GroupPresentation& pres,
                          const GeneratingSet& gens, const Word& w, int delta,
                          int64_t cap = 10000000);

struct FellowTravelReport {
  int delta = 0;
  int radius = 0;
  bool holds = false;
  // Least minimal non-geodesic word with no falsifying partner.
  std::optional<Word> counterexample;
  Int minimal_checked{0};  // minimal non-geodesic words examined
  Int falsified{0};        // of those, how many admit a partner
  int64_t states = 0;      // distinct (element, table) pairs expanded
};

struct VerifyOptions {
  int64_t ball_cap = 10000000;
  int64_t state_cap = 2000000;
};

FellowTravelReport verify_fft(const GroupPresentation& pres,
                              const GeneratingSet& gens, int delta, int radius,
                              const VerifyOptions& opts = {});

struct DeltaScan {
  std::optional<int> delta;  // least delta at which the property holds
  std::vector<FellowTravelReport> reports;
};

DeltaScan min_fft_delta(const GroupPresentation& pres,
                        const GeneratingSet& gens, int delta_max, int radius,
                        const VerifyOptions& opts = {});

}  // namespace geogrow
