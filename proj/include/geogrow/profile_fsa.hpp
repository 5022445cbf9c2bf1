#pragma once

// Deterministic acceptor of geodesic words.
//
// A state is the profile of a word u: for each offset x with l(x^-1) <=
// delta, the least time differential at which a word that asynchronously
// delta-fellow-travels u reaches eval(u) x, clamped to [-delta, k*delta]
// (k is the asymmetry constant, so k*delta bounds every useful value from
// above).  Stepping by a letter a updates profiles exactly like the
// falsification corridor: the partner point either stays put while the
// input reads a (new value at x reads the old profile at a x), or the
// partner appends a letter b across the boundary (old profile at
// a x b^-1 plus weight(b)); a shortest-path closure within the ball then
// lets the partner append further letters while the input waits, and the
// whole table shifts by -weight(a).  Values are clamped into the stated
// range (on geodesic words no value ever needs to leave it); a nonzero
// value at the identity offset sends the automaton to the absorbing fail
// state.  When the generating set falsifies non-geodesics by
// delta-fellow-travellers, acceptance is exactly geodesity.
//
// State 0 is always the fail state and state 1 the start state.  All live
// states are accepting, so the accepted language is prefix closed.

#include "geogrow/group.hpp"
#include "geogrow/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geogrow {

struct GeodesicAutomaton {
  int delta = 0;
  int k = 1;
  std::vector<std::string> letter_names;
  std::vector<int> letter_weights;

  static constexpr int32_t fail_state = 0;
  static constexpr int32_t start_state = 1;
  int64_t nstates = 0;
  std::vector<int32_t> trans;  // state * nletters + letter

  // Profile data, present on freshly built automata and dropped by
  // minimisation and serialisation.  offsets lists the domain ball
  // (elements x with l(x^-1) <= delta) and letter_inv_offset[a] the offset
  // index of the inverse of letter a, or -1 when outside the ball.
  bool has_profiles = false;
  std::vector<std::vector<int16_t>> profiles;  // per state; empty for fail
  std::vector<GroupElement> offsets;
  std::vector<int32_t> letter_inv_offset;

  int nletters() const { return static_cast<int>(letter_names.size()); }
  int32_t step(int32_t state, int letter) const {
    return trans[static_cast<std::size_t>(state) * nletters() + letter];
  }
  bool accepts(const Word& w) const;
  int64_t live_states() const { return nstates - 1; }
};

struct AutomatonOptions {
  int64_t ball_cap = 10000000;
  int64_t state_cap = 2000000;
};

GeodesicAutomaton build_geodesic_automaton(const GroupPresentation& pres,
                                           const GeneratingSet& gens,
                                           int delta,
                                           const AutomatonOptions& opts = {});

struct ValidationReport {
  bool agree = false;
  int radius = 0;
  Int words_checked{0};
  std::optional<Word> disagreement;  // least word where the verdicts differ
  bool automaton_accepts = false;    // verdict of the automaton on it
};

// Compares the accepted language against ball geodesity for every word of
// weight <= radius (product search, so cost is polynomial in the ball).
ValidationReport cross_validate(const GeodesicAutomaton& aut,
                                const GroupPresentation& pres,
                                const GeneratingSet& gens, int radius,
                                int64_t ball_cap = 10000000);

// Language-preserving minimisation (partition refinement).  The result
// keeps state 0 = fail and state 1 = start and drops profile data.
GeodesicAutomaton minimize(const GeodesicAutomaton& aut);

// Graphviz rendering of the live part.
std::string export_dot(const GeodesicAutomaton& aut,
                       const std::string& graph_name = "geodesics");

// Versioned text format; profiles are not serialised.
std::string serialize(const GeodesicAutomaton& aut);
GeodesicAutomaton parse_automaton(const std::string& text);

}  // namespace geogrow
