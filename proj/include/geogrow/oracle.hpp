#pragma once

// Brute-force word-metric oracles built from the Cayley graph.
//
// BallIndex interns every element of a metric ball into a dense id table
// together with the weighted length and a move table (right multiplication
// by each letter, restricted to the ball).  Ids are assigned in traversal
// order: strictly increasing length, deterministic within a length.  All
// higher level checks (geodesity, distances, automaton validation) reduce
// to lookups here.

#include "geogrow/group.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace geogrow {

enum class Metric {
  directed,   // lengths of elements, edges g -> g a
  reversed,   // lengths of inverses: dist(x) = l(x^{-1})
  undirected  // edges in both directions; used for profile domains
};

struct BallIndex {
  const GroupPresentation* pres = nullptr;
  const GeneratingSet* gens = nullptr;
  Metric metric = Metric::directed;
  int radius = 0;

  std::vector<GroupElement> elems;  // id -> element; id 0 is the identity
  std::vector<int32_t> len;         // id -> distance from the identity
  std::vector<int32_t> moves;       // id * nletters + a -> id of elem*a, or -1

  int nletters() const { return gens->size(); }
  int64_t size() const { return static_cast<int64_t>(elems.size()); }

  int32_t find(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return find(g) >= 0; }
  int32_t move(int32_t id, int letter) const {
    return moves[static_cast<std::size_t>(id) * nletters() + letter];
  }

  // Number of elements at each distance 0..radius.
  std::vector<int64_t> sphere_sizes() const;

 private:
  friend BallIndex build_ball(const GroupPresentation&, const GeneratingSet&,
                              int, Metric, int64_t);
  struct Hash {
    const GroupPresentation* p;
    std::size_t operator()(const GroupElement& g) const { return p->hash(g); }
  };
  struct Eq {
    const GroupPresentation* p;
    bool operator()(const GroupElement& a, const GroupElement& b) const {
      return p->equal(a, b);
    }
  };
  std::unordered_map<GroupElement, int32_t, Hash, Eq> index_{
      16, Hash{nullptr}, Eq{nullptr}};
};

// Dial-style shortest path search from the identity out to the given
// radius.  Throws Error(resource) if more than `cap` elements would be
// interned.
BallIndex build_ball(const GroupPresentation& pres, const GeneratingSet& gens,
                     int radius, Metric metric = Metric::directed,
                     int64_t cap = 10000000);

// l(g), or nullopt if g lies outside the ball.
std::optional<int> element_length(const BallIndex& ball,
                                  const GroupElement& g);

// d(g, h) = l(g^{-1} h), using a directed ball.
std::optional<int> directed_distance(const BallIndex& ball,
                                     const GroupElement& g,
                                     const GroupElement& h);

// Largest length of the inverse of a letter value; for inverse closed sets
// this is the largest letter weight.  Grows a reversed ball as needed.
int asym_constant(const GroupPresentation& pres, const GeneratingSet& gens,
                  int64_t cap = 10000000);

// A word is geodesic when its weight equals the length of its value.
// Requires word_weight(w) <= ball.radius on a directed ball.
bool is_geodesic(const BallIndex& ball, const Word& w);

// Lexicographically least geodesic word for the element with the given id
// (letter order as listed in the generating set).  Directed ball.
Word lex_least_geodesic(const BallIndex& ball, int32_t id);

}  // namespace geogrow
