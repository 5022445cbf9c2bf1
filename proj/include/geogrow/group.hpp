#pragma once

// Group presentations and elements.
//
// Two element models are supported:
//   * va: semidirect products Z^rank x| F for a finite group F acting by
//     unimodular integer matrices.  Elements are a lattice vector plus an
//     index into F; multiplication is (v, f)(w, g) = (v + f.w, fg).
//   * matrix: subgroups of GL(dim, Z), optionally projective (elements are
//     sign-normalised so that M and -M coincide).
//
// Presentations carry a weighted generating set.  Weights are positive
// integers; the word metric and all derived notions use the weighted word
// length, and distances are directed (d(g, h) = length of g^{-1} h).

#include "geogrow/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace geogrow {

struct VaElement {
  VecZ v;
  int32_t f = 0;
};

struct MatElement {
  MatZ m;
};

struct GroupElement {
  std::variant<VaElement, MatElement> rep;
};

enum class GroupKind { va, matrix };

struct GroupPresentation {
  GroupKind kind = GroupKind::va;
  std::string name;

  // va model.
  int rank = 0;
  std::vector<MatZ> f_action;            // f_action[0] is the identity
  std::vector<std::vector<int>> f_table; // f_table[i][j] = index of f_i f_j
  std::vector<int> f_inv;                // derived from f_table

  // matrix model.
  int dim = 0;
  bool projective = false;

  int f_order() const { return static_cast<int>(f_table.size()); }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;
  bool equal(const GroupElement& a, const GroupElement& b) const;
  int compare(const GroupElement& a, const GroupElement& b) const;
  std::size_t hash(const GroupElement& a) const;
  std::string describe(const GroupElement& a) const;

  // Checks the structural axioms (identity row/column, associativity of
  // f_table, action is a homomorphism by unimodular matrices).  Throws
  // Error(config) on violation.
  void validate() const;
};

struct Letter {
  std::string name;
  GroupElement value;
  int weight = 1;
};

struct GeneratingSet {
  std::vector<Letter> letters;
  bool inverse_closed = false;

  int size() const { return static_cast<int>(letters.size()); }
  int max_weight() const;
  std::optional<int> find(const std::string& name) const;
};

// Words are sequences of letter indices.
using Word = std::vector<int32_t>;

// Sum of letter weights.
int word_weight(const GeneratingSet& gens, const Word& w);

GroupElement eval_word(const GroupPresentation& pres, const GeneratingSet& gens,
                       const Word& w);

std::string word_str(const GeneratingSet& gens, const Word& w);

// Parses a whitespace separated list of letter names.
Word parse_word(const GeneratingSet& gens, const std::string& text);

// Checks letter names are distinct and nonempty, weights positive, values
// compatible with the presentation, and that the inverse_closed flag is
// truthful.  Throws Error(config) on violation.
void validate_generating_set(const GroupPresentation& pres,
                             const GeneratingSet& gens);

// True lexicographic order on words induced by letter indices.
bool word_lex_less(const Word& a, const Word& b);

}  // namespace geogrow
