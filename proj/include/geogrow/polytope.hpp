#pragma once

// Translation-length machinery for virtually abelian groups.
//
// For a semidirect presentation Z^m x| F with weighted generators, the
// letters whose F-part is trivial span a gauge: the translation length
// tau(v) is the cheapest way to write the lattice vector v as a nonnegative
// rational combination of those letters.  Its unit ball is the translation
// polytope C(A) = conv{ value(a) / weight(a) }.  This header exposes that
// gauge, the polytope, fan triangulations of the lattice with attached
// geodesic cone languages, hemisphere tests for generating-set quality,
// enlargement of a set until its polytope is a scaled model polytope, and
// the pumping witnesses that separate Nerode classes of the geodesic
// language on a bad set.

#include "geogrow/group.hpp"
#include "geogrow/hull.hpp"
#include "geogrow/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geogrow {

// Primitive lattice direction (coordinates coprime, not all zero).
struct Ray {
  VecZ dir;
};

// Reduces v to a primitive ray; rejects the zero vector.
Ray make_ray(const VecZ& v);
bool ray_equal(const Ray& a, const Ray& b);

// A fan of simplicial cones spanned by rays, intended to cover Z^rank.
// Each simplex lists ray indices; the order is kept and used as the
// letter order of the attached cone words.
struct Triangulation {
  int rank = 0;
  std::vector<Ray> rays;
  std::vector<std::vector<int>> simplices;
};

// Line-based text format:
//   geogrow-tri 1
//   rank <m>
//   rays <count>      followed by one integer vector per line
//   simplices <count> followed by one ray-index list per line
Triangulation parse_triangulation(const std::string& text);
std::string serialize_triangulation(const Triangulation& tri);
Triangulation load_triangulation_file(const std::string& path);

// Literal path if it exists, otherwise "<data dir>/tri/<name>.tri".
std::string resolve_tri_path(const std::string& name);

struct TriangulationCheck {
  bool independent = false;  // every simplex spans a cone of full facet rank
  bool covers = false;       // sampled lattice points all lie in some cone
  std::optional<VecZ> uncovered;
};

// Checks simplex independence and, by sampling every nonzero integer point
// of [-box, box]^rank, that the cones cover the lattice.
TriangulationCheck validate_triangulation(const Triangulation& tri, int box);

// True when the ray set is permuted by every matrix of the F-action.
bool triangulation_f_invariant(const Triangulation& tri,
                               const GroupPresentation& pres);

// Letters of a va presentation whose F-part is trivial, as lattice data.
struct LatticeLetters {
  std::vector<int> letters;   // indices into gens
  std::vector<VecZ> values;
  std::vector<int> weights;
};
LatticeLetters lattice_letters(const GroupPresentation& pres,
                               const GeneratingSet& gens);

// Gauge value tau(v): least total weight of a nonnegative rational
// combination of trivial-F letters evaluating to v.  Error(config) when v
// is outside their positive span.
Rat translation_length(const GroupPresentation& pres,
                       const GeneratingSet& gens, const VecZ& v);

// Unit ball of the gauge: conv{ value(a) / weight(a) } over trivial-F
// letters.  Error(config) unless the origin is interior (the letters must
// positively span the lattice).
Polytope translation_polytope(const GroupPresentation& pres,
                              const GeneratingSet& gens);

// True iff the directions all fit in one closed half space u.x >= 0.
bool hemisphere_check(const std::vector<VecZ>& dirs);

// Hemisphere test restricted to the symmetric part {d : d and -d present};
// vacuously true when the symmetric part is empty.
bool hemisphere_check_symmetric(const std::vector<VecZ>& dirs);

// Frontier of non-geodesic powers in a free abelian presentation.  A letter
// exponent vector n is non-geodesic when the element it evaluates to is
// cheaper than its weighted sum; the minimal such vectors under
// componentwise order bound every geodesic violation.
struct AbelianBound {
  int bound = 0;                          // max weighted sum over minimals
  bool frontier_closed = false;           // no minimal touches the cap
  std::vector<std::vector<int>> minimal;  // exponent vectors, sorted
};
AbelianBound abelian_fft_bound(const GroupPresentation& pres,
                               const GeneratingSet& gens, int cap);

struct GoodSetOptions {
  // Corrections n_w are mandated for all base words up to this length.
  int mandate_depth = 1;
  // Also mandate the lattice values of products b b'^{-1}.
  bool include_differences = false;
  int max_scale = 64;
};

struct GoodSetResult {
  GeneratingSet gens;        // base letters plus weight-1 lattice letters
  Int scale;                 // least N with all constraints inside N.Q
  Polytope polytope;         // N.Q = translation polytope of the result
  std::vector<VecZ> mandated;
};

// Enlarges `base` to a good generating set modelled on the polytope q: the
// least scale N is chosen so that N.q has integer vertices, contains every
// mandated correction vector, and dominates the base gauge points; the new
// letters are all lattice points of N.q at weight one.  The translation
// polytope of the result equals N.q exactly.
GoodSetResult good_generating_set(const GroupPresentation& pres,
                                  const GeneratingSet& base, const Polytope& q,
                                  const GoodSetOptions& opts = {});

// Geodesic normal forms attached to a triangulation: one word per ray
// spelling the lattice point N.dir/tau(dir), and lexicographically least
// geodesic words for the finitely many coset representatives (parallelepiped
// offsets of each full simplex paired with every F-part).
struct ConeLanguage {
  Int scale = 0;
  Triangulation tri;
  std::vector<Word> vertex_words;  // per ray
  std::vector<Word> coset_words;   // sorted by weight then lex order
};
ConeLanguage cone_language(const GroupPresentation& pres,
                           const GeneratingSet& gens, const Triangulation& tri,
                           int scale);

struct ConeCheck {
  bool geodesic_core = false;  // every cone word is geodesic
  bool surjective = false;     // every element of the ball is reached
  int max_slack = 0;           // worst gap between reached weight and length
  int64_t words_checked = 0;
  std::optional<std::string> uncovered;
};

// Checks the language against a brute-force ball: cone words (vertex powers
// in simplex order) must be geodesic, and every element of length <= radius
// must be some cone value times a coset representative.
ConeCheck verify_cone_language(const GroupPresentation& pres,
                               const GeneratingSet& gens,
                               const ConeLanguage& lang, int radius);

// Pumping witnesses separating Nerode classes of the geodesic language on
// generating sets with letters t and c: t c^n t c^m stays geodesic exactly
// when m < n, so distinct n need distinct automaton states.
struct NerodeRow {
  int n = 0;
  int m = 0;
  Word geodesic;     // t c^n t c^m
  Word ungeodesic;   // t c^m t c^m
  bool separated = false;
};
struct NerodeTable {
  int n_max = 0;
  bool all_separated = false;
  std::vector<NerodeRow> rows;
};
NerodeTable nerode_separation(const GroupPresentation& pres,
                              const GeneratingSet& gens, int n_max,
                              int64_t ball_cap = 10000000);

}  // namespace geogrow
