#ifndef SQZ_WITNESS_HPP
#define SQZ_WITNESS_HPP

#include <map>
#include <string>
#include <vector>

#include "sqz/regions.hpp"

namespace sqz {

struct WordLetter {
  std::string gen;
  long exp;
};
using Word = std::vector<WordLetter>;

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);  // with free reduction
std::string word_str(const Word& w);
// Evaluates the word in the given generator assignment.
Mat2 word_eval(const Word& w, const std::map<std::string, Mat2>& gens);

struct GroupElement {
  Word word;
  Mat2 matrix;
};

// Finite subset of the group, as words with their exact evaluations.
class FiniteSubset {
 public:
  FiniteSubset() = default;
  explicit FiniteSubset(std::vector<GroupElement> elements)
      : elements_(std::move(elements)) {}
  static FiniteSubset from_words(const std::vector<Word>& words,
                                 const std::map<std::string, Mat2>& gens);

  const std::vector<GroupElement>& elements() const { return elements_; }
  // F union F^-1 union {e}, deduplicated by exact matrix equality.
  FiniteSubset symmetrized() const;
  bool contains_matrix(const Mat2& g) const;

 private:
  std::vector<GroupElement> elements_;
};

struct TransverseResult {
  Mat2 gamma;           // eta^n delta eta^-n
  long n = 0;
  Rational separation;  // certified min squared projective distance
};

// Finds the smallest n <= n_cap such that gamma = eta^n delta eta^-n is
// hyperbolic with g gamma+ != gamma- for every g in F, with a certified
// positive separation.
TransverseResult find_transverse_hyperbolic(const FiniteSubset& F, const Mat2& eta,
                                            const Mat2& delta, long n_cap);

struct SqueezeConstant {
  Rational M;              // rational upper bound, uniform over crown and pairs
  Rational min_corner_sq;  // rational lower bound of min |(g'_u)_{1,1}|^2
};

// Uniform bound M of the conjugated-pair quantity over the crown
// r1 <= |z| <= r2, in closed form via sup over the crown of the linear form.
SqueezeConstant squeeze_constant(const std::vector<Mat2>& conjugated,
                                 const Rational& r1_sq, const Rational& r2_sq);

struct SqueezePower {
  long n = 0;
  Rational margin;  // lambda_sq_lower^n * r1_sq - threshold, > 0
};

// Smallest n with lambda_sq^n * r1^2 > (r2 + sqrt(M))^2 / min(min_corner^2, 1)
// + M, all via sound outward-rounded rational bounds.
SqueezePower min_squeeze_power(const Rational& lambda_sq_lower, const Rational& M,
                               const Rational& min_corner_sq, const Rational& r1_sq,
                               const Rational& r2_sq);

struct PairEmptiness {
  size_t g_index, h_index;
  bool empty;
};

struct SqueezeCertificate {
  int schema_version = 1;
  Mat2 base_h;  // transverse hyperbolic base
  long conj_n = 0;  // eta-conjugation depth used to find base_h
  Mat2 gamma;   // base_h^n
  long n = 0;
  Rational lambda_sq_lower;
  Rational M;
  Rational min_corner_sq;
  Rational margin;
  Mat2 frame_u;
  Rational r1_sq, r2_sq;
  int hull_sides = 8;
  std::vector<GroupElement> subset;  // symmetrized F
  std::vector<PairEmptiness> pair_checks;

  RegionSet hull() const { return crown_hull(Crown{frame_u, r1_sq, r2_sq}, hull_sides); }
};

struct SqueezeParams {
  long transverse_cap = 64;
  int hull_sides = 8;
  int max_hull_sides = 128;
  long extra_power_tries = 8;
  // Optional transverse search pair; when absent, short words in the
  // generators (length <= 4) are scanned for two hyperbolics with different
  // axes, falling back to a single hyperbolic generator.
  std::map<std::string, Mat2> generators;
  bool has_eta_delta = false;
  Mat2 eta, delta;
};

// Full pipeline: symmetrize F, find the base, diagonalize, conjugate,
// compute M and n, and confirm every triple-intersection emptiness on the
// polygonal crown hull.
SqueezeCertificate squeeze_witness(const FiniteSubset& F, const Crown& C,
                                   const SqueezeParams& params);

// Exact re-verification of the pair checks (recomputes every region
// emptiness and the margin sign). Returns false with a reason on failure.
bool reverify_squeeze(const SqueezeCertificate& cert, std::string* reason);

}  // namespace sqz

#endif
