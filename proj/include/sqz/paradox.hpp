#ifndef SQZ_PARADOX_HPP
#define SQZ_PARADOX_HPP

#include <optional>
#include <string>
#include <vector>

#include "sqz/arcs.hpp"
#include "sqz/regions.hpp"

namespace sqz {

// Radial projection of the punctured plane onto RP^1.
ProjPoint radial_proj(const Point2& z);

// The cone pi^-1(base) over an open arc.
struct Cone {
  Arc base;
  bool contains(const Point2& z) const { return base.contains(radial_proj(z)); }
  Cone image(const Mat2& g) const { return Cone{base.image(g)}; }
};

struct ContractivePair {
  Arc U;
  Mat2 t;          // h^power
  long power = 1;
  Rational margin;  // certified slope-unit gap in the diagonalizing frame
  Mat2 frame;       // u with u t u^-1 diagonal
  Rational half_width;  // the frame-side arc is {|slope| < half_width}
  Cone lifted() const { return Cone{U}; }
};

// Arc around the attracting point of h, excluded from the repelling point,
// with t = h^p mapping the closure strictly inside. shrink in (0,1) controls
// both the arc size and the required contraction ratio.
ContractivePair contractive_pair(const Mat2& h, const Rational& shrink,
                                 long cap = 64);

struct ParadoxItem {
  Mat2 t;
  Arc U;
};

struct ParadoxFamily {
  long n = 0, m = 0;
  std::vector<ParadoxItem> items;  // n + m entries
  std::vector<Cone> lifted() const;
};

// Ping-pong family: elements g1^{+-p}, g2^{+-p} and conjugates
// g2^k g1^{+-1} g2^-k, each paired with the complement of a small
// neighborhood of its repelling point.
ParadoxFamily paradoxical_family(const Mat2& g1, const Mat2& g2, long n, long m,
                                 long cap = 64);

struct ParadoxCertificate {
  bool verified = false;
  bool cover_first = false;      // U_1 .. U_n cover RP^1
  bool cover_second = false;     // U_{n+1} .. U_{n+m} cover RP^1
  bool images_disjoint = false;  // t_i U_i pairwise disjoint
  bool union_proper = false;     // union of images misses an open arc
  bool contractive = false;      // t_i closure(U_i) strictly inside U_i
  Rational min_image_gap_sq;     // certified min distance^2 between images
  std::optional<ProjPoint> uncovered_point;
  std::optional<std::pair<int, int>> overlap_pair;
  std::optional<ProjPoint> complement_point;
  std::string failure;  // first violated condition, empty when verified
};

ParadoxCertificate verify_paradoxical_family(const ParadoxFamily& fam);

}  // namespace sqz

#endif
