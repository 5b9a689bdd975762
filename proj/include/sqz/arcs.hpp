#ifndef SQZ_ARCS_HPP
#define SQZ_ARCS_HPP

#include <optional>
#include <vector>

#include "sqz/projective.hpp"

namespace sqz {

// Open arc on RP^1. Normalized so that the arc is the set of points swept
// upward (increasing slope, wrapping at [0:1]) from p to q; the stored
// witness lies strictly inside.
class Arc {
 public:
  // Selects the component of RP^1 \ {p,q} containing w.
  Arc(const ProjPoint& p, const ProjPoint& q, const ProjPoint& w);
  // The arc swept upward from p to q, with a constructed witness.
  static Arc oriented(const ProjPoint& p, const ProjPoint& q);
  // Open arc of slopes (lo, hi).
  static Arc slope_interval(const Rational& lo, const Rational& hi);

  const ProjPoint& p() const { return p_; }
  const ProjPoint& q() const { return q_; }
  const ProjPoint& witness() const { return w_; }

  bool contains(const ProjPoint& x) const { return cyclic_order(p_, x, q_); }
  Arc image(const Mat2& g) const;
  // The open complementary arc (interior of the complement).
  Arc complement() const { return oriented(q_, p_); }

  bool equals(const Arc& o) const { return p_ == o.p_ && q_ == o.q_; }
  bool overlaps(const Arc& o) const;

  std::string str() const;

 private:
  Arc() = default;
  ProjPoint p_, q_, w_;
};

using ArcSet = std::vector<Arc>;

// Intersection of two open arcs: zero, one, or two arcs.
ArcSet arc_intersect(const Arc& a, const Arc& b);
ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b);
ArcSet arcset_image(const ArcSet& a, const Mat2& g);
// a minus the closed arcs of b (up to endpoints; result is a union of open
// arcs whose union differs from the true difference by finitely many points).
ArcSet arcset_minus(const ArcSet& a, const ArcSet& b);
bool arcset_is_empty(const ArcSet& a);
bool arcset_contains(const ArcSet& a, const ProjPoint& x);

struct ArcFamilyChecks {
  bool covers_rp1 = false;
  bool pairwise_disjoint = false;
  bool union_proper = false;  // complement has nonempty interior
  std::optional<ProjPoint> uncovered_point;          // witness when not covering
  std::optional<ProjPoint> complement_interior_point;  // witness when proper
  std::optional<std::pair<int, int>> overlap_pair;   // witness when not disjoint
};

// Exact circular-order sweep over the arc endpoints.
ArcFamilyChecks arc_checks(const ArcSet& family);

}  // namespace sqz

#endif
