#include "sqz/arcs.hpp"

#include <algorithm>

#include "sqz/error.hpp"

namespace sqz {

Arc::Arc(const ProjPoint& p, const ProjPoint& q, const ProjPoint& w) {
  if (p == q) throw Error(ErrorCode::BadInput, "degenerate arc: p == q");
  if (w == p || w == q)
    throw Error(ErrorCode::BadInput, "arc witness coincides with an endpoint");
  if (cyclic_order(p, w, q)) {
    p_ = p;
    q_ = q;
  } else {
    p_ = q;
    q_ = p;
  }
  w_ = w;
}

Arc Arc::oriented(const ProjPoint& p, const ProjPoint& q) {
  Arc a;
  a.p_ = p;
  a.q_ = q;
  a.w_ = point_strictly_between(p, q);
  return a;
}

Arc Arc::slope_interval(const Rational& lo, const Rational& hi) {
  if (lo >= hi) throw Error(ErrorCode::BadInput, "slope interval needs lo < hi");
  return oriented(ProjPoint::from_slope(lo), ProjPoint::from_slope(hi));
}

Arc Arc::image(const Mat2& g) const {
  // det(g) = 1, so the induced map on RP^1 preserves the circular order.
  return Arc(act_proj(g, p_), act_proj(g, q_), act_proj(g, w_));
}

bool Arc::overlaps(const Arc& o) const {
  return contains(o.p_) || contains(o.q_) || o.contains(p_) || o.contains(q_) ||
         contains(o.w_) || o.contains(w_);
}

std::string Arc::str() const { return "(" + p_.str() + " -> " + q_.str() + ")"; }

ArcSet arc_intersect(const Arc& a, const Arc& b) {
  bool bp_in = a.contains(b.p()), bq_in = a.contains(b.q());
  bool ap_in = b.contains(a.p()), aq_in = b.contains(a.q());
  if (bp_in && bq_in && ap_in && aq_in) {
    // Two overlap components.
    return {Arc::oriented(b.p(), a.q()), Arc::oriented(a.p(), b.q())};
  }
  if (bp_in && bq_in) return {b};
  if (ap_in && aq_in) return {a};
  if (bp_in) return {Arc::oriented(b.p(), a.q())};
  if (bq_in) return {Arc::oriented(a.p(), b.q())};
  if (ap_in) return {Arc::oriented(a.p(), b.q())};
  if (aq_in) return {Arc::oriented(b.p(), a.q())};
  // No endpoint strictly inside: equal, nested with shared endpoints, or
  // disjoint.
  if (a.equals(b)) return {a};
  if (b.contains(a.witness())) return {a};
  if (a.contains(b.witness())) return {b};
  return {};
}

ArcSet arcset_intersect(const ArcSet& a, const ArcSet& b) {
  ArcSet out;
  for (const Arc& x : a) {
    for (const Arc& y : b) {
      for (Arc& z : arc_intersect(x, y)) out.push_back(std::move(z));
    }
  }
  return out;
}

ArcSet arcset_image(const ArcSet& a, const Mat2& g) {
  ArcSet out;
  out.reserve(a.size());
  for (const Arc& x : a) out.push_back(x.image(g));
  return out;
}

ArcSet arcset_minus(const ArcSet& a, const ArcSet& b) {
  ArcSet pieces = a;
  for (const Arc& cut : b) {
    ArcSet next;
    Arc keep = cut.complement();
    for (const Arc& piece : pieces) {
      for (Arc& z : arc_intersect(piece, keep)) next.push_back(std::move(z));
    }
    pieces = std::move(next);
  }
  return pieces;
}

bool arcset_is_empty(const ArcSet& a) { return a.empty(); }

bool arcset_contains(const ArcSet& a, const ProjPoint& x) {
  for (const Arc& arc : a) {
    if (arc.contains(x)) return true;
  }
  return false;
}

namespace {

int cmp_circular(const ProjPoint& a, const ProjPoint& b) {
  bool ai = a.is_infinity(), bi = b.is_infinity();
  if (ai && bi) return 0;
  if (ai) return 1;
  if (bi) return -1;
  return a.slope().compare(b.slope());
}

}  // namespace

ArcFamilyChecks arc_checks(const ArcSet& family) {
  ArcFamilyChecks out;
  if (family.empty()) {
    out.pairwise_disjoint = true;
    out.union_proper = true;
    out.complement_interior_point = ProjPoint::infinity_point();
    return out;
  }

  // Distinct endpoints in circular order.
  std::vector<ProjPoint> endpoints;
  for (const Arc& a : family) {
    endpoints.push_back(a.p());
    endpoints.push_back(a.q());
  }
  std::sort(endpoints.begin(), endpoints.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return cmp_circular(a, b) < 0; });
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end(),
                              [](const ProjPoint& a, const ProjPoint& b) { return a == b; }),
                  endpoints.end());

  // Within a gap between consecutive endpoints every arc either covers the
  // whole gap or misses it, so one interior sample per gap decides coverage
  // of the gap; the endpoints themselves are checked directly.
  out.covers_rp1 = true;
  out.union_proper = false;
  size_t n = endpoints.size();
  for (size_t i = 0; i < n; ++i) {
    const ProjPoint& e = endpoints[i];
    if (!arcset_contains(family, e)) {
      out.covers_rp1 = false;
      if (!out.uncovered_point) out.uncovered_point = e;
    }
    ProjPoint mid = n == 1 ? point_strictly_between(e, e == ProjPoint::infinity_point()
                                                           ? ProjPoint::from_slope(0)
                                                           : ProjPoint::infinity_point())
                           : point_strictly_between(e, endpoints[(i + 1) % n]);
    if (!arcset_contains(family, mid)) {
      out.covers_rp1 = false;
      out.union_proper = true;
      if (!out.uncovered_point) out.uncovered_point = mid;
      if (!out.complement_interior_point) out.complement_interior_point = mid;
    }
  }

  out.pairwise_disjoint = true;
  for (size_t i = 0; i < family.size() && out.pairwise_disjoint; ++i) {
    for (size_t j = i + 1; j < family.size(); ++j) {
      if (family[i].overlaps(family[j])) {
        out.pairwise_disjoint = false;
        out.overlap_pair = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
    }
  }
  return out;
}

}  // namespace sqz
