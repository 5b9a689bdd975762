#include "sqz/paradox.hpp"

#include <algorithm>

namespace sqz {

ProjPoint radial_proj(const Point2& z) { return ProjPoint(z.x, z.y); }

std::vector<Cone> ParadoxFamily::lifted() const {
  std::vector<Cone> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(Cone{it.U});
  return out;
}

namespace {

Rational lower_bound_above_one(const Scalar& s) {
  const Precision& prec = default_precision();
  for (int bits = prec.start_bits; bits <= prec.max_bits; bits *= 2) {
    Rational lb = s.lower_bound(bits);
    if (lb > 1) return lb;
  }
  throw Error(ErrorCode::IndeterminateAtPrecisionCap,
              "no lower bound above 1 for " + s.str());
}

// Closed arc with the endpoints and witness of `inner` contained in the open
// arc `outer`: both endpoints inside and neither endpoint of outer swallowed.
bool closed_in_open(const Arc& inner, const Arc& outer) {
  return outer.contains(inner.p()) && outer.contains(inner.q()) &&
         !inner.contains(outer.p()) && !inner.contains(outer.q());
}

}  // namespace

ContractivePair contractive_pair(const Mat2& h, const Rational& shrink, long cap) {
  if (!is_hyperbolic(h))
    throw Error(ErrorCode::NonHyperbolic, "contractive pair needs a hyperbolic element");
  if (shrink <= 0 || shrink >= 1)
    throw Error(ErrorCode::BadInput, "shrink must lie in (0,1)");
  Diagonalization diag = diagonalize(h);

  // In the diagonalizing frame the action on slopes is division by lambda^2,
  // so the arc {|slope| < s} contracts into {|slope| <= s / lambda^(2p)}.
  Rational s = shrink / (1 - shrink);
  s.canonicalize();
  Arc framed = Arc::slope_interval(-s, s);
  Arc U = framed.image(diag.u.inverse());

  Rational lam_sq = lower_bound_above_one(diag.lambda * diag.lambda);
  Rational contraction(1);
  long p = 0;
  while (p < cap) {
    ++p;
    contraction *= lam_sq;
    if (contraction * shrink >= 1) break;
  }
  if (contraction * shrink < 1)
    throw Error(ErrorCode::CapExceeded,
                "no power up to " + std::to_string(cap) + " contracts by " +
                    shrink.get_str());
  Mat2 t = h.pow(p);

  // Exact confirmation in the original coordinates.
  Arc img = U.image(t);
  if (!closed_in_open(img, U))
    throw Error(ErrorCode::IndeterminateAtPrecisionCap,
                "certified contraction failed the exact endpoint check");

  Rational margin = s - s / contraction;
  margin.canonicalize();
  return ContractivePair{U, t, p, margin, diag.u, s};
}

namespace {

struct CellBounds {
  Rational lo, hi;  // rational slopes strictly inside the neighborhood cell
  bool wraps = false;  // neighborhood of the infinity point
};

// One private open arc per distinct fixed point, bounded away from every
// other fixed point by rational separators, then bisected inward twice so
// that neighboring closures stay disjoint.
std::vector<Arc> private_neighborhoods(const std::vector<ProjPoint>& points) {
  size_t r = points.size();
  // Sort indices by slope, infinity last.
  std::vector<size_t> order(r);
  for (size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&points](size_t a, size_t b) {
    bool ai = points[a].is_infinity(), bi = points[b].is_infinity();
    if (ai || bi) return bi && !ai;
    return points[a].slope().compare(points[b].slope()) < 0;
  });

  bool has_inf = points[order.back()].is_infinity();
  size_t finite = has_inf ? r - 1 : r;

  std::vector<Rational> mid(finite > 0 ? finite - 1 : 0);
  for (size_t k = 0; k + 1 < finite; ++k) {
    mid[k] = rational_strictly_between(points[order[k]].slope(),
                                       points[order[k + 1]].slope());
  }
  Rational top = points[order[finite - 1]].slope().upper_bound(64) + 1;
  Rational bottom = points[order[0]].slope().lower_bound(64) - 1;

  std::vector<std::optional<Arc>> nbhd(r);
  for (size_t k = 0; k < finite; ++k) {
    size_t idx = order[k];
    const ProjPoint& fp = points[idx];
    Rational left = (k == 0) ? bottom : mid[k - 1];
    Rational right = (k + 1 == finite) ? top : mid[k];
    // Two bisection steps toward the point keep the arc well inside the cell.
    Rational lo = rational_strictly_between(Scalar(left), fp.slope());
    lo = rational_strictly_between(Scalar(lo), fp.slope());
    Rational hi = rational_strictly_between(fp.slope(), Scalar(right));
    hi = rational_strictly_between(fp.slope(), Scalar(hi));
    nbhd[idx] = Arc(ProjPoint::from_slope(lo), ProjPoint::from_slope(hi), fp);
  }
  if (has_inf) {
    // Wrap cell (top, bottom) through infinity, pushed inward by one unit.
    nbhd[order.back()] = Arc(ProjPoint::from_slope(top + 1),
                             ProjPoint::from_slope(bottom - 1),
                             ProjPoint::infinity_point());
  }
  std::vector<Arc> out;
  out.reserve(r);
  for (auto& a : nbhd) out.push_back(*a);
  return out;
}

}  // namespace

ParadoxFamily paradoxical_family(const Mat2& g1, const Mat2& g2, long n, long m,
                                 long cap) {
  if (n < 2 || m < 2) throw Error(ErrorCode::BadInput, "need n >= 2 and m >= 2");
  if (!is_hyperbolic(g1) || !is_hyperbolic(g2))
    throw Error(ErrorCode::NonHyperbolic, "both generators must be hyperbolic");
  if (same_axis(g1, g2)) throw Error(ErrorCode::SameAxis, "g1 and g2 share an axis");

  // Base elements with pairwise distinct attracting points, drawn from the
  // generators, their inverses, and g2-conjugates of g1.
  std::vector<Mat2> bases;
  std::vector<FixedPair> fps;
  std::vector<ProjPoint> points;  // distinct fixed points of the chosen bases
  auto point_index = [&points](const ProjPoint& p) -> size_t {
    for (size_t i = 0; i < points.size(); ++i) {
      if (points[i] == p) return i;
    }
    points.push_back(p);
    return points.size() - 1;
  };
  auto try_add = [&](const Mat2& h) {
    if (static_cast<long>(bases.size()) >= n + m) return;
    if (!is_hyperbolic(h)) return;
    FixedPair fp = fixed_points(h);
    for (const FixedPair& have : fps) {
      if (have.attracting == fp.attracting) return;
    }
    bases.push_back(h);
    fps.push_back(fp);
    point_index(fp.attracting);
    point_index(fp.repelling);
  };
  try_add(g1);
  try_add(g1.inverse());
  try_add(g2);
  try_add(g2.inverse());
  for (long k = 1; static_cast<long>(bases.size()) < n + m && k <= cap; ++k) {
    Mat2 c = g2.pow(k) * g1 * g2.pow(-k);
    try_add(c);
    try_add(c.inverse());
  }
  if (static_cast<long>(bases.size()) < n + m)
    throw Error(ErrorCode::CapExceeded,
                "could not assemble " + std::to_string(n + m) +
                    " elements with distinct attracting points");

  std::vector<Arc> nbhd = private_neighborhoods(points);

  // U_i = complement of the repelling neighborhood; the target W_i is the
  // attracting neighborhood. Raise the common power until every closure maps
  // strictly inside its target.
  std::vector<Arc> U, W;
  for (long i = 0; i < n + m; ++i) {
    size_t rep = 0, att = 0;
    for (size_t j = 0; j < points.size(); ++j) {
      if (points[j] == fps[i].repelling) rep = j;
      if (points[j] == fps[i].attracting) att = j;
    }
    U.push_back(nbhd[rep].complement());
    W.push_back(nbhd[att]);
  }

  for (long p = 1; p <= cap; ++p) {
    bool all = true;
    std::vector<ParadoxItem> items;
    for (long i = 0; i < n + m && all; ++i) {
      Mat2 t = bases[i].pow(p);
      Arc img = U[i].image(t);
      if (!closed_in_open(img, W[i])) {
        all = false;
        break;
      }
      items.push_back(ParadoxItem{t, U[i]});
    }
    if (all) {
      ParadoxFamily fam;
      fam.n = n;
      fam.m = m;
      fam.items = std::move(items);
      return fam;
    }
  }
  throw Error(ErrorCode::CapExceeded,
              "no power up to " + std::to_string(cap) +
                  " pushes every arc into its attracting neighborhood");
}

ParadoxCertificate verify_paradoxical_family(const ParadoxFamily& fam) {
  ParadoxCertificate cert;
  cert.min_image_gap_sq = 0;
  auto fail = [&cert](const std::string& what) -> ParadoxCertificate& {
    if (cert.failure.empty()) cert.failure = what;
    return cert;
  };
  long n = fam.n, m = fam.m;
  if (n < 2 || m < 2 || static_cast<long>(fam.items.size()) != n + m)
    return fail("structure: need n, m >= 2 with n + m items");

  ArcSet first, second;
  for (long i = 0; i < n; ++i) first.push_back(fam.items[i].U);
  for (long i = n; i < n + m; ++i) second.push_back(fam.items[i].U);

  ArcFamilyChecks c1 = arc_checks(first);
  cert.cover_first = c1.covers_rp1;
  if (!c1.covers_rp1) {
    cert.uncovered_point = c1.uncovered_point;
    fail("first cover: U_1..U_n do not cover RP^1");
  }
  ArcFamilyChecks c2 = arc_checks(second);
  cert.cover_second = c2.covers_rp1;
  if (!c2.covers_rp1) {
    if (!cert.uncovered_point) cert.uncovered_point = c2.uncovered_point;
    fail("second cover: U_{n+1}..U_{n+m} do not cover RP^1");
  }

  ArcSet images;
  for (const auto& it : fam.items) images.push_back(it.U.image(it.t));

  cert.images_disjoint = true;
  for (size_t i = 0; i < images.size() && cert.images_disjoint; ++i) {
    for (size_t j = i + 1; j < images.size(); ++j) {
      if (images[i].overlaps(images[j])) {
        cert.images_disjoint = false;
        cert.overlap_pair = {static_cast<int>(i), static_cast<int>(j)};
        fail("disjointness: images " + std::to_string(i) + " and " +
             std::to_string(j) + " overlap");
        break;
      }
    }
  }

  ArcFamilyChecks ci = arc_checks(images);
  cert.union_proper = ci.union_proper;
  cert.complement_point = ci.complement_interior_point;
  if (!ci.union_proper) fail("properness: image union has no open complement");

  cert.contractive = true;
  for (size_t i = 0; i < images.size(); ++i) {
    if (!closed_in_open(images[i], fam.items[i].U)) {
      cert.contractive = false;
      fail("contraction: t_" + std::to_string(i) +
           " does not map closure(U) strictly inside U");
      break;
    }
  }

  if (cert.images_disjoint) {
    // Disjoint closed arcs attain their minimum distance at endpoints.
    Rational gap(-1);
    for (size_t i = 0; i < images.size(); ++i) {
      for (size_t j = i + 1; j < images.size(); ++j) {
        for (const ProjPoint* a : {&images[i].p(), &images[i].q()}) {
          for (const ProjPoint* b : {&images[j].p(), &images[j].q()}) {
            Rational d = proj_dist_sq_lower(*a, *b);
            if (sgn(gap) < 0 || d < gap) gap = d;
          }
        }
      }
    }
    if (sgn(gap) > 0) cert.min_image_gap_sq = gap;
  }

  cert.verified = cert.failure.empty();
  return cert;
}

}  // namespace sqz
