#include "sqz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace sqz {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Point2 unit_dir(const Rational& t) {
  Rational t2 = t * t;
  Rational den = 1 + t2;
  Rational x = (1 - t2) / den;
  Rational y = 2 * t / den;
  x.canonicalize();
  y.canonicalize();
  return {Scalar(x), Scalar(y)};
}

Rational rationalize_tan(double v) {
  const long den = 1 << 20;
  Rational q(static_cast<long>(std::llround(v * static_cast<double>(den))), den);
  q.canonicalize();
  return q;
}

bool point_less(const Point2& a, const Point2& b) {
  int cx = a.x.compare(b.x);
  if (cx != 0) return cx < 0;
  return a.y.compare(b.y) < 0;
}

}  // namespace

Rational jitter_unit(unsigned long seed, unsigned long counter) {
  uint64_t h = splitmix64(splitmix64(seed) ^ counter);
  Rational q(static_cast<long>(h >> 44), 1L << 20);
  q.canonicalize();
  return q;
}

Domain Domain::crown(Crown c) {
  Domain d;
  d.is_crown_ = true;
  d.crown_ = std::move(c);
  return d;
}

Domain Domain::region(RegionSet r) {
  Domain d;
  d.is_crown_ = false;
  d.region_ = std::move(r);
  return d;
}

bool Domain::contains(const Point2& z) const {
  if (!is_crown_) return region_.contains(z);
  Point2 w = apply(crown_.frame, z);
  Scalar n2 = w.x * w.x + w.y * w.y;
  return n2.compare(Scalar(crown_.r1_sq)) >= 0 &&
         n2.compare(Scalar(crown_.r2_sq)) <= 0;
}

std::vector<Point2> Domain::samples(const GridSpec& grid) const {
  long N = grid.density;
  if (N <= 0) return {};
  std::vector<Point2> out;
  if (is_crown_) {
    // Exact radii strictly inside [r1, r2] via outward-safe root bounds.
    Rational r_lo = sqrt_upper(crown_.r1_sq, 64);
    Rational r_hi = sqrt_lower(crown_.r2_sq, 64);
    if (r_lo >= r_hi)
      throw Error(ErrorCode::BadInput, "crown too thin to sample at 64 bits");
    Mat2 back = crown_.frame.inverse();
    bool framed = !crown_.frame.is_identity();
    out.reserve(static_cast<size_t>(N) * N);
    for (long i = 0; i < N; ++i) {
      Rational t;
      bool flip = false;
      if (2 * i == N) {
        flip = true;  // angle pi: direction (-1, 0)
        t = 0;
      } else {
        double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(N);
        t = rationalize_tan(std::tan(theta / 2));
      }
      Point2 dir = unit_dir(t);
      if (flip) dir = {Scalar(-1), Scalar(0)};
      for (long j = 0; j < N; ++j) {
        Rational frac =
            (Rational(j) + jitter_unit(grid.seed, static_cast<unsigned long>(i * N + j))) /
            Rational(N);
        Rational r = r_lo + (r_hi - r_lo) * frac;
        r.canonicalize();
        Point2 w{Scalar(r) * dir.x, Scalar(r) * dir.y};
        out.push_back(framed ? apply(back, w) : w);
      }
    }
    return out;
  }
  if (region_.is_empty()) return {};
  // Bounding box from vertex enclosures, then exact membership filtering.
  Rational x0, x1, y0, y1;
  bool first = true;
  for (const auto& poly : region_.polygons()) {
    for (const Point2& v : poly.vertices()) {
      Rational xl = v.x.lower_bound(64), xu = v.x.upper_bound(64);
      Rational yl = v.y.lower_bound(64), yu = v.y.upper_bound(64);
      if (first || xl < x0) x0 = xl;
      if (first || xu > x1) x1 = xu;
      if (first || yl < y0) y0 = yl;
      if (first || yu > y1) y1 = yu;
      first = false;
    }
  }
  for (long i = 0; i < N; ++i) {
    for (long j = 0; j < N; ++j) {
      Rational fx =
          (Rational(i) + jitter_unit(grid.seed, static_cast<unsigned long>(2 * (i * N + j)))) /
          Rational(N);
      Rational fy =
          (Rational(j) + jitter_unit(grid.seed, static_cast<unsigned long>(2 * (i * N + j) + 1))) /
          Rational(N);
      Point2 p{Scalar(x0 + (x1 - x0) * fx), Scalar(y0 + (y1 - y0) * fy)};
      if (region_.contains(p)) out.push_back(p);
    }
  }
  return out;
}

namespace {

bool is_intersection_point(const std::vector<Mat2>& inverse_maps, const Domain& base,
                           const Point2& y) {
  for (const Mat2& minv : inverse_maps) {
    if (!base.contains(apply(minv, y))) return false;
  }
  return true;
}

std::vector<Mat2> invert_all(const std::vector<Mat2>& maps) {
  std::vector<Mat2> out;
  out.reserve(maps.size());
  for (const Mat2& m : maps) out.push_back(m.inverse());
  return out;
}

}  // namespace

FalsifyReport falsify_empty_serial(const std::vector<Mat2>& maps, const Domain& base,
                                   const GridSpec& grid) {
  FalsifyReport rep;
  rep.density = grid.density;
  rep.seed = grid.seed;
  std::vector<Mat2> invs = invert_all(maps);
  std::vector<Point2> pts = base.samples(grid);
  rep.samples_checked = static_cast<long>(pts.size());
  for (const Point2& y : pts) {
    if (is_intersection_point(invs, base, y)) rep.counterexamples.push_back(y);
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(), point_less);
  return rep;
}

FalsifyReport falsify_empty(const std::vector<Mat2>& maps, const Domain& base,
                            const GridSpec& grid) {
  FalsifyReport rep;
  rep.density = grid.density;
  rep.seed = grid.seed;
  std::vector<Mat2> invs = invert_all(maps);
  std::vector<Point2> pts = base.samples(grid);
  rep.samples_checked = static_cast<long>(pts.size());
  size_t n = pts.size();
  std::vector<char> hit(n, 0);
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (size_t k = 0; k < n; ++k) {
    try {
      hit[k] = is_intersection_point(invs, base, pts[k]) ? 1 : 0;
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  for (size_t k = 0; k < n; ++k) {
    if (hit[k]) rep.counterexamples.push_back(pts[k]);
  }
  std::sort(rep.counterexamples.begin(), rep.counterexamples.end(), point_less);
  return rep;
}

long brute_min_power(const FiniteSubset& F, const Crown& C, const Mat2& base_h,
                     const GridSpec& grid, long cap) {
  if (!is_hyperbolic(base_h))
    throw Error(ErrorCode::NonHyperbolic, "brute search needs a hyperbolic base");
  FiniteSubset S = F.symmetrized();
  Domain dom = Domain::crown(C);
  for (long n = 1; n <= cap; ++n) {
    Mat2 gamma = base_h.pow(n);
    bool all_clear = true;
    for (const auto& g : S.elements()) {
      for (const auto& h : S.elements()) {
        std::vector<Mat2> maps = {gamma * g.matrix * gamma * h.matrix,
                                  gamma * g.matrix};
        if (!falsify_empty(maps, dom, grid).none_found()) {
          all_clear = false;
          break;
        }
      }
      if (!all_clear) break;
    }
    if (all_clear) return n;
  }
  throw Error(ErrorCode::CapExceeded,
              "no sample-clean power up to " + std::to_string(cap));
}

namespace {

double dir_angle(const Point2& z) {
  double a = std::atan2(z.y.to_double(), z.x.to_double());
  if (a < 0) a += M_PI;
  if (a >= M_PI) a -= M_PI;
  return a;
}

double circ_dist(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, M_PI - d);
}

double proj_angle(const ProjPoint& p) {
  if (p.is_infinity()) return M_PI / 2;
  return dir_angle({p.x(), p.y()});
}

double dist_to_arc_endpoints(double theta, const ArcSet& arcs) {
  double best = M_PI;
  for (const Arc& a : arcs) {
    best = std::min(best, circ_dist(theta, proj_angle(a.p())));
    best = std::min(best, circ_dist(theta, proj_angle(a.q())));
  }
  return best;
}

double dist_to_segment(double px, double py, double ax, double ay, double bx,
                       double by) {
  double dx = bx - ax, dy = by - ay;
  double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0;
  t = std::clamp(t, 0.0, 1.0);
  double qx = ax + t * dx - px, qy = ay + t * dy - py;
  return std::sqrt(qx * qx + qy * qy);
}

double dist_to_region_boundary(const Point2& z, const RegionSet& r) {
  double px = z.x.to_double(), py = z.y.to_double();
  double best = 1e300;
  for (const auto& poly : r.polygons()) {
    const auto& vs = poly.vertices();
    size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
      const Point2& a = vs[i];
      const Point2& b = vs[(i + 1) % n];
      best = std::min(best, dist_to_segment(px, py, a.x.to_double(), a.y.to_double(),
                                            b.x.to_double(), b.y.to_double()));
    }
  }
  return best;
}

}  // namespace

double coeff_value(const Coefficient& f, const Point2& z) {
  if (f.support.is_empty()) return 0.0;
  if (f.support.kind() == SupportKind::Conic) {
    ProjPoint p = radial_proj(z);
    if (!arcset_contains(f.support.arcs(), p)) return 0.0;
    if (!f.plateau.is_empty() && arcset_contains(f.plateau.arcs(), p)) return 1.0;
    double theta = dir_angle(z);
    double d_bnd = dist_to_arc_endpoints(theta, f.support.arcs());
    double d_plat = f.plateau.is_empty()
                        ? M_PI
                        : dist_to_arc_endpoints(theta, f.plateau.arcs());
    return std::min(1.0, 2.0 * d_bnd / (d_bnd + d_plat));
  }
  if (!f.support.region().contains(z)) return 0.0;
  if (!f.plateau.is_empty() && f.plateau.region().contains(z)) return 1.0;
  double d_bnd = dist_to_region_boundary(z, f.support.region());
  double d_plat = f.plateau.is_empty()
                      ? 1e300
                      : dist_to_region_boundary(z, f.plateau.region());
  if (f.plateau.is_empty()) return std::min(1.0, d_bnd);  // plain bump, no plateau
  return std::min(1.0, 2.0 * d_bnd / (d_bnd + d_plat));
}

NumericElement realize(const FormalElement& E) {
  NumericElement out;
  for (const Term& t : E.terms) {
    Coefficient f = t.f;
    out.terms.push_back(
        {t.g.matrix, [f](const Point2& z) { return coeff_value(f, z); }});
  }
  return out;
}

NumericElement nproduct(const NumericElement& A, const NumericElement& B) {
  NumericElement out;
  for (const auto& ta : A.terms) {
    for (const auto& tb : B.terms) {
      Mat2 g = ta.g * tb.g;
      Mat2 ainv = ta.g.inverse();
      auto fa = ta.f;
      auto fb = tb.f;
      auto val = [fa, fb, ainv](const Point2& z) {
        return fa(z) * fb(apply(ainv, z));
      };
      bool merged = false;
      for (auto& have : out.terms) {
        if (have.g.equals(g)) {
          auto prev = have.f;
          have.f = [prev, val](const Point2& z) { return prev(z) + val(z); };
          merged = true;
          break;
        }
      }
      if (!merged) out.terms.push_back({g, val});
    }
  }
  return out;
}

NumericElement nadjoint(const NumericElement& A) {
  NumericElement out;
  for (const auto& t : A.terms) {
    Mat2 g = t.g;
    auto f = t.f;
    out.terms.push_back(
        {g.inverse(), [f, g](const Point2& z) { return f(apply(g, z)); }});
  }
  return out;
}

double max_term_value(const NumericElement& E, const Point2& z) {
  double best = 0.0;
  for (const auto& t : E.terms) best = std::max(best, std::fabs(t.f(z)));
  return best;
}

std::vector<Point2> sample_cone(const Arc& arc, const GridSpec& grid,
                                const Rational& radius) {
  if (sgn(radius) <= 0)
    throw Error(ErrorCode::UnboundedSupport,
                "cone sampling needs a positive truncation radius");
  long N = grid.density;
  std::vector<Point2> out;
  for (long i = 0; i < N; ++i) {
    double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(N);
    Rational t = (2 * i == N) ? Rational(0) : rationalize_tan(std::tan(theta / 2));
    Point2 dir = unit_dir(t);
    if (2 * i == N) dir = {Scalar(-1), Scalar(0)};
    if (!arc.contains(radial_proj(dir))) continue;
    for (long j = 0; j < N; ++j) {
      Rational frac =
          (Rational(2 * j + 1) +
           jitter_unit(grid.seed, static_cast<unsigned long>(i * N + j))) /
          Rational(2 * N);
      Rational r = radius * frac;
      r.canonicalize();
      out.push_back({Scalar(r) * dir.x, Scalar(r) * dir.y});
    }
  }
  return out;
}

}  // namespace sqz
