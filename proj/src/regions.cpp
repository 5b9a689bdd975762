#include "sqz/regions.hpp"

#include <algorithm>
#include <cmath>

namespace sqz {

Point2 apply(const Mat2& g, const Point2& p) {
  return {g.a() * p.x + g.b() * p.y, g.c() * p.x + g.d() * p.y};
}

namespace {

// Sign of the cross product (a-o) x (b-o): >0 means o,a,b make a left turn.
int orient(const Point2& o, const Point2& a, const Point2& b) {
  Scalar cr = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  return cr.sign();
}

bool lex_less(const Point2& a, const Point2& b) {
  int cx = a.x.compare(b.x);
  if (cx != 0) return cx < 0;
  return a.y.compare(b.y) < 0;
}

}  // namespace

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Point2> pts) {
  // Monotone-chain hull: canonicalizes orientation, drops duplicates and
  // collinear vertices, and starts at the lexicographic minimum.
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) { return a == b; }),
            pts.end());
  ConvexPolygon poly;
  size_t n = pts.size();
  if (n < 3) return poly;
  std::vector<Point2> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) return poly;
  poly.verts_ = std::move(hull);
  return poly;
}

ConvexPolygon ConvexPolygon::rect(const Rational& x0, const Rational& x1,
                                  const Rational& y0, const Rational& y1) {
  return from_vertices({{Scalar(x0), Scalar(y0)},
                        {Scalar(x1), Scalar(y0)},
                        {Scalar(x1), Scalar(y1)},
                        {Scalar(x0), Scalar(y1)}});
}

bool ConvexPolygon::contains(const Point2& p) const {
  if (empty()) return false;
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    if (orient(verts_[i], verts_[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

bool ConvexPolygon::strictly_contains(const Point2& p) const {
  if (empty()) return false;
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    if (orient(verts_[i], verts_[(i + 1) % n], p) <= 0) return false;
  }
  return true;
}

bool ConvexPolygon::contains_origin() const {
  return contains({Scalar(0), Scalar(0)});
}

ConvexPolygon ConvexPolygon::clip_left(const Point2& a, const Point2& b) const {
  if (empty()) return ConvexPolygon();
  std::vector<Point2> out;
  size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& cur = verts_[i];
    const Point2& nxt = verts_[(i + 1) % n];
    int sc = orient(a, b, cur);
    int sn = orient(a, b, nxt);
    if (sc >= 0) out.push_back(cur);
    if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
      // Exact crossing point of segment (cur, nxt) with line (a, b).
      Scalar fc = (cur.x - a.x) * (b.y - a.y) - (cur.y - a.y) * (b.x - a.x);
      Scalar fn = (nxt.x - a.x) * (b.y - a.y) - (nxt.y - a.y) * (b.x - a.x);
      Scalar t = fc / (fc - fn);
      out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
    }
  }
  return from_vertices(std::move(out));
}

ConvexPolygon ConvexPolygon::intersect(const ConvexPolygon& o) const {
  if (empty() || o.empty()) return ConvexPolygon();
  ConvexPolygon r = *this;
  size_t n = o.verts_.size();
  for (size_t i = 0; i < n && !r.empty(); ++i) {
    r = r.clip_left(o.verts_[i], o.verts_[(i + 1) % n]);
  }
  return r;
}

std::vector<ConvexPolygon> ConvexPolygon::subtract(const ConvexPolygon& o) const {
  if (empty()) return {};
  if (o.empty()) return {*this};
  std::vector<ConvexPolygon> pieces;
  ConvexPolygon rest = *this;
  size_t n = o.verts_.size();
  for (size_t i = 0; i < n && !rest.empty(); ++i) {
    const Point2& a = o.verts_[i];
    const Point2& b = o.verts_[(i + 1) % n];
    // Part of rest strictly to the right of edge (a, b) is outside o.
    ConvexPolygon outside = rest.clip_left(b, a);
    if (!outside.empty()) pieces.push_back(outside);
    rest = rest.clip_left(a, b);
  }
  return pieces;
}

ConvexPolygon ConvexPolygon::image(const Mat2& g) const {
  std::vector<Point2> pts;
  pts.reserve(verts_.size());
  for (const Point2& v : verts_) pts.push_back(apply(g, v));
  return from_vertices(std::move(pts));
}

Point2 ConvexPolygon::centroid() const {
  Scalar sx(0), sy(0);
  for (const Point2& v : verts_) {
    sx = sx + v.x;
    sy = sy + v.y;
  }
  Scalar n(Rational(static_cast<long>(verts_.size())));
  return {sx / n, sy / n};
}

ConvexPolygon ConvexPolygon::dilate(const Rational& factor) const {
  if (empty()) return *this;
  Point2 c = centroid();
  Scalar f{Scalar(factor)};
  std::vector<Point2> pts;
  for (const Point2& v : verts_) {
    pts.push_back({c.x + f * (v.x - c.x), c.y + f * (v.y - c.y)});
  }
  return from_vertices(std::move(pts));
}

bool ConvexPolygon::equals(const ConvexPolygon& o) const {
  if (verts_.size() != o.verts_.size()) return false;
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (!(verts_[i] == o.verts_[i])) return false;
  }
  return true;
}

RegionSet::RegionSet(std::vector<ConvexPolygon> polys) {
  for (auto& p : polys) {
    if (!p.empty()) polys_.push_back(std::move(p));
  }
}

RegionSet RegionSet::single(ConvexPolygon p) { return RegionSet({std::move(p)}); }

bool RegionSet::is_empty() const { return polys_.empty(); }

bool RegionSet::contains(const Point2& p) const {
  for (const auto& poly : polys_) {
    if (poly.contains(p)) return true;
  }
  return false;
}

RegionSet RegionSet::intersect(const RegionSet& o) const {
  std::vector<ConvexPolygon> out;
  for (const auto& a : polys_) {
    for (const auto& b : o.polys_) {
      ConvexPolygon c = a.intersect(b);
      if (!c.empty()) out.push_back(std::move(c));
    }
  }
  return RegionSet(std::move(out));
}

RegionSet RegionSet::subtract(const RegionSet& o) const {
  std::vector<ConvexPolygon> out;
  for (const auto& a : polys_) {
    std::vector<ConvexPolygon> pieces = {a};
    for (const auto& b : o.polys_) {
      std::vector<ConvexPolygon> next;
      for (const auto& piece : pieces) {
        for (auto& frag : piece.subtract(b)) next.push_back(std::move(frag));
      }
      pieces = std::move(next);
    }
    for (auto& piece : pieces) out.push_back(std::move(piece));
  }
  return RegionSet(std::move(out));
}

RegionSet RegionSet::image(const Mat2& g) const {
  std::vector<ConvexPolygon> out;
  out.reserve(polys_.size());
  for (const auto& p : polys_) out.push_back(p.image(g));
  return RegionSet(std::move(out));
}

RegionSet RegionSet::unite(const RegionSet& o) const {
  std::vector<ConvexPolygon> out = polys_;
  for (const auto& p : o.polys_) out.push_back(p);
  return RegionSet(std::move(out));
}

RegionSet RegionSet::dilate(const Rational& factor) const {
  std::vector<ConvexPolygon> out;
  for (const auto& p : polys_) out.push_back(p.dilate(factor));
  return RegionSet(std::move(out));
}

void RegionSet::check_origin_free() const {
  for (const auto& p : polys_) {
    if (p.contains_origin())
      throw Error(ErrorCode::BadInput, "region member contains the origin");
  }
}

namespace {

// Exact unit vector at circle parameter t: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Point2 unit_dir(const Rational& t) {
  Rational t2 = t * t;
  Rational den = 1 + t2;
  Rational x = (1 - t2) / den;
  Rational y = 2 * t / den;
  x.canonicalize();
  y.canonicalize();
  return {Scalar(x), Scalar(y)};
}

Rational rationalize(double v, long den = 1 << 20) {
  Rational q(static_cast<long>(std::llround(v * static_cast<double>(den))), den);
  q.canonicalize();
  return q;
}

}  // namespace

RegionSet crown_hull(const Crown& c, int sides) {
  if (c.r1_sq >= c.r2_sq || sgn(c.r1_sq) <= 0)
    throw Error(ErrorCode::DegenerateCrown,
                "need 0 < r1_sq < r2_sq, got " + c.r1_sq.get_str() + ", " +
                    c.r2_sq.get_str());
  if (sides < 8 || sides % 2 != 0)
    throw Error(ErrorCode::BadInput, "hull sides must be even and >= 8");

  // Unit directions in circular order via the tangent half-angle map.
  std::vector<Point2> dirs;
  for (int j = 0; j < sides; ++j) {
    if (2 * j == sides) {
      dirs.push_back({Scalar(-1), Scalar(0)});
    } else {
      double theta = 2.0 * M_PI * j / sides;
      dirs.push_back(unit_dir(rationalize(std::tan(theta / 2))));
    }
  }

  const int bits = 64;
  Rational c_out = sqrt_upper(c.r2_sq, bits);

  // Outer vertex j: intersection of the tangent lines dir_j . v = c_out and
  // dir_{j+1} . v = c_out.
  std::vector<Point2> outer;
  for (int j = 0; j < sides; ++j) {
    const Point2& u1 = dirs[j];
    const Point2& u2 = dirs[(j + 1) % sides];
    Scalar det = u1.x * u2.y - u2.x * u1.y;
    Scalar co{Scalar(c_out)};
    outer.push_back({(co * u2.y - co * u1.y) / det, (u1.x * co - u2.x * co) / det});
  }

  // Inner polygon: radial scaling of the outer one into the r1 disk.
  Rational max_norm_sq(0);
  for (const Point2& w : outer) {
    Rational n = (w.x * w.x + w.y * w.y).as_rational();
    if (n > max_norm_sq) max_norm_sq = n;
  }
  Rational s = sqrt_lower(c.r1_sq / max_norm_sq, bits);
  if (sgn(s) <= 0) s = sqrt_lower(c.r1_sq / max_norm_sq, 4 * bits);
  Scalar sc{Scalar(s)};

  std::vector<ConvexPolygon> quads;
  for (int j = 0; j < sides; ++j) {
    const Point2& w1 = outer[j];
    const Point2& w2 = outer[(j + 1) % sides];
    Point2 v1{sc * w1.x, sc * w1.y};
    Point2 v2{sc * w2.x, sc * w2.y};
    quads.push_back(ConvexPolygon::from_vertices({w1, w2, v2, v1}));
  }
  RegionSet hull(std::move(quads));
  hull.check_origin_free();
  if (c.frame.is_identity()) return hull;
  return hull.image(c.frame.inverse());
}

Crown enclosing_crown(const RegionSet& r, const Mat2& frame) {
  if (r.is_empty()) throw Error(ErrorCode::BadInput, "empty region has no crown");
  // Boundary distances below are all positive when the origin is interior,
  // so the puncture condition has to be checked separately.
  r.check_origin_free();
  bool first = true;
  Rational lo(0), hi(0);
  for (const auto& poly : r.polygons()) {
    ConvexPolygon framed = frame.is_identity() ? poly : poly.image(frame);
    const auto& vs = framed.vertices();
    size_t n = vs.size();
    for (size_t i = 0; i < n; ++i) {
      Rational nsq = (vs[i].x * vs[i].x + vs[i].y * vs[i].y)
                         .lower_bound(default_precision().start_bits);
      Rational nsq_hi = (vs[i].x * vs[i].x + vs[i].y * vs[i].y)
                            .upper_bound(default_precision().start_bits);
      if (first || nsq_hi > hi) hi = nsq_hi;
      if (first || nsq < lo) lo = nsq;
      first = false;
      // Squared distance from the origin to edge (vs[i], vs[i+1]): the
      // projection parameter of 0 onto the segment, clamped.
      const Point2& a = vs[i];
      const Point2& b = vs[(i + 1) % n];
      Scalar dx = b.x - a.x, dy = b.y - a.y;
      Scalar len2 = dx * dx + dy * dy;
      Scalar t = -(a.x * dx + a.y * dy) / len2;
      if (t.sign() > 0 && t.compare(Scalar(1)) < 0) {
        Scalar px = a.x + t * dx, py = a.y + t * dy;
        Rational d = (px * px + py * py).lower_bound(default_precision().start_bits);
        if (d < lo) lo = d;
      }
    }
  }
  if (sgn(lo) <= 0)
    throw Error(ErrorCode::BadInput, "region touches the origin, no crown exists");
  return Crown{frame, lo, hi};
}

}  // namespace sqz
