#ifndef SQZ_REGIONS_HPP
#define SQZ_REGIONS_HPP

#include <vector>

#include "sqz/projective.hpp"
#include "sqz/scalar.hpp"

namespace sqz {

struct Point2 {
  Scalar x, y;
  bool operator==(const Point2& o) const { return x.equals(o.x) && y.equals(o.y); }
};

Point2 apply(const Mat2& g, const Point2& p);

// Convex polygon with exact vertices, counterclockwise, canonicalized
// (collinear points dropped, start vertex lexicographically smallest).
// An empty vertex list denotes the empty region.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  static ConvexPolygon from_vertices(std::vector<Point2> pts);
  static ConvexPolygon rect(const Rational& x0, const Rational& x1,
                            const Rational& y0, const Rational& y1);

  const std::vector<Point2>& vertices() const { return verts_; }
  bool empty() const { return verts_.size() < 3; }
  bool contains(const Point2& p) const;           // closed containment
  bool strictly_contains(const Point2& p) const;  // interior
  bool contains_origin() const;

  ConvexPolygon intersect(const ConvexPolygon& o) const;
  // Decomposition of *this minus o into convex pieces (boundary overlaps
  // allowed; pieces cover the closed difference).
  std::vector<ConvexPolygon> subtract(const ConvexPolygon& o) const;
  ConvexPolygon image(const Mat2& g) const;
  // Scale by factor about the vertex centroid.
  ConvexPolygon dilate(const Rational& factor) const;

  bool equals(const ConvexPolygon& o) const;
  Point2 centroid() const;

 private:
  ConvexPolygon clip_left(const Point2& a, const Point2& b) const;
  std::vector<Point2> verts_;
};

// Finite union of convex polygons in the punctured plane.
class RegionSet {
 public:
  RegionSet() = default;
  explicit RegionSet(std::vector<ConvexPolygon> polys);
  static RegionSet single(ConvexPolygon p);

  const std::vector<ConvexPolygon>& polygons() const { return polys_; }
  bool is_empty() const;
  bool contains(const Point2& p) const;

  RegionSet intersect(const RegionSet& o) const;
  RegionSet subtract(const RegionSet& o) const;
  bool contained_in(const RegionSet& o) const { return subtract(o).is_empty(); }
  RegionSet image(const Mat2& g) const;
  RegionSet unite(const RegionSet& o) const;
  RegionSet dilate(const Rational& factor) const;

  // Requires every member polygon to exclude the origin.
  void check_origin_free() const;

 private:
  std::vector<ConvexPolygon> polys_;
};

// The set u^-1 { z : r1 <= |z| <= r2 } in the punctured plane.
struct Crown {
  Mat2 frame;  // u
  Rational r1_sq, r2_sq;
};

// Polygonal over-approximation of the crown: a circumscribed outer k-gon
// minus an inscribed inner k-gon, returned as k convex trapezoids.
// k >= 8 and even. Containment is certified by the rational tangent-line
// construction (outer half-plane offsets >= r2, inner vertices of norm <= r1).
RegionSet crown_hull(const Crown& c, int sides);

// Crown in the given frame enclosing the region: r2_sq is the max squared
// norm of the framed vertices, r1_sq the exact min squared distance from the
// origin to the framed polygons (attained at a vertex or on an edge).
Crown enclosing_crown(const RegionSet& r, const Mat2& frame);

}  // namespace sqz

#endif
