#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sqz/regions.hpp"

using namespace sqz;

namespace {

Mat2 diag_a() {
  return Mat2(Scalar(2), Scalar(0), Scalar(0), Scalar(Rational(1, 2)));
}

Point2 pt(const Rational& x, const Rational& y) { return {Scalar(x), Scalar(y)}; }

// Independent brute-force clipping oracle: intersect by testing membership of
// a point against all half-planes of both polygons.
bool in_both(const ConvexPolygon& a, const ConvexPolygon& b, const Point2& p) {
  return a.contains(p) && b.contains(p);
}

std::mt19937 rng(42);

Rational rand_rat(long lo, long hi, long den = 16) {
  std::uniform_int_distribution<long> num(lo * den, hi * den);
  Rational q(num(rng), den);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("linear image of a rectangle under diag(2,1/2)") {
  ConvexPolygon sq = ConvexPolygon::rect(1, 2, -1, 1);
  ConvexPolygon img = sq.image(diag_a());
  CHECK(img.equals(ConvexPolygon::rect(2, 4, Rational(-1, 2), Rational(1, 2))));
  CHECK(sq.image(Mat2::identity()).equals(sq));
}

TEST_CASE("linear image is functorial and invertible") {
  ConvexPolygon sq = ConvexPolygon::rect(1, 3, 1, 2);
  Mat2 g = diag_a();
  Mat2 h(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
  CHECK(sq.image(h).image(g).equals(sq.image(g * h)));
  CHECK(sq.image(g).image(g.inverse()).equals(sq));
}

TEST_CASE("intersection basics") {
  ConvexPolygon r1 = ConvexPolygon::rect(1, 2, 1, 2);
  ConvexPolygon r2 = ConvexPolygon::rect(3, 4, 3, 4);
  CHECK(r1.intersect(r2).empty());
  CHECK(r1.intersect(r1).equals(r1));
  ConvexPolygon r3 = ConvexPolygon::rect(1, 3, 1, 3);
  ConvexPolygon r4 = ConvexPolygon::rect(2, 4, 2, 4);
  CHECK(r3.intersect(r4).equals(ConvexPolygon::rect(2, 3, 2, 3)));
}

TEST_CASE("intersection agrees with the membership oracle") {
  for (int trial = 0; trial < 20; ++trial) {
    Rational x0 = rand_rat(1, 4), y0 = rand_rat(1, 4);
    ConvexPolygon a = ConvexPolygon::rect(x0, x0 + rand_rat(1, 3), y0, y0 + rand_rat(1, 3));
    std::vector<Point2> tri = {pt(rand_rat(1, 6), rand_rat(1, 6)),
                               pt(rand_rat(1, 6), rand_rat(1, 6)),
                               pt(rand_rat(1, 6), rand_rat(1, 6))};
    ConvexPolygon b = ConvexPolygon::from_vertices(tri);
    if (b.empty()) continue;
    ConvexPolygon c = a.intersect(b);
    for (int s = 0; s < 100; ++s) {
      Point2 p = pt(rand_rat(0, 7, 64), rand_rat(0, 7, 64));
      bool oracle = in_both(a, b, p);
      // Boundary-touching samples may differ only on measure zero; the clip
      // result is exact, so membership must match exactly.
      CHECK(c.contains(p) == oracle);
    }
  }
}

TEST_CASE("region set emptiness") {
  CHECK(RegionSet().is_empty());
  RegionSet r = RegionSet::single(ConvexPolygon::rect(0, 1, 0, 1));
  CHECK_FALSE(r.is_empty());
  RegionSet a = RegionSet::single(ConvexPolygon::rect(1, 2, 1, 2));
  RegionSet b = RegionSet::single(ConvexPolygon::rect(3, 4, 3, 4));
  CHECK(a.intersect(b).is_empty());
}

TEST_CASE("subtract produces an exact difference") {
  RegionSet a = RegionSet::single(ConvexPolygon::rect(0, 4, 0, 4));
  RegionSet b = RegionSet::single(ConvexPolygon::rect(1, 2, 1, 2));
  RegionSet d = a.subtract(b);
  CHECK_FALSE(d.is_empty());
  for (int s = 0; s < 300; ++s) {
    Point2 p = pt(rand_rat(0, 4, 32), rand_rat(0, 4, 32));
    bool inside = a.contains(p) && !b.polygons()[0].strictly_contains(p);
    CHECK(d.contains(p) == inside);
  }
  CHECK(a.subtract(a).is_empty());
  CHECK(a.contained_in(a));
  CHECK(b.contained_in(a));
  CHECK_FALSE(a.contained_in(b));
}

TEST_CASE("crown hull contains sampled crown points") {
  Crown c{Mat2::identity(), Rational(1), Rational(4)};
  RegionSet hull = crown_hull(c, 8);
  CHECK(hull.polygons().size() == 8);
  hull.check_origin_free();
  // Sampled points r*(cos,sin) via exact rational unit vectors.
  std::uniform_int_distribution<long> tnum(-4000, 4000);
  int n_inside = 0;
  for (int s = 0; s < 10000; ++s) {
    Rational t(tnum(rng), 1000);
    Rational den = 1 + t * t;
    Rational ux = (1 - t * t) / den, uy = 2 * t / den;
    Rational r = 1 + Rational(s % 101, 101);  // in [1, 2)
    Point2 p = pt(r * ux, r * uy);
    if (hull.contains(p)) ++n_inside;
    // Also the antipodal direction to cover the left half-circle.
    Point2 q = pt(-r * ux, -r * uy);
    if (hull.contains(q)) ++n_inside;
  }
  CHECK(n_inside == 20000);
}

TEST_CASE("crown hull in a frame equals the framed identity hull") {
  Mat2 u(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
  Crown c{u, Rational(1), Rational(4)};
  RegionSet framed = crown_hull(c, 8);
  RegionSet base = crown_hull(Crown{Mat2::identity(), Rational(1), Rational(4)}, 8);
  RegionSet expected = base.image(u.inverse());
  CHECK(framed.subtract(expected).is_empty());
  CHECK(expected.subtract(framed).is_empty());
}

TEST_CASE("finer crown hull is contained in the coarse hull") {
  Crown c{Mat2::identity(), Rational(1), Rational(4)};
  RegionSet coarse = crown_hull(c, 8);
  RegionSet fine = crown_hull(c, 64);
  std::uniform_int_distribution<long> tnum(-3000, 3000);
  for (int s = 0; s < 2000; ++s) {
    const auto& polys = fine.polygons();
    const auto& poly = polys[s % polys.size()];
    // Vertex samples of the fine hull must lie in the coarse hull.
    for (const Point2& v : poly.vertices()) CHECK(coarse.contains(v));
  }
}

TEST_CASE("degenerate crown is rejected") {
  CHECK_THROWS_AS(crown_hull(Crown{Mat2::identity(), Rational(4), Rational(1)}, 8), Error);
  CHECK_THROWS_AS(crown_hull(Crown{Mat2::identity(), Rational(1), Rational(4)}, 7), Error);
}

TEST_CASE("squeeze-equivalence of triple intersections as a region identity") {
  // is_empty(K ∩ g γ⁻¹ K ∩ g γ⁻¹ g' γ⁻¹ K) == is_empty(γ g'⁻¹ γ g⁻¹ K ∩ γ g'⁻¹ K ∩ K)
  Mat2 a = diag_a();
  Mat2 h(Scalar(1), Scalar(1), Scalar(0), Scalar(1));
  RegionSet K = RegionSet::single(ConvexPolygon::rect(1, 2, -1, 1));
  std::uniform_int_distribution<int> e(-2, 2);
  for (int trial = 0; trial < 15; ++trial) {
    Mat2 g = a.pow(e(rng)) * h.pow(e(rng));
    Mat2 gp = h.pow(e(rng)) * a.pow(e(rng));
    Mat2 gamma = a.pow(e(rng)) * h.pow(e(rng)) * a.pow(e(rng));
    bool lhs = K.intersect(K.image(g * gamma.inverse()))
                   .intersect(K.image(g * gamma.inverse() * gp * gamma.inverse()))
                   .is_empty();
    bool rhs = K.image(gamma * gp.inverse() * gamma * g.inverse())
                   .intersect(K.image(gamma * gp.inverse()))
                   .intersect(K)
                   .is_empty();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("enclosing crown brackets a polygon") {
  RegionSet r = RegionSet::single(ConvexPolygon::rect(1, 2, Rational(-1, 2), Rational(1, 2)));
  Crown c = enclosing_crown(r, Mat2::identity());
  CHECK(c.r1_sq <= 1);
  CHECK(c.r2_sq >= Rational(17, 4));
  // Edge case: nearest point on an edge interior, not at a vertex.
  RegionSet shifted = RegionSet::single(ConvexPolygon::rect(-1, 1, 2, 3));
  Crown c2 = enclosing_crown(shifted, Mat2::identity());
  CHECK(c2.r1_sq <= 4);
  CHECK(c2.r1_sq > 3);
}

TEST_CASE("origin-containing regions are rejected") {
  RegionSet r = RegionSet::single(ConvexPolygon::rect(-1, 1, -1, 1));
  CHECK_THROWS_AS(r.check_origin_free(), Error);
  CHECK_THROWS_AS(enclosing_crown(r, Mat2::identity()), Error);
}
