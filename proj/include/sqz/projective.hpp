#ifndef SQZ_PROJECTIVE_HPP
#define SQZ_PROJECTIVE_HPP

#include <optional>
#include <string>

#include "sqz/scalar.hpp"

namespace sqz {

enum class MoebiusClass { Identity, MinusIdentity, Elliptic, Parabolic, Hyperbolic };

const char* moebius_class_name(MoebiusClass c);

// Exact 2x2 matrix with determinant 1 (checked at construction).
class Mat2 {
 public:
  Mat2() : a_(1), b_(0), c_(0), d_(1) {}
  Mat2(Scalar a, Scalar b, Scalar c, Scalar d);

  static Mat2 identity() { return Mat2(); }
  static Mat2 diag(const Scalar& l);  // diag(l, 1/l)

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }
  const Scalar& d() const { return d_; }
  Scalar trace() const { return a_ + d_; }

  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;  // [[d,-b],[-c,a]]
  Mat2 pow(long k) const;
  Mat2 operator-() const;

  bool equals(const Mat2& o) const;
  bool is_identity() const;
  bool is_minus_identity() const;

  std::string str() const;

 private:
  Scalar a_, b_, c_, d_;
};

MoebiusClass classify(const Mat2& g);
bool is_hyperbolic(const Mat2& g);

// Point [x:y] on RP^1, canonically normalized: divide by the coordinate of
// largest absolute value, then make the first nonzero coordinate positive.
class ProjPoint {
 public:
  ProjPoint() : x_(1), y_(0) {}
  ProjPoint(Scalar x, Scalar y);

  static ProjPoint infinity_point() { return ProjPoint(Scalar(0), Scalar(1)); }
  static ProjPoint from_slope(const Rational& s) { return ProjPoint(Scalar(1), Scalar(s)); }

  const Scalar& x() const { return x_; }
  const Scalar& y() const { return y_; }

  bool is_infinity() const { return x_.is_zero(); }
  // Slope y/x; only valid when not the point at infinity.
  Scalar slope() const;

  bool equals(const ProjPoint& p) const;
  bool operator==(const ProjPoint& p) const { return equals(p); }
  bool operator!=(const ProjPoint& p) const { return !equals(p); }

  std::string str() const;

 private:
  Scalar x_, y_;
};

// [x:y] -> [ax+by : cx+dy]; -I acts trivially.
ProjPoint act_proj(const Mat2& g, const ProjPoint& p);

struct FixedPair {
  ProjPoint attracting;
  ProjPoint repelling;
  Scalar eigenvalue;  // |lambda| > 1, eigenvalue of the attracting direction
};

// Eigen-directions of a hyperbolic g, exact in Q(sqrt(tr^2 - 4)).
FixedPair fixed_points(const Mat2& g);

// h = u^-1 * diag(lambda, 1/lambda) * u with det(u) = 1, |lambda| > 1;
// u maps the attracting direction to [1:0] and the repelling one to [0:1].
struct Diagonalization {
  Mat2 u;
  Scalar lambda;
};
Diagonalization diagonalize(const Mat2& h);

// True iff g and h share their fixed-point set on RP^1. Both must be
// hyperbolic.
bool same_axis(const Mat2& g, const Mat2& h);

// Squared projective distance sin^2(angle) = (x1 y2 - x2 y1)^2 /
// ((x1^2+y1^2)(x2^2+y2^2)), exact when the points live in one field.
Scalar proj_dist_sq(const ProjPoint& p, const ProjPoint& q);
// Certified positive rational lower bound of proj_dist_sq across fields;
// returns 0 only when the points are equal.
Rational proj_dist_sq_lower(const ProjPoint& p, const ProjPoint& q);

// Circular order on RP^1 by slope with wraparound at [0:1]: true iff b lies
// strictly between a and c when sweeping slopes upward from a.
bool cyclic_order(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// A rational point strictly inside the circular interval swept upward from p
// to q (p != q).
ProjPoint point_strictly_between(const ProjPoint& p, const ProjPoint& q);

}  // namespace sqz

#endif
