#include "sqz/projective.hpp"

#include <algorithm>
#include <sstream>

namespace sqz {

const char* moebius_class_name(MoebiusClass c) {
  switch (c) {
    case MoebiusClass::Identity: return "Identity";
    case MoebiusClass::MinusIdentity: return "MinusIdentity";
    case MoebiusClass::Elliptic: return "Elliptic";
    case MoebiusClass::Parabolic: return "Parabolic";
    case MoebiusClass::Hyperbolic: return "Hyperbolic";
  }
  return "Unknown";
}

Mat2::Mat2(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  Scalar det = a_ * d_ - b_ * c_;
  if (!det.equals(Scalar(1)))
    throw Error(ErrorCode::NonUnimodular, "determinant " + det.str() + " != 1");
}

Mat2 Mat2::diag(const Scalar& l) { return Mat2(l, Scalar(0), Scalar(0), l.inverse()); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
              c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Mat2 Mat2::inverse() const { return Mat2(d_, -b_, -c_, a_); }

Mat2 Mat2::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Mat2 result;
  Mat2 base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Mat2 Mat2::operator-() const { return Mat2(-a_, -b_, -c_, -d_); }

bool Mat2::equals(const Mat2& o) const {
  return a_.equals(o.a_) && b_.equals(o.b_) && c_.equals(o.c_) && d_.equals(o.d_);
}

bool Mat2::is_identity() const { return equals(Mat2::identity()); }
bool Mat2::is_minus_identity() const { return equals(-Mat2::identity()); }

std::string Mat2::str() const {
  std::ostringstream os;
  os << "[[" << a_.str() << "," << b_.str() << "],[" << c_.str() << "," << d_.str()
     << "]]";
  return os.str();
}

MoebiusClass classify(const Mat2& g) {
  if (g.is_identity()) return MoebiusClass::Identity;
  if (g.is_minus_identity()) return MoebiusClass::MinusIdentity;
  int c = g.trace().abs().compare(Scalar(2));
  if (c > 0) return MoebiusClass::Hyperbolic;
  if (c == 0) return MoebiusClass::Parabolic;
  return MoebiusClass::Elliptic;
}

bool is_hyperbolic(const Mat2& g) { return classify(g) == MoebiusClass::Hyperbolic; }

ProjPoint::ProjPoint(Scalar x, Scalar y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero() && y_.is_zero())
    throw Error(ErrorCode::BadInput, "[0:0] is not a projective point");
  // Canonical representative: divide by the coordinate of largest absolute
  // value, then fix the sign of the first nonzero coordinate positive.
  if (x_.abs().compare(y_.abs()) > 0) {
    y_ = y_ / x_;
    x_ = Scalar(1);
  } else {
    x_ = x_ / y_;
    y_ = Scalar(1);
  }
  int lead = x_.is_zero() ? y_.sign() : x_.sign();
  if (lead < 0) {
    x_ = -x_;
    y_ = -y_;
  }
}

Scalar ProjPoint::slope() const {
  if (is_infinity()) throw Error(ErrorCode::BadInput, "slope of [0:1]");
  return y_ / x_;
}

bool ProjPoint::equals(const ProjPoint& p) const {
  return x_.equals(p.x_) && y_.equals(p.y_);
}

std::string ProjPoint::str() const {
  return "[" + x_.str() + ":" + y_.str() + "]";
}

ProjPoint act_proj(const Mat2& g, const ProjPoint& p) {
  return ProjPoint(g.a() * p.x() + g.b() * p.y(), g.c() * p.x() + g.d() * p.y());
}

namespace {

// Eigen-direction of g for eigenvalue lambda (using the char poly
// lambda^2 - tr*lambda + 1 = 0).
ProjPoint eigen_direction(const Mat2& g, const Scalar& lambda) {
  if (!g.b().is_zero()) return ProjPoint(g.b(), lambda - g.a());
  if (!g.c().is_zero()) return ProjPoint(lambda - g.d(), g.c());
  // Diagonal matrix: eigenvectors are the axes.
  if (g.a().equals(lambda)) return ProjPoint(Scalar(1), Scalar(0));
  return ProjPoint(Scalar(0), Scalar(1));
}

}  // namespace

FixedPair fixed_points(const Mat2& g) {
  if (!is_hyperbolic(g))
    throw Error(ErrorCode::NonHyperbolic, "fixed points of " + g.str());
  Scalar t = g.trace();
  Scalar disc = t * t - Scalar(4);
  if (!disc.is_rational())
    throw Error(ErrorCode::FieldMismatch,
                "eigenvalues of a matrix with irrational trace leave the "
                "quadratic field: " + g.str());
  Scalar root = Scalar::sqrt_of(disc.as_rational());
  Scalar half(Rational(1, 2));
  Scalar l1 = (t + root) * half;
  Scalar l2 = (t - root) * half;
  // l1 * l2 = 1; exactly one of them has |lambda| > 1.
  Scalar big = l1.abs().compare(Scalar(1)) > 0 ? l1 : l2;
  Scalar small = big.equals(l1) ? l2 : l1;
  FixedPair fp;
  fp.eigenvalue = big;
  fp.attracting = eigen_direction(g, big);
  fp.repelling = eigen_direction(g, small);
  return fp;
}

Diagonalization diagonalize(const Mat2& h) {
  FixedPair fp = fixed_points(h);
  // Columns of u^-1 are the attracting and repelling directions, with the
  // second column scaled so that the determinant is exactly 1.
  Scalar px = fp.attracting.x(), py = fp.attracting.y();
  Scalar qx = fp.repelling.x(), qy = fp.repelling.y();
  Scalar det = px * qy - qx * py;
  qx = qx / det;
  qy = qy / det;
  Mat2 uinv(px, qx, py, qy);
  Diagonalization d;
  d.u = uinv.inverse();
  d.lambda = fp.eigenvalue;
  return d;
}

bool same_axis(const Mat2& g, const Mat2& h) {
  FixedPair fg = fixed_points(g);
  FixedPair fh = fixed_points(h);
  bool direct = fg.attracting == fh.attracting && fg.repelling == fh.repelling;
  bool swapped = fg.attracting == fh.repelling && fg.repelling == fh.attracting;
  return direct || swapped;
}

Scalar proj_dist_sq(const ProjPoint& p, const ProjPoint& q) {
  Scalar num = p.x() * q.y() - q.x() * p.y();
  Scalar den = (p.x() * p.x() + p.y() * p.y()) * (q.x() * q.x() + q.y() * q.y());
  return num * num / den;
}

namespace {

struct Interval {
  Rational lo, hi;
  Interval operator*(const Interval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }
  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
};

Interval iv(const Scalar& s, int bits) {
  auto [lo, hi] = s.enclosure(bits);
  return {lo, hi};
}

}  // namespace

Rational proj_dist_sq_lower(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) return Rational(0);
  if (p.x().same_field(q.x()) && p.x().same_field(q.y()) &&
      p.y().same_field(q.x()) && p.y().same_field(q.y())) {
    Scalar d = proj_dist_sq(p, q);
    const Precision& prec = default_precision();
    for (int bits = prec.start_bits; bits <= prec.max_bits; bits *= 2) {
      Rational lb = d.lower_bound(bits);
      if (sgn(lb) > 0) return lb;
    }
    throw Error(ErrorCode::IndeterminateAtPrecisionCap,
                "distance bound for " + p.str() + ", " + q.str());
  }
  const Precision& prec = default_precision();
  for (int bits = prec.start_bits; bits <= prec.max_bits; bits *= 2) {
    Interval x1 = iv(p.x(), bits), y1 = iv(p.y(), bits);
    Interval x2 = iv(q.x(), bits), y2 = iv(q.y(), bits);
    Interval num = x1 * y2 - x2 * y1;
    Interval den = (x1 * x1 + y1 * y1) * (x2 * x2 + y2 * y2);
    if (sgn(num.lo) > 0 || sgn(num.hi) < 0) {
      Rational n = std::min(num.lo * num.lo, num.hi * num.hi);
      return n / den.hi;
    }
  }
  throw Error(ErrorCode::IndeterminateAtPrecisionCap,
              "distance bound for " + p.str() + ", " + q.str());
}

namespace {

// Slope comparison with [0:1] as the maximal element.
int cmp_slope(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0;
  if (a.is_infinity()) return 1;
  if (b.is_infinity()) return -1;
  return a.slope().compare(b.slope());
}

}  // namespace

bool cyclic_order(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  int ab = cmp_slope(a, b), bc = cmp_slope(b, c), ca = cmp_slope(c, a);
  return (ab < 0 && bc < 0) || (bc < 0 && ca < 0) || (ca < 0 && ab < 0);
}

ProjPoint point_strictly_between(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorCode::BadInput, "empty interval");
  const Precision& prec = default_precision();
  if (p.is_infinity()) {
    Rational r = q.slope().lower_bound(prec.start_bits) - 1;
    return ProjPoint::from_slope(r);
  }
  if (q.is_infinity()) {
    Rational r = p.slope().upper_bound(prec.start_bits) + 1;
    return ProjPoint::from_slope(r);
  }
  int c = p.slope().compare(q.slope());
  if (c < 0) return ProjPoint::from_slope(rational_strictly_between(p.slope(), q.slope()));
  // The interval wraps through [0:1].
  return ProjPoint::infinity_point();
}

}  // namespace sqz
