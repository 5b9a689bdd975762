#ifndef SQZ_SCALAR_HPP
#define SQZ_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "sqz/error.hpp"

namespace sqz {

using Rational = mpq_class;
using Integer = mpz_class;

// Outward-rounded precision policy for comparisons that leave a single
// quadratic field. Refinement starts at start_bits and doubles up to max_bits.
struct Precision {
  int start_bits = 256;
  int max_bits = 4096;
};

Precision& default_precision();

// lo^2 <= q <= hi^2, with hi - lo <= 2^-bits (up to denominator scaling).
std::pair<Rational, Rational> sqrt_enclosure(const Rational& q, int bits);
Rational sqrt_lower(const Rational& q, int bits);
Rational sqrt_upper(const Rational& q, int bits);

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

// Exact element a + b*sqrt(d) of Q or a real quadratic extension Q(sqrt(d)),
// d a squarefree positive integer (> 1). d == 0 encodes a plain rational.
// Values from distinct fields compare through refinable interval enclosures.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(const Rational& q) : a_(q), b_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), d_(0) {}
  Scalar(int n) : a_(n), b_(0), d_(0) {}

  // a + b*sqrt(rad) with rad a nonnegative rational; the radicand is
  // canonicalized to its squarefree integer part.
  static Scalar quadratic(const Rational& a, const Rational& b, const Rational& rad);
  // sqrt of a nonnegative rational, exact.
  static Scalar sqrt_of(const Rational& q);

  bool is_rational() const { return d_ == 0; }
  const Rational& rat_part() const { return a_; }
  const Rational& quad_part() const { return b_; }
  const Integer& discriminant() const { return d_; }
  // Throws FieldMismatch unless is_rational().
  const Rational& as_rational() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar conjugate() const;  // a - b*sqrt(d)
  Scalar abs() const;
  Scalar squared() const { return *this * *this; }
  Scalar inverse() const;

  int sign() const;  // exact, never refines
  bool is_zero() const { return sign() == 0; }

  // Exact equality (decidable across fields: 1, sqrt(d1), sqrt(d2) are
  // linearly independent over Q for distinct squarefree d1, d2).
  bool equals(const Scalar& o) const;
  // -1 / 0 / +1. Same-field comparisons are exact; cross-field comparisons
  // refine enclosures and throw IndeterminateAtPrecisionCap at the cap.
  int compare(const Scalar& o) const;
  int compare(const Scalar& o, const Precision& prec) const;

  bool operator==(const Scalar& o) const { return equals(o); }
  bool operator!=(const Scalar& o) const { return !equals(o); }
  bool operator<(const Scalar& o) const { return compare(o) < 0; }
  bool operator>(const Scalar& o) const { return compare(o) > 0; }
  bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
  bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

  // Outward-rounded rational enclosure [lo, hi] of the represented real.
  std::pair<Rational, Rational> enclosure(int bits) const;
  Rational lower_bound(int bits) const { return enclosure(bits).first; }
  Rational upper_bound(int bits) const { return enclosure(bits).second; }
  double to_double() const;

  // True when arithmetic between the two values stays exact (same field or
  // one side rational).
  bool same_field(const Scalar& o) const {
    return d_ == 0 || o.d_ == 0 || d_ == o.d_;
  }

  std::string str() const;

 private:
  void normalize();
  Integer joint_field(const Scalar& o) const;

  Rational a_, b_;
  Integer d_;
};

// A rational strictly between two distinct scalars (refines until separated).
Rational rational_strictly_between(const Scalar& lo, const Scalar& hi);

}  // namespace sqz

#endif
