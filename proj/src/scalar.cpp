#include "sqz/scalar.hpp"

#include <cmath>
#include <sstream>

namespace sqz {

Precision& default_precision() {
  static Precision prec;
  return prec;
}

std::pair<Rational, Rational> sqrt_enclosure(const Rational& q, int bits) {
  if (sgn(q) < 0) throw Error(ErrorCode::BadInput, "sqrt of negative rational");
  if (sgn(q) == 0) return {Rational(0), Rational(0)};
  // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits and take integer sqrt.
  Integer n = q.get_num() * q.get_den();
  Integer scaled = n << (2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Integer den = q.get_den() << bits;
  Rational lo(root, den);
  Rational hi = (root * root == scaled) ? lo : Rational(root + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

Rational sqrt_lower(const Rational& q, int bits) { return sqrt_enclosure(q, bits).first; }
Rational sqrt_upper(const Rational& q, int bits) { return sqrt_enclosure(q, bits).second; }

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorCode::BadInput, "malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw Error(ErrorCode::BadInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

// Splits n = f^2 * s with s squarefree; returns s and stores f.
// Trial division; radicands here come from traces of desk-scale matrices.
Integer squarefree_part(Integer n, Integer& f) {
  f = 1;
  Integer s = 1;
  Integer p = 2;
  while (p * p <= n && p < 100000) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      int e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) f *= p;
      if (e % 2) s *= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  // Remaining cofactor: either a perfect square, p * square, or squarefree
  // with respect to the primes we care about; check the square case.
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    f *= r;
  } else {
    s *= n;
  }
  return s;
}

}  // namespace

Scalar Scalar::quadratic(const Rational& a, const Rational& b, const Rational& rad) {
  if (sgn(rad) < 0) throw Error(ErrorCode::BadInput, "negative radicand");
  Scalar s;
  s.a_ = a;
  if (sgn(b) == 0 || sgn(rad) == 0) {
    s.b_ = 0;
    s.d_ = 0;
    return s;
  }
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = rad.get_num() * rad.get_den();
  Integer f;
  Integer sf = squarefree_part(pq, f);
  if (sf == 1) {
    s.b_ = 0;
    s.d_ = 0;
    s.a_ = a + b * Rational(f, rad.get_den());
    s.a_.canonicalize();
    return s;
  }
  s.d_ = sf;
  s.b_ = b * Rational(f, rad.get_den());
  s.b_.canonicalize();
  return s;
}

Scalar Scalar::sqrt_of(const Rational& q) { return quadratic(0, 1, q); }

const Rational& Scalar::as_rational() const {
  if (d_ != 0) throw Error(ErrorCode::FieldMismatch, "value is not rational");
  return a_;
}

void Scalar::normalize() {
  if (d_ != 0 && sgn(b_) == 0) d_ = 0;
}

Integer Scalar::joint_field(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(ErrorCode::FieldMismatch,
              "arithmetic across Q(sqrt(" + d_.get_str() + ")) and Q(sqrt(" +
                  o.d_.get_str() + "))");
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.d_ = joint_field(o);
  r.a_ = a_ + o.a_;
  r.b_ = b_ + o.b_;
  r.normalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.d_ = joint_field(o);
  Rational d(r.d_);
  r.a_ = a_ * o.a_ + b_ * o.b_ * d;
  r.b_ = a_ * o.b_ + b_ * o.a_;
  r.normalize();
  return r;
}

Scalar Scalar::conjugate() const {
  Scalar r(*this);
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::BadInput, "division by zero");
  if (d_ == 0) {
    Scalar r;
    r.a_ = 1 / a_;
    return r;
  }
  // 1/(a+b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
  Scalar r;
  r.d_ = d_;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.normalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

int Scalar::sign() const {
  if (d_ == 0 || sgn(b_) == 0) return sgn(a_);
  if (sgn(a_) == 0) return sgn(b_);
  if (sgn(a_) == sgn(b_)) return sgn(a_);
  // Opposite signs: sign decided by |a| vs |b| sqrt(d).
  int c = cmp(a_ * a_, b_ * b_ * Rational(d_));
  if (c == 0) return 0;
  return sgn(a_) > 0 ? c : -c;
}

Scalar Scalar::abs() const { return sign() >= 0 ? *this : -*this; }

bool Scalar::equals(const Scalar& o) const {
  if (same_field(o)) return (*this - o).is_zero();
  // Distinct squarefree discriminants with nonzero quadratic parts on both
  // sides can never be equal.
  return false;
}

int Scalar::compare(const Scalar& o) const { return compare(o, default_precision()); }

int Scalar::compare(const Scalar& o, const Precision& prec) const {
  if (same_field(o)) return (*this - o).sign();
  for (int bits = prec.start_bits; bits <= prec.max_bits; bits *= 2) {
    auto [alo, ahi] = enclosure(bits);
    auto [blo, bhi] = o.enclosure(bits);
    if (ahi < blo) return -1;
    if (bhi < alo) return 1;
  }
  throw Error(ErrorCode::IndeterminateAtPrecisionCap,
              "cannot separate " + str() + " and " + o.str());
}

std::pair<Rational, Rational> Scalar::enclosure(int bits) const {
  if (d_ == 0) return {a_, a_};
  auto [slo, shi] = sqrt_enclosure(Rational(d_), bits);
  if (sgn(b_) >= 0) return {a_ + b_ * slo, a_ + b_ * shi};
  return {a_ + b_ * shi, a_ + b_ * slo};
}

double Scalar::to_double() const {
  if (d_ == 0) return a_.get_d();
  return a_.get_d() + b_.get_d() * std::sqrt(Rational(d_).get_d());
}

std::string Scalar::str() const {
  if (d_ == 0) return a_.get_str();
  std::ostringstream os;
  os << a_.get_str() << (sgn(b_) >= 0 ? "+" : "") << b_.get_str() << "*sqrt("
     << d_.get_str() << ")";
  return os.str();
}

Rational rational_strictly_between(const Scalar& lo, const Scalar& hi) {
  const Precision& prec = default_precision();
  for (int bits = prec.start_bits; bits <= prec.max_bits; bits *= 2) {
    Rational a = lo.upper_bound(bits);
    Rational b = hi.lower_bound(bits);
    if (a < b) {
      Rational mid = (a + b) / 2;
      mid.canonicalize();
      return mid;
    }
  }
  throw Error(ErrorCode::IndeterminateAtPrecisionCap,
              "no rational found between " + lo.str() + " and " + hi.str());
}

}  // namespace sqz
