#ifndef SQZ_ORACLE_HPP
#define SQZ_ORACLE_HPP

#include <functional>
#include <vector>

#include "sqz/crossed.hpp"

namespace sqz {

struct GridSpec {
  long density = 100;  // samples per dimension
  unsigned long seed = 0;
};

// Counter-based deterministic jitter in [0,1) with a small fixed denominator.
Rational jitter_unit(unsigned long seed, unsigned long counter);

// Sampling domain: an exact crown or a polygonal region set.
class Domain {
 public:
  static Domain crown(Crown c);
  static Domain region(RegionSet r);

  bool is_crown() const { return is_crown_; }
  bool contains(const Point2& z) const;
  // Exact rational points inside the domain, deterministic per GridSpec.
  std::vector<Point2> samples(const GridSpec& grid) const;

 private:
  bool is_crown_ = false;
  Crown crown_{Mat2::identity(), Rational(1), Rational(4)};
  RegionSet region_;
};

struct FalsifyReport {
  long density = 0;
  unsigned long seed = 0;
  long samples_checked = 0;
  // Sample points of base lying in every map-translated copy of base.
  std::vector<Point2> counterexamples;
  bool none_found() const { return counterexamples.empty(); }
};

// Flags base points y with m^-1 y in base for every listed map m. The two
// variants must agree; the serial one is the reference implementation.
FalsifyReport falsify_empty_serial(const std::vector<Mat2>& maps, const Domain& base,
                                   const GridSpec& grid);
FalsifyReport falsify_empty(const std::vector<Mat2>& maps, const Domain& base,
                            const GridSpec& grid);

// Smallest n <= cap whose triple intersections have no sampled point for any
// pair of the symmetrized subset. Report-only; never part of a certificate.
long brute_min_power(const FiniteSubset& F, const Crown& C, const Mat2& base_h,
                     const GridSpec& grid, long cap);

// Deterministic bump realization: exactly 1 on the plateau, exactly 0 off
// the support, a ramp in between. Conic coefficients read the direction.
double coeff_value(const Coefficient& f, const Point2& z);

struct NumericElement {
  struct NTerm {
    Mat2 g;
    std::function<double(const Point2&)> f;
  };
  std::vector<NTerm> terms;
};

NumericElement realize(const FormalElement& E);
NumericElement nproduct(const NumericElement& A, const NumericElement& B);
NumericElement nadjoint(const NumericElement& A);
// Largest |coefficient value| over all terms at z.
double max_term_value(const NumericElement& E, const Point2& z);

// Exact rational sample points in the cone over an arc, out to the given
// radius. Cones are unbounded, so the truncation radius is mandatory.
std::vector<Point2> sample_cone(const Arc& arc, const GridSpec& grid,
                                const Rational& radius);

}  // namespace sqz

#endif
