#ifndef SQZ_CROSSED_HPP
#define SQZ_CROSSED_HPP

#include <string>
#include <vector>

#include "sqz/paradox.hpp"
#include "sqz/witness.hpp"

namespace sqz {

// Coefficient supports live either in the punctured plane (polygon unions)
// or on RP^1 (arc unions, standing for the cones over them).
enum class SupportKind { Planar, Conic };

class Support {
 public:
  Support() : kind_(SupportKind::Planar) {}
  static Support planar(RegionSet r);
  static Support conic(ArcSet a);

  SupportKind kind() const { return kind_; }
  const RegionSet& region() const { return region_; }
  const ArcSet& arcs() const { return arcs_; }

  bool is_empty() const;
  Support intersect(const Support& o) const;
  Support image(const Mat2& g) const;
  bool contained_in(const Support& o) const;
  // Difference witness: a (possibly empty) support inside *this but outside o.
  Support subtract(const Support& o) const;

 private:
  SupportKind kind_;
  RegionSet region_;
  ArcSet arcs_;
};

enum class CoeffTag { Bump, PartitionMember, Generic };

// Support-level stand-in for a continuous function: where it can be nonzero,
// where its modulus is pinned to 1, and how it was built. Partition members
// carry the id of the family whose members structurally sum to one.
struct Coefficient {
  Support support;
  Support plateau;
  CoeffTag tag = CoeffTag::Generic;
  int partition_id = -1;
};

struct Term {
  GroupElement g;
  Coefficient f;  // the element contributes f * u_g
};

struct FormalElement {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
  static FormalElement tensor(Coefficient f, GroupElement g);
  // u_t f as an element: the coefficient moves to the left of u_t.
  static FormalElement left_tensor(GroupElement t, Coefficient f);
};

FormalElement product(const FormalElement& A, const FormalElement& B);
FormalElement adjoint(const FormalElement& A);
// u_h * A without materializing an all-of-space coefficient for u_h.
FormalElement left_translate(const Mat2& h, const Word& hw, const FormalElement& A);

struct NilpotentProof {
  bool a_cubed_empty = false;
  bool b_cubed_empty = false;
  Support k_support;  // the bump's support K (enlarged crown hull)
};

struct NilpotentFactorization {
  FormalElement A;  // f u_gamma
  FormalElement B;  // u_gamma^-1 z
  NilpotentProof proof;
};

NilpotentFactorization nilpotent_factorization(const FormalElement& z,
                                               const SqueezeCertificate& cert);

struct ScalingCheck {
  bool is_scaling = false;
  bool absorbs = false;        // t support(f) inside plateau(f)
  bool strictly_shrinks = false;  // t support(f) strictly inside support(f)
  Support witness;             // part of support(f) missed by t support(f)
};

// x must be the elementary tensor u_t f; f is recovered from the stored term.
ScalingCheck scaling_check(const FormalElement& x);

struct IsometryProof {
  bool x_star_x_is_one = false;  // structural sum-to-one after pruning
  bool y_star_y_is_one = false;
  bool x_star_y_zero = false;    // every cross term prunes to empty support
  ArcSet complement_witness;     // open arc missing every image t_i U_i
};

struct IsometryPair {
  FormalElement x, y;
  IsometryProof proof;
};

IsometryPair isometry_pair(const ParadoxFamily& fam);

}  // namespace sqz

#endif
