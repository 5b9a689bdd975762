#include "sqz/crossed.hpp"

#include <algorithm>

namespace sqz {

Support Support::planar(RegionSet r) {
  Support s;
  s.kind_ = SupportKind::Planar;
  s.region_ = std::move(r);
  return s;
}

Support Support::conic(ArcSet a) {
  Support s;
  s.kind_ = SupportKind::Conic;
  s.arcs_ = std::move(a);
  return s;
}

namespace {

void require_same_kind(const Support& a, const Support& b) {
  if (a.kind() != b.kind())
    throw Error(ErrorCode::BadInput, "mixed planar/conic support arithmetic");
}

}  // namespace

bool Support::is_empty() const {
  return kind_ == SupportKind::Planar ? region_.is_empty() : arcs_.empty();
}

Support Support::intersect(const Support& o) const {
  require_same_kind(*this, o);
  if (kind_ == SupportKind::Planar) return planar(region_.intersect(o.region_));
  return conic(arcset_intersect(arcs_, o.arcs_));
}

Support Support::image(const Mat2& g) const {
  if (kind_ == SupportKind::Planar) return planar(region_.image(g));
  return conic(arcset_image(arcs_, g));
}

Support Support::subtract(const Support& o) const {
  require_same_kind(*this, o);
  if (kind_ == SupportKind::Planar) return planar(region_.subtract(o.region_));
  return conic(arcset_minus(arcs_, o.arcs_));
}

bool Support::contained_in(const Support& o) const { return subtract(o).is_empty(); }

namespace {

Support support_union(const Support& a, const Support& b) {
  require_same_kind(a, b);
  if (a.kind() == SupportKind::Planar)
    return Support::planar(a.region().unite(b.region()));
  ArcSet arcs = a.arcs();
  for (const Arc& x : b.arcs()) arcs.push_back(x);
  return Support::conic(arcs);
}

Support empty_like(const Support& a) {
  return a.kind() == SupportKind::Planar ? Support::planar(RegionSet())
                                         : Support::conic(ArcSet());
}

}  // namespace

FormalElement FormalElement::tensor(Coefficient f, GroupElement g) {
  FormalElement e;
  if (!f.support.is_empty()) e.terms.push_back(Term{std::move(g), std::move(f)});
  return e;
}

FormalElement FormalElement::left_tensor(GroupElement t, Coefficient f) {
  // u_t f = (f o t^-1) u_t.
  Coefficient moved = f;
  moved.support = f.support.image(t.matrix);
  moved.plateau = f.plateau.image(t.matrix);
  return tensor(std::move(moved), std::move(t));
}

namespace {

void merge_term(FormalElement& out, Term&& t) {
  if (t.f.support.is_empty()) return;
  for (Term& have : out.terms) {
    if (have.g.matrix.equals(t.g.matrix)) {
      // Coefficients add: the support can only grow, but a sum of bumps has
      // no guaranteed plateau or partition structure.
      have.f.support = support_union(have.f.support, t.f.support);
      have.f.plateau = empty_like(have.f.plateau);
      have.f.tag = CoeffTag::Generic;
      have.f.partition_id = -1;
      return;
    }
  }
  out.terms.push_back(std::move(t));
}

}  // namespace

FormalElement product(const FormalElement& A, const FormalElement& B) {
  FormalElement out;
  for (const Term& ta : A.terms) {
    for (const Term& tb : B.terms) {
      Term t{GroupElement{word_concat(ta.g.word, tb.g.word),
                          ta.g.matrix * tb.g.matrix},
             Coefficient{}};
      // (f u_g)(f' u_h) = f (f' o g^-1) u_{gh}.
      t.f.support = ta.f.support.intersect(tb.f.support.image(ta.g.matrix));
      t.f.plateau = ta.f.plateau.intersect(tb.f.plateau.image(ta.g.matrix));
      merge_term(out, std::move(t));
    }
  }
  return out;
}

FormalElement adjoint(const FormalElement& A) {
  FormalElement out;
  for (const Term& t : A.terms) {
    Mat2 ginv = t.g.matrix.inverse();
    Term adj{GroupElement{word_inverse(t.g.word), ginv}, Coefficient{}};
    // (f u_g)^* = (conj f o g) u_{g^-1}.
    adj.f.support = t.f.support.image(ginv);
    adj.f.plateau = t.f.plateau.image(ginv);
    merge_term(out, std::move(adj));
  }
  return out;
}

FormalElement left_translate(const Mat2& h, const Word& hw, const FormalElement& A) {
  FormalElement out;
  for (const Term& t : A.terms) {
    Term moved{GroupElement{word_concat(hw, t.g.word), h * t.g.matrix},
               Coefficient{}};
    // u_h (f u_g) = (f o h^-1) u_{hg}.
    moved.f.support = t.f.support.image(h);
    moved.f.plateau = t.f.plateau.image(h);
    merge_term(out, std::move(moved));
  }
  return out;
}

NilpotentFactorization nilpotent_factorization(const FormalElement& z,
                                               const SqueezeCertificate& cert) {
  RegionSet hull = cert.hull();
  Support hull_support = Support::planar(hull);
  for (const Term& t : z.terms) {
    if (t.f.support.kind() != SupportKind::Planar)
      throw Error(ErrorCode::BadInput, "nilpotent factorization needs planar supports");
    bool known = false;
    for (const auto& e : cert.subset) {
      if (e.matrix.equals(t.g.matrix)) known = true;
    }
    if (!known)
      throw Error(ErrorCode::CertificateMismatch,
                  "word " + word_str(t.g.word) + " is not covered by the certificate");
    if (!t.f.support.contained_in(hull_support))
      throw Error(ErrorCode::SupportNotCovered,
                  "support of the " + word_str(t.g.word) +
                      " term leaves the certified crown hull");
  }

  // Bump support K: the hull of a slightly larger crown, so that K is a
  // neighborhood of the plateau C. Containment is checked exactly.
  Support k_support = hull_support;
  bool enclosed = false;
  for (const auto& [num1, den1, num2, den2] :
       {std::tuple<long, long, long, long>{4, 5, 5, 4},
        std::tuple<long, long, long, long>{2, 3, 3, 2}}) {
    Crown bigger{cert.frame_u, cert.r1_sq * Rational(num1, den1),
                 cert.r2_sq * Rational(num2, den2)};
    bigger.r1_sq.canonicalize();
    bigger.r2_sq.canonicalize();
    Support k = Support::planar(crown_hull(bigger, cert.hull_sides));
    if (hull_support.contained_in(k)) {
      k_support = k;
      enclosed = true;
      break;
    }
  }
  if (!enclosed)
    throw Error(ErrorCode::HullCheckFailed,
                "no enlarged crown hull encloses the certified hull");

  Coefficient f;
  f.support = k_support;
  f.plateau = hull_support;
  f.tag = CoeffTag::Bump;

  Word gamma_word{{"gamma", 1}};
  NilpotentFactorization out;
  out.A = FormalElement::tensor(f, GroupElement{gamma_word, cert.gamma});
  out.B = left_translate(cert.gamma.inverse(), word_inverse(gamma_word), z);
  out.proof.k_support = k_support;
  out.proof.a_cubed_empty = product(product(out.A, out.A), out.A).is_zero();
  out.proof.b_cubed_empty = product(product(out.B, out.B), out.B).is_zero();
  return out;
}

ScalingCheck scaling_check(const FormalElement& x) {
  if (x.terms.size() != 1)
    throw Error(ErrorCode::NotElementaryTensor,
                "scaling check needs a single-term element");
  const Term& t = x.terms[0];
  // x = h u_t = u_t f with f = h o t, so supp f = t^-1 supp h and the
  // conditions on f translate into conditions on the stored coefficient h.
  Mat2 tinv = t.g.matrix.inverse();
  Support supp_f = t.f.support.image(tinv);
  Support plat_f = t.f.plateau.image(tinv);
  Support t_supp_f = t.f.support;  // t supp f = supp h

  ScalingCheck out;
  out.absorbs = t_supp_f.contained_in(plat_f);
  out.witness = supp_f.subtract(t_supp_f);
  out.strictly_shrinks = t_supp_f.contained_in(supp_f) && !out.witness.is_empty();
  out.is_scaling = out.absorbs && out.strictly_shrinks;
  return out;
}

namespace {

// A small open arc around p avoiding every arc in `avoid`.
Arc arc_avoiding(const ProjPoint& p, const ArcSet& avoid) {
  Rational slope = p.is_infinity() ? Rational(0) : p.slope().lower_bound(64);
  for (int k = 0; k < 64; ++k) {
    Rational eps = Rational(1, Integer(1) << k);
    Arc cand = p.is_infinity()
                   ? Arc(ProjPoint::from_slope(1 / eps), ProjPoint::from_slope(-1 / eps),
                         ProjPoint::infinity_point())
                   : Arc::slope_interval(slope - eps, slope + eps);
    if (!cand.contains(p)) continue;
    bool clear = true;
    for (const Arc& a : avoid) {
      if (cand.overlaps(a)) {
        clear = false;
        break;
      }
    }
    if (clear) return cand;
  }
  throw Error(ErrorCode::IndeterminateAtPrecisionCap,
              "no clear arc around " + p.str());
}

}  // namespace

IsometryPair isometry_pair(const ParadoxFamily& fam) {
  ParadoxCertificate cert = verify_paradoxical_family(fam);
  if (!cert.verified)
    throw Error(ErrorCode::FamilyNotVerified, "paradox family fails: " + cert.failure);

  auto build = [&fam](long lo, long hi, int pid) {
    FormalElement e;
    for (long i = lo; i < hi; ++i) {
      Coefficient phi;
      phi.support = Support::conic({fam.items[i].U});
      phi.plateau = Support::conic(ArcSet());
      phi.tag = CoeffTag::PartitionMember;
      phi.partition_id = pid;
      Word w{{"t" + std::to_string(i), 1}};
      FormalElement term = FormalElement::left_tensor(
          GroupElement{w, fam.items[i].t}, phi);
      for (Term& t : term.terms) e.terms.push_back(std::move(t));
    }
    if (e.terms.size() != static_cast<size_t>(hi - lo))
      throw Error(ErrorCode::BadInput, "coinciding translation elements in family");
    return e;
  };

  IsometryPair out;
  out.x = build(0, fam.n, 1);
  out.y = build(fam.n, fam.n + fam.m, 2);

  // x*x: off-diagonal supports are t_i^-1 (t_i U_i ∩ t_j U_j), empty by image
  // disjointness; the surviving diagonal is Σ φ_i = 1 structurally, because
  // the φ_i form a partition family over a verified cover.
  auto structural_one = [](const FormalElement& v, const FormalElement& vv,
                           int pid, bool cover) {
    for (const Term& t : vv.terms) {
      if (!t.g.matrix.is_identity()) return false;
    }
    for (const Term& t : v.terms) {
      if (t.f.tag != CoeffTag::PartitionMember || t.f.partition_id != pid)
        return false;
    }
    return cover;
  };
  out.proof.x_star_x_is_one =
      structural_one(out.x, product(adjoint(out.x), out.x), 1, cert.cover_first);
  out.proof.y_star_y_is_one =
      structural_one(out.y, product(adjoint(out.y), out.y), 2, cert.cover_second);
  out.proof.x_star_y_zero = product(adjoint(out.x), out.y).is_zero();

  // xx* != 1: an open arc outside every image t_i U_i, where xx* vanishes.
  ArcSet images;
  for (const auto& it : fam.items) images.push_back(it.U.image(it.t));
  out.proof.complement_witness = {arc_avoiding(*cert.complement_point, images)};
  return out;
}

}  // namespace sqz
