#include "sqz/witness.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace sqz {

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word out = a;
  for (const auto& l : b) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  for (const auto& l : w) {
    os << l.gen;
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

Mat2 word_eval(const Word& w, const std::map<std::string, Mat2>& gens) {
  Mat2 m;
  for (const auto& l : w) {
    auto it = gens.find(l.gen);
    if (it == gens.end())
      throw Error(ErrorCode::BadInput, "unknown generator '" + l.gen + "'");
    m = m * it->second.pow(l.exp);
  }
  return m;
}

FiniteSubset FiniteSubset::from_words(const std::vector<Word>& words,
                                      const std::map<std::string, Mat2>& gens) {
  std::vector<GroupElement> els;
  els.reserve(words.size());
  for (const Word& w : words) els.push_back({w, word_eval(w, gens)});
  return FiniteSubset(std::move(els));
}

bool FiniteSubset::contains_matrix(const Mat2& g) const {
  for (const auto& e : elements_) {
    if (e.matrix.equals(g)) return true;
  }
  return false;
}

FiniteSubset FiniteSubset::symmetrized() const {
  std::vector<GroupElement> out;
  out.push_back({Word{}, Mat2::identity()});
  auto add = [&out](const GroupElement& e) {
    for (const auto& have : out) {
      if (have.matrix.equals(e.matrix)) return;
    }
    out.push_back(e);
  };
  for (const auto& e : elements_) {
    add(e);
    add({word_inverse(e.word), e.matrix.inverse()});
  }
  return FiniteSubset(std::move(out));
}

TransverseResult find_transverse_hyperbolic(const FiniteSubset& F, const Mat2& eta,
                                            const Mat2& delta, long n_cap) {
  if (!is_hyperbolic(eta) || !is_hyperbolic(delta))
    throw Error(ErrorCode::NonHyperbolic, "transverse search needs hyperbolic eta, delta");
  bool degenerate = eta.equals(delta) || eta.equals(delta.inverse());
  if (!degenerate && same_axis(eta, delta))
    throw Error(ErrorCode::SameAxis, "eta and delta share an axis");

  long limit = degenerate ? 0 : n_cap;
  for (long n = 0; n <= limit; ++n) {
    Mat2 en = eta.pow(n);
    Mat2 gamma = en * delta * en.inverse();
    FixedPair fp = fixed_points(gamma);
    Rational sep(-1);
    bool ok = true;
    for (const auto& e : F.elements()) {
      ProjPoint moved = act_proj(e.matrix, fp.attracting);
      if (moved == fp.repelling) {
        ok = false;
        break;
      }
      Rational d = proj_dist_sq_lower(moved, fp.repelling);
      if (sgn(sep) < 0 || d < sep) sep = d;
    }
    if (ok) {
      if (sgn(sep) < 0) sep = 1;  // F empty
      return TransverseResult{gamma, n, sep};
    }
  }
  throw Error(ErrorCode::CapExceeded,
              "no transverse conjugate up to n = " + std::to_string(n_cap) +
                  " (an element of F may fix the axis of eta)");
}

namespace {

// Certified positive rational lower bound of a positive scalar.
Rational scalar_lower_pos(const Scalar& s) {
  const Precision& prec = default_precision();
  for (int bits = prec.start_bits; bits <= prec.max_bits; bits *= 2) {
    Rational lb = s.lower_bound(bits);
    if (sgn(lb) > 0) return lb;
  }
  throw Error(ErrorCode::IndeterminateAtPrecisionCap,
              "positive lower bound for " + s.str());
}

Rational scalar_upper(const Scalar& s) {
  return s.upper_bound(default_precision().start_bits);
}

}  // namespace

SqueezeConstant squeeze_constant(const std::vector<Mat2>& conjugated,
                                 const Rational& r1_sq, const Rational& r2_sq) {
  if (conjugated.empty())
    throw Error(ErrorCode::BadInput, "empty conjugated subset");
  (void)r1_sq;
  Rational min_corner_sq(-1);
  for (const Mat2& gp : conjugated) {
    if (gp.a().is_zero())
      throw Error(ErrorCode::VanishingCorner,
                  "(u g' u^-1)_{1,1} = 0 for " + gp.str() +
                      ", contradicting transversality");
    Rational c = scalar_lower_pos(gp.a() * gp.a());
    if (sgn(min_corner_sq) < 0 || c < min_corner_sq) min_corner_sq = c;
  }
  // Per pair (g, g'): sup over the crown of
  //   |(g'_u)_{1,2}|^2 L2^2 / |(g'_u)_{1,1}|^2 + L2^2
  // with L2(x,y) = (g_u)_{2,1} x + (g_u)_{2,2} y, whose sup of L2^2 over
  // |z| <= r2 is exactly r2^2 ((g_u)_{2,1}^2 + (g_u)_{2,2}^2).
  Rational M(0);
  for (const Mat2& gp : conjugated) {
    Scalar corner_sq = gp.a() * gp.a();
    Scalar b_sq = gp.b() * gp.b();
    for (const Mat2& g : conjugated) {
      Scalar row_sq = g.c() * g.c() + g.d() * g.d();
      Scalar sup_l2_sq = Scalar(r2_sq) * row_sq;
      Scalar bound = b_sq * sup_l2_sq / corner_sq + sup_l2_sq;
      Rational ub = scalar_upper(bound);
      if (ub > M) M = ub;
    }
  }
  return SqueezeConstant{M, min_corner_sq};
}

SqueezePower min_squeeze_power(const Rational& lambda_sq_lower, const Rational& M,
                               const Rational& min_corner_sq, const Rational& r1_sq,
                               const Rational& r2_sq) {
  if (lambda_sq_lower <= 1)
    throw Error(ErrorCode::BadInput, "lambda_sq must exceed 1");
  // (r2 + sqrt(M))^2 = r2^2 + 2 sqrt(r2^2 M) + M, rounded outward; the
  // corner divisor is clamped to <= 1 so the bound stays valid for corner
  // entries larger than one.
  Rational cross = sgn(M) == 0 ? Rational(0) : sqrt_upper(r2_sq * M, 128);
  Rational corner = std::min(min_corner_sq, Rational(1));
  Rational threshold = (r2_sq + 2 * cross + M) / corner + M;
  Rational lhs = r1_sq;
  for (long n = 1;; ++n) {
    lhs *= lambda_sq_lower;
    if (lhs > threshold) {
      Rational margin = lhs - threshold;
      margin.canonicalize();
      return SqueezePower{n, margin};
    }
  }
}

namespace {

// Scans short words in the generators for a transverse pair of hyperbolics,
// falling back to a single hyperbolic generator (cyclic case). Heuristic
// input selection only; every produced base is certified downstream.
std::pair<Mat2, Mat2> scan_for_pair(const std::map<std::string, Mat2>& gens) {
  std::vector<Mat2> words;
  std::vector<Mat2> frontier = {Mat2::identity()};
  for (int len = 1; len <= 4; ++len) {
    std::vector<Mat2> next;
    for (const Mat2& w : frontier) {
      for (const auto& [name, g] : gens) {
        next.push_back(w * g);
        next.push_back(w * g.inverse());
      }
    }
    for (const Mat2& w : next) words.push_back(w);
    frontier = std::move(next);
  }
  std::vector<Mat2> hyper;
  for (const Mat2& w : words) {
    if (is_hyperbolic(w)) hyper.push_back(w);
  }
  if (hyper.empty())
    throw Error(ErrorCode::NonHyperbolic, "no hyperbolic word of length <= 4");
  for (size_t i = 0; i < hyper.size(); ++i) {
    for (size_t j = i + 1; j < hyper.size(); ++j) {
      if (!same_axis(hyper[i], hyper[j])) return {hyper[i], hyper[j]};
    }
  }
  return {hyper[0], hyper[0]};  // single axis: cyclic-type group
}

bool triple_empty(const RegionSet& hull, const Mat2& gamma, const Mat2& g,
                  const Mat2& h) {
  RegionSet a = hull.image(gamma * g * gamma * h);
  RegionSet b = hull.image(gamma * g);
  return a.intersect(b).intersect(hull).is_empty();
}

}  // namespace

SqueezeCertificate squeeze_witness(const FiniteSubset& F, const Crown& C,
                                   const SqueezeParams& params) {
  if (C.r1_sq >= C.r2_sq || sgn(C.r1_sq) <= 0)
    throw Error(ErrorCode::DegenerateCrown, "need 0 < r1_sq < r2_sq");
  FiniteSubset S = F.symmetrized();

  Mat2 eta, delta;
  if (params.has_eta_delta) {
    eta = params.eta;
    delta = params.delta;
  } else if (!params.generators.empty()) {
    std::tie(eta, delta) = scan_for_pair(params.generators);
  } else {
    throw Error(ErrorCode::BadInput, "need eta/delta or a generator list");
  }

  TransverseResult base = find_transverse_hyperbolic(S, eta, delta, params.transverse_cap);
  Diagonalization diag = diagonalize(base.gamma);

  std::vector<Mat2> conj;
  conj.reserve(S.elements().size());
  Mat2 uinv = diag.u.inverse();
  for (const auto& e : S.elements()) conj.push_back(diag.u * e.matrix * uinv);

  SqueezeConstant sc = squeeze_constant(conj, C.r1_sq, C.r2_sq);
  Rational lambda_sq_lower = scalar_lower_pos(diag.lambda * diag.lambda);
  if (lambda_sq_lower <= 1)
    throw Error(ErrorCode::IndeterminateAtPrecisionCap, "lambda^2 bound not above 1");
  SqueezePower sp =
      min_squeeze_power(lambda_sq_lower, sc.M, sc.min_corner_sq, C.r1_sq, C.r2_sq);

  // The analytic n certifies emptiness on the exact crown; the polygonal
  // hull over-approximates it, so confirm on the hull and raise n or the
  // hull resolution if the slack bites.
  Crown framed{diag.u, C.r1_sq, C.r2_sq};
  for (int sides = params.hull_sides; sides <= params.max_hull_sides; sides *= 2) {
    RegionSet hull = crown_hull(framed, sides);
    for (long extra = 0; extra <= params.extra_power_tries; ++extra) {
      long n = sp.n + extra;
      Mat2 gamma = base.gamma.pow(n);
      std::vector<PairEmptiness> checks;
      const auto& els = S.elements();
      size_t count = els.size();
      checks.resize(count * count);
      std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
      for (size_t idx = 0; idx < count * count; ++idx) {
        size_t i = idx / count, j = idx % count;
        bool empty = false;
        try {
          empty = triple_empty(hull, gamma, els[i].matrix, els[j].matrix);
        } catch (...) {
#pragma omp critical
          if (!first_error) first_error = std::current_exception();
        }
        checks[idx] = PairEmptiness{i, j, empty};
      }
      if (first_error) std::rethrow_exception(first_error);
      bool all_empty =
          std::all_of(checks.begin(), checks.end(),
                      [](const PairEmptiness& pc) { return pc.empty; });
      if (!all_empty) continue;

      SqueezeCertificate cert;
      cert.base_h = base.gamma;
      cert.conj_n = base.n;
      cert.gamma = gamma;
      cert.n = n;
      cert.lambda_sq_lower = lambda_sq_lower;
      cert.M = sc.M;
      cert.min_corner_sq = sc.min_corner_sq;
      // Margin for the n actually used: lambda^{2n} r1^2 - threshold.
      Rational lhs = C.r1_sq;
      for (long k = 0; k < n; ++k) lhs *= lambda_sq_lower;
      Rational base_lhs = C.r1_sq;
      for (long k = 0; k < sp.n; ++k) base_lhs *= lambda_sq_lower;
      cert.margin = sp.margin + (lhs - base_lhs);
      cert.frame_u = diag.u;
      cert.r1_sq = C.r1_sq;
      cert.r2_sq = C.r2_sq;
      cert.hull_sides = sides;
      cert.subset = S.elements();
      cert.pair_checks = std::move(checks);
      return cert;
    }
  }
  throw Error(ErrorCode::HullCheckFailed,
              "polygonal triple checks keep failing after raising n and the "
              "hull resolution");
}

bool reverify_squeeze(const SqueezeCertificate& cert, std::string* reason) {
  auto fail = [&reason](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (sgn(cert.margin) <= 0) return fail("margin not positive");
  if (!cert.base_h.pow(cert.n).equals(cert.gamma)) return fail("gamma != base^n");
  RegionSet hull = cert.hull();
  size_t count = cert.subset.size();
  if (cert.pair_checks.size() != count * count) return fail("pair check table size");
  for (const auto& pc : cert.pair_checks) {
    if (!pc.empty) return fail("certificate records a non-empty pair");
    bool empty = triple_empty(hull, cert.gamma, cert.subset[pc.g_index].matrix,
                              cert.subset[pc.h_index].matrix);
    if (!empty)
      return fail("triple intersection not empty for pair (" +
                  std::to_string(pc.g_index) + "," + std::to_string(pc.h_index) + ")");
  }
  return true;
}

}  // namespace sqz
