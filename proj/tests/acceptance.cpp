// Acceptance gate: nine end-to-end criteria, one pass/fail line each.
// Tolerances are pinned here: convergence 1e-6 within 200 steps, oracle grid
// 100^2 (seed 0), numeric zero threshold 1e-12, scaling margin >= 0.5, and
// the per-criterion wall-clock budgets printed with each line.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "sqz/json_io.hpp"
#include "sqz/oracle.hpp"

using namespace sqz;
using Clock = std::chrono::steady_clock;

namespace {

Mat2 rat_mat(long a_n, long a_d, long b_n, long b_d, long c_n, long c_d, long d_n,
             long d_d) {
  return Mat2(Scalar(Rational(a_n, a_d)), Scalar(Rational(b_n, b_d)),
              Scalar(Rational(c_n, c_d)), Scalar(Rational(d_n, d_d)));
}

const Mat2 kA = rat_mat(2, 1, 0, 1, 0, 1, 1, 2);          // diag(2, 1/2)
const Mat2 kB = rat_mat(5, 3, 4, 3, 4, 3, 5, 3);          // trace 10/3
const Mat2 kParabolic = rat_mat(1, 1, 1, 1, 0, 1, 1, 1);  // [[1,1],[0,1]]
const Mat2 kElliptic = rat_mat(0, 1, -1, 1, 1, 1, 0, 1);  // [[0,-1],[1,0]]

int failures = 0;

void criterion(int number, const char* name, double budget_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (secs > budget_s) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)%s%s\n",
              ok ? "PASS" : "FAIL", number, name, secs, budget_s,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

// Random small rational in [-3, 3] with denominator 1..6.
Rational rand_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 6);
  return Rational(num(rng), den(rng));
}

// Random unimodular rational matrix as a product of shears.
Mat2 rand_unimodular(std::mt19937_64& rng) {
  Mat2 l1(Scalar(1), Scalar(rand_rat(rng)), Scalar(0), Scalar(1));
  Mat2 r1(Scalar(1), Scalar(0), Scalar(rand_rat(rng)), Scalar(1));
  Mat2 l2(Scalar(1), Scalar(rand_rat(rng)), Scalar(0), Scalar(1));
  return l1 * r1 * l2;
}

// Random rational hyperbolic matrix: conjugated rational diagonal.
Mat2 rand_hyperbolic(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(3, 9), den(1, 2);
  Rational lam(num(rng), den(rng));
  if (lam <= 1) lam += 1;
  Mat2 d = Mat2::diag(Scalar(lam));
  Mat2 u = rand_unimodular(rng);
  return u * d * u.inverse();
}

Crown unit_crown() { return Crown{Mat2::identity(), Rational(1), Rational(4)}; }

SqueezeCertificate cyclic_cert() {
  FiniteSubset F = FiniteSubset::from_words({Word{{"a", 1}}, Word{{"a", -1}}},
                                            {{"a", kA}});
  SqueezeParams params;
  params.has_eta_delta = true;
  params.eta = kA;
  params.delta = kA;
  return squeeze_witness(F, unit_crown(), params);
}

// Counts sampled points violating any pair's triple emptiness, sharing one
// sample set across all pairs.
long pair_violations(const SqueezeCertificate& cert, const GridSpec& grid) {
  Domain base = Domain::crown(Crown{cert.frame_u, cert.r1_sq, cert.r2_sq});
  std::vector<Point2> pts = base.samples(grid);
  long bad = 0;
  for (const GroupElement& g : cert.subset) {
    for (const GroupElement& h : cert.subset) {
      Mat2 m1 = (cert.gamma * g.matrix).inverse();
      Mat2 m2 = (cert.gamma * g.matrix * cert.gamma * h.matrix).inverse();
      for (const Point2& y : pts) {
        if (base.contains(apply(m1, y)) && base.contains(apply(m2, y))) ++bad;
      }
    }
  }
  return bad;
}

bool squeeze_case(const SqueezeCertificate& cert, const FiniteSubset& F,
                  const Crown& C, std::string& detail) {
  if (!(cert.margin > 0)) {
    detail = "margin not positive";
    return false;
  }
  for (const PairEmptiness& p : cert.pair_checks) {
    if (!p.empty) {
      detail = "a pair check is not empty";
      return false;
    }
  }
  std::string reason;
  if (!reverify_squeeze(cert, &reason)) {
    detail = "exact reverify failed: " + reason;
    return false;
  }
  if (pair_violations(cert, GridSpec{100, 0}) != 0) {
    detail = "oracle found a counterexample at grid 100^2";
    return false;
  }
  long n_min = brute_min_power(F, C, cert.base_h, GridSpec{40, 0}, cert.n);
  if (cert.n < n_min) {
    detail = "analytic n below the sampled floor";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "classification suite", 1.0, [](std::string& detail) {
    if (classify(kParabolic) != MoebiusClass::Parabolic ||
        classify(kA) != MoebiusClass::Hyperbolic ||
        classify(kElliptic) != MoebiusClass::Elliptic) {
      detail = "canonical matrix misclassified";
      return false;
    }
    std::mt19937_64 rng(11);
    const Mat2 canon[3] = {kParabolic, kA, kElliptic};
    const MoebiusClass want[3] = {MoebiusClass::Parabolic, MoebiusClass::Hyperbolic,
                                  MoebiusClass::Elliptic};
    for (int i = 0; i < 1000; ++i) {
      Mat2 u = rand_unimodular(rng);
      if (classify(u * canon[i % 3] * u.inverse()) != want[i % 3]) {
        detail = "conjugate changed class at trial " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  criterion(2, "fixed-point exactness and convergence", 5.0, [](std::string& detail) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
      Mat2 g = rand_hyperbolic(rng);
      FixedPair fp = fixed_points(g);
      if (act_proj(g, fp.attracting) != fp.attracting ||
          act_proj(g, fp.repelling) != fp.repelling) {
        detail = "fixed point not exactly fixed at trial " + std::to_string(i);
        return false;
      }
      ProjPoint z = ProjPoint::from_slope(Rational(i + 1, 3));
      if (z == fp.repelling) z = ProjPoint::from_slope(Rational(i + 2, 5));
      bool converged = false;
      for (int step = 0; step < 200 && !converged; ++step) {
        z = act_proj(g, z);
        converged = proj_dist_sq(z, fp.attracting).to_double() < 1e-12;
      }
      if (!converged) {
        detail = "no 1e-6 convergence within 200 steps at trial " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  criterion(3, "squeezing end-to-end, cyclic case", 10.0, [](std::string& detail) {
    FiniteSubset F = FiniteSubset::from_words({Word{{"a", 1}}, Word{{"a", -1}}},
                                              {{"a", kA}});
    return squeeze_case(cyclic_cert(), F, unit_crown(), detail);
  });

  criterion(3, "squeezing end-to-end, two-generator case", 10.0,
            [](std::string& detail) {
    std::map<std::string, Mat2> gens{{"a", kA}, {"b", kB}};
    std::vector<Word> words = {Word{{"a", 1}}, Word{{"b", 1}},
                               Word{{"a", 1}, {"b", 1}}, Word{{"b", 1}, {"a", 1}}};
    FiniteSubset F = FiniteSubset::from_words(words, gens);
    SqueezeParams params;
    params.generators = gens;
    SqueezeCertificate cert = squeeze_witness(F, unit_crown(), params);
    return squeeze_case(cert, F, unit_crown(), detail);
  });

  criterion(4, "transverse hyperbolic witness", 2.0, [](std::string& detail) {
    std::map<std::string, Mat2> gens{{"a", kA}, {"b", kB}};
    std::vector<Word> words = {
        Word{{"a", 1}}, Word{{"b", 1}}, Word{{"a", 1}, {"b", 1}},
        Word{{"b", 1}, {"a", 1}}, Word{{"a", 2}}, Word{{"b", 2}},
        Word{{"a", 1}, {"b", -1}}, Word{{"a", -1}, {"b", 1}}};
    FiniteSubset F = FiniteSubset::from_words(words, gens);
    TransverseResult tr = find_transverse_hyperbolic(F, kA, kB, 8);
    if (tr.n > 8) {
      detail = "needed more than 8 conjugations";
      return false;
    }
    if (!(tr.separation > 0)) {
      detail = "separation not positive";
      return false;
    }
    FixedPair fp = fixed_points(tr.gamma);
    FiniteSubset S = F.symmetrized();
    for (const GroupElement& g : S.elements()) {
      if (act_proj(g.matrix, fp.attracting) == fp.repelling) {
        detail = "g gamma+ hit gamma- for " + word_str(g.word);
        return false;
      }
    }
    return true;
  });

  criterion(5, "paradoxical family n=m=2", 2.0, [](std::string& detail) {
    ParadoxFamily fam = paradoxical_family(kA, kB, 2, 2);
    ParadoxCertificate cert = verify_paradoxical_family(fam);
    if (!cert.verified || !cert.cover_first || !cert.cover_second ||
        !cert.images_disjoint || !cert.union_proper || !cert.contractive) {
      detail = "family failed: " + cert.failure;
      return false;
    }
    if (!cert.complement_point) {
      detail = "no complement witness";
      return false;
    }
    // Halving U_1 must break the first cover with an explicit witness.
    ParadoxFamily broken = fam;
    const Arc& u1 = broken.items[0].U;
    ProjPoint mid = point_strictly_between(u1.p(), u1.q());
    ProjPoint w = point_strictly_between(u1.p(), mid);
    broken.items[0].U = Arc(u1.p(), mid, w);
    ParadoxCertificate bad = verify_paradoxical_family(broken);
    if (bad.verified || bad.cover_first || !bad.uncovered_point) {
      detail = "halved U_1 did not fail with an uncovered witness";
      return false;
    }
    for (long i = 0; i < broken.n; ++i) {
      if (broken.items[i].U.contains(*bad.uncovered_point)) {
        detail = "uncovered witness is actually covered";
        return false;
      }
    }
    return true;
  });

  criterion(6, "contractive pair and scaling element", 2.0, [](std::string& detail) {
    ContractivePair cp = contractive_pair(kA, Rational(1, 2));
    // The canonical pair: U = {|slope| < 1}, t = diag(2, 1/2).
    if (!cp.U.equals(Arc::slope_interval(Rational(-1), Rational(1))) ||
        !cp.t.equals(kA)) {
      detail = "canonical pair has unexpected shape";
      return false;
    }
    Coefficient f;
    f.support = Support::conic({cp.U});
    f.plateau = Support::conic({cp.U.image(cp.t)});
    f.tag = CoeffTag::Bump;
    FormalElement x =
        FormalElement::left_tensor(GroupElement{Word{{"t", 1}}, cp.t}, f);
    ScalingCheck sc = scaling_check(x);
    if (!sc.is_scaling || sc.witness.is_empty()) {
      detail = "region-level scaling check failed";
      return false;
    }
    NumericElement nx = realize(x);
    NumericElement xsx = nproduct(nadjoint(nx), nx);
    NumericElement xxs = nproduct(nx, nadjoint(nx));
    if (xsx.terms.size() != 1 || xxs.terms.size() != 1) {
      detail = "products did not merge to single terms";
      return false;
    }
    std::vector<Point2> pts = sample_cone(cp.U, GridSpec{100, 0}, Rational(4));
    if (pts.size() < 1000) {
      detail = "too few cone samples";
      return false;
    }
    for (const Point2& z : pts) {
      double a = xsx.terms[0].f(z);
      double b = xxs.terms[0].f(z);
      if (a * b != b) {
        detail = "x*x (xx*) != xx* at a sample";
        return false;
      }
    }
    const ProjPoint& w = sc.witness.arcs()[0].witness();
    Point2 zw{w.x(), w.y()};
    double margin = xsx.terms[0].f(zw) - xxs.terms[0].f(zw);
    if (margin < 0.5) {
      detail = "witness margin " + std::to_string(margin) + " below 0.5";
      return false;
    }
    return true;
  });

  criterion(7, "nilpotent factorization", 5.0, [](std::string& detail) {
    RegionSet supp = RegionSet::single(
        ConvexPolygon::rect(1, 2, Rational(-1, 2), Rational(1, 2)));
    Crown C = enclosing_crown(supp, Mat2::identity());
    FiniteSubset F = FiniteSubset::from_words({Word{{"a", 1}}}, {{"a", kA}});
    SqueezeParams params;
    params.has_eta_delta = true;
    params.eta = kA;
    params.delta = kA;
    SqueezeCertificate cert = squeeze_witness(F, C, params);

    Coefficient fz;
    fz.support = Support::planar(supp);
    fz.plateau = Support::planar(RegionSet());
    FormalElement z =
        FormalElement::tensor(fz, GroupElement{Word{{"a", 1}}, kA});
    NilpotentFactorization nf = nilpotent_factorization(z, cert);
    if (!nf.proof.a_cubed_empty || !nf.proof.b_cubed_empty) {
      detail = "a cube kept nonempty support";
      return false;
    }
    std::vector<Point2> pts =
        Domain::region(nf.proof.k_support.region()).samples(GridSpec{100, 0});
    for (const NumericElement& cube :
         {nproduct(nproduct(realize(nf.A), realize(nf.A)), realize(nf.A)),
          nproduct(nproduct(realize(nf.B), realize(nf.B)), realize(nf.B))}) {
      for (const Point2& p : pts) {
        if (max_term_value(cube, p) != 0.0) {
          detail = "numeric cube nonzero at a grid point";
          return false;
        }
      }
    }
    return true;
  });

  criterion(8, "isometry pair from the family", 5.0, [](std::string& detail) {
    ParadoxFamily fam = paradoxical_family(kA, kB, 2, 2);
    IsometryPair ip = isometry_pair(fam);
    if (!ip.proof.x_star_y_zero) {
      detail = "a cross term survived";
      return false;
    }
    if (!ip.proof.x_star_x_is_one || !ip.proof.y_star_y_is_one) {
      detail = "structural sum-to-one failed";
      return false;
    }
    if (ip.proof.complement_witness.empty()) {
      detail = "no xx* != 1 witness region";
      return false;
    }
    NumericElement nxy = nproduct(nadjoint(realize(ip.x)), realize(ip.y));
    std::vector<Point2> pts = Domain::crown(unit_crown()).samples(GridSpec{100, 0});
    for (const Point2& p : pts) {
      if (max_term_value(nxy, p) > 1e-12) {
        detail = "numeric |x*y| above 1e-12";
        return false;
      }
    }
    return true;
  });

  criterion(9, "serialization round-trip and falsification", 10.0,
            [](std::string& detail) {
    SqueezeCertificate cert = cyclic_cert();
    std::string text = dump_json(squeeze_cert_to_json(cert));
    SqueezeCertificate back = squeeze_cert_from_json(parse_json(text));
    if (dump_json(squeeze_cert_to_json(back)) != text) {
      detail = "round-trip not bit-identical";
      return false;
    }
    std::string reason;
    if (!reverify_squeeze(back, &reason)) {
      detail = "round-tripped certificate failed reverify: " + reason;
      return false;
    }
    // Corruption (inflated crown) must be caught both exactly and by sampling.
    SqueezeCertificate corrupt = back;
    corrupt.r2_sq = corrupt.r2_sq * 100;
    if (reverify_squeeze(corrupt, &reason)) {
      detail = "corrupted certificate passed exact reverify";
      return false;
    }
    if (pair_violations(corrupt, GridSpec{40, 0}) == 0) {
      detail = "oracle found no counterexample on the corrupted certificate";
      return false;
    }
    return true;
  });

  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              failures);
  return failures == 0 ? 0 : 1;
}
