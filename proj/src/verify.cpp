#include "kco/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "kco/bochner.hpp"
#include "kco/characters.hpp"
#include "kco/multiindex.hpp"
#include "kco/operator_io.hpp"
#include "kco/report.hpp"

namespace kco {

namespace {

double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

struct Ctx {
  int nmax;
  std::uint64_t seed;
};

// 1. |R^u|^2 of CP^k x C^{n-k} equals 32 k (k+1) (n-k), by the cached
// operator route, the direct tensor action and the eigenbasis formula.
void check_cpk_flat(const Ctx& c, CheckResult& out) {
  double worst = 0.0;
  for (int n = 1; n <= std::min(c.nmax, 5); ++n) {
    for (int k = 0; k <= n; ++k) {
      const KahlerCurvature R = model_cp_k_flat(n, k);
      const double expect = 32.0 * k * (k + 1) * (n - k);
      for (double got : {hat_norm_sq(R), hat_norm_sq_tensor(R),
                         hat_norm_sq_eigen(R)}) {
        worst = std::max(worst, rel_err(got, expect));
      }
    }
  }
  out.pass = worst <= 1e-9;
  std::ostringstream ss;
  ss << "worst rel err " << worst;
  out.detail = ss.str();
}

// 2. |R^u|^2 = 4(n+1)|Rring|^2 - 4|Ric0|^2 on random curvature tensors,
// and the equivalent split (4n/(n+2))|Ric0|^2 + 4(n+1)|B|^2.
void check_curvature_norm_identity(const Ctx& c, CheckResult& out) {
  double worst = 0.0;
  for (int n = 2; n <= std::min(c.nmax, 5); ++n) {
    for (int t = 0; t < 100; ++t) {
      const KahlerCurvature R =
          random_kahler(n, Rng::derive(c.seed, 2000 + n * 100 + t));
      const CurvatureDecomposition dec = decompose(R);
      const double lhs = hat_norm_sq(R);
      const double rhs =
          4.0 * (n + 1) * dec.r_ring_norm_sq - 4.0 * dec.ric0_norm_sq;
      const double alt = 4.0 * n / (n + 2.0) * dec.ric0_norm_sq +
                         4.0 * (n + 1) * dec.bochner_norm_sq;
      worst = std::max({worst, rel_err(lhs, rhs), rel_err(lhs, alt)});
    }
  }
  out.pass = worst <= 1e-9;
  std::ostringstream ss;
  ss << "worst rel err " << worst;
  out.detail = ss.str();
}

// 3. |phi^u|^2 / |phi_ring|^2 = 2(p-k)(q-k) + (p+q-2k)(n+1-(p+q-2k)) on
// random elements of Lambda^{p,q}_k.
void check_pq_coefficient(const Ctx& c, CheckResult& out) {
  double worst = 0.0;
  for (int n = 1; n <= std::min(c.nmax, 5); ++n) {
    Rng rng(Rng::derive(c.seed, 3000 + n));
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (int k = 0; k <= std::min(p, q); ++k) {
          if (dim_pqk(n, p, q, k) == 0) continue;
          if (p == q && k == p) continue;  // span of omega^p, hat is zero
          const Eigen::MatrixXcd P = component_projector(n, p, q, k);
          const double coeff = 2.0 * (p - k) * (q - k) +
                               (p + q - 2 * k) * (n + 1.0 - (p + q - 2 * k));
          for (int t = 0; t < 3; ++t) {
            PQForm phi = random_pqform(n, p, q, rng);
            phi.coeffs = P * phi.coeffs;
            const double ring_sq = norm_sq(ring_reduce(phi));
            if (ring_sq < 1e-12) continue;
            const double ratio = hat_norm_sq(phi) / ring_sq;
            worst = std::max(worst, rel_err(ratio, coeff));
          }
        }
      }
    }
  }
  out.pass = worst <= 1e-8;
  std::ostringstream ss;
  ss << "worst rel err " << worst;
  out.detail = ss.str();
}

// 4. |L phi|^2 <= (p+q-2k) |L|^2 |phi_ring|^2 on V^{p,q}_k with the diagonal
// extremizers attaining the bound.
void check_action_bound(const Ctx& c, CheckResult& out) {
  double worst_ratio = 0.0;
  double worst_extremal = 1.0;
  const int trials = 1000;
  for (int n = 1; n <= std::min(c.nmax, 4); ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (int k = 0; k <= std::min(p, q); ++k) {
          if (p + q - 2 * k == 0) continue;
          const double r = verify_action_bound(
              n, p, q, k, trials, Rng::derive(c.seed, 4000 + ((n * 8 + p) * 8 + q) * 8 + k));
          worst_ratio = std::max(worst_ratio, r);
          if (const auto ex = action_bound_extremizer_ratio(n, p, q, k)) {
            worst_extremal = std::min(worst_extremal, *ex);
            worst_ratio = std::max(worst_ratio, *ex);
          }
        }
      }
    }
  }
  out.pass = worst_ratio <= 1.0 + 1e-9 && worst_extremal >= 1.0 - 1e-9;
  std::ostringstream ss;
  ss << "max ratio " << worst_ratio << ", extremizer min " << worst_extremal;
  out.detail = ss.str();
}

// 5. Frame double-sum Weitzenboeck term equals the eigenvalue-weighted sum
// of squared basis actions.
void check_weitzenboeck_cross_path(const Ctx& c, CheckResult& out) {
  double worst = 0.0;
  for (int n = 2; n <= std::min(c.nmax, 3); ++n) {
    for (int t = 0; t < 200; ++t) {
      Rng rng(Rng::derive(c.seed, 5000 + n * 1000 + t));
      const int p = static_cast<int>(rng.next_u64() % (n + 1));
      int q = static_cast<int>(rng.next_u64() % (n + 1));
      if (p == 0 && q == 0) q = 1;
      const KahlerCurvature R =
          random_kahler(n, Rng::derive(c.seed, 50000 + n * 1000 + t));
      const PQForm phi = random_pqform(n, p, q, rng);
      const double a = weitzenboeck_frame_quadratic(R, phi);
      const double b = weitzenboeck_quadratic(R, phi);
      worst = std::max(worst, std::abs(a - b) /
                                  std::max({1.0, std::abs(a), std::abs(b)}));
    }
  }
  out.pass = worst <= 1e-8;
  std::ostringstream ss;
  ss << "worst rel err " << worst;
  out.detail = ss.str();
}

// 6. The 2-positivity counterexample family at epsilon = 1: spectrum,
// isotropic components, Einstein property.
void check_two_positive_example(const Ctx&, CheckResult& out) {
  const KahlerCurvature R = model_n2_from_mu(6, 0, 0, 8, -1, -1);
  const Spectrum sp = spectrum(R);
  Eigen::Vector4d expect(-1, -1, 6, 8);
  double worst = (sp.values - expect).cwiseAbs().maxCoeff();

  const auto iso = isotropic_curvatures_n2(R);
  for (double v : {iso.r1313, iso.r1414, iso.r2323, iso.r2424}) {
    worst = std::max(worst, std::abs(v + 0.5));
  }
  worst = std::max(worst, std::abs(iso.r1234 + 1.0));

  const Eigen::MatrixXd ric = ricci(R);
  worst = std::max(
      worst,
      (ric - 6.0 * Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff());

  const bool eigen_pattern =
      (sp.values[0] + sp.values[1] < 0) &&
      (sp.values[0] + sp.values[1] + sp.values[2] > 0) &&
      iso.min_isotropic < 0;
  out.pass = worst <= 1e-10 && eigen_pattern;
  std::ostringstream ss;
  ss << "worst abs err " << worst << ", min isotropic " << iso.min_isotropic;
  out.detail = ss.str();
}

// 7. The optimality example: |Rring|^2 = 8, |R^u|^2 = 96, the basis actions
// 0 / 16 / 64 / 16, equality in |LR|^2 <= 8 |L|^2 |Rring|^2, and the bound
// itself on random (L, R).
void check_optimality_example(const Ctx& c, CheckResult& out) {
  const KahlerCurvature R = model_n2_from_mu(3, 0, 0, -1, 1, 3);
  const CurvatureDecomposition dec = decompose(R);
  double worst = std::abs(dec.r_ring_norm_sq - 8.0);
  worst = std::max(worst, std::abs(hat_norm_sq(R) - 96.0));
  worst = std::max(worst, std::abs(dec.ric0_norm_sq));  // Einstein
  const auto xs = xi_basis_n2();
  worst = std::max(worst, std::abs(lr_norm_sq(xs[0], R)));         // 1+
  worst = std::max(worst, std::abs(lr_norm_sq(xs[3], R) - 16.0));  // 1-
  worst = std::max(worst, std::abs(lr_norm_sq(xs[4], R) - 64.0));  // 2-
  worst = std::max(worst, std::abs(lr_norm_sq(xs[5], R) - 16.0));  // 3-
  worst = std::max(worst, std::abs(curvature_quadratic(R) - 96.0));
  // equality: |Xi_{2,-} R|^2 = 8 |Xi|^2 |Rring|^2 = 64
  const bool equality =
      std::abs(lr_norm_sq(xs[4], R) - 8.0 * dec.r_ring_norm_sq) <= 1e-10;

  double max_ratio = 0.0;
  for (int n = 2; n <= std::min(c.nmax, 3); ++n) {
    for (int t = 0; t < 50; ++t) {
      Rng rng(Rng::derive(c.seed, 7000 + n * 100 + t));
      const KahlerCurvature S =
          random_kahler(n, Rng::derive(c.seed, 70000 + n * 100 + t));
      const LieElement L = random_u_element(n, rng);
      const double rr = r_ring(S).norm_sq();
      if (rr < 1e-12) continue;
      max_ratio = std::max(max_ratio,
                           lr_norm_sq(L, S) / (8.0 * L.norm_sq() * rr));
    }
  }
  out.pass = worst <= 1e-10 && equality && max_ratio <= 1.0 + 1e-9;
  std::ostringstream ss;
  ss << "worst abs err " << worst << ", random |LR|^2 ratio max " << max_ratio;
  out.detail = ss.str();
}

// 8. Character identities: Weyl quotient = telescoped chi^{p,q}_k at random
// torus points (n <= 6), the tau two-row Laplace identity (n <= 5), the
// explicit disjoint-sum formula for chi^{p,q}, telescoping consistency, and
// projector ranks = combinatorial dimensions.
void check_character_suite(const Ctx& c, CheckResult& out) {
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (int k = 0; k <= std::min(p, q); ++k) {
          const auto sig = chi_pq_k_signature(n, p, q, k);
          for (int t = 0; t < 50; ++t) {
            const TorusPoint tp = random_torus_point(
                n, Rng::derive(c.seed, 8000 + (((n * 8 + p) * 8 + q) * 8 + k) * 64 + t));
            const cplx lhs = chi_pq_k(tp, p, q, k);
            if (sig) {
              const cplx rhs = weyl_character(*sig, tp);
              worst = std::max(worst,
                               std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
            } else {
              worst = std::max(worst, std::abs(lhs));
            }
          }
        }
      }
    }
  }

  double worst_tau = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const TorusPoint tp =
          random_torus_point(n, Rng::derive(c.seed, 8800 + n * 100 + t));
      for (int a = 0; a <= n + 1; ++a) {
        for (int b = a + 1; b <= n + 1; ++b) {
          worst_tau = std::max(worst_tau, verify_tau_identity(tp, a, b));
        }
      }
    }
  }

  // explicit disjoint-sum formula and telescoping
  double worst_chi = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < 5; ++t) {
      const TorusPoint tp =
          random_torus_point(n, Rng::derive(c.seed, 8900 + n * 10 + t));
      for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
          cplx sum(0.0, 0.0);
          for (int k = 0; k <= std::min(p, q); ++k) {
            sum += chi_pq_k(tp, p, q, k);
          }
          worst_chi = std::max(
              worst_chi, std::abs(sum - chi_pq(tp, p, q)) /
                             std::max(1.0, std::abs(sum)));
          // disjoint-support expansion of chi^{p,q}
          cplx expl(0.0, 0.0);
          for (int k = 0; k <= std::min(p, q); ++k) {
            const long long w = binomial(n - (p + q - 2 * k), k);
            if (w == 0) continue;
            cplx disj(0.0, 0.0);
            for (const auto& I : subsets_lex(n, p - k)) {
              for (const auto& J : subsets_lex(n, q - k)) {
                if (merge_sign(I, J) == 0) continue;
                cplx term(1.0, 0.0);
                for (int i : I) term *= tp.eps[i - 1];
                for (int j : J) term *= std::conj(tp.eps[j - 1]);
                disj += term;
              }
            }
            expl += static_cast<double>(w) * disj;
          }
          worst_chi = std::max(
              worst_chi, std::abs(expl - chi_pq(tp, p, q)) /
                             std::max(1.0, std::abs(expl)));
        }
      }
    }
  }

  // projector ranks against the combinatorial dimensions
  bool ranks_ok = true;
  for (int n = 1; n <= std::min(c.nmax, 5); ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        long long total = 0;
        for (int k = 0; k <= std::min(p, q); ++k) {
          const long long d = dim_pqk(n, p, q, k);
          total += d;
          if (projector_rank(component_projector(n, p, q, k)) != d) {
            ranks_ok = false;
          }
        }
        if (total != binomial(n, p) * binomial(n, q)) ranks_ok = false;
      }
    }
  }

  // dimension spot check by near-identity torus points
  bool dims_ok = true;
  for (int n = 1; n <= 5; ++n) {
    TorusPoint tp;
    tp.eps.resize(n);
    for (int j = 0; j < n; ++j) {
      const double a = (j + 1) * 1e-4;
      tp.eps[j] = cplx(std::cos(a), std::sin(a));
    }
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (int k = 0; k <= std::min(p, q); ++k) {
          if (p + q - k > n) continue;  // degenerate, character is not the dim
          const long long got =
              std::llround(chi_pq_k(tp, p, q, k).real());
          if (got != dim_pqk(n, p, q, k)) dims_ok = false;
        }
      }
    }
  }

  out.pass = worst <= 1e-6 && worst_tau <= 1e-8 && worst_chi <= 1e-8 &&
             ranks_ok && dims_ok;
  std::ostringstream ss;
  ss << "weyl rel " << worst << ", tau " << worst_tau << ", chi " << worst_chi
     << ", ranks " << (ranks_ok ? "ok" : "FAIL") << ", dims "
     << (dims_ok ? "ok" : "FAIL");
  out.detail = ss.str();
}

// 9. Kernel characterizations: omega^k and the model_cpn tensor have
// vanishing hat norm; forms with nonzero ring part do not.
void check_kernel_characterizations(const Ctx& c, CheckResult& out) {
  double worst_form = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      worst_form = std::max(worst_form, hat_norm_sq(kahler_power(n, k)));
    }
  }
  double worst_cpn = 0.0;
  for (int n = 1; n <= 5; ++n) {
    worst_cpn = std::max(worst_cpn, hat_norm_sq(model_cpn(n)));
  }
  bool converse_ok = true;
  Rng rng(Rng::derive(c.seed, 9000));
  for (int n = 2; n <= std::min(c.nmax, 4); ++n) {
    for (int p = 1; p <= n; ++p) {
      PQForm phi = random_pqform(n, p, std::min(p, n), rng);
      const double ring_sq = norm_sq(ring_reduce(phi));
      if (ring_sq < 1e-10) continue;
      if (hat_norm_sq(phi) < 1e-8 * ring_sq) converse_ok = false;
    }
  }
  out.pass = worst_form < 1e-12 && worst_cpn < 1e-10 && converse_ok;
  std::ostringstream ss;
  ss << "max hat(omega^k) " << worst_form << ", max hat(cpn) " << worst_cpn;
  out.detail = ss.str();
}

// 10. Condition checkers across the fixture corpus, serialization
// round-trips and byte-deterministic reports.
void check_condition_checkers(const Ctx& c, CheckResult& out) {
  std::ostringstream ss;
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      ss << "[" << what << " failed] ";
    }
  };

  // fixture corpus re-validates through serialize/parse round-trips
  std::vector<std::pair<std::string, KahlerCurvature>> corpus;
  corpus.emplace_back("cpn2", model_cpn(2));
  corpus.emplace_back("cpn3", model_cpn(3));
  corpus.emplace_back("cp1_flat3", model_cp_k_flat(3, 1));
  corpus.emplace_back("example_2pos", model_n2_from_mu(6, 0, 0, 8, -1, -1));
  corpus.emplace_back("example_optimality", model_n2_from_mu(3, 0, 0, -1, 1, 3));
  corpus.emplace_back("random3", random_kahler(3, Rng::derive(c.seed, 10001)));
  for (const auto& [name, R] : corpus) {
    for (auto repr : {OperatorRepresentation::HermitianSym2,
                      OperatorRepresentation::UOperator}) {
      const KahlerCurvature back = parse_operator(serialize_operator(R, repr));
      const double err =
          (back.operator_matrix() - R.operator_matrix()).cwiseAbs().maxCoeff();
      expect(err <= 1e-12 * std::max(1.0, R.operator_matrix().cwiseAbs().maxCoeff()),
             ("roundtrip " + name).c_str());
      expect(bianchi_defect(back) <= 1e-10, ("bianchi " + name).c_str());
    }
  }

  // CP^n: everything satisfied
  for (int n = 2; n <= std::min(c.nmax, 4); ++n) {
    const Spectrum sp = spectrum(model_cpn(n));
    const HodgeReport hr = hodge_report(sp, n);
    expect(hr.cpn_cohomology_flag, "cpn flag");
    expect(tachibana_condition(sp, n, true).satisfied, "cpn tachibana");
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        const auto want =
            (p == q) ? HodgeStatus::EqualsOne : HodgeStatus::Vanishes;
        expect(hr.at(p, q).status == want, "cpn diamond");
      }
    }
  }

  // the 2-positivity example: aggregate flag fails, operator Ricci fires
  {
    const KahlerCurvature R = model_n2_from_mu(6, 0, 0, 8, -1, -1);
    const Spectrum sp = spectrum(R);
    const HodgeReport plain = hodge_report(sp, 2);
    expect(!plain.cpn_cohomology_flag, "2pos flag false");
    expect(plain.ricci_proxy < 0, "2pos proxy fails");
    expect(plain.at(1, 0).status == HodgeStatus::NoConclusion,
           "2pos spectrum-only h10 open");
    const Eigen::MatrixXd ric = ricci(R);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> res(ric);
    const HodgeReport refined =
        hodge_report(sp, 2, std::nullopt, std::nullopt,
                     res.eigenvalues().minCoeff());
    expect(refined.ricci_route_fired, "2pos operator ricci fires");
    expect(refined.at(1, 0).status == HodgeStatus::Vanishes, "2pos h10");
    expect(refined.at(2, 0).status == HodgeStatus::Vanishes, "2pos h20");
    expect(refined.at(0, 2).status == HodgeStatus::Vanishes, "2pos h02");
    expect(refined.at(1, 1).status == HodgeStatus::NoConclusion, "2pos h11");
    expect(!tachibana_condition(sp, 2, false).satisfied, "2pos tachibana");
  }

  // zero operator: boundary non-strict conditions
  {
    const KahlerCurvature Z = KahlerCurvature::from_hermitian(
        2, Eigen::MatrixXcd::Zero(3, 3));
    const Spectrum sp = spectrum(Z);
    const auto ws = weighted_sum(sp, 2.0, 0.0, false);
    expect(ws.satisfied && ws.boundary && std::abs(ws.margin) <= 1e-15,
           "zero boundary weighted");
    const auto tac = tachibana_condition(sp, 2, false);
    expect(tac.satisfied && tac.boundary, "zero boundary tachibana");
    const HodgeReport hr = hodge_report(sp, 2);
    for (int p = 0; p <= 2; ++p) {
      for (int q = 0; q <= 2; ++q) {
        const bool top_or_bottom = (p == 0 && q == 0) || (p == 2 && q == 2);
        expect(hr.at(p, q).status == (top_or_bottom ? HodgeStatus::EqualsOne
                                                    : HodgeStatus::NoConclusion),
               "zero no-conclusion");
      }
    }
    const HodgeReport rigid = hodge_report(sp, 2, 0.0);
    expect(rigid.at(1, 0).status == HodgeStatus::ParallelOnly,
           "zero kappa rigidity");
  }

  // kappa/diameter estimation fields
  {
    const KahlerCurvature R = model_n2_from_mu(6, 0, 0, 8, -1, -1);
    const HodgeReport hr = hodge_report(spectrum(R), 2, -1.0, 1.0);
    const auto& e = hr.at(1, 1);
    expect(e.status == HodgeStatus::ParallelOnly, "2pos kappa parallel");
    expect(e.binomial_cap && *e.binomial_cap == 4, "binomial cap");
    expect(e.exponent_argument &&
               std::abs(*e.exponent_argument - std::sqrt(8.0)) < 1e-12,
           "exponent argument");
  }

  // schema errors
  {
    bool threw = false;
    try {
      parse_operator("{\"format\":\"kco-v1\",\"n\":2,"
                     "\"representation\":\"u_operator\",\"matrix\":[1,2,3]}");
    } catch (const SizeMismatch&) {
      threw = true;
    }
    expect(threw, "truncated matrix SizeMismatch");

    threw = false;
    try {
      // symmetric but Bianchi-violating: lone diagonal entry on R_12
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4, 4);
      M(0, 0) = 1.0;
      KahlerCurvature::from_operator_matrix(2, M);
    } catch (const BianchiViolation& e) {
      threw = e.defect > 0;
    }
    expect(threw, "bianchi violation reported");
  }

  // deterministic report bytes
  {
    const KahlerCurvature R = model_cpn(2);
    ReportOptions opt;
    opt.seed = c.seed;
    opt.trials = 200;
    const ReportDocument a = build_report(R, opt);
    const ReportDocument b = build_report(R, opt);
    expect(a.json_text == b.json_text, "deterministic report bytes");
  }

  out.pass = ok;
  if (ok) ss << "all fixture conditions as expected";
  out.detail = ss.str();
}

using CheckFn = std::function<void(const Ctx&, CheckResult&)>;

struct CheckSpec {
  const char* key;
  const char* description;
  CheckFn fn;
};

const CheckSpec kChecks[] = {
    {"cpk-flat-hat-norm",
     "|R^u|^2 of CP^k x C^(n-k) equals 32k(k+1)(n-k), three routes",
     check_cpk_flat},
    {"curvature-norm-identity",
     "|R^u|^2 = 4(n+1)|Rring|^2 - 4|Ric0|^2 on random tensors",
     check_curvature_norm_identity},
    {"pq-coefficient-ratio",
     "|phi^u|^2/|phi_ring|^2 = 2(p-k)(q-k)+(p+q-2k)(n+1-(p+q-2k))",
     check_pq_coefficient},
    {"action-bound-sharp",
     "|L phi|^2 <= (p+q-2k)|L|^2|phi_ring|^2 with extremizers attaining it",
     check_action_bound},
    {"weitzenboeck-cross-path",
     "frame double-sum curvature term = eigenvalue-weighted action sum",
     check_weitzenboeck_cross_path},
    {"two-positive-counterexample",
     "n=2 family: spectrum, negative isotropic curvature, Einstein",
     check_two_positive_example},
    {"action-norm-optimality",
     "optimality example: |Rring|^2=8, |R^u|^2=96, equality case",
     check_optimality_example},
    {"character-suite",
     "Weyl quotients, tau Laplace identity, ranks = dimensions",
     check_character_suite},
    {"kernel-characterizations",
     "hat norm vanishes exactly on omega powers and the CP^n tensor",
     check_kernel_characterizations},
    {"condition-checkers",
     "fixture corpus: flags, routes, boundary cases, deterministic bytes",
     check_condition_checkers},
};

}  // namespace

std::vector<CheckResult> run_verification(int nmax, std::uint64_t seed) {
  const Ctx ctx{nmax, seed};
  std::vector<CheckResult> results;
  for (const auto& spec : kChecks) {
    CheckResult r;
    r.key = spec.key;
    r.description = spec.description;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.fn(ctx, r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace kco
