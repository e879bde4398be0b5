#include "kco/bochner.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>

#include "kco/multiindex.hpp"
#include "kco/rng.hpp"

namespace kco {

double c_pq(int n, int p, int q) {
  if (p + q < 1) throw DimensionMismatch("c_pq: requires p+q >= 1");
  return n + 1.0 - double(p * p + q * q) / double(p + q);
}

std::optional<double> c_pq_k(int n, int p, int q, int k) {
  if (k < 0 || k > std::min(p, q)) {
    throw DimensionMismatch("c_pq_k: k out of range");
  }
  const int denom = p + q - 2 * k;
  if (denom == 0) return std::nullopt;
  return n + 1.0 - (p + q) + 2.0 * double(p * q - k * k) / double(denom);
}

ConditionResult weighted_sum(const Spectrum& sp, double C, double kappa,
                             bool strict) {
  const auto& lam = sp.values;
  const int len = static_cast<int>(lam.size());
  if (C < 1.0) throw DimensionMismatch("weighted_sum: C must be >= 1");
  const int fl = static_cast<int>(std::floor(C + 1e-12));
  const double w = std::max(0.0, C - fl);
  if (fl > len || (w > 1e-12 && fl + 1 > len)) {
    throw DimensionMismatch("weighted_sum: C exceeds spectrum length");
  }
  double s = 0.0;
  for (int i = 0; i < fl; ++i) s += lam[i];
  if (w > 1e-12) s += w * lam[fl];
  ConditionResult r;
  r.margin = s - kappa * (fl + 1);
  r.boundary = std::abs(r.margin) <= 1e-12;
  r.satisfied = strict ? (r.margin > 0.0) : (r.margin >= -1e-12);
  return r;
}

double weitzenboeck_quadratic(const KahlerCurvature& R, const PQForm& phi) {
  if (R.n() != phi.n) {
    throw DimensionMismatch("weitzenboeck_quadratic: mismatched n");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.operator_matrix());
  const Eigen::MatrixXd& W = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const auto base = u_actions_on_form(phi);
  const int ud = u_dim(phi.n);
  const double scale = std::pow(2.0, phi.p + phi.q);
  double quad = 0.0;
  Eigen::VectorXcd acc(phi.coeffs.size());
  for (int a = 0; a < ud; ++a) {
    acc.setZero();
    for (int g = 0; g < ud; ++g) {
      const double wgt = W(g, a);
      if (wgt != 0.0) acc += wgt * base[g].coeffs;
    }
    quad += lam[a] * scale * acc.squaredNorm();
  }
  return quad;
}

namespace {

// phi expanded over the real coordinate 1-forms dx^i, dy^i; the table is
// indexed by bitmasks of real indices (dx^i -> bit i-1, dy^i -> bit n+i-1)
// and carries the coefficient on the increasing wedge monomial.
std::vector<cplx> realify(const PQForm& phi) {
  const int n = phi.n, r = phi.p + phi.q;
  std::vector<cplx> table(std::size_t(1) << (2 * n), cplx(0.0, 0.0));
  const auto& Is = subsets_lex(n, phi.p);
  const auto& Js = subsets_lex(n, phi.q);
  const long long cq = binomial(n, phi.q);
  std::vector<int> xidx(r), yidx(r);
  std::vector<cplx> ycoef(r);
  std::vector<int> idxs(r);
  for (std::size_t bi = 0; bi < Is.size(); ++bi) {
    for (std::size_t bj = 0; bj < Js.size(); ++bj) {
      const cplx c = phi.coeffs[static_cast<long long>(bi) * cq + bj];
      if (c == cplx(0.0, 0.0)) continue;
      int t = 0;
      for (int i : Is[bi]) {
        xidx[t] = i - 1; yidx[t] = n + i - 1; ycoef[t] = cplx(0.0, 1.0); ++t;
      }
      for (int j : Js[bj]) {
        xidx[t] = j - 1; yidx[t] = n + j - 1; ycoef[t] = cplx(0.0, -1.0); ++t;
      }
      for (unsigned choice = 0; choice < (1u << r); ++choice) {
        unsigned mask = 0;
        cplx w = c;
        bool dup = false;
        for (int s = 0; s < r; ++s) {
          int ri;
          if (choice & (1u << s)) {
            ri = yidx[s];
            w *= ycoef[s];
          } else {
            ri = xidx[s];
          }
          if (mask & (1u << ri)) { dup = true; break; }
          mask |= 1u << ri;
          idxs[s] = ri;
        }
        if (dup) continue;
        int inv = 0;
        for (int a = 0; a < r; ++a) {
          for (int b = a + 1; b < r; ++b) {
            if (idxs[a] > idxs[b]) ++inv;
          }
        }
        table[mask] += (inv % 2 ? -1.0 : 1.0) * w;
      }
    }
  }
  return table;
}

inline int popcount_below(unsigned mask, int c) {
  return std::popcount(mask & ((1u << c) - 1u));
}

}  // namespace

double weitzenboeck_frame_quadratic(const KahlerCurvature& R, const PQForm& phi) {
  if (R.n() != phi.n) {
    throw DimensionMismatch("weitzenboeck_frame_quadratic: mismatched n");
  }
  const int n = phi.n, m = 2 * n, r = phi.p + phi.q;
  if (r == 0) return 0.0;
  const std::vector<cplx> F = realify(phi);
  const Eigen::MatrixXd& lam2 = R.lambda2_form();
  const int D = so_dim(n);

  // endomorphisms of the curvature 2-forms: g(S_{ab} z, w) = R(v_a,v_b,z,w)
  std::vector<Eigen::MatrixXd> S(D);
  {
    int s = 0;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b, ++s) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
        int idx = 0;
        for (int c = 0; c < m; ++c) {
          for (int d = c + 1; d < m; ++d, ++idx) {
            const double w = lam2(idx, s);
            if (w != 0.0) {
              A(c, d) += w;
              A(d, c) -= w;
            }
          }
        }
        S[s] = -A;
      }
    }
  }

  // masks with popcount r and their ranks
  const auto& sets = subsets_lex(m, r);
  const int nm = static_cast<int>(sets.size());
  std::vector<int> mask_rank(std::size_t(1) << m, -1);
  std::vector<unsigned> masks(nm);
  for (int mi = 0; mi < nm; ++mi) {
    unsigned msk = 0;
    for (int v : sets[mi]) msk |= 1u << (v - 1);
    masks[mi] = msk;
    mask_rank[msk] = mi;
  }

  // G[s][mi] = (S_s phi) evaluated on the increasing tuple of mask mi
  std::vector<std::vector<cplx>> G(D, std::vector<cplx>(nm, cplx(0.0, 0.0)));
  std::vector<int> elems(r);
  for (int mi = 0; mi < nm; ++mi) {
    const unsigned A = masks[mi];
    for (int t = 0, v = 0; v < m; ++v) {
      if (A & (1u << v)) elems[t++] = v;
    }
    for (int s = 0; s < D; ++s) {
      const Eigen::MatrixXd& E = S[s];
      cplx acc(0.0, 0.0);
      for (int t = 0; t < r; ++t) {
        const int bt = elems[t];
        for (int c = 0; c < m; ++c) {
          const double w = E(c, bt);
          if (w == 0.0) continue;
          if (c == bt) {
            acc -= w * F[A];
          } else if (A & (1u << c)) {
            continue;  // duplicate index, alternating form vanishes
          } else {
            const unsigned B = (A ^ (1u << bt)) | (1u << c);
            const int tp = popcount_below(A ^ (1u << bt), c);
            const int moves = std::abs(t - tp);
            const double sgn = (moves % 2 == 0) ? 1.0 : -1.0;
            acc -= sgn * w * F[B];
          }
        }
      }
      G[s][mi] = acc;
    }
  }

  // quad = sum over frames of Ric(phi)(A) conj(phi(A))
  cplx quad(0.0, 0.0);
  for (int mi = 0; mi < nm; ++mi) {
    const unsigned A = masks[mi];
    const cplx fa = F[A];
    if (fa == cplx(0.0, 0.0)) continue;
    for (int t = 0, v = 0; v < m; ++v) {
      if (A & (1u << v)) elems[t++] = v;
    }
    cplx ric(0.0, 0.0);
    for (int i = 0; i < r; ++i) {
      const int bi = elems[i];
      for (int j = 0; j < m; ++j) {
        if (j == bi) continue;
        if (A & (1u << j)) continue;  // substituted tuple would repeat j
        double sp;
        int pr;
        if (bi < j) {
          pr = raw_pair_rank(n, bi, j);
          sp = 1.0;
        } else {
          pr = raw_pair_rank(n, j, bi);
          sp = -1.0;
        }
        const unsigned B = (A ^ (1u << bi)) | (1u << j);
        const int tp = popcount_below(A ^ (1u << bi), j);
        const int moves = std::abs(i - tp);
        const double sgn = (moves % 2 == 0) ? 1.0 : -1.0;
        ric += sp * sgn * G[pr][mask_rank[B]];
      }
    }
    quad += ric * std::conj(fa);
  }
  return quad.real();
}

PQForm random_pqform(int n, int p, int q, Rng& rng) {
  PQForm out(n, p, q);
  for (long long i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] = rng.normal_complex();
  }
  return out;
}

LieElement random_u_element(int n, Rng& rng) {
  LieElement L(n);
  for (int i = 0; i < u_dim(n); ++i) L.coeffs[i] = rng.normal();
  return L;
}

double verify_action_bound(int n, int p, int q, int k, int trials,
                           std::uint64_t seed) {
  if (k < 0 || k > std::min(p, q) || p > n || q > n) {
    throw DimensionMismatch("verify_action_bound: invalid (p,q,k)");
  }
  if (p + q - 2 * k == 0) {
    throw DimensionMismatch("verify_action_bound: p = q = k is degenerate");
  }
  Rng rng(seed);
  const PQForm wk = kahler_power(n, k);
  const double factor = p + q - 2 * k;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const PQForm psi = random_pqform(n, p - k, q - k, rng);
    const PQForm phi = wedge(wk, psi);
    const LieElement L = random_u_element(n, rng);
    const PQForm ring = ring_reduce(phi);
    const double ring_sq = norm_sq(ring);
    if (ring_sq < 1e-12 * std::max(1.0, norm_sq(phi))) continue;
    const double num = norm_sq(act_on_form(L, phi));
    const double ratio = num / (factor * L.norm_sq() * ring_sq);
    worst = std::max(worst, ratio);
  }
  return worst;
}

std::optional<double> action_bound_extremizer_ratio(int n, int p, int q, int k) {
  const int a = p - k, b = q - k;
  if (k < 0 || k > std::min(p, q) || a + b == 0 || a + b > n) {
    return std::nullopt;
  }
  std::vector<int> I, J;
  for (int i = 1; i <= a; ++i) I.push_back(i);
  for (int j = a + 1; j <= a + b; ++j) J.push_back(j);
  const PQForm phi = wedge(kahler_power(n, k), basis_form(n, a, b, I, J));
  LieElement L(n);
  for (int i : I) L.coeffs[d_basis_index(n, i)] = 1.0;
  for (int j : J) L.coeffs[d_basis_index(n, j)] = -1.0;
  const double ring_sq = norm_sq(ring_reduce(phi));
  return norm_sq(act_on_form(L, phi)) /
         ((p + q - 2 * k) * L.norm_sq() * ring_sq);
}

LowerBoundCheck quadratic_lower_bound_check(const KahlerCurvature& R, int p,
                                            int q, int k, double kappa,
                                            int trials, std::uint64_t seed,
                                            bool corollary_constant) {
  const int n = R.n();
  LowerBoundCheck out;
  const auto Ck = c_pq_k(n, p, q, k);
  if (!Ck) {
    throw DimensionMismatch("quadratic_lower_bound_check: p = q = k module");
  }
  const double C = corollary_constant ? c_pq(n, p, q) : *Ck;
  const Spectrum sp = spectrum(R);
  const auto cond = weighted_sum(sp, C, kappa, false);
  if (!cond.satisfied) {
    out.precondition_met = false;
    return out;
  }
  out.precondition_met = true;

  const double bound_factor =
      corollary_constant
          ? kappa * (n + 2 - std::abs(p - q)) * (p + q)
          : kappa * (std::floor(C + 1e-12) + 1) * (p + q - 2 * k);

  const Eigen::MatrixXcd P = component_projector(n, p, q, k);
  Rng rng(seed);
  out.passed = true;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    PQForm phi = random_pqform(n, p, q, rng);
    phi.coeffs = P * phi.coeffs;
    if (norm_sq(phi) < 1e-14) continue;
    const double quad = weitzenboeck_quadratic(R, phi);
    const double bound = bound_factor * norm_sq(ring_reduce(phi));
    const double slack = quad - bound;
    out.min_slack = std::min(out.min_slack, slack);
    if (slack < -1e-9 * std::max({1.0, std::abs(quad), std::abs(bound)})) {
      out.passed = false;
    }
    ++out.trials_run;
  }
  if (out.trials_run == 0) out.min_slack = 0.0;
  return out;
}

TachibanaResult tachibana_condition(const Spectrum& sp, int n, bool strict) {
  TachibanaResult out;
  out.below_stated_range = (n < 4);
  const int l = (n + 1) / 2;
  const double w = (n % 2 == 0) ? 0.5 : 0.0;
  const auto& lam = sp.values;
  if (l > lam.size() || (w > 0 && l + 1 > lam.size())) {
    throw DimensionMismatch("tachibana_condition: spectrum too short");
  }
  double s = 0.0;
  for (int i = 0; i < l; ++i) s += lam[i];
  if (w > 0) s += w * lam[l];
  out.margin = s;
  out.boundary = std::abs(s) <= 1e-12;
  out.satisfied = strict ? (s > 0.0) : (s >= -1e-12);
  return out;
}

double curvature_quadratic(const KahlerCurvature& R) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.operator_matrix());
  const Eigen::MatrixXd& W = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const int n = R.n();
  double quad = 0.0;
  for (int a = 0; a < u_dim(n); ++a) {
    LieElement xi(n);
    xi.coeffs.head(u_dim(n)) = W.col(a);
    quad += lam[a] * lr_norm_sq(xi, R);
  }
  return quad;
}

const char* to_string(HodgeStatus s) {
  switch (s) {
    case HodgeStatus::Vanishes: return "VANISHES";
    case HodgeStatus::EqualsOne: return "EQUALS_ONE";
    case HodgeStatus::ParallelOnly: return "PARALLEL_ONLY";
    case HodgeStatus::NoConclusion: return "NO_CONCLUSION";
  }
  return "?";
}

const HodgeEntry& HodgeReport::at(int p, int q) const {
  return entries.at(std::size_t(p) * (n + 1) + q);
}

HodgeReport hodge_report(const Spectrum& sp, int n, std::optional<double> kappa,
                         std::optional<double> diameter,
                         std::optional<double> ricci_min) {
  if (sp.values.size() != n * n) {
    throw DimensionMismatch("hodge_report: spectrum length must be n^2");
  }
  if (diameter && !kappa) {
    throw DimensionMismatch("hodge_report: diameter requires kappa");
  }
  if (kappa && *kappa > 0.0) {
    throw DimensionMismatch("hodge_report: kappa must be <= 0");
  }
  if (diameter && *diameter <= 0.0) {
    throw DimensionMismatch("hodge_report: diameter must be positive");
  }

  HodgeReport rep;
  rep.n = n;
  const auto& lam = sp.values;

  if (n == 1) {
    rep.cpn_cohomology_margin = lam[0];
  } else {
    rep.cpn_cohomology_margin = lam[0] + lam[1] + (1.0 - 2.0 / n) * lam[2];
  }
  rep.cpn_cohomology_flag = rep.cpn_cohomology_margin > 0.0;

  rep.ricci_proxy = lam.head(n).sum();
  const bool ricci_pos =
      rep.ricci_proxy > 0.0 || (ricci_min && *ricci_min > 0.0);
  rep.ricci_route_fired = ricci_pos;
  const bool ricci_via_operator = ricci_pos && !(rep.ricci_proxy > 0.0);

  rep.entries.assign(std::size_t(n + 1) * (n + 1), HodgeEntry{});
  auto& E = rep.entries;
  auto idx = [n](int p, int q) { return std::size_t(p) * (n + 1) + q; };

  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n && p + q <= n; ++q) {
      HodgeEntry e;
      e.p = p;
      e.q = q;
      if (p == 0 && q == 0) {
        e.status = HodgeStatus::EqualsOne;
        e.route = "constants";
        E[idx(p, q)] = e;
        continue;
      }
      const double C = c_pq(n, p, q);
      const auto strict_res = weighted_sum(sp, C, 0.0, true);
      e.margin = strict_res.margin;
      e.boundary = strict_res.boundary;
      if (p == q) {
        if (strict_res.satisfied) {
          e.status = HodgeStatus::EqualsOne;
          e.route = "weighted-cpq";
        }
      } else {
        if (strict_res.satisfied) {
          e.status = HodgeStatus::Vanishes;
          e.route = "weighted-cpq";
        } else if ((p == 0 || q == 0) && ricci_pos) {
          e.status = HodgeStatus::Vanishes;
          e.route = ricci_via_operator ? "ricci-positivity(operator)"
                                       : "ricci-positivity";
          e.margin = ricci_via_operator ? *ricci_min : rep.ricci_proxy;
          e.boundary = false;
        }
      }
      if (e.status == HodgeStatus::NoConclusion && kappa) {
        const auto rigid = weighted_sum(sp, C, *kappa, false);
        if (rigid.satisfied) {
          e.status = HodgeStatus::ParallelOnly;
          e.route = "kappa-rigidity";
          e.margin = rigid.margin;
          e.boundary = rigid.boundary;
          if (diameter) {
            e.binomial_cap = binomial(n, p) * binomial(n, q);
            e.exponent_argument =
                std::sqrt(-(*kappa) * (*diameter) * (*diameter) *
                          (n + 2 - std::abs(p - q)) * (p + q));
          }
        }
      }
      if (e.route.empty()) e.route = "none";
      E[idx(p, q)] = e;
    }
  }

  // Serre fold: h^{p,q} = h^{n-p,n-q}
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (p + q <= n) continue;
      HodgeEntry e = E[idx(n - p, n - q)];
      e.p = p;
      e.q = q;
      e.route = "serre(" + std::to_string(n - p) + "," + std::to_string(n - q) +
                "):" + e.route;
      E[idx(p, q)] = e;
    }
  }
  return rep;
}

}  // namespace kco
