#pragma once

#include <optional>
#include <string>

#include "kco/curvature.hpp"
#include "kco/rng.hpp"

namespace kco {

// Sampling helpers shared by the randomized checks: i.i.d. complex unit
// normals for form coefficients, real unit normals over the u(n) block.
PQForm random_pqform(int n, int p, int q, Rng& rng);
LieElement random_u_element(int n, Rng& rng);

// Weighted eigenvalue condition lambda_1 + ... + lambda_l + (C - l)
// lambda_{l+1} >= kappa (l+1) with l = floor(C).
struct WeightedCondition {
  int count = 1;        // l >= 1
  double weight = 0.0;  // C - l, in [0, 1]
  double kappa = 0.0;   // <= 0
  bool strict = false;
};

struct ConditionResult {
  bool satisfied = false;
  double margin = 0.0;
  bool boundary = false;  // margin within +-1e-12 of zero
};

// C^{p,q} = n+1 - (p^2+q^2)/(p+q); requires p+q >= 1.
double c_pq(int n, int p, int q);

// C^{p,q}_k = n+1-(p+q) + 2(pq-k^2)/(p+q-2k); empty when p = q = k.
std::optional<double> c_pq_k(int n, int p, int q, int k);

// Evaluates the weighted condition at level C against a sorted spectrum.
// margin = lambda_1 + ... + lambda_{floor(C)} + (C - floor(C))
// lambda_{floor(C)+1} - kappa (floor(C)+1).
ConditionResult weighted_sum(const Spectrum& sp, double C, double kappa,
                             bool strict);

// g(Ric(phi), conj phi), the curvature term of the Lichnerowicz Laplacian.
// Two independent code paths: the eigenbasis sum sum_a lambda_a |Xi_a phi|^2
// (default) and the literal frame double-sum
// Ric(T)(X_1..X_r) = sum_i sum_j (R(X_i, v_j) T)(X_1, .., v_j, .., X_r).
double weitzenboeck_quadratic(const KahlerCurvature& R, const PQForm& phi);
double weitzenboeck_frame_quadratic(const KahlerCurvature& R, const PQForm& phi);

// Samples random L in u(n) and random phi in V^{p,q}_k and returns the
// largest observed |L phi|^2 / ((p+q-2k) |L|^2 |ring_reduce(phi)|^2).
double verify_action_bound(int n, int p, int q, int k, int trials,
                           std::uint64_t seed);

// The diagonal extremizer: phi a single basis form of V^{p,q}_k with
// disjoint index sets, L = sum_{i in I} I_ii - sum_{j in J} I_jj. Achieves
// ratio exactly 1. Returns nullopt when the module is degenerate.
std::optional<double> action_bound_extremizer_ratio(int n, int p, int q, int k);

struct LowerBoundCheck {
  bool precondition_met = false;
  bool passed = false;
  double min_slack = 0.0;
  int trials_run = 0;
};

// Checks g(R(phi^u), conj phi^u) >= kappa (floor(C)+1)(p+q-2k) |phi_ring|^2
// for random phi in Lambda^{p,q}_k, given that the weighted condition holds
// at C = C^{p,q}_k. With corollary_constant, uses C = C^{p,q} and the
// uniform bound kappa (n+2-|p-q|)(p+q) |phi_ring|^2 instead.
LowerBoundCheck quadratic_lower_bound_check(const KahlerCurvature& R, int p,
                                            int q, int k, double kappa,
                                            int trials, std::uint64_t seed,
                                            bool corollary_constant = false);

// lambda_1 + ... + lambda_{floor((n+1)/2)} + ((1+(-1)^n)/4)
// lambda_{floor((n+1)/2)+1} >= 0 (parallel curvature condition for
// Kahler-Einstein metrics). Stated for n >= 4; evaluable below with
// below_stated_range set.
struct TachibanaResult {
  bool satisfied = false;
  double margin = 0.0;
  bool boundary = false;
  bool below_stated_range = false;
};
TachibanaResult tachibana_condition(const Spectrum& sp, int n, bool strict);

// g(R(R^u), conj R^u) = sum_a lambda_a |Xi_a R|^2 over an eigenbasis.
double curvature_quadratic(const KahlerCurvature& R);

enum class HodgeStatus { Vanishes, EqualsOne, ParallelOnly, NoConclusion };
const char* to_string(HodgeStatus s);

struct HodgeEntry {
  int p = 0, q = 0;
  HodgeStatus status = HodgeStatus::NoConclusion;
  double margin = 0.0;
  std::string route;
  bool boundary = false;
  std::optional<long long> binomial_cap;
  std::optional<double> exponent_argument;
};

struct HodgeReport {
  int n = 0;
  bool cpn_cohomology_flag = false;  // lambda_1+lambda_2+(1-2/n) lambda_3 > 0
  double cpn_cohomology_margin = 0.0;
  double ricci_proxy = 0.0;          // lambda_1 + ... + lambda_n
  bool ricci_route_fired = false;
  std::vector<HodgeEntry> entries;   // (n+1)^2 entries, p-major

  const HodgeEntry& at(int p, int q) const;
};

// Per-(p,q) conclusions from the spectrum alone. Entries with p+q > n are
// folded by Serre duality onto (n-p, n-q). With kappa (and optionally a
// diameter D), the non-strict conditions yield PARALLEL_ONLY entries plus
// the dimension-estimate fields; the overall multiplicative constant of the
// estimate is not computable from the spectrum and is left symbolic.
// ricci_min, when supplied (e.g. computed from a concrete operator), refines
// the positive-Ricci route beyond the spectral proxy lambda_1+...+lambda_n.
HodgeReport hodge_report(const Spectrum& sp, int n,
                         std::optional<double> kappa = std::nullopt,
                         std::optional<double> diameter = std::nullopt,
                         std::optional<double> ricci_min = std::nullopt);

}  // namespace kco
