#pragma once

#include <array>
#include <cstdint>

#include "kco/unitary_lie.hpp"

namespace kco {

// Sorted eigenvalues of the curvature operator on u(n).
struct Spectrum {
  Eigen::VectorXd values;  // ascending, length n^2
};

int sym_pair_dim(int n);                   // n(n+1)/2
int sym_pair_rank(int n, int i, int k);    // 0-based, i <= k

// An algebraic Kahler curvature tensor on C^n. Canonical storage is a
// Hermitian form on Sym^2 C^n (pair-indexed, size n(n+1)/2), which has the
// pair symmetries, the first Bianchi identity and J-invariance built in.
// Cached on construction: the bilinear form on Lambda^2 R^{2n} over the raw
// wedge basis, and the symmetric operator matrix on the u(n) basis. The
// induced operator vanishes on u(n)^perp. Scaling is fixed so that
// g(N(x^y), z^w) = R(x,y,z,w) with the determinant inner product on
// 2-vectors; consequently |R|^2 (tensor) = Frobenius norm^2 of the operator
// = sum of squared eigenvalues.
class KahlerCurvature {
 public:
  KahlerCurvature() = default;

  // herm must be Hermitian within 1e-12 (relative); it is symmetrized on
  // input. Throws NonHermitianInput.
  static KahlerCurvature from_hermitian(int n, const Eigen::MatrixXcd& herm);

  // M must be symmetric within 1e-10 and induce a tensor satisfying the
  // first Bianchi identity (defect below 1e-10 relative); rejected
  // otherwise, never silently projected. Throws NonHermitianInput /
  // BianchiViolation.
  static KahlerCurvature from_operator_matrix(int n, const Eigen::MatrixXd& M);

  int n() const { return n_; }
  const Eigen::MatrixXcd& hermitian() const { return herm_; }
  const Eigen::MatrixXd& operator_matrix() const { return op_; }
  const Eigen::MatrixXd& lambda2_form() const { return lam2_; }

  // R(v_a, v_b, v_c, v_d) over the real orthonormal frame (0-based indices,
  // e_i -> i-1, f_i -> n+i-1).
  double tensor(int a, int b, int c, int d) const;

  // R(x, y, z, w) for arbitrary real vectors.
  double tensor(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                const Eigen::VectorXd& z, const Eigen::VectorXd& w) const;

  // <R, R'> = Frobenius inner product of the operator matrices.
  double inner(const KahlerCurvature& o) const;
  double norm_sq() const { return op_.squaredNorm(); }

  KahlerCurvature operator+(const KahlerCurvature& o) const;
  KahlerCurvature operator-(const KahlerCurvature& o) const;
  KahlerCurvature scaled(double s) const;

 private:
  int n_ = 0;
  Eigen::MatrixXcd herm_;
  Eigen::MatrixXd lam2_;
  Eigen::MatrixXd op_;

  static KahlerCurvature build_from_herm(int n, Eigen::MatrixXcd herm);
};

const Eigen::MatrixXd& to_operator_matrix(const KahlerCurvature& R);

// Norm of the cyclic sums R(a,b,c,d) + R(b,c,a,d) + R(c,a,b,d) over all
// increasing index quadruples. Zero iff the first Bianchi identity holds.
double bianchi_defect(const KahlerCurvature& R);
double bianchi_defect_lambda2(int n, const Eigen::MatrixXd& lam2);

// Ric(x,y) = sum_a R(x, v_a, y, v_a); scal = trace.
Eigen::MatrixXd ricci(const KahlerCurvature& R);
double scalar_curvature(const KahlerCurvature& R);

// Orthogonal decomposition R = (scal / 4n(n+1)) R_CPn + R0 + B into the
// constant holomorphic sectional curvature part, the trace-free Ricci part
// and the Bochner tensor. r_ring = R - (scal / 4n(n+1)) R_CPn.
struct CurvatureDecomposition {
  double scal = 0.0;
  double ric0_norm_sq = 0.0;     // |Ric0|^2, Frobenius over R^{2n}
  double r_ring_norm_sq = 0.0;   // |R0ring|^2
  double r0_norm_sq = 0.0;       // = (2/(n+2)) |Ric0|^2
  double bochner_norm_sq = 0.0;  // |B|^2
  KahlerCurvature r_ring;
  KahlerCurvature r0;
  KahlerCurvature bochner;
};

CurvatureDecomposition decompose(const KahlerCurvature& R);
KahlerCurvature r_ring(const KahlerCurvature& R);

Spectrum spectrum(const KahlerCurvature& R);

// Model spaces. model_cpn has spectrum {2 (mult n^2 - 1), 2(n+1)} and
// scal = 4n(n+1); model_cp_k_flat is the product of that metric on the first
// k coordinates with a flat factor.
KahlerCurvature model_cpn(int n);
KahlerCurvature model_cp_k_flat(int n, int k);

// The doubled 2-form basis of Lambda^2 R^4 used for n=2 constructions:
// Xi_{1,+-} = (e1^e2 +- e3^e4)/sqrt2 etc. for the adapted real frame
// (e1, e2, e3, e4) = (e_1, f_1, e_2, f_2). Returned in the order
// 1+, 2+, 3+, 1-, 2-, 3-. The four elements {1+, 1-, 2-, 3-} span u(2).
std::vector<LieElement> xi_basis_n2();

// Curvature operator diag(mu_{i,+-}) on the Xi basis. Requires
// mu2p = mu3p = 0 (u(2)-perp kernel) and mu1p + mu2p + mu3p =
// mu1m + mu2m + mu3m (first Bianchi); throws otherwise.
KahlerCurvature model_n2_from_mu(double mu1p, double mu2p, double mu3p,
                                 double mu1m, double mu2m, double mu3m);

// Hermitian form with i.i.d. unit-normal entries (real and imaginary
// parts), symmetrized. Deterministic for a fixed seed.
KahlerCurvature random_kahler(int n, std::uint64_t seed);

// Derivation action of L in the u(n) block on the curvature tensor; the
// result is again an algebraic Kahler curvature tensor.
KahlerCurvature act_on_curvature(const LieElement& L, const KahlerCurvature& R);

// |LR|^2 along three routes: the cached-operator route (default), the direct
// four-slot tensor derivation, and the eigenbasis formula
// 2 sum_{a<b} (lambda_a - lambda_b)^2 g(L Xi_a, Xi_b)^2.
double lr_norm_sq(const LieElement& L, const KahlerCurvature& R);
double lr_norm_sq_tensor(const LieElement& L, const KahlerCurvature& R);
double lr_norm_sq_eigen(const LieElement& L, const KahlerCurvature& R);

// |R^u|^2 = sum over the u(n) basis of |Xi R|^2, with the same three routes.
double hat_norm_sq(const KahlerCurvature& R);
double hat_norm_sq_tensor(const KahlerCurvature& R);
double hat_norm_sq_eigen(const KahlerCurvature& R);

// Exact isotropic curvature data at n = 2, in the adapted frame
// (e1, e2, e3, e4) = (e_1, J e_1, e_2, J e_2). `combinations` holds the four
// coordinate-frame isotropic curvatures that are not identically zero for a
// Kahler operator; min_isotropic is the exact minimum over all orthonormal
// frames (sum of the two lowest eigenvalues of the compressions to the
// self-dual and anti-self-dual halves, doubled).
struct IsotropicCurvaturesN2 {
  double r1313 = 0, r1414 = 0, r2323 = 0, r2424 = 0, r1234 = 0;
  std::array<double, 4> combinations{};
  double min_isotropic = 0;
};

IsotropicCurvaturesN2 isotropic_curvatures_n2(const KahlerCurvature& R);

// Sampled minimum of R(X, JX, Y, JY) over unit X and unit Y orthogonal to
// span{X, JX}. A heuristic upper bound on the true minimum.
double min_orthogonal_bisectional(const KahlerCurvature& R, int trials,
                                  std::uint64_t seed);

}  // namespace kco
