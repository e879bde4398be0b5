#include "kco/curvature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "kco/rng.hpp"

namespace kco {

namespace {
constexpr double kSqrt2Inv = 0.70710678118654752440084436210485;

// Nonzero entries of the matrix u(x, y)_{ij} = a_i(x) conj(a_j(y)) -
// a_i(y) conj(a_j(x)) for a raw wedge basis 2-vector v_a ^ v_b (a < b),
// where a_i(v) are the holomorphic coordinates. At most two entries.
struct UPattern {
  int count = 0;
  int ij[2][2];  // (row, col), 0-based complex indices
  cplx val[2];
};

UPattern u_pattern(int n, int a, int b) {
  UPattern P;
  if (a < n && b < n) {  // e_{a+1} ^ e_{b+1}
    P.count = 2;
    P.ij[0][0] = a; P.ij[0][1] = b; P.val[0] = cplx(0.5, 0.0);
    P.ij[1][0] = b; P.ij[1][1] = a; P.val[1] = cplx(-0.5, 0.0);
  } else if (a < n && b >= n) {  // e_{a+1} ^ f_{b-n+1}
    const int i = a, j = b - n;
    if (i == j) {
      P.count = 1;
      P.ij[0][0] = i; P.ij[0][1] = i; P.val[0] = cplx(0.0, -1.0);
    } else {
      P.count = 2;
      P.ij[0][0] = i; P.ij[0][1] = j; P.val[0] = cplx(0.0, -0.5);
      P.ij[1][0] = j; P.ij[1][1] = i; P.val[1] = cplx(0.0, -0.5);
    }
  } else {  // f ^ f
    const int i = a - n, j = b - n;
    P.count = 2;
    P.ij[0][0] = i; P.ij[0][1] = j; P.val[0] = cplx(0.5, 0.0);
    P.ij[1][0] = j; P.ij[1][1] = i; P.val[1] = cplx(-0.5, 0.0);
  }
  return P;
}

// u(n)-basis coordinates over raw pairs, rows = basis elements.
const Eigen::MatrixXd& u_basis_pair_matrix(int n) {
  static std::mutex mu;
  static std::map<int, Eigen::MatrixXd> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Eigen::MatrixXd B(u_dim(n), so_dim(n));
  int row = 0;
  for (const auto& xi : u_basis(n)) {
    B.row(row++) = lie_to_pair_coords(xi).transpose();
  }
  return cache.emplace(n, std::move(B)).first->second;
}

double rel_scale(const Eigen::MatrixXd& M) {
  return std::max(1.0, M.lpNorm<Eigen::Infinity>());
}

}  // namespace

int sym_pair_dim(int n) { return n * (n + 1) / 2; }

int sym_pair_rank(int n, int i, int k) {
  return i * n - i * (i - 1) / 2 + (k - i);
}

KahlerCurvature KahlerCurvature::build_from_herm(int n, Eigen::MatrixXcd herm) {
  KahlerCurvature R;
  R.n_ = n;
  R.herm_ = std::move(herm);

  const int D = so_dim(n);
  R.lam2_.resize(D, D);
  std::vector<UPattern> pats(D);
  std::vector<std::pair<int, int>> raw(D);
  for (int a = 0, idx = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b, ++idx) {
      pats[idx] = u_pattern(n, a, b);
      raw[idx] = {a, b};
    }
  }
  for (int P1 = 0; P1 < D; ++P1) {
    for (int P2 = P1; P2 < D; ++P2) {
      cplx acc(0.0, 0.0);
      const UPattern& u1 = pats[P1];
      const UPattern& u2 = pats[P2];
      for (int s = 0; s < u1.count; ++s) {
        const int i = u1.ij[s][0], j = u1.ij[s][1];
        for (int t = 0; t < u2.count; ++t) {
          const int k = u2.ij[t][0], l = u2.ij[t][1];
          const int rik = sym_pair_rank(n, std::min(i, k), std::max(i, k));
          const int rjl = sym_pair_rank(n, std::min(j, l), std::max(j, l));
          acc += R.herm_(rik, rjl) * u1.val[s] * u2.val[t];
        }
      }
      const double v = -acc.real();
      R.lam2_(P1, P2) = v;
      R.lam2_(P2, P1) = v;
    }
  }

  const Eigen::MatrixXd B = u_basis_pair_matrix(n);
  R.op_ = B * R.lam2_ * B.transpose();
  R.op_ = 0.5 * (R.op_ + R.op_.transpose().eval());
  return R;
}

KahlerCurvature KahlerCurvature::from_hermitian(int n,
                                                const Eigen::MatrixXcd& herm) {
  const int N = sym_pair_dim(n);
  if (herm.rows() != N || herm.cols() != N) {
    throw DimensionMismatch("from_hermitian: matrix must be n(n+1)/2 square");
  }
  const double scale =
      std::max(1.0, herm.cwiseAbs().maxCoeff());
  if ((herm - herm.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw NonHermitianInput("from_hermitian: input is not Hermitian");
  }
  return build_from_herm(n, 0.5 * (herm + herm.adjoint().eval()));
}

namespace {

// Complex-bilinear evaluation helpers for the hermitian extraction.
Eigen::VectorXcd complex_pair_vector(int n, const Eigen::VectorXcd& x,
                                     const Eigen::VectorXcd& y) {
  const int D = so_dim(n);
  Eigen::VectorXcd v(D);
  int idx = 0;
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b, ++idx) {
      v[idx] = x[a] * y[b] - x[b] * y[a];
    }
  }
  return v;
}

Eigen::MatrixXcd herm_from_lambda2(int n, const Eigen::MatrixXd& lam2) {
  const int N = sym_pair_dim(n);
  const int m = 2 * n;
  std::vector<Eigen::VectorXcd> Z(n), Zbar(n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(m);
    z[i] = cplx(kSqrt2Inv, 0.0);
    z[n + i] = cplx(0.0, -kSqrt2Inv);
    Z[i] = z;
    Zbar[i] = z.conjugate();
  }
  Eigen::MatrixXcd H(N, N);
  const Eigen::MatrixXcd lam2c = lam2.cast<cplx>();
  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      const int row = sym_pair_rank(n, i, k);
      for (int j = 0; j < n; ++j) {
        for (int l = j; l < n; ++l) {
          const int col = sym_pair_rank(n, j, l);
          const Eigen::VectorXcd w1 = complex_pair_vector(n, Z[i], Zbar[j]);
          const Eigen::VectorXcd w2 = complex_pair_vector(n, Z[k], Zbar[l]);
          // H = -R(Z_i, Zbar_j, Z_k, Zbar_l)
          H(row, col) = -(w1.transpose() * lam2c * w2)(0, 0);
        }
      }
    }
  }
  // symmetrize away the floating-point Hermitian residue
  return 0.5 * (H + H.adjoint().eval());
}

}  // namespace

KahlerCurvature KahlerCurvature::from_operator_matrix(int n,
                                                      const Eigen::MatrixXd& M) {
  if (M.rows() != n * n || M.cols() != n * n) {
    throw DimensionMismatch("from_operator_matrix: matrix must be n^2 square");
  }
  const double scale = rel_scale(M);
  if ((M - M.transpose()).lpNorm<Eigen::Infinity>() > 1e-10 * scale) {
    throw NonHermitianInput("from_operator_matrix: matrix is not symmetric");
  }
  const Eigen::MatrixXd B = u_basis_pair_matrix(n);
  const Eigen::MatrixXd lam2 = B.transpose() * M * B;
  const double defect = bianchi_defect_lambda2(n, lam2);
  if (defect > 1e-10 * scale) {
    throw BianchiViolation(defect);
  }
  KahlerCurvature R = build_from_herm(n, herm_from_lambda2(n, lam2));
  if ((R.op_ - M).lpNorm<Eigen::Infinity>() > 1e-8 * scale) {
    throw BianchiViolation(
        (R.op_ - M).lpNorm<Eigen::Infinity>());  // not a Kahler operator
  }
  return R;
}

double KahlerCurvature::tensor(int a, int b, int c, int d) const {
  if (a == b || c == d) return 0.0;
  double s = 1.0;
  if (a > b) { std::swap(a, b); s = -s; }
  if (c > d) { std::swap(c, d); s = -s; }
  return s * lam2_(raw_pair_rank(n_, a, b), raw_pair_rank(n_, c, d));
}

double KahlerCurvature::tensor(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& z,
                               const Eigen::VectorXd& w) const {
  const int m = 2 * n_;
  Eigen::VectorXd u(so_dim(n_)), v(so_dim(n_));
  int idx = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b, ++idx) {
      u[idx] = x[a] * y[b] - x[b] * y[a];
      v[idx] = z[a] * w[b] - z[b] * w[a];
    }
  }
  return u.dot(lam2_ * v);
}

double KahlerCurvature::inner(const KahlerCurvature& o) const {
  if (n_ != o.n_) throw DimensionMismatch("KahlerCurvature::inner: mismatched n");
  return (op_.array() * o.op_.array()).sum();
}

KahlerCurvature KahlerCurvature::operator+(const KahlerCurvature& o) const {
  if (n_ != o.n_) throw DimensionMismatch("KahlerCurvature +: mismatched n");
  return build_from_herm(n_, herm_ + o.herm_);
}

KahlerCurvature KahlerCurvature::operator-(const KahlerCurvature& o) const {
  if (n_ != o.n_) throw DimensionMismatch("KahlerCurvature -: mismatched n");
  return build_from_herm(n_, herm_ - o.herm_);
}

KahlerCurvature KahlerCurvature::scaled(double s) const {
  return build_from_herm(n_, s * herm_);
}

const Eigen::MatrixXd& to_operator_matrix(const KahlerCurvature& R) {
  return R.operator_matrix();
}

double bianchi_defect_lambda2(int n, const Eigen::MatrixXd& lam2) {
  const int m = 2 * n;
  auto ev = [&](int a, int b, int c, int d) -> double {
    if (a == b || c == d) return 0.0;
    double s = 1.0;
    if (a > b) { std::swap(a, b); s = -s; }
    if (c > d) { std::swap(c, d); s = -s; }
    return s * lam2(raw_pair_rank(n, a, b), raw_pair_rank(n, c, d));
  };
  double acc = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          const double cyc = ev(a, b, c, d) + ev(b, c, a, d) + ev(c, a, b, d);
          acc += cyc * cyc;
        }
      }
    }
  }
  return std::sqrt(acc);
}

double bianchi_defect(const KahlerCurvature& R) {
  return bianchi_defect_lambda2(R.n(), R.lambda2_form());
}

Eigen::MatrixXd ricci(const KahlerCurvature& R) {
  const int m = 2 * R.n();
  Eigen::MatrixXd ric(m, m);
  for (int r = 0; r < m; ++r) {
    for (int s = r; s < m; ++s) {
      double acc = 0.0;
      for (int a = 0; a < m; ++a) acc += R.tensor(r, a, s, a);
      ric(r, s) = acc;
      ric(s, r) = acc;
    }
  }
  return ric;
}

double scalar_curvature(const KahlerCurvature& R) { return ricci(R).trace(); }

CurvatureDecomposition decompose(const KahlerCurvature& R) {
  const int n = R.n();
  CurvatureDecomposition out;
  const Eigen::MatrixXd ric = ricci(R);
  out.scal = ric.trace();

  const double t = out.scal / (4.0 * n * (n + 1));
  out.r_ring = R - model_cpn(n).scaled(t);
  out.r_ring_norm_sq = out.r_ring.norm_sq();

  const Eigen::MatrixXd ric0 =
      ric - (out.scal / (2.0 * n)) * Eigen::MatrixXd::Identity(2 * n, 2 * n);
  out.ric0_norm_sq = ric0.squaredNorm();

  // trace-free Ricci part: Hermitian matrix S(i,j) = Ric0(Z_i, Zbar_j),
  // spread over Sym^2 C^n and scaled so that its Ricci equals Ric0
  Eigen::MatrixXcd S(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double re = 0.5 * (ric0(i, j) + ric0(n + i, n + j));
      const double im = 0.5 * (ric0(i, n + j) - ric0(n + i, j));
      S(i, j) = cplx(re, im);
    }
  }
  const int N = sym_pair_dim(n);
  Eigen::MatrixXcd H0 = Eigen::MatrixXcd::Zero(N, N);
  auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  for (int i = 0; i < n; ++i) {
    for (int k = i; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int l = j; l < n; ++l) {
          H0(sym_pair_rank(n, i, k), sym_pair_rank(n, j, l)) =
              delta(i, j) * S(k, l) + delta(k, l) * S(i, j) +
              delta(i, l) * S(k, j) + delta(k, j) * S(i, l);
        }
      }
    }
  }
  out.r0 = KahlerCurvature::from_hermitian(n, H0 / double(n + 2));
  out.r0_norm_sq = out.r0.norm_sq();
  out.bochner = out.r_ring - out.r0;
  out.bochner_norm_sq = out.bochner.norm_sq();
  return out;
}

KahlerCurvature r_ring(const KahlerCurvature& R) {
  const double s = scalar_curvature(R);
  const int n = R.n();
  return R - model_cpn(n).scaled(s / (4.0 * n * (n + 1)));
}

Spectrum spectrum(const KahlerCurvature& R) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.operator_matrix());
  return Spectrum{es.eigenvalues()};
}

KahlerCurvature model_cpn(int n) { return model_cp_k_flat(n, n); }

KahlerCurvature model_cp_k_flat(int n, int k) {
  if (k < 0 || k > n) throw DimensionMismatch("model_cp_k_flat: k out of range");
  const int N = sym_pair_dim(n);
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(N, N);
  // Fubini-Study with holomorphic sectional curvature 4 on the first k
  // coordinates, flat in the rest: H_{(ik),(jl)} = 2 (d_ij d_kl + d_il d_kj)
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      const int r = sym_pair_rank(n, i, j);
      H(r, r) = (i == j) ? 4.0 : 2.0;
    }
  }
  return KahlerCurvature::from_hermitian(n, H);
}

std::vector<LieElement> xi_basis_n2() {
  const int n = 2;
  std::vector<LieElement> xs(6, LieElement(n));
  // 1+ : (I_11 + I_22)/sqrt2
  xs[0].coeffs[d_basis_index(n, 1)] = kSqrt2Inv;
  xs[0].coeffs[d_basis_index(n, 2)] = kSqrt2Inv;
  // 2+ : Rperp_12
  xs[1].coeffs[rperp_basis_index(n, 1, 2)] = 1.0;
  // 3+ : Iperp_12
  xs[2].coeffs[iperp_basis_index(n, 1, 2)] = 1.0;
  // 1- : (I_11 - I_22)/sqrt2
  xs[3].coeffs[d_basis_index(n, 1)] = kSqrt2Inv;
  xs[3].coeffs[d_basis_index(n, 2)] = -kSqrt2Inv;
  // 2- : R_12
  xs[4].coeffs[r_basis_index(n, 1, 2)] = 1.0;
  // 3- : I_12
  xs[5].coeffs[i_basis_index(n, 1, 2)] = 1.0;
  return xs;
}

KahlerCurvature model_n2_from_mu(double mu1p, double mu2p, double mu3p,
                                 double mu1m, double mu2m, double mu3m) {
  const double scale =
      std::max({1.0, std::abs(mu1p), std::abs(mu1m), std::abs(mu2m),
                std::abs(mu3m)});
  if (std::abs(mu2p) > 1e-12 * scale || std::abs(mu3p) > 1e-12 * scale) {
    throw DimensionMismatch(
        "model_n2_from_mu: mu_{2,+} and mu_{3,+} must vanish for the operator"
        " to annihilate u(2)-perp");
  }
  const double trp = mu1p + mu2p + mu3p;
  const double trm = mu1m + mu2m + mu3m;
  if (std::abs(trp - trm) > 1e-10 * scale) {
    throw BianchiViolation(std::abs(trp - trm));
  }
  const int n = 2;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4, 4);
  M(r_basis_index(n, 1, 2), r_basis_index(n, 1, 2)) = mu2m;
  M(i_basis_index(n, 1, 2), i_basis_index(n, 1, 2)) = mu3m;
  const int d1 = d_basis_index(n, 1), d2 = d_basis_index(n, 2);
  M(d1, d1) = M(d2, d2) = 0.5 * (mu1p + mu1m);
  M(d1, d2) = M(d2, d1) = 0.5 * (mu1p - mu1m);
  return KahlerCurvature::from_operator_matrix(n, M);
}

KahlerCurvature random_kahler(int n, std::uint64_t seed) {
  Rng rng(seed);
  const int N = sym_pair_dim(n);
  Eigen::MatrixXcd G(N, N);
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) G(r, c) = rng.normal_complex();
  }
  return KahlerCurvature::from_hermitian(n, 0.5 * (G + G.adjoint().eval()));
}

namespace {

Eigen::MatrixXd lr_operator(const LieElement& L, const KahlerCurvature& R) {
  const Eigen::MatrixXd B = ad_matrix_u(L);
  const Eigen::MatrixXd& M = R.operator_matrix();
  return -(B.transpose() * M + M * B);
}

}  // namespace

KahlerCurvature act_on_curvature(const LieElement& L, const KahlerCurvature& R) {
  if (L.n != R.n()) throw DimensionMismatch("act_on_curvature: mismatched n");
  if (!is_u_supported(L)) {
    throw DimensionMismatch("act_on_curvature: L must lie in the u(n) block");
  }
  return KahlerCurvature::from_operator_matrix(R.n(), lr_operator(L, R));
}

double lr_norm_sq(const LieElement& L, const KahlerCurvature& R) {
  return lr_operator(L, R).squaredNorm();
}

double lr_norm_sq_tensor(const LieElement& L, const KahlerCurvature& R) {
  const int n = R.n();
  const int m = 2 * n;
  const Eigen::MatrixXd A = as_endomorphism(L);
  double acc = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          double t = 0.0;
          for (int r = 0; r < m; ++r) {
            t -= A(r, a) * R.tensor(r, b, c, d);
            t -= A(r, b) * R.tensor(a, r, c, d);
            t -= A(r, c) * R.tensor(a, b, r, d);
            t -= A(r, d) * R.tensor(a, b, c, r);
          }
          acc += t * t;
        }
      }
    }
  }
  return acc;
}

double lr_norm_sq_eigen(const LieElement& L, const KahlerCurvature& R) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.operator_matrix());
  const Eigen::MatrixXd& W = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::MatrixXd K = W.transpose() * ad_matrix_u(L) * W;
  const int ud = static_cast<int>(lam.size());
  double acc = 0.0;
  for (int a = 0; a < ud; ++a) {
    for (int b = a + 1; b < ud; ++b) {
      const double d = lam[a] - lam[b];
      acc += 2.0 * d * d * K(b, a) * K(b, a);
    }
  }
  return acc;
}

double hat_norm_sq(const KahlerCurvature& R) {
  const auto& sc = structure_constants(R.n());
  const Eigen::MatrixXd& M = R.operator_matrix();
  double acc = 0.0;
  for (const auto& B : sc.ad) {
    acc += (B.transpose() * M + M * B).squaredNorm();
  }
  return acc;
}

double hat_norm_sq_tensor(const KahlerCurvature& R) {
  double acc = 0.0;
  for (const auto& xi : u_basis(R.n())) {
    acc += lr_norm_sq_tensor(xi, R);
  }
  return acc;
}

double hat_norm_sq_eigen(const KahlerCurvature& R) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.operator_matrix());
  const Eigen::MatrixXd& W = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const auto& sc = structure_constants(R.n());
  const int ud = static_cast<int>(lam.size());
  double acc = 0.0;
  for (const auto& B : sc.ad) {
    const Eigen::MatrixXd K = W.transpose() * B * W;
    for (int a = 0; a < ud; ++a) {
      for (int b = a + 1; b < ud; ++b) {
        const double d = lam[a] - lam[b];
        acc += 2.0 * d * d * K(b, a) * K(b, a);
      }
    }
  }
  return acc;
}

IsotropicCurvaturesN2 isotropic_curvatures_n2(const KahlerCurvature& R) {
  if (R.n() != 2) {
    throw DimensionMismatch("isotropic_curvatures_n2: exact test needs n = 2");
  }
  IsotropicCurvaturesN2 out;
  // adapted frame (e1, e2, e3, e4) = (e_1, f_1, e_2, f_2); real indices
  const int v1 = 0, v2 = 2, v3 = 1, v4 = 3;
  out.r1313 = R.tensor(v1, v3, v1, v3);
  out.r1414 = R.tensor(v1, v4, v1, v4);
  out.r2323 = R.tensor(v2, v3, v2, v3);
  out.r2424 = R.tensor(v2, v4, v2, v4);
  out.r1234 = R.tensor(v1, v2, v3, v4);

  const auto xs = xi_basis_n2();
  Eigen::MatrixXd Xp(so_dim(2), 3), Xm(so_dim(2), 3);
  for (int c = 0; c < 3; ++c) {
    Xp.col(c) = lie_to_pair_coords(xs[c]);
    Xm.col(c) = lie_to_pair_coords(xs[3 + c]);
  }
  const Eigen::MatrixXd Qp = Xp.transpose() * R.lambda2_form() * Xp;
  const Eigen::MatrixXd Qm = Xm.transpose() * R.lambda2_form() * Xm;

  out.combinations[0] = 2.0 * (Qp(0, 0) + Qp(1, 1));
  out.combinations[1] = 2.0 * (Qm(1, 1) + Qm(2, 2));
  out.combinations[2] = 2.0 * (Qm(0, 0) + Qm(2, 2));
  out.combinations[3] = 2.0 * (Qm(0, 0) + Qm(1, 1));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ep(Qp), em(Qm);
  const auto& lp = ep.eigenvalues();
  const auto& lm = em.eigenvalues();
  out.min_isotropic = 2.0 * std::min(lp[0] + lp[1], lm[0] + lm[1]);
  return out;
}

double min_orthogonal_bisectional(const KahlerCurvature& R, int trials,
                                  std::uint64_t seed) {
  const int n = R.n();
  const int m = 2 * n;
  if (n < 2) {
    throw DimensionMismatch("min_orthogonal_bisectional: needs n >= 2");
  }
  Rng rng(seed);
  const Eigen::MatrixXd J = ComplexModel(n).j_matrix();
  double best = std::numeric_limits<double>::infinity();
  auto draw = [&](Eigen::VectorXd& v) {
    v.resize(m);
    for (int i = 0; i < m; ++i) v[i] = rng.normal();
  };
  Eigen::VectorXd x, y;
  for (int t = 0; t < trials; ++t) {
    draw(x);
    if (x.norm() < 1e-8) continue;
    x.normalize();
    const Eigen::VectorXd jx = J * x;
    draw(y);
    y -= y.dot(x) * x + y.dot(jx) * jx;
    if (y.norm() < 1e-6) continue;
    y.normalize();
    const Eigen::VectorXd jy = J * y;
    best = std::min(best, R.tensor(x, jx, y, jy));
  }
  return best;
}

}  // namespace kco
