#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "kco/errors.hpp"

namespace kco {

using cplx = std::complex<double>;

// The model space: V = R^{2n} with orthonormal basis e_1..e_n, f_1..f_n,
// f_i = J e_i. Real indices are 0-based: e_i -> i-1, f_i -> n+i-1.
struct ComplexModel {
  int n;

  explicit ComplexModel(int n_) : n(n_) {
    if (n < 1) throw DimensionMismatch("ComplexModel: n must be >= 1");
  }

  int real_dim() const { return 2 * n; }
  int e_index(int i) const { return i - 1; }      // i in 1..n
  int f_index(int i) const { return n + i - 1; }  // i in 1..n

  // 2n x 2n matrix of the complex structure: J e_i = f_i, J f_i = -e_i.
  Eigen::MatrixXd j_matrix() const;
};

// A pair (I, J) of strictly increasing multi-indices labelling the basis
// (p,q)-form dz^I ^ dzbar^J.
struct MultiIndexPair {
  std::vector<int> I;
  std::vector<int> J;
};

// A (p,q)-form on C^n, stored as complex coefficients over the basis
// {dz^I ^ dzbar^J} in lexicographic order on (I, then J). The basis form
// dz^I ^ dzbar^J has squared norm 2^{p+q} under hermitian_inner.
struct PQForm {
  int n = 0, p = 0, q = 0;
  Eigen::VectorXcd coeffs;

  PQForm() = default;
  PQForm(int n_, int p_, int q_);

  long long dim() const { return coeffs.size(); }
  bool same_shape(const PQForm& o) const {
    return n == o.n && p == o.p && q == o.q;
  }
};

// Dimension of Lambda^{p,q}: C(n,p) C(n,q).
long long pq_dim(int n, int p, int q);

// Ordered basis labels for Lambda^{p,q}; index of (I,J) in a coefficient
// vector is rank(I) * C(n,q) + rank(J).
std::vector<MultiIndexPair> basis_enumeration(int n, int p, int q);
long long pq_index(int n, int p, int q, const std::vector<int>& I,
                   const std::vector<int>& J);

// Single basis form with unit coefficient.
PQForm basis_form(int n, int p, int q, const std::vector<int>& I,
                  const std::vector<int>& J);

// Exterior product. Sign convention: all dz factors are stored before all
// dzbar factors, transposition counts are taken against that layout.
PQForm wedge(const PQForm& a, const PQForm& b);

// <a, b> = g(a, conj b) with g extended complex-bilinearly from the
// determinant inner product on real exterior powers. Sesquilinear (conjugate
// linear in the second slot), positive definite.
cplx hermitian_inner(const PQForm& a, const PQForm& b);
double norm_sq(const PQForm& a);

// The Kahler form w = (i/2) sum_i dz^i ^ dzbar^i and its powers.
PQForm kahler_form(int n);
PQForm kahler_power(int n, int k);

// Lefschetz map L: phi -> w ^ phi and its adjoint under hermitian_inner.
PQForm lefschetz(const PQForm& phi);
PQForm lefschetz_dual(const PQForm& phi);

// Matrix of the Lefschetz map Lambda^{p,q} -> Lambda^{p+1,q+1} in the
// coefficient bases (cached per (n,p,q)).
const Eigen::MatrixXcd& lefschetz_matrix(int n, int p, int q);

// Orthogonal projector onto Lambda^{p,q}_k, the image under L^k of the
// primitive forms of bidegree (p-k, q-k). Idempotent and self-adjoint;
// projectors for distinct k are mutually annihilating and sum to the
// identity. Built numerically: kernel of the dual Lefschetz map, pushed up
// by L^k and orthonormalized with singular value threshold 1e-7.
Eigen::MatrixXcd component_projector(int n, int p, int q, int k);

// Numerical rank of the projector (its trace, rounded).
long long projector_rank(const Eigen::MatrixXcd& P);

// phi with its omega^p component removed: for p == q the orthogonal
// projection phi - (<phi, w^p>/<w^p, w^p>) w^p, otherwise phi unchanged.
PQForm ring_reduce(const PQForm& phi);

// Linear combination helpers.
PQForm operator+(const PQForm& a, const PQForm& b);
PQForm operator-(const PQForm& a, const PQForm& b);
PQForm operator*(cplx s, const PQForm& a);

}  // namespace kco
