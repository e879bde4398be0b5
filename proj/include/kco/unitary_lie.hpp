#pragma once

#include <Eigen/Dense>
#include <vector>

#include "kco/complex_exterior.hpp"

namespace kco {

// An element of so(2n) = Lambda^2 R^{2n}, stored over the ordered orthonormal
// basis: R_ij (lex i<j), I_ij (lex i<j), I_ii (ascending) spanning u(n),
// followed by Rperp_ij (lex) and Iperp_ij (lex) spanning u(n)^perp.
struct LieElement {
  int n = 0;
  Eigen::VectorXd coeffs;

  LieElement() = default;
  explicit LieElement(int n_);

  double norm_sq() const { return coeffs.squaredNorm(); }
};

int u_dim(int n);   // n^2
int so_dim(int n);  // n(2n-1)

// Index of a basis element inside the coefficient vector.
int r_basis_index(int n, int i, int j);      // R_ij, i<j
int i_basis_index(int n, int i, int j);      // I_ij, i<j
int d_basis_index(int n, int i);             // I_ii
int rperp_basis_index(int n, int i, int j);  // Rperp_ij
int iperp_basis_index(int n, int i, int j);  // Iperp_ij

std::vector<LieElement> u_basis(int n);
std::vector<LieElement> so_basis(int n);

bool is_u_supported(const LieElement& L, double tol = 1e-12);

// Skew endomorphism of R^{2n} under the identification x^y : z -> g(y,z)x -
// g(x,z)y (sign fixed so that the dual action sends dx^i to -dy^j under
// e_i^f_j).
Eigen::MatrixXd as_endomorphism(const LieElement& L);

// Inverse of as_endomorphism.
LieElement from_endomorphism(int n, const Eigen::MatrixXd& A);

// Coordinates over the raw basis {v_a ^ v_b : a < b} of Lambda^2 (real
// indices 0..2n-1 ordered e_1..e_n, f_1..f_n), and back.
Eigen::VectorXd lie_to_pair_coords(const LieElement& L);
LieElement pair_to_lie_coords(int n, const Eigen::VectorXd& v);

// Lexicographic rank of the raw pair (a < b) among all 2n choose 2 pairs.
int raw_pair_rank(int n, int a, int b);

// Complex n x n matrix U of the induced action on (1,0)-forms:
// (L) dz^i = sum_j U(i,j) dz^j. Requires L in the u(n) block; the action on
// (0,1)-forms is conj(U).
Eigen::MatrixXcd uaction_matrix(const LieElement& L);

// Derivation action of L on a (p,q)-form. L must be supported in the u(n)
// block (the general so(2n) action does not preserve bidegree).
PQForm act_on_form(const LieElement& L, const PQForm& phi);

// Actions of all n^2 u(n) basis elements on phi, in basis order.
std::vector<PQForm> u_actions_on_form(const PQForm& phi);

// |phi^u|^2 = sum over the u(n) basis of |Xi phi|^2.
double hat_norm_sq(const PQForm& phi);

LieElement bracket(const LieElement& a, const LieElement& b);

// Structure constants of u(n): c[gamma][alpha][beta] = g([Xi_g, Xi_a], Xi_b).
// ad[gamma] is the matrix of ad(Xi_gamma) on u(n) coordinates; triples lists
// the nonzero entries (gamma, alpha, beta, value).
struct StructureConstants {
  int n = 0;
  std::vector<Eigen::MatrixXd> ad;
  std::vector<std::tuple<int, int, int, double>> triples;
};

const StructureConstants& structure_constants(int n);

// Matrix of ad(L) restricted to u(n), for L in the u(n) block.
Eigen::MatrixXd ad_matrix_u(const LieElement& L);

}  // namespace kco
