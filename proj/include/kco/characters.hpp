#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "kco/errors.hpp"

namespace kco {

using cplx = std::complex<double>;

// A point of the maximal torus: unit-modulus entries, pairwise separated by
// at least 1e-3 so alternant quotients stay well conditioned.
struct TorusPoint {
  Eigen::VectorXcd eps;

  int n() const { return static_cast<int>(eps.size()); }
  void validate() const;  // throws NearSingularTorusPoint
};

TorusPoint random_torus_point(int n, std::uint64_t seed);

// k-th elementary symmetric polynomial of the entries; 0 for k < 0 or k > n.
cplx elementary_symmetric(const TorusPoint& t, int k);

// chi^{p,q} = sigma_p conj(sigma_q), the torus character of Lambda^{p,q}.
cplx chi_pq(const TorusPoint& t, int p, int q);

// chi^{p,q}_k = chi^{p-k,q-k} - chi^{p-k-1,q-k-1} (telescoped).
cplx chi_pq_k(const TorusPoint& t, int p, int q, int k);

// Generalized Vandermonde determinant det(eps_i^{l_j}); exponents may be
// negative (entries are inverted exactly).
cplx alternant(const std::vector<int>& exponents, const TorusPoint& t);

// prod_{i<j} (eps_i - eps_j).
cplx vandermonde(const TorusPoint& t);

// Quotient character chi_{f_1,...,f_n} = alternant(f_j + n - j) / Delta for
// a weakly decreasing integer signature.
cplx weyl_character(const std::vector<int>& signature, const TorusPoint& t);

// The signature (1,..,1,0,..,0,-1,..,-1) whose Weyl character equals
// chi^{p,q}_k: p-k ones and q-k minus-ones. Empty when p+q-2k > n (the
// module is zero and has no dominant signature).
std::optional<std::vector<int>> chi_pq_k_signature(int n, int p, int q, int k);

// tau_{a,b} = sigma_{n-a+1} sigma_{n-b} - sigma_{n-a} sigma_{n-b+1}.
cplx tau(const TorusPoint& t, int a, int b);

// | tau_{a,b} + (1/Delta) |eps^{n+1},..,hat{eps^b},..,hat{eps^a},..,1| |:
// the two-row Laplace expansion identity, evaluated both ways. Near zero.
double verify_tau_identity(const TorusPoint& t, int a, int b);

// dim Lambda^{p,q}_k. The telescoped binomial value
// C(n,p-k) C(n,q-k) - C(n,p-k-1) C(n,q-k-1), with the degenerate modules
// (those annihilated by the k-th Lefschetz power, p+q-k > n) floored to 0.
long long dim_pqk(int n, int p, int q, int k);

}  // namespace kco
