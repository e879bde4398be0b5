#include "kco/complex_exterior.hpp"

#include <Eigen/SVD>
#include <map>
#include <mutex>

#include "kco/multiindex.hpp"

namespace kco {

Eigen::MatrixXd ComplexModel::j_matrix() const {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    J(f_index(i), e_index(i)) = 1.0;   // J e_i = f_i
    J(e_index(i), f_index(i)) = -1.0;  // J f_i = -e_i
  }
  return J;
}

long long pq_dim(int n, int p, int q) { return binomial(n, p) * binomial(n, q); }

PQForm::PQForm(int n_, int p_, int q_) : n(n_), p(p_), q(q_) {
  if (n < 1) throw DimensionMismatch("PQForm: n must be >= 1");
  if (p < 0 || p > n || q < 0 || q > n) {
    throw DimensionMismatch("PQForm: bidegree out of range");
  }
  coeffs = Eigen::VectorXcd::Zero(pq_dim(n, p, q));
}

std::vector<MultiIndexPair> basis_enumeration(int n, int p, int q) {
  if (n < 1 || p < 0 || p > n || q < 0 || q > n) {
    throw DimensionMismatch("basis_enumeration: degrees out of range");
  }
  const auto& Is = subsets_lex(n, p);
  const auto& Js = subsets_lex(n, q);
  std::vector<MultiIndexPair> out;
  out.reserve(Is.size() * Js.size());
  for (const auto& I : Is) {
    for (const auto& J : Js) out.push_back({I, J});
  }
  return out;
}

long long pq_index(int n, int p, int q, const std::vector<int>& I,
                   const std::vector<int>& J) {
  (void)p;
  return subset_rank(n, I) * binomial(n, q) + subset_rank(n, J);
}

PQForm basis_form(int n, int p, int q, const std::vector<int>& I,
                  const std::vector<int>& J) {
  PQForm out(n, p, q);
  out.coeffs[pq_index(n, p, q, I, J)] = 1.0;
  return out;
}

PQForm wedge(const PQForm& a, const PQForm& b) {
  if (a.n != b.n) throw DimensionMismatch("wedge: mismatched n");
  const int n = a.n;
  const int p = a.p + b.p, q = a.q + b.q;
  if (p > n || q > n) throw DimensionMismatch("wedge: degree overflow");
  PQForm out(n, p, q);

  const auto& Ia = subsets_lex(n, a.p);
  const auto& Ja = subsets_lex(n, a.q);
  const auto& Ib = subsets_lex(n, b.p);
  const auto& Jb = subsets_lex(n, b.q);
  const long long cqa = binomial(n, a.q);
  const long long cqb = binomial(n, b.q);

  // crossing sign: dzbar^{Ja} moves past dz^{Ib}
  const int cross = ((a.q * b.p) % 2 == 0) ? 1 : -1;

  std::vector<int> mI, mJ;
  for (long long ia = 0; ia < static_cast<long long>(Ia.size()); ++ia) {
    for (long long ja = 0; ja < static_cast<long long>(Ja.size()); ++ja) {
      const cplx ca = a.coeffs[ia * cqa + ja];
      if (ca == cplx(0.0, 0.0)) continue;
      for (long long ib = 0; ib < static_cast<long long>(Ib.size()); ++ib) {
        const int sI = merge_sign(Ia[ia], Ib[ib], &mI);
        if (sI == 0) continue;
        for (long long jb = 0; jb < static_cast<long long>(Jb.size()); ++jb) {
          const cplx cb = b.coeffs[ib * cqb + jb];
          if (cb == cplx(0.0, 0.0)) continue;
          const int sJ = merge_sign(Ja[ja], Jb[jb], &mJ);
          if (sJ == 0) continue;
          const double s = static_cast<double>(sI * sJ * cross);
          out.coeffs[pq_index(n, p, q, mI, mJ)] += s * ca * cb;
        }
      }
    }
  }
  return out;
}

cplx hermitian_inner(const PQForm& a, const PQForm& b) {
  if (!a.same_shape(b)) throw DimensionMismatch("hermitian_inner: shape mismatch");
  const double scale = std::pow(2.0, a.p + a.q);
  return scale * b.coeffs.dot(a.coeffs);  // sum a_i conj(b_i)
}

double norm_sq(const PQForm& a) { return hermitian_inner(a, a).real(); }

PQForm kahler_form(int n) {
  PQForm w(n, 1, 1);
  for (int i = 1; i <= n; ++i) {
    w.coeffs[pq_index(n, 1, 1, {i}, {i})] = cplx(0.0, 0.5);
  }
  return w;
}

PQForm kahler_power(int n, int k) {
  if (k < 0 || k > n) throw DimensionMismatch("kahler_power: k out of range");
  PQForm acc(n, 0, 0);
  acc.coeffs[0] = 1.0;
  const PQForm w = kahler_form(n);
  for (int t = 0; t < k; ++t) acc = wedge(w, acc);
  return acc;
}

PQForm lefschetz(const PQForm& phi) {
  if (phi.p + 1 > phi.n || phi.q + 1 > phi.n) {
    throw DimensionMismatch("lefschetz: degree overflow");
  }
  return wedge(kahler_form(phi.n), phi);
}

const Eigen::MatrixXcd& lefschetz_matrix(int n, int p, int q) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, Eigen::MatrixXcd> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, p, q);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const long long d1 = pq_dim(n, p, q);
  const long long d2 = pq_dim(n, p + 1, q + 1);
  Eigen::MatrixXcd L(d2, d1);
  const auto basis = basis_enumeration(n, p, q);
  for (long long c = 0; c < d1; ++c) {
    PQForm e(n, p, q);
    e.coeffs[c] = 1.0;
    L.col(c) = lefschetz(e).coeffs;
  }
  return cache.emplace(key, std::move(L)).first->second;
}

PQForm lefschetz_dual(const PQForm& phi) {
  if (phi.p < 1 || phi.q < 1) {
    throw DimensionMismatch("lefschetz_dual: degree underflow");
  }
  const Eigen::MatrixXcd& L = lefschetz_matrix(phi.n, phi.p - 1, phi.q - 1);
  PQForm out(phi.n, phi.p - 1, phi.q - 1);
  // adjoint against the 2^{p+q}-scaled basis norms: ratio of norms is 4
  out.coeffs = 4.0 * (L.adjoint() * phi.coeffs);
  return out;
}

Eigen::MatrixXcd component_projector(int n, int p, int q, int k) {
  if (k < 0 || k > std::min(p, q)) {
    throw DimensionMismatch("component_projector: k out of range");
  }
  const long long d = pq_dim(n, p, q);
  const int pp = p - k, qq = q - k;
  const long long dprim = pq_dim(n, pp, qq);

  // primitive subspace of Lambda^{pp,qq} = kernel of the dual Lefschetz map
  Eigen::MatrixXcd kernel;
  if (pp == 0 || qq == 0) {
    kernel = Eigen::MatrixXcd::Identity(dprim, dprim);
  } else {
    const Eigen::MatrixXcd& L = lefschetz_matrix(n, pp - 1, qq - 1);
    Eigen::MatrixXcd A = L.adjoint();  // dual map up to the norm rescale
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-7 * (sv.size() > 0 ? std::max(sv(0), 1.0) : 1.0);
    long long rank = 0;
    for (long long i = 0; i < sv.size(); ++i) {
      if (sv(i) > tol) ++rank;
    }
    kernel = svd.matrixV().rightCols(dprim - rank);
  }

  // push up by L^k
  Eigen::MatrixXcd B = kernel;
  for (int t = 0; t < k; ++t) {
    B = lefschetz_matrix(n, pp + t, qq + t) * B;
  }

  if (B.cols() == 0) return Eigen::MatrixXcd::Zero(d, d);

  // orthonormalize the image, dropping the kernel of L^k
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(B, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double tol = 1e-7 * (sv.size() > 0 ? std::max(sv(0), 1.0) : 1.0);
  long long rank = 0;
  for (long long i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  if (rank == 0) return Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd Q = svd.matrixU().leftCols(rank);
  return Q * Q.adjoint();
}

long long projector_rank(const Eigen::MatrixXcd& P) {
  return std::llround(P.trace().real());
}

PQForm ring_reduce(const PQForm& phi) {
  if (phi.p != phi.q) return phi;
  const PQForm wp = kahler_power(phi.n, phi.p);
  const cplx c = hermitian_inner(phi, wp) / hermitian_inner(wp, wp);
  PQForm out = phi;
  out.coeffs -= c * wp.coeffs;
  return out;
}

PQForm operator+(const PQForm& a, const PQForm& b) {
  if (!a.same_shape(b)) throw DimensionMismatch("PQForm +: shape mismatch");
  PQForm out = a;
  out.coeffs += b.coeffs;
  return out;
}

PQForm operator-(const PQForm& a, const PQForm& b) {
  if (!a.same_shape(b)) throw DimensionMismatch("PQForm -: shape mismatch");
  PQForm out = a;
  out.coeffs -= b.coeffs;
  return out;
}

PQForm operator*(cplx s, const PQForm& a) {
  PQForm out = a;
  out.coeffs *= s;
  return out;
}

}  // namespace kco
