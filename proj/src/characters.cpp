#include "kco/characters.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "kco/multiindex.hpp"
#include "kco/rng.hpp"

namespace kco {

void TorusPoint::validate() const {
  const int m = n();
  for (int i = 0; i < m; ++i) {
    if (std::abs(std::abs(eps[i]) - 1.0) > 1e-12) {
      throw NearSingularTorusPoint("torus point entry is not unit modulus");
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (std::abs(eps[i] - eps[j]) < 1e-3) {
        throw NearSingularTorusPoint("torus point entries too close");
      }
    }
  }
}

TorusPoint random_torus_point(int n, std::uint64_t seed) {
  Rng rng(seed);
  TorusPoint t;
  t.eps.resize(n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (int i = 0; i < n; ++i) {
      const double a = 6.283185307179586476925286766559 * rng.uniform();
      t.eps[i] = cplx(std::cos(a), std::sin(a));
    }
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      for (int j = i + 1; ok && j < n; ++j) {
        if (std::abs(t.eps[i] - t.eps[j]) < 1e-3) ok = false;
      }
    }
    if (ok) return t;
  }
  throw NearSingularTorusPoint("rejection sampling failed");
}

namespace {

// coefficients of prod_i (1 + eps_i x); sigma_k = coeff of x^k
Eigen::VectorXcd sigma_all(const TorusPoint& t) {
  const int n = t.n();
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  c[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k >= 1; --k) c[k] += t.eps[i] * c[k - 1];
  }
  return c;
}

cplx ipow(cplx z, int e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  cplx r(1.0, 0.0);
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

}  // namespace

cplx elementary_symmetric(const TorusPoint& t, int k) {
  if (k < 0 || k > t.n()) return cplx(0.0, 0.0);
  return sigma_all(t)[k];
}

cplx chi_pq(const TorusPoint& t, int p, int q) {
  if (p < 0 || q < 0) return cplx(0.0, 0.0);
  const auto s = sigma_all(t);
  if (p > t.n() || q > t.n()) return cplx(0.0, 0.0);
  return s[p] * std::conj(s[q]);
}

cplx chi_pq_k(const TorusPoint& t, int p, int q, int k) {
  return chi_pq(t, p - k, q - k) - chi_pq(t, p - k - 1, q - k - 1);
}

cplx alternant(const std::vector<int>& exponents, const TorusPoint& t) {
  const int n = t.n();
  if (static_cast<int>(exponents.size()) != n) {
    throw DimensionMismatch("alternant: need n exponents");
  }
  Eigen::MatrixXcd M(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M(i, j) = ipow(t.eps[i], exponents[j]);
  }
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
}

cplx vandermonde(const TorusPoint& t) {
  cplx prod(1.0, 0.0);
  for (int i = 0; i < t.n(); ++i) {
    for (int j = i + 1; j < t.n(); ++j) prod *= (t.eps[i] - t.eps[j]);
  }
  return prod;
}

cplx weyl_character(const std::vector<int>& signature, const TorusPoint& t) {
  const int n = t.n();
  if (static_cast<int>(signature.size()) != n) {
    throw DimensionMismatch("weyl_character: signature length must be n");
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (signature[i] < signature[i + 1]) {
      throw DimensionMismatch("weyl_character: signature must be decreasing");
    }
  }
  t.validate();
  std::vector<int> exps(n);
  for (int j = 0; j < n; ++j) exps[j] = signature[j] + (n - 1 - j);
  return alternant(exps, t) / vandermonde(t);
}

std::optional<std::vector<int>> chi_pq_k_signature(int n, int p, int q, int k) {
  const int a = p - k, b = q - k;
  if (a < 0 || b < 0 || a + b > n) return std::nullopt;
  std::vector<int> f(n, 0);
  for (int i = 0; i < a; ++i) f[i] = 1;
  for (int i = n - b; i < n; ++i) f[i] = -1;
  return f;
}

cplx tau(const TorusPoint& t, int a, int b) {
  const int n = t.n();
  const auto s = sigma_all(t);
  auto sg = [&](int k) -> cplx {
    return (k < 0 || k > n) ? cplx(0.0, 0.0) : s[k];
  };
  return sg(n - a + 1) * sg(n - b) - sg(n - a) * sg(n - b + 1);
}

double verify_tau_identity(const TorusPoint& t, int a, int b) {
  const int n = t.n();
  if (a < 0 || b > n + 1 || a >= b) {
    throw DimensionMismatch("verify_tau_identity: need 0 <= a < b <= n+1");
  }
  t.validate();
  // descending exponents n+1 .. 0 with a and b removed; the quotient by the
  // Vandermonde equals tau_{b,a} = -tau_{a,b}
  std::vector<int> exps;
  for (int e = n + 1; e >= 0; --e) {
    if (e == a || e == b) continue;
    exps.push_back(e);
  }
  const cplx alt_form = alternant(exps, t) / vandermonde(t);
  const cplx sigma_form = tau(t, a, b);
  const double scale = std::max(1.0, std::abs(sigma_form));
  return std::abs(sigma_form + alt_form) / scale;
}

long long dim_pqk(int n, int p, int q, int k) {
  if (k < 0 || k > std::min(p, q)) {
    throw DimensionMismatch("dim_pqk: k out of range");
  }
  // L^k is injective on primitive (p-k, q-k)-forms only when p+q-k <= n;
  // beyond that the module is zero even when the telescoped value is not.
  if (p + q - k > n) return 0;
  const long long v = binomial(n, p - k) * binomial(n, q - k) -
                      binomial(n, p - k - 1) * binomial(n, q - k - 1);
  return std::max(v, 0LL);
}

}  // namespace kco
