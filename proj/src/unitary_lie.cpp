#include "kco/unitary_lie.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "kco/multiindex.hpp"

namespace kco {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

int pair_count(int n) { return n * (n - 1) / 2; }

// rank of (i,j), 1 <= i < j <= n, in lex order
int pair_rank_1b(int n, int i, int j) {
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}
}  // namespace

LieElement::LieElement(int n_) : n(n_) {
  if (n < 1) throw DimensionMismatch("LieElement: n must be >= 1");
  coeffs = Eigen::VectorXd::Zero(so_dim(n));
}

int u_dim(int n) { return n * n; }
int so_dim(int n) { return n * (2 * n - 1); }

int r_basis_index(int n, int i, int j) { return pair_rank_1b(n, i, j); }
int i_basis_index(int n, int i, int j) {
  return pair_count(n) + pair_rank_1b(n, i, j);
}
int d_basis_index(int n, int i) { return 2 * pair_count(n) + (i - 1); }
int rperp_basis_index(int n, int i, int j) {
  return u_dim(n) + pair_rank_1b(n, i, j);
}
int iperp_basis_index(int n, int i, int j) {
  return u_dim(n) + pair_count(n) + pair_rank_1b(n, i, j);
}

std::vector<LieElement> u_basis(int n) {
  std::vector<LieElement> out;
  out.reserve(u_dim(n));
  for (int idx = 0; idx < u_dim(n); ++idx) {
    LieElement L(n);
    L.coeffs[idx] = 1.0;
    out.push_back(std::move(L));
  }
  return out;
}

std::vector<LieElement> so_basis(int n) {
  std::vector<LieElement> out;
  out.reserve(so_dim(n));
  for (int idx = 0; idx < so_dim(n); ++idx) {
    LieElement L(n);
    L.coeffs[idx] = 1.0;
    out.push_back(std::move(L));
  }
  return out;
}

bool is_u_supported(const LieElement& L, double tol) {
  const int ud = u_dim(L.n);
  return L.coeffs.tail(L.coeffs.size() - ud).lpNorm<Eigen::Infinity>() <= tol;
}

int raw_pair_rank(int n, int a, int b) {
  const int m = 2 * n;
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

Eigen::VectorXd lie_to_pair_coords(const LieElement& L) {
  const int n = L.n;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(so_dim(n));
  auto add = [&](int a, int b, double c) { v[raw_pair_rank(n, a, b)] += c; };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int ei = i - 1, ej = j - 1, fi = n + i - 1, fj = n + j - 1;
      const double r = L.coeffs[r_basis_index(n, i, j)];
      add(ei, ej, r * kInvSqrt2);
      add(fi, fj, r * kInvSqrt2);
      const double s = L.coeffs[i_basis_index(n, i, j)];
      add(ei, fj, s * kInvSqrt2);
      add(ej, fi, s * kInvSqrt2);
      const double rp = L.coeffs[rperp_basis_index(n, i, j)];
      add(ei, ej, rp * kInvSqrt2);
      add(fi, fj, -rp * kInvSqrt2);
      const double sp = L.coeffs[iperp_basis_index(n, i, j)];
      add(ei, fj, sp * kInvSqrt2);
      add(ej, fi, -sp * kInvSqrt2);
    }
    add(i - 1, n + i - 1, L.coeffs[d_basis_index(n, i)]);
  }
  return v;
}

LieElement pair_to_lie_coords(int n, const Eigen::VectorXd& v) {
  LieElement L(n);
  auto get = [&](int a, int b) { return v[raw_pair_rank(n, a, b)]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int ei = i - 1, ej = j - 1, fi = n + i - 1, fj = n + j - 1;
      const double cee = get(ei, ej), cff = get(fi, fj);
      const double cef = get(ei, fj), cfe = get(ej, fi);
      L.coeffs[r_basis_index(n, i, j)] = (cee + cff) * kInvSqrt2;
      L.coeffs[rperp_basis_index(n, i, j)] = (cee - cff) * kInvSqrt2;
      L.coeffs[i_basis_index(n, i, j)] = (cef + cfe) * kInvSqrt2;
      L.coeffs[iperp_basis_index(n, i, j)] = (cef - cfe) * kInvSqrt2;
    }
    L.coeffs[d_basis_index(n, i)] = get(i - 1, n + i - 1);
  }
  return L;
}

Eigen::MatrixXd as_endomorphism(const LieElement& L) {
  const int n = L.n;
  const int m = 2 * n;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
  const Eigen::VectorXd v = lie_to_pair_coords(L);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const double c = v[raw_pair_rank(n, a, b)];
      if (c == 0.0) continue;
      A(a, b) += c;  // (v_a ^ v_b) v_b = v_a
      A(b, a) -= c;  // (v_a ^ v_b) v_a = -v_b
    }
  }
  return A;
}

LieElement from_endomorphism(int n, const Eigen::MatrixXd& A) {
  const int m = 2 * n;
  if (A.rows() != m || A.cols() != m) {
    throw DimensionMismatch("from_endomorphism: matrix size");
  }
  Eigen::VectorXd v(so_dim(n));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      v[raw_pair_rank(n, a, b)] = A(a, b);
    }
  }
  return pair_to_lie_coords(n, v);
}

Eigen::MatrixXcd uaction_matrix(const LieElement& L) {
  if (!is_u_supported(L, 1e-12)) {
    throw DimensionMismatch(
        "uaction_matrix: element has u(n)-perp components; the bidegree"
        " preserving action is defined for the u(n) block only");
  }
  const int n = L.n;
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const double r = L.coeffs[r_basis_index(n, i, j)];
      if (r != 0.0) {
        U(i - 1, j - 1) += cplx(-r * kInvSqrt2, 0.0);
        U(j - 1, i - 1) += cplx(r * kInvSqrt2, 0.0);
      }
      const double s = L.coeffs[i_basis_index(n, i, j)];
      if (s != 0.0) {
        U(i - 1, j - 1) += cplx(0.0, s * kInvSqrt2);
        U(j - 1, i - 1) += cplx(0.0, s * kInvSqrt2);
      }
    }
    const double d = L.coeffs[d_basis_index(n, i)];
    if (d != 0.0) U(i - 1, i - 1) += cplx(0.0, d);
  }
  return U;
}

namespace {

// Replaces S[t] by value and re-sorts. Returns the permutation sign, or 0 on
// a duplicate index.
int replace_sorted(const std::vector<int>& S, int t, int value,
                   std::vector<int>* out) {
  const int k = static_cast<int>(S.size());
  out->clear();
  out->reserve(k);
  int tprime = 0;
  for (int s = 0; s < k; ++s) {
    if (s == t) continue;
    if (S[s] == value) return 0;
    if (S[s] < value) ++tprime;
  }
  for (int s = 0; s < k; ++s) {
    if (s == t) continue;
    out->push_back(S[s]);
  }
  out->insert(out->begin() + tprime, value);
  const int moves = (t < tprime) ? (tprime - t) : (t - tprime);
  return (moves % 2 == 0) ? 1 : -1;
}

}  // namespace

PQForm act_on_form(const LieElement& L, const PQForm& phi) {
  if (L.n != phi.n) throw DimensionMismatch("act_on_form: mismatched n");
  const int n = phi.n;
  const Eigen::MatrixXcd U = uaction_matrix(L);
  const Eigen::MatrixXcd Ubar = U.conjugate();

  PQForm out(n, phi.p, phi.q);
  const auto& Is = subsets_lex(n, phi.p);
  const auto& Js = subsets_lex(n, phi.q);
  const long long cq = binomial(n, phi.q);
  std::vector<int> repl;

  for (long long bi = 0; bi < static_cast<long long>(Is.size()); ++bi) {
    for (long long bj = 0; bj < static_cast<long long>(Js.size()); ++bj) {
      const cplx c = phi.coeffs[bi * cq + bj];
      if (c == cplx(0.0, 0.0)) continue;
      const auto& I = Is[bi];
      const auto& J = Js[bj];
      for (int t = 0; t < phi.p; ++t) {
        const int i = I[t];
        for (int j = 1; j <= n; ++j) {
          const cplx u = U(i - 1, j - 1);
          if (u == cplx(0.0, 0.0)) continue;
          const int sgn = replace_sorted(I, t, j, &repl);
          if (sgn == 0) continue;
          out.coeffs[subset_rank(n, repl) * cq + bj] +=
              static_cast<double>(sgn) * c * u;
        }
      }
      for (int t = 0; t < phi.q; ++t) {
        const int i = J[t];
        for (int j = 1; j <= n; ++j) {
          const cplx u = Ubar(i - 1, j - 1);
          if (u == cplx(0.0, 0.0)) continue;
          const int sgn = replace_sorted(J, t, j, &repl);
          if (sgn == 0) continue;
          out.coeffs[bi * cq + subset_rank(n, repl)] +=
              static_cast<double>(sgn) * c * u;
        }
      }
    }
  }
  return out;
}

std::vector<PQForm> u_actions_on_form(const PQForm& phi) {
  std::vector<PQForm> out;
  out.reserve(u_dim(phi.n));
  for (const auto& xi : u_basis(phi.n)) {
    out.push_back(act_on_form(xi, phi));
  }
  return out;
}

double hat_norm_sq(const PQForm& phi) {
  double total = 0.0;
  for (const auto& a : u_actions_on_form(phi)) total += norm_sq(a);
  return total;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.n != b.n) throw DimensionMismatch("bracket: mismatched n");
  const Eigen::MatrixXd A = as_endomorphism(a);
  const Eigen::MatrixXd B = as_endomorphism(b);
  return from_endomorphism(a.n, A * B - B * A);
}

const StructureConstants& structure_constants(int n) {
  static std::mutex mu;
  static std::map<int, StructureConstants> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  StructureConstants sc;
  sc.n = n;
  const int ud = u_dim(n);
  const auto basis = u_basis(n);
  std::vector<Eigen::MatrixXd> endos;
  endos.reserve(ud);
  for (const auto& xi : basis) endos.push_back(as_endomorphism(xi));

  sc.ad.assign(ud, Eigen::MatrixXd::Zero(ud, ud));
  for (int g = 0; g < ud; ++g) {
    for (int a = 0; a < ud; ++a) {
      const LieElement br =
          from_endomorphism(n, endos[g] * endos[a] - endos[a] * endos[g]);
      for (int b = 0; b < ud; ++b) {
        const double c = br.coeffs[b];
        if (std::abs(c) > 1e-14) {
          sc.ad[g](b, a) = c;
          sc.triples.emplace_back(g, a, b, c);
        }
      }
    }
  }
  return cache.emplace(n, std::move(sc)).first->second;
}

Eigen::MatrixXd ad_matrix_u(const LieElement& L) {
  if (!is_u_supported(L)) {
    throw DimensionMismatch("ad_matrix_u: element must lie in the u(n) block");
  }
  const int n = L.n;
  const auto& sc = structure_constants(n);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(u_dim(n), u_dim(n));
  for (int g = 0; g < u_dim(n); ++g) {
    const double c = L.coeffs[g];
    if (c != 0.0) B += c * sc.ad[g];
  }
  return B;
}

}  // namespace kco
