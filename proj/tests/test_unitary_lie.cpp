#include <doctest.h>

#include "kco/bochner.hpp"
#include "kco/characters.hpp"
#include "kco/unitary_lie.hpp"

using namespace kco;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

TEST_CASE("bases are orthonormal, u(n) block first") {
  CHECK(u_dim(1) == 1);
  const auto u1 = u_basis(1);
  REQUIRE(u1.size() == 1);
  CHECK(lie_to_pair_coords(u1[0])[raw_pair_rank(1, 0, 1)] == 1.0);  // e1^f1

  for (int n = 1; n <= 4; ++n) {
    const auto basis = so_basis(n);
    REQUIRE(static_cast<int>(basis.size()) == so_dim(n));
    Eigen::MatrixXd G(so_dim(n), so_dim(n));
    for (int i = 0; i < so_dim(n); ++i) {
      for (int j = 0; j < so_dim(n); ++j) {
        G(i, j) = lie_to_pair_coords(basis[i]).dot(lie_to_pair_coords(basis[j]));
      }
    }
    CHECK((G - Eigen::MatrixXd::Identity(so_dim(n), so_dim(n))).norm() < 1e-12);
    for (int i = 0; i < u_dim(n); ++i) CHECK(is_u_supported(basis[i]));
    for (int i = u_dim(n); i < so_dim(n); ++i) CHECK(!is_u_supported(basis[i]));
  }
}

TEST_CASE("endomorphisms: skewness, J-commutation, dual-action fixture") {
  const int n = 2;
  const Eigen::MatrixXd J = ComplexModel(n).j_matrix();

  Rng rng(17);
  for (int t = 0; t < 5; ++t) {
    LieElement L(n);
    for (int i = 0; i < so_dim(n); ++i) L.coeffs[i] = rng.normal();
    const Eigen::MatrixXd A = as_endomorphism(L);
    CHECK((A + A.transpose()).norm() < 1e-13);
    // round trip
    const LieElement back = from_endomorphism(n, A);
    CHECK((back.coeffs - L.coeffs).norm() < 1e-13);
  }

  for (int i = 0; i < u_dim(n); ++i) {
    const Eigen::MatrixXd A = as_endomorphism(so_basis(n)[i]);
    CHECK((A * J - J * A).norm() < 1e-13);
  }

  // (e_1 ^ f_2) acts on dx^1 as -dy^2
  LieElement L(n);
  L.coeffs[i_basis_index(n, 1, 2)] = kInvSqrt2;
  L.coeffs[iperp_basis_index(n, 1, 2)] = kInvSqrt2;
  const Eigen::MatrixXd A = as_endomorphism(L);
  Eigen::VectorXd dual = -A.row(0);  // (L dx^1)(v) = -dx^1(L v)
  Eigen::VectorXd expect = Eigen::VectorXd::Zero(4);
  expect[n + 1] = -1.0;  // -dy^2
  CHECK((dual - expect).norm() < 1e-14);
}

TEST_CASE("action table on dz and dzbar") {
  const int n = 3;
  const auto basis = so_basis(n);
  const PQForm dz1 = basis_form(n, 1, 0, {1}, {});
  const PQForm dzb1 = basis_form(n, 0, 1, {}, {1});

  {
    PQForm got = act_on_form(basis[r_basis_index(n, 1, 2)], dz1);
    Eigen::VectorXcd want = Eigen::VectorXcd::Zero(3);
    want[1] = cplx(-kInvSqrt2, 0.0);
    CHECK((got.coeffs - want).norm() < 1e-14);

    got = act_on_form(basis[r_basis_index(n, 1, 2)], dzb1);
    CHECK((got.coeffs - want).norm() < 1e-14);
  }
  {
    PQForm got = act_on_form(basis[i_basis_index(n, 1, 2)], dz1);
    Eigen::VectorXcd want = Eigen::VectorXcd::Zero(3);
    want[1] = cplx(0.0, kInvSqrt2);
    CHECK((got.coeffs - want).norm() < 1e-14);

    got = act_on_form(basis[i_basis_index(n, 1, 2)], dzb1);
    want[1] = cplx(0.0, -kInvSqrt2);
    CHECK((got.coeffs - want).norm() < 1e-14);
  }
  {
    PQForm got = act_on_form(basis[d_basis_index(n, 1)], dz1);
    Eigen::VectorXcd want = Eigen::VectorXcd::Zero(3);
    want[0] = cplx(0.0, 1.0);
    CHECK((got.coeffs - want).norm() < 1e-14);
  }

  // u(n)-perp elements do not act within a bidegree
  CHECK_THROWS_AS(act_on_form(basis[rperp_basis_index(n, 1, 2)], dz1),
                  DimensionMismatch);
}

TEST_CASE("kahler form is in the kernel of the u(n) action") {
  for (int n = 1; n <= 5; ++n) {
    const PQForm w = kahler_form(n);
    for (const auto& xi : u_basis(n)) {
      CHECK(act_on_form(xi, w).coeffs.norm() < 1e-14);
    }
  }
}

TEST_CASE("derivation rule and linearity") {
  const int n = 3;
  Rng rng(23);
  for (int t = 0; t < 6; ++t) {
    const PQForm a = random_pqform(n, 1, 1, rng);
    const PQForm b = random_pqform(n, 1, 0, rng);
    const LieElement L = random_u_element(n, rng);
    const PQForm lhs = act_on_form(L, wedge(a, b));
    const PQForm rhs = wedge(act_on_form(L, a), b) + wedge(a, act_on_form(L, b));
    CHECK((lhs.coeffs - rhs.coeffs).norm() <
          1e-10 * std::max(1.0, rhs.coeffs.norm()));

    const LieElement M = random_u_element(n, rng);
    LieElement LM(n);
    LM.coeffs = 2.0 * L.coeffs - 3.0 * M.coeffs;
    const PQForm lin = act_on_form(LM, a);
    const PQForm lin2 = cplx(2.0, 0.0) * act_on_form(L, a) -
                        cplx(3.0, 0.0) * act_on_form(M, a);
    CHECK((lin.coeffs - lin2.coeffs).norm() < 1e-12 * lin2.coeffs.norm());
  }
}

TEST_CASE("hat norm values and basis independence") {
  CHECK(std::abs(hat_norm_sq(basis_form(1, 1, 0, {1}, {})) - 2.0) < 1e-14);

  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(hat_norm_sq(kahler_power(n, k)) < 1e-13);
    }
  }

  // primitive (1,1) at n=2: |phi^u|^2 = 4 |phi|^2
  {
    const int n = 2;
    Rng rng(29);
    const Eigen::MatrixXcd P = component_projector(n, 1, 1, 0);
    PQForm phi = random_pqform(n, 1, 1, rng);
    phi.coeffs = P * phi.coeffs;
    CHECK(std::abs(hat_norm_sq(phi) - 4.0 * norm_sq(phi)) <
          1e-10 * norm_sq(phi));
  }

  // invariance under an orthogonal recombination of the u(n) basis
  {
    const int n = 3;
    Rng rng(31);
    const PQForm phi = random_pqform(n, 2, 1, rng);
    const auto base = u_actions_on_form(phi);

    Eigen::MatrixXd A(u_dim(n), u_dim(n));
    for (int i = 0; i < u_dim(n); ++i) {
      for (int j = 0; j < u_dim(n); ++j) A(i, j) = rng.normal();
    }
    const Eigen::MatrixXd Q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(A).householderQ();
    double recombined = 0.0;
    for (int a = 0; a < u_dim(n); ++a) {
      Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(phi.coeffs.size());
      for (int g = 0; g < u_dim(n); ++g) acc += Q(g, a) * base[g].coeffs;
      recombined += std::pow(2.0, phi.p + phi.q) * acc.squaredNorm();
    }
    CHECK(std::abs(recombined - hat_norm_sq(phi)) <=
          1e-10 * std::max(1.0, hat_norm_sq(phi)));
  }
}

TEST_CASE("hat norm ratio on irreducible pieces") {
  for (int n = 2; n <= 3; ++n) {
    Rng rng(100 + n);
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (int k = 0; k <= std::min(p, q); ++k) {
          if (dim_pqk(n, p, q, k) == 0) continue;
          if (p == q && k == p) continue;
          const Eigen::MatrixXcd P = component_projector(n, p, q, k);
          PQForm phi = random_pqform(n, p, q, rng);
          phi.coeffs = P * phi.coeffs;
          const double ring_sq = norm_sq(ring_reduce(phi));
          if (ring_sq < 1e-12) continue;
          const double coeff = 2.0 * (p - k) * (q - k) +
                               (p + q - 2 * k) * (n + 1.0 - (p + q - 2 * k));
          CHECK(hat_norm_sq(phi) / ring_sq ==
                doctest::Approx(coeff).epsilon(1e-8));
        }
      }
    }
  }
}

TEST_CASE("hat norm vanishes exactly on the ring kernel") {
  // Lambda^{p,p}_p is the omega^p line; everything else has positive hat
  const int n = 3;
  Rng rng(41);
  for (int p = 1; p <= n; ++p) {
    const Eigen::MatrixXcd P = component_projector(n, p, p, p);
    PQForm phi = random_pqform(n, p, p, rng);
    phi.coeffs = P * phi.coeffs;
    CHECK(hat_norm_sq(phi) < 1e-12 * std::max(1.0, norm_sq(phi)));
    CHECK(norm_sq(ring_reduce(phi)) < 1e-12 * std::max(1.0, norm_sq(phi)));
  }
}

TEST_CASE("brackets and structure constants") {
  const int n = 3;
  Rng rng(37);
  for (int t = 0; t < 4; ++t) {
    LieElement a(n), b(n), c(n);
    for (int i = 0; i < so_dim(n); ++i) {
      a.coeffs[i] = rng.normal();
      b.coeffs[i] = rng.normal();
      c.coeffs[i] = rng.normal();
    }
    CHECK(bracket(a, a).coeffs.norm() < 1e-12);
    // Jacobi
    LieElement j1 = bracket(a, bracket(b, c));
    LieElement j2 = bracket(b, bracket(c, a));
    LieElement j3 = bracket(c, bracket(a, b));
    CHECK((j1.coeffs + j2.coeffs + j3.coeffs).norm() < 1e-12);
  }

  // bracket table entries used by the product-space computation: for
  // distinct i, j and a, [R_ia, R_ja] = -(1/sqrt2) R_ij etc.
  const auto basis = so_basis(n);
  auto coeff = [&](const LieElement& x, int idx) { return x.coeffs[idx]; };
  const int i = 1, j = 2, a = 3;
  {
    // (R_ia) R_ja = 1/sqrt2 R_ij, meaning [R_ia, R_ja]
    const LieElement br =
        bracket(basis[r_basis_index(n, i, a)], basis[r_basis_index(n, j, a)]);
    CHECK(std::abs(coeff(br, r_basis_index(n, i, j)) - kInvSqrt2) < 1e-13);
  }
  {
    const LieElement br =
        bracket(basis[i_basis_index(n, i, a)], basis[i_basis_index(n, j, a)]);
    CHECK(std::abs(coeff(br, r_basis_index(n, i, j)) - kInvSqrt2) < 1e-13);
  }
  {
    const LieElement br =
        bracket(basis[r_basis_index(n, i, a)], basis[i_basis_index(n, j, a)]);
    CHECK(std::abs(coeff(br, i_basis_index(n, i, j)) + kInvSqrt2) < 1e-13);
  }
  {
    // [R_ia, I_ia] = I_aa - I_ii
    const LieElement br =
        bracket(basis[r_basis_index(n, i, a)], basis[i_basis_index(n, i, a)]);
    CHECK(std::abs(coeff(br, d_basis_index(n, a)) - 1.0) < 1e-13);
    CHECK(std::abs(coeff(br, d_basis_index(n, i)) + 1.0) < 1e-13);
  }

  for (int nn = 2; nn <= 3; ++nn) {
    const auto& sc = structure_constants(nn);
    // antisymmetry in (alpha, beta) and full symmetry of the squares
    for (const auto& [g, al, be, v] : sc.triples) {
      CHECK(sc.ad[g](al, be) == doctest::Approx(-v).epsilon(1e-12));
      const double s = v * v;
      CHECK(sc.ad[al](be, g) * sc.ad[al](be, g) ==
            doctest::Approx(s).epsilon(1e-9));
      CHECK(sc.ad[be](g, al) * sc.ad[be](g, al) ==
            doctest::Approx(s).epsilon(1e-9));
    }
    // ad matches the bracket
    Rng r2(7 + nn);
    const LieElement x = random_u_element(nn, r2);
    const LieElement y = random_u_element(nn, r2);
    const Eigen::VectorXd via_ad = ad_matrix_u(x) * y.coeffs.head(u_dim(nn));
    const LieElement via_bracket = bracket(x, y);
    CHECK((via_bracket.coeffs.head(u_dim(nn)) - via_ad).norm() < 1e-11);
    CHECK(via_bracket.coeffs.tail(so_dim(nn) - u_dim(nn)).norm() < 1e-12);
  }
}
