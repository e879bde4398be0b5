#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "kco/bochner.hpp"
#include "kco/curvature.hpp"

using namespace kco;

TEST_CASE("hermitian construction and validation") {
  const int n = 2, N = sym_pair_dim(n);

  const KahlerCurvature zero =
      KahlerCurvature::from_hermitian(n, Eigen::MatrixXcd::Zero(N, N));
  CHECK(zero.operator_matrix().norm() == 0.0);
  CHECK(spectrum(zero).values.cwiseAbs().maxCoeff() == 0.0);

  const KahlerCurvature id =
      KahlerCurvature::from_hermitian(n, Eigen::MatrixXcd::Identity(N, N));
  CHECK(decompose(id).ric0_norm_sq < 1e-20);  // Einstein by symmetry
  const KahlerCurvature back =
      KahlerCurvature::from_operator_matrix(n, id.operator_matrix());
  CHECK((back.hermitian() - id.hermitian()).norm() < 1e-10);
  CHECK((back.operator_matrix() - id.operator_matrix()).norm() < 1e-10);

  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(N, N);
  bad(0, 1) = cplx(1.0, 0.0);  // not Hermitian
  CHECK_THROWS_AS(KahlerCurvature::from_hermitian(n, bad), NonHermitianInput);

  Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(n * n, n * n);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(KahlerCurvature::from_operator_matrix(n, asym),
                  NonHermitianInput);

  Eigen::MatrixXd nonbianchi = Eigen::MatrixXd::Zero(n * n, n * n);
  nonbianchi(0, 0) = 1.0;  // R_12 line alone violates the cyclic identity
  bool caught = false;
  try {
    KahlerCurvature::from_operator_matrix(n, nonbianchi);
  } catch (const BianchiViolation& e) {
    caught = e.defect > 0.0;
  }
  CHECK(caught);
}

TEST_CASE("bianchi defect") {
  Rng rng(51);
  for (int n = 2; n <= 3; ++n) {
    const KahlerCurvature R = random_kahler(n, 77 + n);
    CHECK(bianchi_defect(R) < 1e-12 * std::max(1.0, R.norm_sq()));
  }
  // a generic symmetric matrix on u(2) has positive defect
  Eigen::MatrixXd M(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) M(i, j) = M(j, i) = rng.normal();
  }
  const auto& B = u_basis(2);
  Eigen::MatrixXd pairs(4, so_dim(2));
  for (int i = 0; i < 4; ++i) pairs.row(i) = lie_to_pair_coords(B[i]);
  CHECK(bianchi_defect_lambda2(2, pairs.transpose() * M * pairs) > 1e-3);
}

TEST_CASE("ricci and scalar curvature") {
  for (int n = 2; n <= 4; ++n) {
    const KahlerCurvature R = model_cpn(n);
    const Eigen::MatrixXd ric = ricci(R);
    CHECK((ric - 2.0 * (n + 1) * Eigen::MatrixXd::Identity(2 * n, 2 * n))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK(scalar_curvature(R) == doctest::Approx(4.0 * n * (n + 1)));

    // J-invariance on a random tensor
    const KahlerCurvature S = random_kahler(n, 90 + n);
    const Eigen::MatrixXd rs = ricci(S);
    const Eigen::MatrixXd J = ComplexModel(n).j_matrix();
    CHECK((J.transpose() * rs * J - rs).cwiseAbs().maxCoeff() < 1e-12);
  }

  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Eigen::MatrixXd ric = ricci(model_cp_k_flat(n, k));
      CHECK(ric.squaredNorm() ==
            doctest::Approx(8.0 * k * (k + 1) * (k + 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("decomposition reconstructs and splits orthogonally") {
  for (int n = 2; n <= 4; ++n) {
    const KahlerCurvature cpn = model_cpn(n);
    const CurvatureDecomposition dc = decompose(cpn);
    CHECK(dc.r_ring_norm_sq < 1e-18 * cpn.norm_sq());
    CHECK(dc.bochner_norm_sq < 1e-14 * cpn.norm_sq());

    const KahlerCurvature R = random_kahler(n, 1234 + n);
    const CurvatureDecomposition dec = decompose(R);
    const KahlerCurvature rebuilt =
        model_cpn(n).scaled(dec.scal / (4.0 * n * (n + 1))) + dec.r0 +
        dec.bochner;
    CHECK((rebuilt.operator_matrix() - R.operator_matrix()).norm() <
          1e-10 * std::max(1.0, R.operator_matrix().norm()));

    CHECK(dec.r0_norm_sq ==
          doctest::Approx(2.0 / (n + 2) * dec.ric0_norm_sq).epsilon(1e-9));
    CHECK(std::abs(dec.r0.inner(dec.bochner)) <
          1e-9 * std::max(1.0, dec.r0_norm_sq));
    CHECK(std::abs(model_cpn(n).inner(dec.bochner)) < 1e-9);
    CHECK(std::abs(model_cpn(n).inner(dec.r0)) < 1e-9);
    CHECK(ricci(dec.bochner).cwiseAbs().maxCoeff() < 1e-9);  // trace free

    // an Einstein tensor has no trace-free Ricci part
    const KahlerCurvature einstein = R - dec.r0;
    CHECK(decompose(einstein).ric0_norm_sq < 1e-16 * einstein.norm_sq());
  }
}

TEST_CASE("spectrum") {
  for (int n = 2; n <= 4; ++n) {
    const KahlerCurvature R = model_cpn(n);
    const Spectrum sp = spectrum(R);
    for (int i = 0; i < n * n - 1; ++i) {
      CHECK(sp.values[i] == doctest::Approx(2.0).epsilon(1e-12));
    }
    CHECK(sp.values[n * n - 1] == doctest::Approx(2.0 * (n + 1)).epsilon(1e-12));
  }

  // backward error of the eigensolve
  const KahlerCurvature R = random_kahler(3, 4242);
  const Eigen::MatrixXd& M = R.operator_matrix();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const Eigen::VectorXd r =
        M * es.eigenvectors().col(i) - es.eigenvalues()[i] * es.eigenvectors().col(i);
    CHECK(r.norm() <= 1e-10 * M.norm());
  }
}

TEST_CASE("model constructors") {
  for (int n = 2; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(hat_norm_sq(model_cp_k_flat(n, k)) ==
            doctest::Approx(32.0 * k * (k + 1) * (n - k)).epsilon(1e-10));
    }
  }
  CHECK(hat_norm_sq(model_cpn(4)) < 1e-10);

  const KahlerCurvature R = model_n2_from_mu(3, 0, 0, -1, 1, 3);
  CHECK(decompose(R).ric0_norm_sq < 1e-20);
  CHECK(r_ring(R).norm_sq() == doctest::Approx(8.0).epsilon(1e-12));

  CHECK_THROWS_AS(model_n2_from_mu(3, 1, 0, -1, 1, 3), DimensionMismatch);
  CHECK_THROWS_AS(model_n2_from_mu(3, 0, 0, -1, 1, 4), BianchiViolation);

  // determinism of the random sampler
  const KahlerCurvature a = random_kahler(3, 99);
  const KahlerCurvature b = random_kahler(3, 99);
  CHECK((a.hermitian() - b.hermitian()).norm() == 0.0);
  const KahlerCurvature c = random_kahler(3, 100);
  CHECK((a.hermitian() - c.hermitian()).norm() > 1e-3);
}

TEST_CASE("curvature action") {
  for (int n = 2; n <= 3; ++n) {
    const KahlerCurvature cpn = model_cpn(n);
    for (const auto& xi : u_basis(n)) {
      CHECK(lr_norm_sq(xi, cpn) < 1e-18);
    }
    CHECK_THROWS_AS(act_on_curvature(so_basis(n).back(), cpn),
                    DimensionMismatch);

    Rng rng(600 + n);
    for (int t = 0; t < 5; ++t) {
      const KahlerCurvature R = random_kahler(n, 7000 + 10 * n + t);
      const LieElement L = random_u_element(n, rng);
      const double direct = lr_norm_sq_tensor(L, R);
      const double matrix = lr_norm_sq(L, R);
      const double eigen = lr_norm_sq_eigen(L, R);
      CHECK(matrix == doctest::Approx(direct).epsilon(1e-9));
      CHECK(eigen == doctest::Approx(direct).epsilon(1e-9));

      // LR is itself an algebraic Kahler curvature tensor
      const KahlerCurvature LR = act_on_curvature(L, R);
      CHECK(bianchi_defect(LR) < 1e-9);
      CHECK(LR.norm_sq() == doctest::Approx(direct).epsilon(1e-9));
    }
  }
}

TEST_CASE("isotropic curvature and bisectional sampling") {
  const KahlerCurvature zero =
      KahlerCurvature::from_hermitian(2, Eigen::MatrixXcd::Zero(3, 3));
  const auto iso0 = isotropic_curvatures_n2(zero);
  CHECK(iso0.r1234 == 0.0);
  CHECK(iso0.min_isotropic == 0.0);

  CHECK(min_orthogonal_bisectional(model_cpn(2), 2000, 3) > 0.0);
  CHECK_THROWS_AS(isotropic_curvatures_n2(model_cpn(3)), DimensionMismatch);

  // 2-positive operators have positive isotropic curvature combinations
  int tested = 0;
  for (int t = 0; t < 2000; ++t) {
    KahlerCurvature R = random_kahler(2, 50000 + t);
    Spectrum sp = spectrum(R);
    const double l12 = sp.values[0] + sp.values[1];
    if (l12 <= 0) {
      // shift by a multiple of the model tensor to force 2-positivity
      const double shift = (0.01 - l12) / 4.0;
      R = R + model_cpn(2).scaled(shift);
      sp = spectrum(R);
      if (sp.values[0] + sp.values[1] <= 0) continue;
    }
    const auto iso = isotropic_curvatures_n2(R);
    for (double c : iso.combinations) CHECK(c > 0.0);
    ++tested;
  }
  CHECK(tested > 1000);
}

TEST_CASE("ricci is bounded below by the lowest n eigenvalues") {
  for (int n = 2; n <= 4; ++n) {
    Rng rng(800 + n);
    for (int t = 0; t < 20; ++t) {
      const KahlerCurvature R = random_kahler(n, 9000 + 100 * n + t);
      const Spectrum sp = spectrum(R);
      const double bound = sp.values.head(n).sum();
      const Eigen::MatrixXd ric = ricci(R);
      for (int s = 0; s < 5; ++s) {
        Eigen::VectorXd v(2 * n);
        for (int i = 0; i < 2 * n; ++i) v[i] = rng.normal();
        v.normalize();
        CHECK(v.dot(ric * v) >= bound - 1e-9);
      }
    }
  }
}
