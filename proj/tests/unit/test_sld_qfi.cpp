#include <doctest.h>

#include <cmath>

#include "qig/catalog.hpp"
#include "qig/classical_fisher.hpp"
#include "qig/sld_qfi.hpp"
#include "qig/random.hpp"

using namespace qig;

namespace {

ParameterVector theta1(double a) {
  ParameterVector t(1);
  t << a;
  return t;
}

ParameterVector theta2(double a, double b) {
  ParameterVector t(2);
  t << a, b;
  return t;
}

Eigen::MatrixXcd mixed_two_level() {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
  rho(0, 0) = 0.6;
  rho(1, 1) = 0.4;
  return rho;
}

Eigen::MatrixXcd generic_traceless_direction() {
  Eigen::MatrixXcd d(2, 2);
  d << Complex(0.3, 0.0), Complex(0.1, 0.05),
       Complex(0.1, -0.05), Complex(-0.3, 0.0);
  return d;
}

}  // namespace

TEST_CASE("maximally mixed state: L = 2 drho") {
  Eigen::MatrixXcd rho = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd d = generic_traceless_direction();

  const SLDSet slds = sld_solve(rho, {d});
  CHECK((slds.matrices[0] - 2.0 * d).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(slds.support_rank == 2);
  CHECK(slds.residuals[0] <= tol::sld);
}

TEST_CASE("diagonal state: classical score recovery") {
  // rho = diag(p), drho = diag(dp) => L = diag(dp / p)
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(3, 3);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.3;
  rho(2, 2) = 0.2;
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = -0.04;
  d(1, 1) = 0.01;
  d(2, 2) = 0.03;

  const SLDSet slds = sld_solve(rho, {d});
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(3, 3);
  expected(0, 0) = -0.04 / 0.5;
  expected(1, 1) = 0.01 / 0.3;
  expected(2, 2) = 0.03 / 0.2;
  CHECK((slds.matrices[0] - expected).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("pure states: the SLD is twice the density differential") {
  const PureStateModel model = make_random_pure(6, 2, 17);
  const DensityModel rho_model = pure_to_density(model);
  const ParameterVector t = theta2(0.4, -0.7);
  const DensityMatrixJet jet = differentiate(rho_model, t);

  const SLDSet slds = sld_solve(jet.value, jet.partials);
  CHECK(slds.support_rank == 1);
  for (std::size_t j = 0; j < jet.partials.size(); ++j) {
    CHECK((slds.matrices[j] - 2.0 * jet.partials[j]).cwiseAbs().maxCoeff() <=
          1e-8);
    CHECK(slds.residuals[j] <= tol::sld);
  }
}

TEST_CASE("sld_solve validates its inputs") {
  Eigen::MatrixXcd rho = mixed_two_level();

  Eigen::MatrixXcd not_hermitian(2, 2);
  not_hermitian << Complex(0.1, 0.0), Complex(0.3, 0.1),
                   Complex(0.1, 0.1), Complex(-0.1, 0.0);
  CHECK_THROWS_AS(sld_solve(rho, {not_hermitian}), ValidationError);

  Eigen::MatrixXcd not_traceless = Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(sld_solve(rho, {not_traceless}), ValidationError);

  Eigen::MatrixXcd not_density = 2.0 * Eigen::MatrixXcd::Identity(2, 2);
  CHECK_THROWS_AS(sld_solve(not_density, {generic_traceless_direction()}),
                  ValidationError);
}

TEST_CASE("qfi of the diagonal bernoulli embedding equals classical fisher") {
  const ProbabilityModel coin = make_bernoulli();
  const DensityModel diag = probability_to_density(coin);

  for (double t : {0.5, 0.3, 0.81}) {
    const DensityMatrixJet jet = differentiate(diag, theta1(t));
    const QFITensor q = qfi_tensor(jet.value, sld_solve(jet.value, jet.partials));
    const RealMatrix f = classical_fisher_matrix(coin, theta1(t));
    CHECK(std::abs(q.metric_part(0, 0) - f(0, 0)) <= 1e-9);
    CHECK(std::abs(q.metric_part(0, 0) - 1.0 / (t * (1.0 - t))) <= 1e-9);
  }
}

TEST_CASE("theta-independent state carries no quantum information") {
  Eigen::MatrixXcd rho = mixed_two_level();
  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  const QFITensor q = qfi_tensor(rho, sld_solve(rho, {zero}));
  CHECK(q.entries.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pure state identities") {
  SUBCASE("analytic qubit: identities hold to machine precision") {
    const DensityModel rho_model = pure_to_density(make_qubit());
    const DensityMatrixJet jet = differentiate(rho_model, theta2(1.1, 0.6));
    const PureIdentityResiduals r =
        pure_state_identities(jet.value, jet.partials);
    CHECK(r.projector <= 1e-12);
    CHECK(r.trace_drho <= 1e-12);
    CHECK(r.trace_rho_drho <= 1e-12);
  }

  SUBCASE("central differences on random pure models") {
    const DensityModel rho_model =
        pure_to_density(make_random_pure(6, 2, 29))
            .with_mode(DerivativeMode::FiniteDifference);
    const DensityMatrixJet jet = differentiate(rho_model, theta2(0.5, 0.2));
    const PureIdentityResiduals r =
        pure_state_identities(jet.value, jet.partials, tol::purity_fd);
    CHECK(r.max() <= 1e-6);
  }

  SUBCASE("mixed negative control: identity i) fails visibly") {
    const Eigen::MatrixXcd rho = mixed_two_level();
    const Eigen::MatrixXcd d = generic_traceless_direction();

    CHECK_THROWS_AS(pure_state_identities(rho, {d}), PreconditionError);

    const PureIdentityResiduals r = identity_residuals(rho, {d});
    // (lambda_a + lambda_b - 1) * d_ab: the diagonal picks up 0.2 * 0.3
    CHECK(r.projector == doctest::Approx(0.06).epsilon(1e-12));
    CHECK(r.projector > 0.05);
  }
}

TEST_CASE("purity check") {
  const DensityModel pure = pure_to_density(make_qubit());
  CHECK(purity_check(pure.density_matrix(theta2(0.9, 1.7))) <= 1e-14);

  CHECK(purity_check(0.5 * Eigen::MatrixXcd::Identity(2, 2)) ==
        doctest::Approx(0.25).epsilon(1e-15));

  Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(2, 2);
  skew(0, 0) = 0.9;
  skew(1, 1) = 0.1;
  CHECK(purity_check(skew) == doctest::Approx(0.09).epsilon(1e-12));
}

TEST_CASE("pure-state qfi routes agree") {
  SUBCASE("qubit at the equator") {
    const QFITensor fast = qfi_pure_fast(make_qubit(), theta2(M_PI / 2.0, 0.0));
    CHECK(fast.metric_part(0, 0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fast.metric_part(1, 1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(fast.metric_part(0, 1)) <= 1e-12);
  }

  SUBCASE("dalpha = 0: the qfi equals the classical fisher matrix") {
    const PureStateModel model = make_random_real_pure(6, 2, 37);
    const ParameterVector t = theta2(0.1, 0.8);
    const QFITensor fast = qfi_pure_fast(model, t);
    const RealMatrix f =
        classical_fisher_matrix(pure_to_probability(model), t);
    CHECK((fast.metric_part - f).cwiseAbs().maxCoeff() <= 1e-9);
  }

  SUBCASE("phase encoding: 4 Var_p(alpha) = 2") {
    const QFITensor fast = qfi_pure_fast(make_phase_encoding(), theta1(0.4));
    CHECK(fast.metric_part(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("three-way agreement across 50 random models") {
    RandomStream rng(53);
    for (int i = 0; i < 50; ++i) {
      const int n = 2 + static_cast<int>(rng.integer(7));
      const int m = 1 + static_cast<int>(rng.integer(3));
      const PureStateModel model =
          make_random_pure(n, m, 6000 + static_cast<std::uint64_t>(i));
      ParameterVector t(m);
      for (int j = 0; j < m; ++j) t[j] = rng.uniform(-1.0, 1.0);

      const QFITensor fast = qfi_pure_fast(model, t);
      const DensityMatrixJet jet = differentiate(pure_to_density(model), t);
      const QFITensor direct = qfi_pure_from_density(jet.value, jet.partials);
      const QFITensor via_sld =
          qfi_tensor(jet.value, sld_solve(jet.value, jet.partials));

      CHECK((fast.metric_part - direct.metric_part).cwiseAbs().maxCoeff() <=
            1e-7);
      CHECK((fast.metric_part - via_sld.metric_part).cwiseAbs().maxCoeff() <=
            1e-7);
      CHECK((direct.metric_part - via_sld.metric_part).cwiseAbs().maxCoeff() <=
            1e-7);
    }
  }
}

TEST_CASE("full-rank random density models solve cleanly") {
  RandomStream rng(67);
  for (int i = 0; i < 25; ++i) {
    const int n = 2 + static_cast<int>(rng.integer(15));  // up to 16
    const int m = 1 + static_cast<int>(rng.integer(3));
    const DensityModel model =
        make_random_density(n, m, 7000 + static_cast<std::uint64_t>(i));
    ParameterVector t(m);
    for (int j = 0; j < m; ++j) t[j] = rng.uniform(-1.0, 1.0);

    const DensityMatrixJet jet = differentiate(model, t);
    const SLDSet slds = sld_solve(jet.value, jet.partials);
    CHECK(slds.support_rank == n);
    for (double r : slds.residuals) CHECK(r <= 1e-10);

    const QFITensor q = qfi_tensor(jet.value, slds);
    CHECK((q.entries - q.entries.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(psd_defect(q.metric_part) <= 1e-9);
  }
}

TEST_CASE("rank-deficient states solve on their support block") {
  // rho = diag(1/2, 1/2, 0): the kernel pair (2,2) is undetermined and left
  // zero; pairs straddling the kernel (lambda_a + lambda_b = 1/2) are still
  // fixed by the equation
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(3, 3);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
  d(0, 0) = 0.01;
  d(1, 1) = -0.01;
  d(0, 2) = Complex(0.02, 0.005);
  d(2, 0) = Complex(0.02, -0.005);

  const SLDSet slds = sld_solve(rho, {d});
  CHECK(slds.support_rank == 2);
  CHECK(slds.residuals[0] <= tol::sld);
  CHECK(std::abs(slds.matrices[0](2, 2)) == 0.0);
  // cross-kernel entry: L_{02} = 2 d_{02} / (1/2 + 0)
  CHECK(std::abs(slds.matrices[0](0, 2) - 4.0 * d(0, 2)) <= 1e-14);

  Eigen::MatrixXcd indefinite = rho;
  indefinite(2, 2) = -1e-3;
  indefinite(0, 0) = 0.5 + 1e-3;
  CHECK_THROWS_AS(sld_solve(indefinite, {d}), ValidationError);
}

TEST_CASE("qfi_tensor rejects mismatched SLD dimensions") {
  Eigen::MatrixXcd rho = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  SLDSet slds;
  slds.matrices.push_back(Eigen::MatrixXcd::Zero(3, 3));
  slds.support_rank = 2;
  slds.residuals.push_back(0.0);
  CHECK_THROWS_AS(qfi_tensor(rho, slds), ValidationError);
}

TEST_CASE("quantum dominance: Re Q - F is positive semidefinite") {
  RandomStream rng(91);
  for (int i = 0; i < 30; ++i) {
    const PureStateModel model =
        make_random_pure(5, 2, 8000 + static_cast<std::uint64_t>(i));
    const ParameterVector t = theta2(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const QFITensor fast = qfi_pure_fast(model, t);
    const RealMatrix f = classical_fisher_matrix(pure_to_probability(model), t);
    CHECK(psd_defect(fast.metric_part - f,
                     fast.metric_part.cwiseAbs().maxCoeff()) <= 1e-9);
  }
}
