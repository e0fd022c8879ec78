#include <doctest.h>

#include <cmath>

#include "qig/catalog.hpp"
#include "qig/differentials.hpp"
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

// hand-coded qubit derivative, the oracle for the central-difference path
Eigen::VectorXcd qubit_dpsi_dtheta(double theta, double phi) {
  const Complex phase = std::exp(Complex(0, 1) * phi);
  Eigen::VectorXcd d(2);
  d << Complex(-0.5 * std::sin(0.5 * theta), 0.0),
      0.5 * std::cos(0.5 * theta) * phase;
  return d;
}

}  // namespace

TEST_CASE("fd step follows cbrt(eps) * max(1, |t|)") {
  const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  CHECK(fd_step(0.0) == doctest::Approx(h0));
  CHECK(fd_step(0.5) == doctest::Approx(h0));
  CHECK(fd_step(-3.0) == doctest::Approx(3.0 * h0));
}

TEST_CASE("constant model has vanishing partials under central differences") {
  ProbabilityModel::Init init;
  init.space = SampleSpace::labeled({0.0, 1.0, 2.0});
  init.dim_params = 2;
  init.mode = DerivativeMode::FiniteDifference;
  init.name = "constant";
  init.density = [](const ParameterVector&) {
    return Eigen::Vector3d(0.2, 0.5, 0.3);
  };
  const ProbabilityModel model(std::move(init));

  const ProbabilityJet jet = differentiate(model, theta2(0.4, -1.2));
  for (const auto& dp : jet.partials) {
    CHECK(dp.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("central differences are exact on the linear bernoulli density") {
  const ProbabilityModel coin =
      make_bernoulli().with_mode(DerivativeMode::FiniteDifference);
  const ProbabilityJet jet = differentiate(coin, theta1(0.3));
  CHECK(jet.partials[0](0) == doctest::Approx(-1.0).epsilon(1e-11));
  CHECK(jet.partials[0](1) == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("qubit central differences match the hand-coded derivative") {
  const PureStateModel fd_qubit =
      make_qubit().with_mode(DerivativeMode::FiniteDifference);
  const ParameterVector t = theta2(M_PI / 2.0, 0.0);

  const AmplitudeJet jet = differentiate(fd_qubit, t);
  const Eigen::VectorXcd oracle = qubit_dpsi_dtheta(t[0], t[1]);
  CHECK((jet.partials[0] - oracle).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("catalog central differences track analytic partials") {
  const PureStateModel pure = make_random_pure(6, 2, 31);
  const ProbabilityModel prob = make_random_probability(6, 2, 31);
  RandomStream rng(13);
  for (int i = 0; i < 50; ++i) {
    const ParameterVector t =
        theta2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));

    const AmplitudeJet an = differentiate(pure, t);
    const AmplitudeJet fd =
        differentiate(pure.with_mode(DerivativeMode::FiniteDifference), t);
    for (int j = 0; j < 2; ++j) {
      const double rel =
          (an.partials[j] - fd.partials[j]).cwiseAbs().maxCoeff() /
          std::max(1.0, an.partials[j].cwiseAbs().maxCoeff());
      CHECK(rel <= 1e-6);
    }

    const ProbabilityJet an_p = differentiate(prob, t);
    const ProbabilityJet fd_p =
        differentiate(prob.with_mode(DerivativeMode::FiniteDifference), t);
    for (int j = 0; j < 2; ++j) {
      const double rel =
          (an_p.partials[j] - fd_p.partials[j]).cwiseAbs().maxCoeff() /
          std::max(1.0, an_p.partials[j].cwiseAbs().maxCoeff());
      CHECK(rel <= 1e-6);
    }
  }
}

TEST_CASE("stencil leaving the admissible domain names the parameter") {
  const ProbabilityModel coin =
      make_bernoulli().with_mode(DerivativeMode::FiniteDifference);
  try {
    differentiate(coin, theta1(1e-7));  // theta - h < 0
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("parameter 0") != std::string::npos);
  }
}

TEST_CASE("non-smooth model triggers the stencil-disagreement warning") {
  ProbabilityModel::Init init;
  init.space = SampleSpace::labeled({0.0, 1.0});
  init.dim_params = 1;
  init.mode = DerivativeMode::FiniteDifference;
  init.name = "kink";
  init.density = [](const ParameterVector& t) {
    const double a = 0.25 + 0.5 * std::abs(t[0]);
    return Eigen::Vector2d(a, 1.0 - a);
  };
  const ProbabilityModel model(std::move(init));

  const ProbabilityJet at_kink = differentiate(model, theta1(0.0));
  CHECK(!at_kink.warnings.empty());

  const ProbabilityJet smooth = differentiate(model, theta1(0.5));
  CHECK(smooth.warnings.empty());
}

TEST_CASE("log differentials of a real positive model have no phase part") {
  const PureStateModel model = make_random_real_pure(5, 2, 77);
  const LogDifferentialPair ld = log_differentials(model, theta2(0.2, -0.4));
  for (const auto& da : ld.dalpha) {
    CHECK(da.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("log differentials of the phase-encoding model") {
  const PureStateModel model = make_phase_encoding();
  const LogDifferentialPair ld = log_differentials(model, theta1(0.8));
  // d ln p = 0 and dalpha(x) = alpha(x) = x by construction
  CHECK(ld.dlnp[0].cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(ld.dalpha[0](0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ld.dalpha[0](1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ld.dalpha[0](2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("log differentials of the qubit match hand differentiation") {
  // p = (cos^2, sin^2), alpha = (0, phi):
  // dlnp_theta = (-tan(theta/2), cot(theta/2)), dalpha_phi = (0, 1)
  const PureStateModel qubit = make_qubit();
  const ParameterVector t = theta2(M_PI / 2.0, 0.3);
  const LogDifferentialPair ld = log_differentials(qubit, t);

  const double half = 0.5 * t[0];
  CHECK(ld.dlnp[0](0) == doctest::Approx(-std::tan(half)).epsilon(1e-12));
  CHECK(ld.dlnp[0](1) == doctest::Approx(1.0 / std::tan(half)).epsilon(1e-12));
  CHECK(ld.dalpha[1](0) == doctest::Approx(0.0));
  CHECK(ld.dalpha[1](1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ld.dlnp[1].cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("cross identity: partials reconstruct from the log differentials") {
  for (DerivativeMode mode :
       {DerivativeMode::Analytic, DerivativeMode::FiniteDifference}) {
    const PureStateModel model = make_random_pure(6, 2, 5).with_mode(mode);
    const ParameterVector t = theta2(0.6, -0.9);
    const AmplitudeJet jet = differentiate(model, t);
    const LogDifferentialPair ld = log_differentials(model.space(), jet);

    double worst = 0.0;
    for (std::size_t j = 0; j < jet.partials.size(); ++j) {
      for (Eigen::Index i = 0; i < model.space().size(); ++i) {
        if (!ld.support[i]) continue;
        const Complex u{0.5 * ld.dlnp[j][i], ld.dalpha[j][i]};
        worst = std::max(worst,
                         std::abs(u * jet.value(i) - jet.partials[j](i)));
      }
    }
    CHECK(worst <= (mode == DerivativeMode::Analytic ? tol::cross_analytic
                                                     : tol::cross_fd));
  }
}

TEST_CASE("normalization differential residual") {
  // exact identity for exact derivatives
  CHECK(check_normalization_differential(make_qubit(), theta2(1.1, 0.4)) <=
        1e-12);

  // central differences on a random model
  const PureStateModel fd_model =
      make_random_pure(8, 2, 19).with_mode(DerivativeMode::FiniteDifference);
  CHECK(check_normalization_differential(fd_model, theta2(0.3, 0.7)) <= 1e-7);

  // a deliberately unnormalized family: residual tracks the norm defect
  PureStateModel::Init init;
  init.space = SampleSpace::labeled({0.0, 1.0});
  init.dim_params = 1;
  init.mode = DerivativeMode::Analytic;
  init.name = "unnormalized";
  const double eps = 1e-3;
  init.amplitudes = [eps](const ParameterVector& t) {
    const double scale = std::sqrt(1.0 + eps * t[0]);
    Eigen::VectorXcd psi(2);
    psi << Complex(scale * std::cos(0.3), 0.0), Complex(scale * std::sin(0.3), 0.0);
    return psi;
  };
  init.amplitude_partial = [eps](int, const ParameterVector& t) {
    const double dscale = 0.5 * eps / std::sqrt(1.0 + eps * t[0]);
    Eigen::VectorXcd d(2);
    d << Complex(dscale * std::cos(0.3), 0.0), Complex(dscale * std::sin(0.3), 0.0);
    return d;
  };
  const PureStateModel model(std::move(init));
  const double residual = check_normalization_differential(model, theta1(1.0));
  // d/dtheta (1 + eps*theta)/2 = eps/2
  CHECK(residual == doctest::Approx(eps / 2.0).epsilon(1e-6));
  CHECK(residual > 1e-4);
  CHECK(residual < 1e-2);
}
