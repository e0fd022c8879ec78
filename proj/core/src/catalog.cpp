// Copyright 2026 The qig authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qig/catalog.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "qig/random.hpp"

namespace qig {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::MatrixXcd random_hermitian(int n, RandomStream& rng) {
  Eigen::MatrixXcd b(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      b(r, c) = rng.complex_normal();
    }
  }
  return 0.5 * (b + b.adjoint());
}

}  // namespace

ProbabilityModel make_bernoulli() {
  ProbabilityModel::Init init;
  init.space = SampleSpace::labeled({0.0, 1.0});
  init.dim_params = 1;
  init.mode = DerivativeMode::Analytic;
  init.name = "bernoulli";
  init.admissible = [](const ParameterVector& t) {
    return t[0] > 0.0 && t[0] < 1.0;
  };
  init.density = [](const ParameterVector& t) -> Eigen::VectorXd {
    return Eigen::Vector2d(1.0 - t[0], t[0]);
  };
  init.density_partial = [](int, const ParameterVector&) -> Eigen::VectorXd {
    return Eigen::Vector2d(-1.0, 1.0);
  };
  return ProbabilityModel(std::move(init));
}

PureStateModel make_qubit() {
  PureStateModel::Init init;
  init.space = SampleSpace::labeled({0.0, 1.0});
  init.dim_params = 2;
  init.mode = DerivativeMode::Analytic;
  init.name = "qubit";
  init.amplitudes = [](const ParameterVector& t) -> Eigen::VectorXcd {
    const double half = 0.5 * t[0];
    Eigen::VectorXcd psi(2);
    psi << Complex(std::cos(half), 0.0),
        std::sin(half) * std::exp(kI * t[1]);
    return psi;
  };
  init.amplitude_partial = [](int j, const ParameterVector& t) -> Eigen::VectorXcd {
    const double half = 0.5 * t[0];
    const Complex phase = std::exp(kI * t[1]);
    Eigen::VectorXcd dpsi(2);
    if (j == 0) {
      dpsi << Complex(-0.5 * std::sin(half), 0.0), 0.5 * std::cos(half) * phase;
    } else {
      dpsi << Complex(0.0, 0.0), kI * std::sin(half) * phase;
    }
    return dpsi;
  };
  return PureStateModel(std::move(init));
}

PureStateModel make_phase_encoding(const SampleSpace& space,
                                   std::vector<double> base_density,
                                   std::vector<double> alphas) {
  const auto n = static_cast<std::size_t>(space.size());
  if (base_density.size() != n || alphas.size() != n) {
    throw ValidationError(
        "phase_encoding: base_density/alphas length must match the space");
  }
  Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(
      base_density.data(), static_cast<Eigen::Index>(n));
  if (p.minCoeff() < 0.0) {
    throw ValidationError("phase_encoding: base_density must be nonnegative");
  }
  const double mass = space.integrate(p);
  if (std::abs(mass - 1.0) > tol::norm_tabulated) {
    throw ValidationError(
        "phase_encoding: base_density not normalized on the space (sum w p = " +
        std::to_string(mass) + ")");
  }
  Eigen::VectorXd alpha = Eigen::Map<const Eigen::VectorXd>(
      alphas.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd root = p.cwiseSqrt();

  PureStateModel::Init init;
  init.space = space;
  init.dim_params = 1;
  init.mode = DerivativeMode::Analytic;
  init.name = "phase_encoding";
  init.amplitudes = [root, alpha](const ParameterVector& t) -> Eigen::VectorXcd {
    return root.cast<Complex>().cwiseProduct(
        (kI * t[0] * alpha).array().exp().matrix());
  };
  init.amplitude_partial = [root, alpha](int, const ParameterVector& t)
      -> Eigen::VectorXcd {
    return (kI * alpha.cast<Complex>().array() * root.array() *
            (kI * t[0] * alpha).array().exp())
        .matrix();
  };
  return PureStateModel(std::move(init));
}

PureStateModel make_phase_encoding() {
  return make_phase_encoding(SampleSpace::labeled({-1.0, 0.0, 1.0}),
                             {0.25, 0.5, 0.25}, {-1.0, 0.0, 1.0});
}

ProbabilityModel make_gaussian_grid(double sigma, const SampleSpace& grid) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("gaussian_grid: sigma must be positive");
  }
  const Eigen::VectorXd x = grid.points();
  const Eigen::VectorXd w = grid.weights();
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const double inv_s2 = 1.0 / (sigma * sigma);

  auto density = [x, w, inv2s2](const ParameterVector& t) -> Eigen::VectorXd {
    Eigen::VectorXd q = (-(x.array() - t[0]).square() * inv2s2).exp();
    return q / w.dot(q);
  };

  ProbabilityModel::Init init;
  init.space = grid;
  init.dim_params = 1;
  init.mode = DerivativeMode::Analytic;
  init.name = "gaussian_grid";
  init.density = density;
  init.density_partial = [x, w, inv_s2, density](
                             int, const ParameterVector& t) -> Eigen::VectorXd {
    const Eigen::VectorXd p = density(t);
    const Eigen::VectorXd score_raw = (x.array() - t[0]) * inv_s2;
    const double mean = w.dot(p.cwiseProduct(score_raw));
    return p.array() * (score_raw.array() - mean);
  };
  return ProbabilityModel(std::move(init));
}

// ---------------------------------------------------------------------------
// random fixtures

PureStateModel make_random_pure(int n, int m, std::uint64_t seed) {
  if (n < 2) throw ValidationError("random_pure: needs n >= 2");
  if (m < 1) throw ValidationError("random_pure: needs m >= 1");

  struct Data {
    Eigen::VectorXcd psi0;
    std::vector<Eigen::MatrixXcd> eigvecs;   // of the generators A_j
    std::vector<Eigen::VectorXd> eigvals;
    std::vector<Eigen::MatrixXcd> generators;
  };
  auto data = std::make_shared<Data>();

  RandomStream rng(seed);
  data->psi0.resize(n);
  for (int i = 0; i < n; ++i) data->psi0(i) = rng.complex_normal();
  data->psi0.normalize();

  for (int j = 0; j < m; ++j) {
    Eigen::MatrixXcd a = random_hermitian(n, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    data->generators.push_back(std::move(a));
    data->eigvecs.push_back(es.eigenvectors());
    data->eigvals.push_back(es.eigenvalues());
  }

  auto rotate = [data](int j, double t, const Eigen::VectorXcd& v) {
    const Eigen::VectorXcd phases =
        (kI * t * data->eigvals[static_cast<std::size_t>(j)].array())
            .exp()
            .matrix();
    const auto& vecs = data->eigvecs[static_cast<std::size_t>(j)];
    return (vecs * phases.asDiagonal() * vecs.adjoint() * v).eval();
  };

  PureStateModel::Init init;
  init.space = SampleSpace::labeled([n] {
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i;
    return pts;
  }());
  init.dim_params = m;
  init.mode = DerivativeMode::Analytic;
  init.name = "random_pure(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
              ",seed=" + std::to_string(seed) + ")";
  init.amplitudes = [data, rotate, m](const ParameterVector& t) -> Eigen::VectorXcd {
    Eigen::VectorXcd v = data->psi0;
    for (int j = 0; j < m; ++j) v = rotate(j, t[j], v);
    return v;
  };
  init.amplitude_partial = [data, rotate, m](
                               int j, const ParameterVector& t) -> Eigen::VectorXcd {
    Eigen::VectorXcd v = data->psi0;
    for (int k = 0; k <= j; ++k) v = rotate(k, t[k], v);
    v = kI * (data->generators[static_cast<std::size_t>(j)] * v);
    for (int k = j + 1; k < m; ++k) v = rotate(k, t[k], v);
    return v;
  };
  return PureStateModel(std::move(init));
}

ProbabilityModel make_random_probability(int n, int m, std::uint64_t seed) {
  if (n < 2) throw ValidationError("random_probability: needs n >= 2");
  if (m < 1) throw ValidationError("random_probability: needs m >= 1");

  RandomStream rng(seed);
  Eigen::VectorXd offsets(n);
  Eigen::MatrixXd slopes(n, m);  // column j: logit slope for theta_j
  for (int i = 0; i < n; ++i) offsets(i) = rng.normal();
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) slopes(i, j) = rng.normal();
  }

  SampleSpace space = SampleSpace::labeled([n] {
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i;
    return pts;
  }());
  const Eigen::VectorXd w = space.weights();

  auto density = [offsets, slopes, w](const ParameterVector& t) -> Eigen::VectorXd {
    Eigen::VectorXd z = offsets + slopes * t;
    Eigen::VectorXd q = (z.array() - z.maxCoeff()).exp();
    return q / w.dot(q);
  };

  ProbabilityModel::Init init;
  init.space = std::move(space);
  init.dim_params = m;
  init.mode = DerivativeMode::Analytic;
  init.name = "random_probability(n=" + std::to_string(n) + ",m=" +
              std::to_string(m) + ",seed=" + std::to_string(seed) + ")";
  init.density = density;
  init.density_partial = [slopes, w, density](
                             int j, const ParameterVector& t) -> Eigen::VectorXd {
    const Eigen::VectorXd p = density(t);
    const Eigen::VectorXd b = slopes.col(j);
    const double mean = w.dot(p.cwiseProduct(b));
    return p.array() * (b.array() - mean);
  };
  return ProbabilityModel(std::move(init));
}

PureStateModel make_random_real_pure(int n, int m, std::uint64_t seed) {
  ProbabilityModel base = make_random_probability(n, m, seed);
  PureStateModel::Init init;
  init.space = base.space();
  init.dim_params = m;
  init.mode = DerivativeMode::Analytic;
  init.name = "random_real_pure(n=" + std::to_string(n) + ",m=" +
              std::to_string(m) + ",seed=" + std::to_string(seed) + ")";
  init.amplitudes = [base](const ParameterVector& t) -> Eigen::VectorXcd {
    return base.density(t).cwiseSqrt().cast<Complex>();
  };
  init.amplitude_partial = [base](int j, const ParameterVector& t)
      -> Eigen::VectorXcd {
    const Eigen::VectorXd p = base.density(t);
    const Eigen::VectorXd dp = base.density_partial(j, t);
    return (dp.array() / (2.0 * p.array().sqrt())).matrix().cast<Complex>();
  };
  return PureStateModel(std::move(init));
}

DensityModel make_random_density(int n, int m, std::uint64_t seed) {
  if (n < 2) throw ValidationError("random_density: needs n >= 2");
  if (m < 1) throw ValidationError("random_density: needs m >= 1");

  struct Data {
    Eigen::MatrixXcd base;
    std::vector<Eigen::MatrixXcd> directions;
    double floor = 0.1;  // times identity, keeps the state full rank
  };
  auto data = std::make_shared<Data>();

  RandomStream rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  auto draw = [&rng, n, scale] {
    Eigen::MatrixXcd mat(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) mat(r, c) = scale * rng.complex_normal();
    }
    return mat;
  };
  data->base = draw();
  for (int j = 0; j < m; ++j) data->directions.push_back(draw());

  auto factor = [data](const ParameterVector& t) {
    Eigen::MatrixXcd mat = data->base;
    for (Eigen::Index j = 0; j < t.size(); ++j) {
      mat += t[j] * data->directions[static_cast<std::size_t>(j)];
    }
    return mat;
  };

  DensityModel::Init init;
  init.dim_hilbert = n;
  init.dim_params = m;
  init.mode = DerivativeMode::Analytic;
  init.name = "random_density(n=" + std::to_string(n) + ",m=" +
              std::to_string(m) + ",seed=" + std::to_string(seed) + ")";
  init.density_matrix = [data, factor, n](const ParameterVector& t)
      -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd mat = factor(t);
    Eigen::MatrixXcd s = mat * mat.adjoint();
    s += data->floor * Eigen::MatrixXcd::Identity(n, n);
    return s / s.trace().real();
  };
  init.density_matrix_partial = [data, factor, n](
                                    int j, const ParameterVector& t) -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd mat = factor(t);
    const Eigen::MatrixXcd& dir = data->directions[static_cast<std::size_t>(j)];
    Eigen::MatrixXcd s = mat * mat.adjoint();
    s += data->floor * Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd ds = dir * mat.adjoint() + mat * dir.adjoint();
    const double trace = s.trace().real();
    const double dtrace = ds.trace().real();
    return ds / trace - s * (dtrace / (trace * trace));
  };
  return DensityModel(std::move(init));
}

std::vector<std::pair<std::string, std::string>> catalog_listing() {
  return {
      {"bernoulli",
       "two-point coin, p = (1-theta, theta), theta in (0,1)"},
      {"qubit",
       "Bloch qubit psi = (cos(theta/2), sin(theta/2) e^{i phi}), params (theta, phi)"},
      {"phase_encoding",
       "psi = sqrt(p(x)) e^{i alpha(x) phi} with fixed base density; params (phi)"},
      {"gaussian_grid",
       "discretized Gaussian with mean parameter, renormalized on its grid"},
      {"random_pure",
       "random unitary-rotation pure-state family; params n, m, seed"},
      {"random_real_pure",
       "random real nonnegative pure-state family (dalpha = 0); params n, m, seed"},
      {"random_probability",
       "random strictly positive softmax density; params n, m, seed"},
      {"random_density",
       "random full-rank density family, affine factor; params n, m, seed"},
  };
}

}  // namespace qig
