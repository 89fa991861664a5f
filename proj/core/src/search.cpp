// Copyright 2026 The entgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entgen/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace entgen {

namespace {

constexpr double kGolden = 0.6180339887498949;  // (sqrt(5)-1)/2

// A product state parametrized by 2(d-1) hyperspherical angles and
// 2(d-1) phases: amplitudes chain cos/sin, phases on components 2..d.
struct AngleParam {
  int d;
  std::vector<double> angles;  // 2*(d-1) per vector: [theta..., phase...]

  static int size_per_vector(int d) { return 2 * (d - 1); }

  Vector vector_from(int offset) const {
    const int m = d - 1;
    Vector out(d);
    double sin_chain = 1.0;
    for (int j = 0; j < d; ++j) {
      double amp;
      if (j < m) {
        amp = sin_chain * std::cos(angles[offset + j]);
        sin_chain *= std::sin(angles[offset + j]);
      } else {
        amp = sin_chain;
      }
      const double phase = j == 0 ? 0.0 : angles[offset + m + j - 1];
      out(j) = amp * std::exp(Complex(0.0, phase));
    }
    const double norm = out.norm();
    if (norm < 1e-15) {
      out.setZero();
      out(0) = 1.0;
      return out;
    }
    return out / norm;
  }

  ProductState state() const {
    const int per = size_per_vector(d);
    return ProductState{vector_from(0), vector_from(per)};
  }
};

std::vector<double> angles_of_vector(const Vector& x) {
  const int d = static_cast<int>(x.size());
  const int m = d - 1;
  std::vector<double> out(2 * m, 0.0);
  double sin_chain = 1.0;
  for (int j = 0; j < m; ++j) {
    const double amp = std::abs(x(j));
    const double ratio =
        sin_chain < 1e-15 ? 0.0 : std::clamp(amp / sin_chain, 0.0, 1.0);
    out[j] = std::acos(ratio);
    sin_chain *= std::sin(out[j]);
  }
  for (int j = 1; j < d; ++j) out[m + j - 1] = std::arg(x(j));
  // Global phase gauge: rotate so the first component is real nonnegative.
  const double base = std::arg(x(0) == Complex(0.0, 0.0) ? Complex(1.0, 0.0)
                                                         : x(0));
  for (int j = 1; j < d; ++j) out[m + j - 1] -= base;
  return out;
}

AngleParam angles_of_state(const ProductState& state) {
  AngleParam param;
  param.d = static_cast<int>(state.psi.size());
  param.angles = angles_of_vector(state.psi);
  const std::vector<double> phi_angles = angles_of_vector(state.phi);
  param.angles.insert(param.angles.end(), phi_angles.begin(),
                      phi_angles.end());
  return param;
}

template <typename F>
double golden_section_min(const F& f, double lo, double hi, int iters) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Cyclic coordinate descent with golden-section line searches.
template <typename F>
double refine(AngleParam& param, const F& objective, int sweeps, int iters,
              long* evaluations) {
  double best = objective(param);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const double before = best;
    for (size_t k = 0; k < param.angles.size(); ++k) {
      const double center = param.angles[k];
      auto line = [&](double x) {
        AngleParam trial = param;
        trial.angles[k] = x;
        ++*evaluations;
        return objective(trial);
      };
      const double arg = golden_section_min(
          line, center - std::numbers::pi / 2, center + std::numbers::pi / 2,
          iters);
      AngleParam trial = param;
      trial.angles[k] = arg;
      const double value = objective(trial);
      if (value < best) {
        best = value;
        param = trial;
      }
    }
    if (before - best < 1e-15) break;
  }
  return best;
}

}  // namespace

ProductState sample_product_state(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("sample_product_state: d must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&]() {
    Vector x(d);
    for (int i = 0; i < d; ++i) x(i) = Complex(gauss(rng), gauss(rng));
    return Vector(x / x.norm());
  };
  ProductState state;
  state.psi = draw();
  state.phi = draw();
  return state;
}

ProductState gauge_fix(const ProductState& state) {
  auto fix = [](const Vector& x) {
    for (int i = 0; i < x.size(); ++i) {
      if (std::abs(x(i)) > 1e-12) {
        return Vector(x * (std::conj(x(i)) / std::abs(x(i))));
      }
    }
    return x;
  };
  return ProductState{fix(state.psi), fix(state.phi)};
}

SearchReport find_entangling_state(const GeneratorModel& model, int budget,
                                   std::uint64_t seed, double tol_minor) {
  if (budget < 1)
    throw std::invalid_argument("find_entangling_state: budget must be >= 1");
  validate_model(model);
  const int d = model.basis.d;

  long evaluations = 0;
  auto least_minor = [&](const WitnessMatrix& wm) {
    MinorReport best;
    bool first = true;
    for (MinorReport& r : principal_minors(wm)) {
      if (r.skipped) continue;
      if (first || r.value < best.value) {
        best = r;
        first = false;
      }
    }
    return best;
  };
  auto objective = [&](const AngleParam& param) {
    ++evaluations;
    return least_minor(witness_matrix(model, param.state())).value;
  };

  SearchReport report;
  bool have_best = false;
  double best_value = 0.0;
  for (int start = 0; start < budget; ++start) {
    AngleParam param =
        angles_of_state(sample_product_state(d, seed + 0x9e3779b9ull * start));
    param.d = d;
    const double value = refine(param, objective, 5, 48, &evaluations);
    if (!have_best || value < best_value) {
      have_best = true;
      best_value = value;
      report.best_state = gauge_fix(param.state());
    }
  }

  const WitnessMatrix wm = witness_matrix(model, report.best_state);
  report.best_minor = least_minor(wm);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(wm.m, Eigen::EigenvaluesOnly);
  report.matrix_norm =
      wm.m.rows() > 0 ? solver.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
  report.evaluations = evaluations;
  const double band =
      report.matrix_norm == 0.0
          ? 0.0
          : tol_minor * std::pow(report.matrix_norm,
                                 static_cast<double>(
                                     report.best_minor.index_set.size()));
  report.verdict = report.best_minor.value < -band
                       ? SearchVerdict::kCertificateFound
                       : SearchVerdict::kNoViolationFound;
  return report;
}

CapabilityReport capability(const Eigen::MatrixXd& h12, const BasisSet& basis,
                            int budget, std::uint64_t seed) {
  const int n = basis.size();
  if (h12.rows() != n || h12.cols() != n)
    throw std::invalid_argument("capability: h12 is not (d^2-1) square");
  if (!h12.allFinite())
    throw std::invalid_argument("capability: h12 must be real and finite");

  CapabilityReport report;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h12);
  report.singular_values = svd.singularValues();

  const Matrix h = h12.cast<Complex>();
  long evaluations = 0;
  auto coupling = [&](const ProductState& state) {
    const FlipVectors flips = flip_vectors(state, basis);
    double best = 0.0;
    for (const Vector& u : flips.u)
      for (const Vector& v : flips.v)
        best = std::max(best, std::norm(u.dot(h * v)));
    return best;
  };
  auto objective = [&](const AngleParam& param) {
    return -coupling(param.state());
  };

  double attained = 0.0;
  ProductState best_state = sample_product_state(basis.d, seed);
  for (int start = 0; start < budget; ++start) {
    AngleParam param = angles_of_state(
        sample_product_state(basis.d, seed + 0x9e3779b9ull * start));
    param.d = basis.d;
    const double value = -refine(param, objective, 10, 60, &evaluations);
    if (value > attained) {
      attained = value;
      best_state = param.state();
    }
  }
  report.attained = attained;
  report.maximizer = gauge_fix(best_state);

  if (basis.d == 2) {
    const double mu_sum =
        report.singular_values(0) + report.singular_values(1);
    const double scale = basis.norm_const / 2.0;
    report.eta_max = mu_sum * mu_sum * scale * scale;
  } else {
    report.eta_max = attained;
  }
  return report;
}

CapabilityReport capability(const Eigen::MatrixXd& h12) {
  const int n = static_cast<int>(h12.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(n + 1.0)));
  if (static_cast<long>(d) * d != n + 1 || d < 2)
    throw std::invalid_argument("capability: size is not d^2 - 1");
  return capability(h12, d == 2 ? pauli_basis() : gellmann_basis(d));
}

}  // namespace entgen
