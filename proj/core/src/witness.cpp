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

#include "entgen/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace entgen {

namespace {

const Complex kI(0.0, 1.0);

double spectral_norm_hermitian(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

// Bitmask helpers over witness rows; the v block is rows [0, d-1), the u
// block rows [d-1, 2(d-1)).
bool subset_inside_one_block(unsigned mask, int d) {
  const unsigned v_mask = (1u << (d - 1)) - 1u;
  const unsigned u_mask = ((1u << (2 * (d - 1))) - 1u) & ~v_mask;
  return (mask & v_mask) == mask || (mask & u_mask) == mask;
}

Matrix restrict_matrix(const Matrix& m, const std::vector<int>& rows) {
  Matrix out(rows.size(), rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows.size(); ++j)
      out(i, j) = m(rows[i], rows[j]);
  return out;
}

// Largest-magnitude component scaled to exactly 1.
Vector infinity_gauge(const Vector& v) {
  int arg = 0;
  double best = 0.0;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > best) {
      best = std::abs(v(i));
      arg = i;
    }
  }
  if (best == 0.0) return v;
  return v / v(arg);
}

double coefficient_band(const Superoperator& tilde, const Vector& phi, int k) {
  // Scale-aware zero band for <phi|Ltilde^k[Qtilde]|phi>.
  const double row_norm =
      tilde.matrix.cwiseAbs().rowwise().sum().maxCoeff();
  const double scale =
      std::max(1.0, std::pow(std::max(row_norm, 1.0), k)) * phi.squaredNorm();
  return 1e-8 * scale;
}

}  // namespace

void validate_state(const ProductState& state, int d) {
  if (state.psi.size() == 0 || state.phi.size() == 0)
    throw std::invalid_argument("product state: empty vector");
  if (state.psi.size() != state.phi.size())
    throw std::invalid_argument("product state: psi and phi lengths differ");
  if (d > 0 && state.psi.size() != d)
    throw std::invalid_argument("product state: dimension mismatch");
  if (std::abs(state.psi.norm() - 1.0) > 1e-12 ||
      std::abs(state.phi.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("product state: vectors must be unit norm");
}

Matrix complement_basis(const Vector& x) {
  const int d = static_cast<int>(x.size());
  if (d == 0 || x.norm() == 0.0)
    throw std::invalid_argument("complement_basis: zero vector");
  const Complex beta =
      std::abs(x(0)) > 0.0 ? x(0) / std::abs(x(0)) : Complex(1.0, 0.0);
  Vector w = x;
  w(0) += beta;
  const double wnorm2 = w.squaredNorm();
  Matrix out(d, d);
  out.col(0) = x;
  for (int k = 1; k < d; ++k) {
    // Column k of the reflector I - 2 w w^dagger / |w|^2.
    Vector col = -2.0 * w * (std::conj(w(k)) / wnorm2);
    col(k) += 1.0;
    out.col(k) = col;
  }
  return out;
}

FlipVectors flip_vectors_with_completions(const BasisSet& basis,
                                          const Matrix& psi_completion,
                                          const Matrix& phi_completion) {
  const int d = basis.d;
  const int n = basis.size();
  FlipVectors flips;
  flips.psi_completion = psi_completion;
  flips.phi_completion = phi_completion;
  const Vector psi1 = psi_completion.col(0);
  const Vector phi1 = phi_completion.col(0);
  for (int m = 1; m < d; ++m) {
    Vector u(n), v(n);
    for (int i = 0; i < n; ++i) {
      u(i) = psi1.dot(basis.elements[i] * psi_completion.col(m));
      v(i) = static_cast<double>(basis.signs[i]) *
             phi1.dot(basis.elements[i] * phi_completion.col(m));
    }
    flips.u.push_back(std::move(u));
    flips.v.push_back(std::move(v));
  }
  return flips;
}

FlipVectors flip_vectors(const ProductState& state, const BasisSet& basis) {
  validate_state(state, basis.d);
  return flip_vectors_with_completions(basis, complement_basis(state.psi),
                                       complement_basis(state.phi.conjugate()));
}

WitnessMatrix witness_matrix_from_flips(const GeneratorModel& model,
                                        const FlipVectors& flips) {
  const int d = model.basis.d;
  const int nw = 2 * (d - 1);
  const Matrix ct = model.kossakowski.c.transpose();
  const Matrix& a = model.kossakowski.a;
  const Matrix cross = model.kossakowski.b.real().transpose().cast<Complex>() -
                       kI * model.hamiltonian.h12.transpose().cast<Complex>();
  Matrix m(nw, nw);
  for (int i = 0; i < d - 1; ++i) {
    for (int j = 0; j < d - 1; ++j) {
      m(i, j) = flips.v[i].dot(ct * flips.v[j]);
      m(d - 1 + i, d - 1 + j) = flips.u[i].dot(a * flips.u[j]);
      m(i, d - 1 + j) = -flips.v[i].dot(cross * flips.u[j]);
    }
  }
  for (int i = 0; i < d - 1; ++i)
    for (int j = 0; j < d - 1; ++j)
      m(d - 1 + j, i) = std::conj(m(i, d - 1 + j));
  return WitnessMatrix{d, std::move(m)};
}

WitnessMatrix witness_matrix(const GeneratorModel& model,
                             const ProductState& state) {
  validate_model(model);
  return witness_matrix_from_flips(model, flip_vectors(state, model.basis));
}

std::vector<MinorReport> principal_minors(const WitnessMatrix& wm) {
  const int n = 2 * (wm.d - 1);
  if (n > 24)
    throw std::invalid_argument("principal_minors: dimension too large");
  if (hermiticity_defect(wm.m) > 1e-10)
    throw std::invalid_argument("principal_minors: matrix is not Hermitian");
  std::vector<MinorReport> reports;
  reports.reserve((1u << n) - 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    MinorReport report;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) report.index_set.push_back(i + 1);
    std::vector<int> rows;
    for (int idx : report.index_set) rows.push_back(idx - 1);
    report.value = restrict_matrix(wm.m, rows).determinant().real();
    report.skipped = subset_inside_one_block(mask, wm.d);
    reports.push_back(std::move(report));
  }
  return reports;
}

int witness_row_to_composite(int row, int d) {
  if (row < 0 || row >= 2 * (d - 1))
    throw std::invalid_argument("witness row out of range");
  if (row < d - 1) return row + 1;        // psi_1 (x) phi_(row+2)
  return d * (row - d + 2);               // psi_(row-d+3) (x) phi_1
}

Vector composite_basis_vector(const FlipVectors& flips, int index) {
  const int d = static_cast<int>(flips.psi_completion.rows());
  const int k = index / d;
  const int l = index % d;
  return kronecker(flips.psi_completion.col(k), flips.phi_completion.col(l));
}

FirstOrderVerdict first_order_verdict(const GeneratorModel& model,
                                      const ProductState& state,
                                      double tol_minor) {
  const FlipVectors flips = flip_vectors(state, model.basis);
  const WitnessMatrix wm = witness_matrix_from_flips(model, flips);

  FirstOrderVerdict out;
  out.minors = principal_minors(wm);
  out.matrix_norm = spectral_norm_hermitian(wm.m);
  out.kossakowski_psd = validate_cp(model.kossakowski).is_cp;

  auto band = [&](size_t order) {
    return out.matrix_norm == 0.0
               ? 0.0
               : tol_minor * std::pow(out.matrix_norm, static_cast<double>(order));
  };

  std::vector<const MinorReport*> marginal;
  const MinorReport* most_negative = nullptr;
  for (const MinorReport& r : out.minors) {
    if (r.skipped) continue;
    const double b = band(r.index_set.size());
    if (r.value < -b) {
      if (!most_negative || r.value < most_negative->value) most_negative = &r;
    } else if (r.value <= b) {
      marginal.push_back(&r);
    }
  }

  if (most_negative) {
    out.verdict = Verdict::kEntangling;
    out.certificate = *most_negative;
    return out;
  }
  if (marginal.empty()) {
    out.verdict = Verdict::kNoViolation;
    return out;
  }

  out.verdict = Verdict::kMarginal;
  // Null directions of each marginal restriction, embedded in C^(d^2).
  const double eig_tol = std::max(band(1), 1e-14 * std::max(out.matrix_norm, 1.0));
  for (const MinorReport* r : marginal) {
    std::vector<int> rows;
    for (int idx : r->index_set) rows.push_back(idx - 1);
    const Matrix sub = restrict_matrix(wm.m, rows);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sub);
    int taken = 0;
    for (int e = 0; e < solver.eigenvalues().size(); ++e) {
      if (std::abs(solver.eigenvalues()(e)) <= eig_tol) {
        Vector phi = Vector::Zero(model.basis.d * model.basis.d);
        for (size_t q = 0; q < rows.size(); ++q)
          phi += solver.eigenvectors()(q, e) *
                 composite_basis_vector(
                     flips, witness_row_to_composite(rows[q], wm.d));
        out.null_vectors.push_back(infinity_gauge(phi));
        ++taken;
      }
    }
    if (taken == 0) {
      // Determinant in band but no eigenvalue passed the cut: keep the
      // least-|eigenvalue| direction.
      int arg = 0;
      solver.eigenvalues().cwiseAbs().minCoeff(&arg);
      Vector phi = Vector::Zero(model.basis.d * model.basis.d);
      for (size_t q = 0; q < rows.size(); ++q)
        phi += solver.eigenvectors()(q, arg) *
               composite_basis_vector(flips,
                                      witness_row_to_composite(rows[q], wm.d));
      out.null_vectors.push_back(infinity_gauge(phi));
    }
  }
  return out;
}

double expansion_coefficient(const GeneratorModel& model,
                             const ProductState& state, const Vector& phi,
                             int k) {
  if (k < 1) throw std::invalid_argument("expansion_coefficient: k must be >= 1");
  validate_state(state, model.basis.d);
  const int dim = model.basis.d * model.basis.d;
  if (phi.size() != dim)
    throw std::invalid_argument("expansion_coefficient: phi dimension mismatch");

  const Vector psi1 = state.psi;
  const Vector phi1 = state.phi.conjugate();
  const Vector big_psi1 = kronecker(psi1, phi1);
  const Complex overlap = big_psi1.dot(phi);
  if (std::norm(overlap) > 1e-10 * phi.squaredNorm())
    throw std::invalid_argument(
        "expansion_coefficient: phi is not orthogonal to the projector");

  const Superoperator tilde = tilde_superoperator(model);
  Vector w = vectorize(Matrix(big_psi1 * big_psi1.adjoint()));
  for (int step = 0; step < k; ++step) w = tilde.matrix * w;
  const Matrix lk = unvectorize(w, dim);
  const Complex value = phi.dot(lk * phi);
  if (std::abs(value.imag()) >
      1e-10 * std::max(1.0, coefficient_band(tilde, phi, k) * 1e8))
    throw ToleranceBreach("expansion coefficient has a non-real residue");
  return value.real();
}

MarginalResolution resolve_marginal(const GeneratorModel& model,
                                    const ProductState& state,
                                    const FirstOrderVerdict& verdict,
                                    double /*tol_minor*/) {
  if (verdict.verdict != Verdict::kMarginal || verdict.null_vectors.empty())
    throw std::invalid_argument("resolve_marginal: verdict is not marginal");

  const Superoperator tilde = tilde_superoperator(model);

  // Candidate directions: every null vector, plus seeded random kernel
  // combinations when there is more than one.
  std::vector<Vector> candidates = verdict.null_vectors;
  if (verdict.null_vectors.size() > 1) {
    std::mt19937_64 rng(0x517cc1b727220a95ull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int extra = 0; extra < 8; ++extra) {
      Vector mix = Vector::Zero(candidates.front().size());
      for (const Vector& nv : verdict.null_vectors)
        mix += Complex(gauss(rng), gauss(rng)) * nv;
      if (mix.norm() > 1e-12) candidates.push_back(mix / mix.norm());
    }
  }

  auto coefficient = [&](const Vector& phi, int k) {
    Vector w = vectorize(
        Matrix(kronecker(state.psi, state.phi.conjugate()) *
               kronecker(state.psi, state.phi.conjugate()).adjoint()));
    for (int step = 0; step < k; ++step) w = tilde.matrix * w;
    return phi.dot(unvectorize(w, tilde.dim) * phi).real();
  };

  MarginalResolution res;
  // Classify each candidate at a given order: -1 negative beyond the band,
  // 0 inside the band, +1 positive beyond it. The minimum coefficient
  // decides; in-band directions escalate.
  auto classify = [&](const Vector& phi, int k, double c) {
    const double band = coefficient_band(tilde, phi, k);
    if (c < -band) return -1;
    if (c > band) return 1;
    return 0;
  };

  double min2 = 0.0;
  bool entangling2 = false, open2 = false;
  std::vector<const Vector*> still_open;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const double c2 = coefficient(candidates[i], 2);
    res.k2_coefficients.push_back(c2);
    if (i == 0 || c2 < min2) min2 = c2;
    const int cls = classify(candidates[i], 2, c2);
    if (cls < 0) entangling2 = true;
    if (cls == 0) {
      open2 = true;
      still_open.push_back(&candidates[i]);
    }
  }
  if (entangling2) {
    res.resolution = Resolution::kEntangling;
    res.decided_order = 2;
    res.coefficient = min2;
    return res;
  }
  if (!open2) {
    res.resolution = Resolution::kNoViolation;
    res.decided_order = 2;
    res.coefficient = min2;
    return res;
  }

  // Escalate the undecided directions to k = 3.
  double min3 = 0.0;
  bool entangling3 = false, open3 = false;
  for (size_t i = 0; i < still_open.size(); ++i) {
    const double c3 = coefficient(*still_open[i], 3);
    res.k3_coefficients.push_back(c3);
    if (i == 0 || c3 < min3) min3 = c3;
    const int cls = classify(*still_open[i], 3, c3);
    if (cls < 0) entangling3 = true;
    if (cls == 0) open3 = true;
  }
  if (entangling3) {
    res.resolution = Resolution::kEntangling;
    res.decided_order = 3;
    res.coefficient = min3;
    return res;
  }
  if (!open3) {
    res.resolution = Resolution::kNoViolation;
    res.decided_order = 3;
    res.coefficient = min3;
    return res;
  }
  res.resolution = Resolution::kUndecided;
  return res;
}

ResolvedVerdict resolved_verdict(const GeneratorModel& model,
                                 const ProductState& state, double tol_minor) {
  ResolvedVerdict out;
  out.first_order = first_order_verdict(model, state, tol_minor);
  switch (out.first_order.verdict) {
    case Verdict::kEntangling:
      out.resolution = Resolution::kEntangling;
      break;
    case Verdict::kNoViolation:
      out.resolution = Resolution::kNoViolation;
      break;
    case Verdict::kMarginal: {
      out.marginal = resolve_marginal(model, state, out.first_order, tol_minor);
      out.resolution = out.marginal->resolution;
      break;
    }
  }
  return out;
}

}  // namespace entgen
