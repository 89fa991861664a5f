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

#include "entgen/generator.hpp"

#include <stdexcept>

namespace entgen {

namespace {

const Complex kI(0.0, 1.0);
constexpr double kHermTol = 1e-12;

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

Vector vectorize(const Matrix& x) {
  Vector v(x.size());
  int idx = 0;
  for (int c = 0; c < x.cols(); ++c)
    for (int r = 0; r < x.rows(); ++r) v(idx++) = x(r, c);
  return v;
}

Matrix unvectorize(const Vector& v, int dim) {
  if (v.size() != static_cast<long>(dim) * dim)
    throw std::invalid_argument("unvectorize: size mismatch");
  Matrix x(dim, dim);
  int idx = 0;
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) x(r, c) = v(idx++);
  return x;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_transpose(const Matrix& rho, int d) {
  const int dim = d * d;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("partial_transpose: matrix is not d^2 x d^2");
  Matrix out(dim, dim);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int ap = 0; ap < d; ++ap)
        for (int bp = 0; bp < d; ++bp)
          out(a * d + b, ap * d + bp) = rho(a * d + bp, ap * d + b);
  return out;
}

Matrix partial_transpose_map(int d) {
  const int dim = d * d;
  Matrix p = Matrix::Zero(dim * dim, dim * dim);
  auto vec_index = [dim](int r, int c) { return c * dim + r; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int ap = 0; ap < d; ++ap)
        for (int bp = 0; bp < d; ++bp)
          p(vec_index(a * d + b, ap * d + bp),
            vec_index(a * d + bp, ap * d + b)) = 1.0;
  return p;
}

Matrix choi_matrix(const Matrix& superop, int dim) {
  Matrix choi = Matrix::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      // vec(E_ij) is the unit vector with index j*dim + i.
      const Matrix le = unvectorize(superop.col(j * dim + i), dim);
      choi.block(i * dim, j * dim, dim, dim) = le;
    }
  }
  return choi;
}

double hermiticity_defect(const Matrix& x) {
  return (x - x.adjoint()).cwiseAbs().maxCoeff();
}

GeneratorModel GeneratorModel::zero(BasisSet basis) {
  const int n = basis.size();
  GeneratorModel model;
  model.basis = std::move(basis);
  model.kossakowski.a = Matrix::Zero(n, n);
  model.kossakowski.b = Matrix::Zero(n, n);
  model.kossakowski.c = Matrix::Zero(n, n);
  model.hamiltonian.h1 = Eigen::VectorXd::Zero(n);
  model.hamiltonian.h2 = Eigen::VectorXd::Zero(n);
  model.hamiltonian.h12 = Eigen::MatrixXd::Zero(n, n);
  return model;
}

void validate_blocks(const KossakowskiBlocks& blocks) {
  const long n = blocks.a.rows();
  require(blocks.a.cols() == n, "kossakowski: a is not square");
  require(blocks.b.rows() == n && blocks.b.cols() == n,
          "kossakowski: b shape mismatch");
  require(blocks.c.rows() == n && blocks.c.cols() == n,
          "kossakowski: c shape mismatch");
  if (n > 0) {
    require(hermiticity_defect(blocks.a) <= kHermTol,
            "kossakowski: a is not Hermitian");
    require(hermiticity_defect(blocks.c) <= kHermTol,
            "kossakowski: c is not Hermitian");
  }
}

void validate_model(const GeneratorModel& model) {
  const int n = model.basis.size();
  require(n == model.basis.d * model.basis.d - 1,
          "basis element count does not match d^2 - 1");
  require(model.kossakowski.a.rows() == n, "blocks not sized to basis");
  validate_blocks(model.kossakowski);
  require(model.hamiltonian.h1.size() == n, "h1 not sized to basis");
  require(model.hamiltonian.h2.size() == n, "h2 not sized to basis");
  require(model.hamiltonian.h12.rows() == n && model.hamiltonian.h12.cols() == n,
          "h12 not sized to basis");
  require(model.hamiltonian.h1.allFinite() && model.hamiltonian.h2.allFinite() &&
              model.hamiltonian.h12.allFinite(),
          "hamiltonian coefficients must be finite");
}

Matrix assemble_kossakowski(const KossakowskiBlocks& blocks) {
  validate_blocks(blocks);
  const long n = blocks.a.rows();
  Matrix k(2 * n, 2 * n);
  k.topLeftCorner(n, n) = blocks.a;
  k.topRightCorner(n, n) = blocks.b;
  k.bottomLeftCorner(n, n) = blocks.b.adjoint();
  k.bottomRightCorner(n, n) = blocks.c;
  return k;
}

CpReport validate_cp(const KossakowskiBlocks& blocks) {
  const Matrix k = assemble_kossakowski(blocks);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(k, Eigen::EigenvaluesOnly);
  CpReport report;
  report.eigenvalues = solver.eigenvalues();
  report.min_eigenvalue =
      report.eigenvalues.size() > 0 ? report.eigenvalues.minCoeff() : 0.0;
  report.is_cp = report.min_eigenvalue >= -kPsdTolerance;
  return report;
}

Superoperator build_superoperator(const GeneratorModel& model) {
  validate_model(model);
  const int d = model.basis.d;
  const int dim = d * d;
  const int n = model.basis.size();

  std::vector<Matrix> f1(n), f2(n);
  const Matrix id = Matrix::Identity(d, d);
  for (int i = 0; i < n; ++i) {
    f1[i] = kronecker(model.basis.elements[i], id);
    f2[i] = kronecker(id, model.basis.elements[i]);
  }

  const Matrix id_dim = Matrix::Identity(dim, dim);
  auto left_mult = [&](const Matrix& g) { return kronecker(id_dim, g); };
  auto right_mult = [&](const Matrix& g) {
    return kronecker(g.transpose(), id_dim);
  };
  auto sandwich = [&](const Matrix& l, const Matrix& r) {
    return kronecker(r.transpose(), l);
  };

  Matrix s = Matrix::Zero(dim * dim, dim * dim);

  // Hamiltonian part -i [H_eff, .].
  Matrix h = Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    if (model.hamiltonian.h1(i) != 0.0) h += model.hamiltonian.h1(i) * f1[i];
    if (model.hamiltonian.h2(i) != 0.0) h += model.hamiltonian.h2(i) * f2[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (model.hamiltonian.h12(i, j) != 0.0)
        h += model.hamiltonian.h12(i, j) *
             kronecker(model.basis.elements[i], model.basis.elements[j]);
  if (h.cwiseAbs().maxCoeff() > 0.0)
    s += -kI * (left_mult(h) - right_mult(h));

  // Dissipative part; c * (GL rho GR - 1/2 {GR GL, rho}) per coefficient.
  auto add_gksl = [&](Complex coeff, const Matrix& gl, const Matrix& gr) {
    if (coeff == Complex(0.0, 0.0)) return;
    const Matrix prod = gr * gl;
    s += coeff * (sandwich(gl, gr) -
                  0.5 * (left_mult(prod) + right_mult(prod)));
  };
  const KossakowskiBlocks& k = model.kossakowski;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add_gksl(k.a(i, j), f1[i], f1[j]);
      add_gksl(k.c(i, j), f2[i], f2[j]);
      add_gksl(k.b(i, j), f1[i], f2[j]);
      add_gksl(std::conj(k.b(i, j)), f2[j], f1[i]);
    }
  }

  return Superoperator{dim, std::move(s)};
}

GeneratorModel partial_transpose_conjugate(const GeneratorModel& model) {
  validate_model(model);
  const int n = model.basis.size();
  const std::vector<int>& eta = model.basis.signs;
  const Eigen::MatrixXd re_b = model.kossakowski.b.real();
  const Eigen::MatrixXd im_b = model.kossakowski.b.imag();

  GeneratorModel out = GeneratorModel::zero(model.basis);
  out.kossakowski.a = model.kossakowski.a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.kossakowski.b(i, j) =
          -static_cast<double>(eta[j]) *
          (re_b(i, j) + kI * model.hamiltonian.h12(i, j));
      out.kossakowski.c(i, j) = static_cast<double>(eta[i] * eta[j]) *
                                model.kossakowski.c(j, i);
      out.hamiltonian.h12(i, j) = -static_cast<double>(eta[j]) * im_b(i, j);
    }
    out.hamiltonian.h2(i) =
        -static_cast<double>(eta[i]) * model.hamiltonian.h2(i);
  }
  out.hamiltonian.h1 = model.hamiltonian.h1;
  return out;
}

Superoperator tilde_superoperator(const GeneratorModel& model) {
  Superoperator s = build_superoperator(model);
  const Matrix p = partial_transpose_map(model.basis.d);
  s.matrix = p * s.matrix * p;
  return s;
}

Matrix Superoperator::apply(const Matrix& x) const {
  if (x.rows() != dim || x.cols() != dim)
    throw std::invalid_argument("apply: operand dimension mismatch");
  return unvectorize(matrix * vectorize(x), dim);
}

Matrix apply(const Superoperator& superop, const Matrix& x) {
  return superop.apply(x);
}

}  // namespace entgen
