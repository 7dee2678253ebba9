// Copyright 2026 The qnoise authors
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

#include "qnoise/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnoise {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;

void check_finite(const Matrix& m, const char* what) {
  if (!m.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

}  // namespace

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0)
    throw std::invalid_argument("PureState: empty amplitude vector");
  if (!amplitudes_.allFinite())
    throw std::invalid_argument("PureState: non-finite amplitudes");
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: amplitudes not normalized");
}

DensityMatrix::DensityMatrix(Matrix rho, std::vector<Index> subsystem_dims)
    : matrix_(std::move(rho)), subsystem_dims_(std::move(subsystem_dims)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  check_finite(matrix_, "DensityMatrix");
  if (max_abs(matrix_ - matrix_.adjoint()) > kHermitianTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(matrix_.trace().real() - 1.0) > kTraceTol ||
      std::abs(matrix_.trace().imag()) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace must be 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("DensityMatrix: eigenvalue check failed");
  if (solver.eigenvalues().minCoeff() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: not positive semidefinite");
  if (!subsystem_dims_.empty()) {
    Index product = 1;
    for (Index d : subsystem_dims_) {
      if (d < 1) throw std::invalid_argument("DensityMatrix: bad subsystem dim");
      product *= d;
    }
    if (product != matrix_.rows())
      throw std::invalid_argument(
          "DensityMatrix: subsystem dims do not factor the dimension");
  }
}

DensityMatrix DensityMatrix::with_subsystems(std::vector<Index> dims) const {
  return DensityMatrix(matrix_, std::move(dims));
}

DensityMatrix density_from_pure(const PureState& state) {
  const Vector& v = state.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

PureState max_entangled(Index s) {
  if (s < 2) throw std::domain_error("max_entangled: dimension must be >= 2");
  Vector v = Vector::Zero(s * s);
  const double amp = 1.0 / std::sqrt(static_cast<double>(s));
  for (Index j = 0; j < s; ++j) v(j * s + j) = amp;
  return PureState(std::move(v));
}

Matrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  if (!rho.has_bipartition())
    throw std::invalid_argument(
        "partial_transpose: state needs a two-factor subsystem split");
  return partial_transpose(rho.matrix(), rho.subsystem_dims()[0],
                           rho.subsystem_dims()[1], subsystem);
}

Matrix partial_transpose(const Matrix& m, Index dim_a, Index dim_b,
                         int subsystem) {
  if (subsystem != 0 && subsystem != 1)
    throw std::invalid_argument("partial_transpose: subsystem must be 0 or 1");
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b ||
      m.cols() != dim_a * dim_b)
    throw std::invalid_argument("partial_transpose: dimensions do not factor");
  const Index da = dim_a;
  const Index db = dim_b;
  Matrix out(m.rows(), m.cols());
  for (Index ia = 0; ia < da; ++ia)
    for (Index ib = 0; ib < db; ++ib)
      for (Index ja = 0; ja < da; ++ja)
        for (Index jb = 0; jb < db; ++jb) {
          const Index row = ia * db + ib;
          const Index col = ja * db + jb;
          const Index src_row = (subsystem == 0 ? ja : ia) * db +
                                (subsystem == 1 ? jb : ib);
          const Index src_col = (subsystem == 0 ? ia : ja) * db +
                                (subsystem == 1 ? ib : jb);
          out(row, col) = m(src_row, src_col);
        }
  return out;
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  check_finite(m, "hermitian_eigenvalues");
  if (max_abs(m - m.adjoint()) > 1e-10)
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: solver did not converge");
  return solver.eigenvalues();
}

double negativity(const DensityMatrix& rho) {
  const RealVector evals = hermitian_eigenvalues(partial_transpose(rho, 1));
  double sum = 0.0;
  for (Index i = 0; i < evals.size(); ++i)
    if (evals(i) < -kEigenvalueFloor) sum -= evals(i);
  return sum;
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  const RealVector evals = hermitian_eigenvalues(a - b);
  return 0.5 * evals.cwiseAbs().sum();
}

Index rank_with_floor(const Matrix& hermitian, double floor) {
  const RealVector evals = hermitian_eigenvalues(hermitian);
  Index count = 0;
  for (Index i = 0; i < evals.size(); ++i)
    if (std::abs(evals(i)) > floor) ++count;
  return count;
}

}  // namespace qnoise
