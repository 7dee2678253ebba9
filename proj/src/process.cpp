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

#include "qnoise/process.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qnoise {

namespace {

// Spectral weights below this are dropped when recovering Kraus
// operators from a process matrix; the induced completeness error is
// bounded by s^2 times this cut.
constexpr double kKrausCut = 1e-13;

int qubit_count(Index dim) {
  if (dim == 2) return 1;
  if (dim == 4) return 2;
  throw std::invalid_argument(
      "noisy gate: per-qubit relaxation needs a 2- or 4-dimensional gate");
}

KrausChannel relaxation_step(Index dim, double dt, double t1, double t2) {
  const KrausChannel one_qubit = qubit_relaxation(relaxation_params(dt, t1, t2));
  if (qubit_count(dim) == 1) return one_qubit;
  return tensor_channel(one_qubit, one_qubit);
}

void validate_spec(const NoisyGateSpec& spec) {
  if (spec.n_slices < 1)
    throw std::domain_error("noisy gate: slice count must be >= 1");
  if (!(spec.t_gate >= 0.0))
    throw std::domain_error("noisy gate: gate time must be >= 0");
  if (!is_unitary(spec.gate, 1e-10))
    throw std::invalid_argument("noisy gate: gate matrix is not unitary");
  qubit_count(spec.gate.rows());
}

}  // namespace

ChiMatrix::ChiMatrix(Index s, Matrix chi) : s_(s), matrix_(std::move(chi)) {
  if (s_ < 2) throw std::invalid_argument("ChiMatrix: dimension must be >= 2");
  if (matrix_.rows() != s_ * s_ || matrix_.cols() != s_ * s_)
    throw std::invalid_argument("ChiMatrix: matrix must be s^2 x s^2");
  if (!matrix_.allFinite())
    throw std::invalid_argument("ChiMatrix: non-finite entries");
  if (max_abs(matrix_ - matrix_.adjoint()) > 1e-10)
    throw std::invalid_argument("ChiMatrix: not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr.real() - static_cast<double>(s_)) > 1e-10 ||
      std::abs(tr.imag()) > 1e-10)
    throw std::invalid_argument("ChiMatrix: trace must equal s");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_,
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("ChiMatrix: eigenvalue check failed");
  if (solver.eigenvalues().minCoeff() < -1e-10 * static_cast<double>(s_))
    throw std::invalid_argument("ChiMatrix: chi/s not positive semidefinite");
}

DensityMatrix ChiMatrix::to_density() const {
  return DensityMatrix(matrix_ / static_cast<double>(s_), {s_, s_});
}

Index ChiMatrix::rank(double floor) const {
  return rank_with_floor(matrix_, floor);
}

ChiMatrix chi_from_channel(const KrausChannel& ch) {
  if (ch.dim_in() != ch.dim_out())
    throw std::invalid_argument("chi_from_channel: channel must be square");
  const Index s = ch.dim_in();
  const DensityMatrix bell =
      density_from_pure(max_entangled(s)).with_subsystems({s, s});
  const KrausChannel extended = tensor_channel(ch, KrausChannel::identity(s));
  const DensityMatrix out = apply_channel(extended, bell);
  return ChiMatrix(s, static_cast<double>(s) * out.matrix());
}

Matrix gate_fraction(const Matrix& u, int n) {
  if (n < 1) throw std::domain_error("gate_fraction: n must be >= 1");
  if (!is_unitary(u, 1e-10))
    throw std::invalid_argument("gate_fraction: matrix is not unitary");
  if (n == 1) return u;
  // A unitary matrix is normal, so its Schur form is diagonal and
  // carries the eigenphases.
  Eigen::ComplexSchur<Matrix> schur(u);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("gate_fraction: Schur decomposition failed");
  const Matrix& q = schur.matrixU();
  Vector roots(u.rows());
  for (Index i = 0; i < u.rows(); ++i) {
    double phase = std::arg(schur.matrixT()(i, i));
    // Keep eigenphases on the (-pi, pi] branch; a phase representing
    // -pi up to roundoff belongs on the +pi side.
    if (phase <= -std::numbers::pi + 1e-12) phase += 2.0 * std::numbers::pi;
    roots(i) = std::polar(1.0, phase / static_cast<double>(n));
  }
  return q * roots.asDiagonal() * q.adjoint();
}

Matrix sqisw() {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex ir(0.0, 1.0 / std::numbers::sqrt2);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = r;
  m(1, 2) = ir;
  m(2, 1) = ir;
  m(2, 2) = r;
  m(3, 3) = 1.0;
  return m;
}

Matrix superoperator(const KrausChannel& ch) {
  Matrix s = Matrix::Zero(ch.dim_out() * ch.dim_out(),
                          ch.dim_in() * ch.dim_in());
  for (const Matrix& op : ch.operators()) s += kron(op, op.conjugate());
  return s;
}

ChiMatrix chi_from_superoperator(const Matrix& superop, Index s) {
  if (superop.rows() != s * s || superop.cols() != s * s)
    throw std::invalid_argument("chi_from_superoperator: shape mismatch");
  Matrix chi(s * s, s * s);
  for (Index x = 0; x < s; ++x)
    for (Index m = 0; m < s; ++m)
      for (Index y = 0; y < s; ++y)
        for (Index n = 0; n < s; ++n)
          chi(x * s + m, y * s + n) = superop(x * s + y, m * s + n);
  return ChiMatrix(s, std::move(chi));
}

KrausChannel kraus_from_chi(const ChiMatrix& chi) {
  const Index s = chi.s();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(chi.matrix());
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("kraus_from_chi: eigendecomposition failed");
  std::vector<Matrix> ops;
  // Largest weight first so the dominant operator leads.
  for (Index i = solver.eigenvalues().size() - 1; i >= 0; --i) {
    const double weight = solver.eigenvalues()(i);
    if (weight <= kKrausCut) continue;
    const Vector vec = solver.eigenvectors().col(i);
    Matrix op(s, s);
    for (Index a = 0; a < s; ++a)
      for (Index b = 0; b < s; ++b) op(a, b) = std::sqrt(weight) * vec(a * s + b);
    ops.push_back(std::move(op));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel noisy_gate_channel(const NoisyGateSpec& spec) {
  validate_spec(spec);
  const Index s = spec.gate.rows();
  const double dt = spec.t_gate / spec.n_slices;
  const Matrix slice = gate_fraction(spec.gate, spec.n_slices);
  const Matrix s_slice = superoperator(unitary_channel(slice));
  const Matrix s_noise =
      superoperator(relaxation_step(s, dt, spec.t1, spec.t2));
  const Matrix s_step = spec.order == SliceOrder::kGateThenNoise
                            ? Matrix(s_noise * s_slice)
                            : Matrix(s_slice * s_noise);
  Matrix total = Matrix::Identity(s * s, s * s);
  for (int k = 0; k < spec.n_slices; ++k) total = s_step * total;
  return kraus_from_chi(chi_from_superoperator(total, s));
}

std::vector<NegativityPoint> negativity_dynamics(const NoisyGateSpec& spec) {
  validate_spec(spec);
  const Index s = spec.gate.rows();
  const double dt = spec.t_gate / spec.n_slices;
  const Matrix slice = gate_fraction(spec.gate, spec.n_slices);
  const KrausChannel id_ref = KrausChannel::identity(s);
  const KrausChannel slice_ext =
      tensor_channel(unitary_channel(slice), id_ref);
  const KrausChannel noise_ext =
      tensor_channel(relaxation_step(s, dt, spec.t1, spec.t2), id_ref);

  DensityMatrix ideal =
      density_from_pure(max_entangled(s)).with_subsystems({s, s});
  DensityMatrix noisy = ideal;

  std::vector<NegativityPoint> series;
  series.reserve(spec.n_slices + 1);
  series.push_back({0, 0.0, negativity(ideal), negativity(noisy)});
  for (int k = 1; k <= spec.n_slices; ++k) {
    ideal = apply_channel(slice_ext, ideal);
    if (spec.order == SliceOrder::kGateThenNoise)
      noisy = apply_channel(noise_ext, apply_channel(slice_ext, noisy));
    else
      noisy = apply_channel(slice_ext, apply_channel(noise_ext, noisy));
    series.push_back({k, k * dt, negativity(ideal), negativity(noisy)});
  }
  return series;
}

}  // namespace qnoise
