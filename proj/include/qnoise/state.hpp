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

#pragma once

#include <vector>

#include "qnoise/types.hpp"

namespace qnoise {

/// Eigenvalues with magnitude below this are treated as zero in
/// negativity sums and rank counts.
inline constexpr double kEigenvalueFloor = 1e-12;

/// Normalized state vector. Validated to unit 2-norm on construction.
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  Vector amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite matrix. All three
/// invariants are checked on construction (Hermiticity and trace to
/// 1e-12, eigenvalues down to -1e-10).
///
/// An optional subsystem factorization enables the bipartite
/// operations (partial transpose, negativity). Index 0 of the
/// factorization is the left, most significant tensor factor.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix rho, std::vector<Index> subsystem_dims = {});

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<Index>& subsystem_dims() const { return subsystem_dims_; }
  bool has_bipartition() const { return subsystem_dims_.size() == 2; }

  /// Same state with a subsystem factorization attached.
  DensityMatrix with_subsystems(std::vector<Index> dims) const;

 private:
  Matrix matrix_;
  std::vector<Index> subsystem_dims_;
};

DensityMatrix density_from_pure(const PureState& state);

/// (1/sqrt(s)) sum_j |j>|j> on an s*s-dimensional space, s >= 2.
PureState max_entangled(Index s);

/// Transpose of one factor of a bipartite state; subsystem 0 is the
/// left factor. Trace-preserving and involutive.
Matrix partial_transpose(const DensityMatrix& rho, int subsystem);

/// Raw-matrix variant for a (dim_a * dim_b)-dimensional operator; the
/// output is generally not a density matrix.
Matrix partial_transpose(const Matrix& m, Index dim_a, Index dim_b,
                         int subsystem);

/// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
/// max-norm deviation from Hermiticity exceeds 1e-10.
RealVector hermitian_eigenvalues(const Matrix& m);

/// Magnitude-sum of the negative eigenvalues of the partial transpose:
/// (sum_j |l_j| - sum_j l_j) / 2. Requires a bipartite factorization.
double negativity(const DensityMatrix& rho);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// (1/2) sum |eig(a - b)| for Hermitian a, b.
double trace_distance(const Matrix& a, const Matrix& b);

/// Number of eigenvalues above the floor.
Index rank_with_floor(const Matrix& hermitian, double floor = kEigenvalueFloor);

}  // namespace qnoise
