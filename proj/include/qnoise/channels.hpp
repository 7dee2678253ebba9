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

#include "qnoise/state.hpp"
#include "qnoise/types.hpp"

namespace qnoise {

/// Quantum operation rho -> sum_k E_k rho E_k^dag given by an ordered
/// set of Kraus operators. The trace-preservation condition
/// sum_k E_k^dag E_k = I is checked to 1e-12 on construction.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> operators);

  static KrausChannel identity(Index dim);

  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  const std::vector<Matrix>& operators() const { return operators_; }
  std::size_t size() const { return operators_.size(); }

  /// sum_k E_k m E_k^dag on a raw matrix, no state validation.
  Matrix apply_raw(const Matrix& m) const;

 private:
  Index dim_in_;
  Index dim_out_;
  std::vector<Matrix> operators_;
};

/// Relaxation times and the damping probabilities they induce over an
/// evolution time t:
///   gamma_a = 1 - exp(-t/T1)
///   gamma_p = 1 - exp(-t/T2pure),  T2pure = 2*T1*T2 / (2*T1 - T2).
/// Requires 0 < T2 <= 2*T1; at T2 = 2*T1 dephasing is entirely
/// amplitude-limited (T2pure infinite, gamma_p = 0).
struct RelaxationParams {
  double t;
  double t1;
  double t2;
  double t2_pure;
  double gamma_a;
  double gamma_p;
};

RelaxationParams relaxation_params(double t, double t1, double t2);

/// Qubit energy decay toward |0>:
///   E0 = [[1, 0], [0, sqrt(1-g)]],  E1 = [[0, sqrt(g)], [0, 0]].
KrausChannel amplitude_damping(double gamma_a);

/// Qubit pure dephasing; populations are untouched:
///   E0 = [[1, 0], [0, sqrt(1-g)]],  E1 = [[0, 0], [0, sqrt(g)]].
KrausChannel phase_damping(double gamma_p);

/// Single-operator channel rho -> U rho U^dag.
KrausChannel unitary_channel(const Matrix& u);

/// Single-qubit noise step: amplitude damping followed by phase
/// damping with the probabilities of `p`. The two actions commute, so
/// the order is observationally irrelevant.
KrausChannel qubit_relaxation(const RelaxationParams& p);

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// `second` after `first`; operator set {F_j E_k} over all pairs.
KrausChannel compose(const KrausChannel& first, const KrausChannel& second);

/// Independent channels on the two factors; operator set {E_j kron F_k}.
KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b);

}  // namespace qnoise
