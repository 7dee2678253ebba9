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

#include "qnoise/channels.hpp"
#include "qnoise/state.hpp"
#include "qnoise/types.hpp"

namespace qnoise {

/// Process matrix of a quantum operation on an s-dimensional system:
/// s times the density matrix obtained by acting with the operation on
/// the left half of a maximally entangled pair. Hermitian with
/// Tr chi = s; chi/s is a valid density matrix; rank 1 exactly for
/// unitary operations.
class ChiMatrix {
 public:
  ChiMatrix(Index s, Matrix chi);

  Index s() const { return s_; }
  const Matrix& matrix() const { return matrix_; }

  /// chi/s as a density matrix with the system|reference bipartition.
  DensityMatrix to_density() const;

  Index rank(double floor = 1e-10) const;

 private:
  Index s_;
  Matrix matrix_;
};

/// Process matrix via the relative-state construction: prepare the
/// maximally entangled state, apply the channel to the system copy,
/// rescale by s.
ChiMatrix chi_from_channel(const KrausChannel& ch);

/// Principal n-th root of a unitary: eigenphases mapped to (-pi, pi]
/// and divided by n. The result is unitary and satisfies V^n = U.
Matrix gate_fraction(const Matrix& u, int n);

/// The square root of iSWAP: identity on |00>, |11>; the {|01>, |10>}
/// block mixes with amplitude 1/sqrt(2) and relative phase i.
Matrix sqisw();

enum class SliceOrder {
  kGateThenNoise,  // each slice applies the gate fraction, then noise
  kNoiseThenGate,
};

/// A unitary gate executed over `t_gate` while every qubit undergoes
/// amplitude and phase relaxation with times `t1`, `t2`. The gate is
/// split into `n_slices` equal parts with a relaxation step of
/// duration t_gate/n_slices around each part.
struct NoisyGateSpec {
  Matrix gate;
  double t_gate = 1.0;
  int n_slices = 100;
  double t1 = 1.0;
  double t2 = 1.0;
  SliceOrder order = SliceOrder::kGateThenNoise;
};

/// Kraus form of the sliced noisy gate. Internally the per-slice steps
/// are composed as superoperators and a minimal Kraus set is recovered
/// from the process matrix, so the operator count stays <= s^2.
KrausChannel noisy_gate_channel(const NoisyGateSpec& spec);

struct NegativityPoint {
  int slice;          // k = 0..N
  double time;        // k * t_gate / N
  double ideal;       // negativity after k noiseless slices
  double noisy;       // negativity after k noisy slices
};

/// Entanglement of the relative state as the sliced gate progresses.
/// The ideal column stays at (s-1)/2; noise pulls the other below it.
std::vector<NegativityPoint> negativity_dynamics(const NoisyGateSpec& spec);

/// Row-major-vec superoperator: vec(E rho E^dag) = (E kron conj(E)) vec(rho).
Matrix superoperator(const KrausChannel& ch);

/// Index reshuffle between the superoperator and the process matrix.
ChiMatrix chi_from_superoperator(const Matrix& superop, Index s);

/// Minimal Kraus set from the spectral decomposition of chi.
KrausChannel kraus_from_chi(const ChiMatrix& chi);

}  // namespace qnoise
