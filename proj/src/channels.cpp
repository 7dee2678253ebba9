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

#include "qnoise/channels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qnoise {

namespace {
constexpr double kCompletenessTol = 1e-12;
}

KrausChannel::KrausChannel(std::vector<Matrix> operators)
    : operators_(std::move(operators)) {
  if (operators_.empty())
    throw std::invalid_argument("KrausChannel: needs at least one operator");
  dim_out_ = operators_.front().rows();
  dim_in_ = operators_.front().cols();
  if (dim_in_ == 0 || dim_out_ == 0)
    throw std::invalid_argument("KrausChannel: empty operator");
  Matrix completeness = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& op : operators_) {
    if (op.rows() != dim_out_ || op.cols() != dim_in_)
      throw std::invalid_argument("KrausChannel: inconsistent operator shapes");
    if (!op.allFinite())
      throw std::invalid_argument("KrausChannel: non-finite operator entries");
    completeness += op.adjoint() * op;
  }
  if (max_abs(completeness - Matrix::Identity(dim_in_, dim_in_)) >
      kCompletenessTol)
    throw std::invalid_argument(
        "KrausChannel: operators violate sum E^dag E = I");
}

KrausChannel KrausChannel::identity(Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

Matrix KrausChannel::apply_raw(const Matrix& m) const {
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (const Matrix& op : operators_) out += op * m * op.adjoint();
  return out;
}

RelaxationParams relaxation_params(double t, double t1, double t2) {
  if (!(t1 > 0.0)) throw std::domain_error("relaxation_params: T1 must be > 0");
  if (!(t2 > 0.0)) throw std::domain_error("relaxation_params: T2 must be > 0");
  if (!(t >= 0.0)) throw std::domain_error("relaxation_params: t must be >= 0");
  double t2_pure;
  if (std::isinf(t1)) {
    t2_pure = t2;  // limit of 2*T1*T2 / (2*T1 - T2) for T1 -> inf
  } else {
    const double denom = 2.0 * t1 - t2;
    if (denom < 0.0)
      throw std::domain_error(
          "relaxation_params: T2 > 2*T1 is unphysical (pure dephasing time "
          "negative)");
    t2_pure = denom == 0.0 ? std::numeric_limits<double>::infinity()
                           : 2.0 * t1 * t2 / denom;
  }
  RelaxationParams p;
  p.t = t;
  p.t1 = t1;
  p.t2 = t2;
  p.t2_pure = t2_pure;
  p.gamma_a = 1.0 - std::exp(-t / t1);
  p.gamma_p = 1.0 - std::exp(-t / t2_pure);
  return p;
}

KrausChannel amplitude_damping(double gamma_a) {
  if (!(gamma_a >= 0.0 && gamma_a <= 1.0))
    throw std::domain_error("amplitude_damping: gamma must be in [0, 1]");
  Matrix e0(2, 2), e1(2, 2);
  e0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma_a);
  e1 << 0.0, std::sqrt(gamma_a), 0.0, 0.0;
  return KrausChannel({e0, e1});
}

KrausChannel phase_damping(double gamma_p) {
  if (!(gamma_p >= 0.0 && gamma_p <= 1.0))
    throw std::domain_error("phase_damping: gamma must be in [0, 1]");
  Matrix e0(2, 2), e1(2, 2);
  e0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma_p);
  e1 << 0.0, 0.0, 0.0, std::sqrt(gamma_p);
  return KrausChannel({e0, e1});
}

KrausChannel unitary_channel(const Matrix& u) {
  if (!is_unitary(u, 1e-10))
    throw std::invalid_argument("unitary_channel: matrix is not unitary");
  return KrausChannel({u});
}

KrausChannel qubit_relaxation(const RelaxationParams& p) {
  return compose(amplitude_damping(p.gamma_a), phase_damping(p.gamma_p));
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.dim_in())
    throw std::invalid_argument("apply_channel: state dimension mismatch");
  Matrix out = ch.apply_raw(rho.matrix());
  // The space factorization survives any square channel.
  if (ch.dim_out() == ch.dim_in())
    return DensityMatrix(std::move(out), rho.subsystem_dims());
  return DensityMatrix(std::move(out));
}

KrausChannel compose(const KrausChannel& first, const KrausChannel& second) {
  if (first.dim_out() != second.dim_in())
    throw std::invalid_argument("compose: channel dimensions do not chain");
  std::vector<Matrix> ops;
  ops.reserve(first.size() * second.size());
  for (const Matrix& f : second.operators())
    for (const Matrix& e : first.operators()) ops.push_back(f * e);
  return KrausChannel(std::move(ops));
}

KrausChannel tensor_channel(const KrausChannel& a, const KrausChannel& b) {
  std::vector<Matrix> ops;
  ops.reserve(a.size() * b.size());
  for (const Matrix& ea : a.operators())
    for (const Matrix& eb : b.operators()) ops.push_back(kron(ea, eb));
  return KrausChannel(std::move(ops));
}

}  // namespace qnoise
