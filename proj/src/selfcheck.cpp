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

#include "qnoise/selfcheck.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>

#include "qnoise/channels.hpp"
#include "qnoise/plate.hpp"
#include "qnoise/process.hpp"
#include "qnoise/state.hpp"

namespace qnoise {

namespace {

double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double normal(std::mt19937_64& gen) {
  const double u1 = 1.0 - uniform_unit(gen);
  const double u2 = uniform_unit(gen);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Matrix random_complex(Index rows, Index cols, std::mt19937_64& gen) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(gen), normal(gen));
  return m;
}

Matrix random_unitary(Index n, std::mt19937_64& gen) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(n, n, gen));
  return qr.householderQ() * Matrix::Identity(n, n);
}

DensityMatrix random_density(Index n, std::mt19937_64& gen,
                             std::vector<Index> dims = {}) {
  const Matrix g = random_complex(n, n, gen);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho), std::move(dims));
}

// A mix of damping channels, compositions, unitaries and tensor
// products, cycling deterministically with the generator.
KrausChannel random_channel(std::mt19937_64& gen) {
  const double pick = uniform_unit(gen);
  if (pick < 0.25) return amplitude_damping(uniform_unit(gen));
  if (pick < 0.5) return phase_damping(uniform_unit(gen));
  if (pick < 0.7)
    return compose(amplitude_damping(uniform_unit(gen)),
                   phase_damping(uniform_unit(gen)));
  if (pick < 0.85) return unitary_channel(random_unitary(2, gen));
  return tensor_channel(
      compose(amplitude_damping(uniform_unit(gen)), unitary_channel(random_unitary(2, gen))),
      phase_damping(uniform_unit(gen)));
}

double completeness_error(const KrausChannel& ch) {
  Matrix acc = Matrix::Zero(ch.dim_in(), ch.dim_in());
  for (const Matrix& op : ch.operators()) acc += op.adjoint() * op;
  return max_abs(acc - Matrix::Identity(ch.dim_in(), ch.dim_in()));
}

std::string bound_detail(double worst, double bound) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "worst %.3g, bound %.3g", worst, bound);
  return buf;
}

}  // namespace

std::vector<CheckResult> run_selfchecks(std::uint64_t seed) {
  std::vector<CheckResult> results;
  const auto record = [&](const std::string& name, double worst, double bound) {
    results.push_back({name, worst <= bound, bound_detail(worst, bound)});
  };

  std::mt19937_64 gen(seed ^ 0x9e3779b97f4a7c15ull);

  {
    double worst = 0.0;
    for (int i = 0; i < 300; ++i)
      worst = std::max(worst, completeness_error(random_channel(gen)));
    record("channel-completeness", worst, 1e-12);
  }

  {
    double worst_trace = 0.0, worst_negative = 0.0;
    for (int i = 0; i < 300; ++i) {
      const KrausChannel ch = random_channel(gen);
      const DensityMatrix rho = random_density(ch.dim_in(), gen);
      const DensityMatrix out = apply_channel(ch, rho);
      worst_trace = std::max(
          worst_trace, std::abs(out.matrix().trace().real() - 1.0));
      const RealVector ev = hermitian_eigenvalues(out.matrix());
      worst_negative = std::max(worst_negative, std::max(0.0, -ev.minCoeff()));
    }
    record("apply-channel-trace", worst_trace, 1e-12);
    record("apply-channel-psd", worst_negative, 1e-10);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const KrausChannel ch = phase_damping(uniform_unit(gen));
      const DensityMatrix rho = random_density(2, gen);
      const DensityMatrix out = apply_channel(ch, rho);
      worst = std::max(worst,
                       max_abs((out.matrix() - rho.matrix()).diagonal()));
    }
    record("phase-damping-populations", worst, 1e-14);
  }

  {
    double worst = 0.0;
    Matrix ground = Matrix::Zero(2, 2);
    ground(0, 0) = 1.0;
    for (int i = 0; i < 100; ++i) {
      const KrausChannel ch = amplitude_damping(uniform_unit(gen));
      worst = std::max(worst, max_abs(ch.apply_raw(ground) - ground));
    }
    record("amplitude-damping-fixed-point", worst, 1e-14);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double g1 = uniform_unit(gen), g2 = uniform_unit(gen);
      const double joint_a = 1.0 - (1.0 - g1) * (1.0 - g2);
      worst = std::max(
          worst, max_abs(superoperator(compose(amplitude_damping(g1),
                                               amplitude_damping(g2))) -
                         superoperator(amplitude_damping(joint_a))));
      worst = std::max(
          worst, max_abs(superoperator(compose(phase_damping(g1),
                                               phase_damping(g2))) -
                         superoperator(phase_damping(joint_a))));
    }
    record("relaxation-semigroup", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double ga = uniform_unit(gen), gp = uniform_unit(gen);
      worst = std::max(
          worst,
          max_abs(superoperator(compose(amplitude_damping(ga),
                                        phase_damping(gp))) -
                  superoperator(compose(phase_damping(gp),
                                        amplitude_damping(ga)))));
    }
    record("noise-order-commutes", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const DensityMatrix rho = random_density(4, gen, {2, 2});
      const Matrix local = kron(random_unitary(2, gen), random_unitary(2, gen));
      const DensityMatrix rotated(
          (local * rho.matrix() * local.adjoint()).eval(), {2, 2});
      worst = std::max(worst,
                       std::abs(negativity(rho) - negativity(rotated)));
    }
    record("negativity-local-unitary", worst, 1e-9);
  }

  {
    double worst = 0.0;
    for (Index s : {2, 3, 4}) {
      const DensityMatrix bell =
          density_from_pure(max_entangled(s)).with_subsystems({s, s});
      worst = std::max(worst,
                       std::abs(negativity(bell) - 0.5 * (s - 1.0)));
    }
    record("negativity-max-entangled", worst, 1e-9);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const DensityMatrix rho = random_density(4, gen, {2, 2});
      const Matrix pt = partial_transpose(rho, i % 2);
      worst = std::max(worst, std::abs(pt.trace().real() -
                                       rho.matrix().trace().real()));
      worst = std::max(
          worst, max_abs(partial_transpose(pt, 2, 2, i % 2) - rho.matrix()));
    }
    record("partial-transpose-identities", worst, 1e-14);
  }

  {
    double worst = 0.0;
    for (Index s : {2, 4})
      for (int i = 0; i < 20; ++i) {
        const ChiMatrix chi =
            chi_from_channel(unitary_channel(random_unitary(s, gen)));
        worst = std::max(worst, std::abs(static_cast<double>(chi.rank()) - 1.0));
        const RealVector ev = hermitian_eigenvalues(chi.matrix());
        worst = std::max(worst,
                         std::abs(ev(ev.size() - 1) - static_cast<double>(s)));
      }
    record("chi-unitary-rank-1", worst, 1e-9);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const KrausChannel ch = random_channel(gen);
      const ChiMatrix chi = chi_from_channel(ch);
      worst = std::max(worst, std::abs(chi.matrix().trace().real() -
                                       static_cast<double>(chi.s())));
    }
    record("chi-trace", worst, 1e-10);
  }

  {
    double worst = 0.0;
    const double lambda0 = 0.8;
    for (double fwhm : {0.01, 0.05, 0.2}) {
      const SpectralDistribution kinds[] = {
          SpectralDistribution::gaussian(lambda0, fwhm),
          SpectralDistribution::uniform(lambda0, fwhm),
          SpectralDistribution::triangular(lambda0, fwhm)};
      for (const auto& spec : kinds)
        for (double b = -50.0; b <= 50.0; b += 12.5) {
          const FourierCoeffs closed = fourier_coeffs(spec, b);
          const FourierCoeffs quad = fourier_coeffs_quadrature(spec, b);
          worst = std::max(worst, std::abs(closed.ic - quad.ic));
        }
    }
    record("fourier-closed-vs-quadrature", worst, 1e-8);
  }

  {
    double worst = 0.0;
    const double lambda0 = 0.8;
    const SpectralDistribution kinds[] = {
        SpectralDistribution::gaussian(lambda0, 0.05),
        SpectralDistribution::uniform(lambda0, 0.05),
        SpectralDistribution::triangular(lambda0, 0.05),
        SpectralDistribution::sinc2(lambda0, 0.05)};
    for (const auto& spec : kinds)
      for (int i = 0; i < 5; ++i) {
        const double b = -50.0 + 100.0 * uniform_unit(gen);
        worst = std::max(worst,
                         std::abs(fourier_coeffs_quadrature(spec, b).is));
      }
    record("fourier-symmetric-is-zero", worst, 1e-10);
  }

  {
    double worst_rank = 0.0, worst_purity = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double h = 1.0 + 300.0 * uniform_unit(gen);
      const double alpha = std::numbers::pi * uniform_unit(gen);
      const double fwhm = 0.001 + 0.2 * uniform_unit(gen);
      const PlateParams p(h, 0.01, alpha, 0.8);
      const SpectralDistribution spec =
          i % 2 ? SpectralDistribution::gaussian(0.8, fwhm)
                : SpectralDistribution::uniform(0.8, fwhm);
      const ChiMatrix chi = analytic_chi(p, spec);
      const RealVector ev = hermitian_eigenvalues(chi.matrix());
      worst_rank = std::max(worst_rank, std::abs(ev(0)));
      worst_rank = std::max(worst_rank, std::abs(ev(1)));
      const double direct = plate_purity(fourier_coeffs(spec, p.b));
      worst_purity = std::max(
          worst_purity, std::abs(direct - purity(chi.to_density())));
    }
    record("plate-chi-rank-2", worst_rank, 1e-10);
    record("plate-purity-consistency", worst_purity, 1e-10);
  }

  {
    double worst = 0.0;
    const long n = 20000;
    const double tol = 3.0 / std::sqrt(static_cast<double>(n));
    const double lambda0 = 0.8;
    int salt = 0;
    for (double fwhm : {0.02, 0.1}) {
      const SpectralDistribution kinds[] = {
          SpectralDistribution::gaussian(lambda0, fwhm),
          SpectralDistribution::uniform(lambda0, fwhm),
          SpectralDistribution::triangular(lambda0, fwhm),
          SpectralDistribution::sinc2(lambda0, fwhm)};
      for (const auto& spec : kinds) {
        const PlateParams p(80.0, 0.01, 0.4, lambda0);
        const ChiMatrix analytic = analytic_chi(p, spec);
        const ChiMatrix mc = monte_carlo_chi(p, spec, n, seed + 17 * ++salt,
                                             DeltaModel::kLinearized);
        worst = std::max(worst,
                         trace_distance(analytic.to_density().matrix(),
                                        mc.to_density().matrix()));
      }
    }
    record("plate-mc-oracle", worst, tol);
  }

  {
    double worst = 0.0;
    for (double alpha : {0.0, 0.3, 0.785}) {
      const PlateParams p(120.0, 0.009, alpha, 0.8);
      const SpectralDistribution mono =
          SpectralDistribution::monochromatic(0.8);
      const ChiMatrix analytic = analytic_chi(p, mono);
      const ChiMatrix direct =
          chi_from_channel(unitary_channel(plate_unitary(p.a, alpha)));
      worst = std::max(worst, max_abs(analytic.matrix() - direct.matrix()));
    }
    record("plate-monochromatic-unitary", worst, 1e-10);
  }

  return results;
}

}  // namespace qnoise
