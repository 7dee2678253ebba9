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

#include "qnoise/plate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qnoise/quadrature.hpp"

namespace qnoise {

namespace {

constexpr double kPi = std::numbers::pi;

// sinc^2 densities are truncated at this many zero spacings per side.
constexpr double kSinc2Zeros = 256.0;

double sinc(double x) {
  return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

// Solves sinc^2(x) = 1/2, the half-maximum point of the sinc^2 shape.
double sinc2_half_point() {
  static const double root = [] {
    double x = 1.4;
    for (int i = 0; i < 50; ++i) {
      const double f = std::sin(x) - x / std::numbers::sqrt2;
      const double fp = std::cos(x) - 1.0 / std::numbers::sqrt2;
      x -= f / fp;
    }
    return x;
  }();
  return root;
}

// Mass of the sinc^2 shape within +-n zero spacings; the tail of
// int sin^2(v)/v^2 has the asymptotic series below when the window
// ends exactly on a zero.
double sinc2_truncated_mass(double n_zeros) {
  const double z = 2.0 * n_zeros * kPi;
  const double tail = 1.0 / z - 2.0 / (z * z * z) +
                      24.0 / (z * z * z * z * z);
  return 1.0 - (2.0 / kPi) * tail;
}

double uniform_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

PlateParams::PlateParams(double h_, double delta_n_, double alpha_,
                         double lambda0_)
    : h(h_), delta_n(delta_n_), alpha(alpha_), lambda0(lambda0_) {
  if (!(h > 0.0)) throw std::domain_error("PlateParams: thickness must be > 0");
  if (!(delta_n > 0.0))
    throw std::domain_error("PlateParams: birefringence must be > 0");
  if (!(lambda0 > 0.0))
    throw std::domain_error("PlateParams: central wavelength must be > 0");
  if (!std::isfinite(alpha))
    throw std::domain_error("PlateParams: axis angle must be finite");
  a = 2.0 * kPi * delta_n * h / lambda0;
  b = -a / lambda0;
  nz = std::cos(2.0 * alpha);
  nx = std::sin(2.0 * alpha);
}

SpectralDistribution::SpectralDistribution(SpectrumKind kind, double lambda0,
                                           double fwhm)
    : kind_(kind), lambda0_(lambda0), fwhm_(fwhm) {
  if (!(lambda0_ > 0.0))
    throw std::domain_error("SpectralDistribution: center must be > 0");
  if (kind_ != SpectrumKind::kMonochromatic && !(fwhm_ > 0.0))
    throw std::domain_error("SpectralDistribution: fwhm must be > 0");
  switch (kind_) {
    case SpectrumKind::kMonochromatic:
      width_ = 0.0;
      support_min_ = support_max_ = lambda0_;
      break;
    case SpectrumKind::kGaussian:
      width_ = fwhm_ / (2.0 * std::sqrt(2.0 * std::numbers::ln2));
      support_min_ = lambda0_ - 8.0 * width_;
      support_max_ = lambda0_ + 8.0 * width_;
      break;
    case SpectrumKind::kSinc2:
      width_ = 2.0 * sinc2_half_point() / fwhm_;  // the scale k
      support_min_ = lambda0_ - kSinc2Zeros * kPi / width_;
      support_max_ = lambda0_ + kSinc2Zeros * kPi / width_;
      sinc2_norm_ = sinc2_truncated_mass(kSinc2Zeros);
      break;
    case SpectrumKind::kTriangular:
      width_ = fwhm_;  // base half-width
      support_min_ = lambda0_ - width_;
      support_max_ = lambda0_ + width_;
      break;
    case SpectrumKind::kUniform:
      width_ = fwhm_;  // full width
      support_min_ = lambda0_ - 0.5 * width_;
      support_max_ = lambda0_ + 0.5 * width_;
      break;
  }
}

SpectralDistribution SpectralDistribution::monochromatic(double lambda0) {
  return SpectralDistribution(SpectrumKind::kMonochromatic, lambda0, 0.0);
}
SpectralDistribution SpectralDistribution::gaussian(double lambda0,
                                                    double fwhm) {
  return SpectralDistribution(SpectrumKind::kGaussian, lambda0, fwhm);
}
SpectralDistribution SpectralDistribution::sinc2(double lambda0, double fwhm) {
  return SpectralDistribution(SpectrumKind::kSinc2, lambda0, fwhm);
}
SpectralDistribution SpectralDistribution::triangular(double lambda0,
                                                      double fwhm) {
  return SpectralDistribution(SpectrumKind::kTriangular, lambda0, fwhm);
}
SpectralDistribution SpectralDistribution::uniform(double lambda0,
                                                   double fwhm) {
  return SpectralDistribution(SpectrumKind::kUniform, lambda0, fwhm);
}

SpectralDistribution SpectralDistribution::from_name(const std::string& name,
                                                     double lambda0,
                                                     double fwhm) {
  if (name == "mono" || name == "monochromatic") return monochromatic(lambda0);
  if (name == "gauss" || name == "gaussian") return gaussian(lambda0, fwhm);
  if (name == "sinc" || name == "sinc2") return sinc2(lambda0, fwhm);
  if (name == "tri" || name == "triangular") return triangular(lambda0, fwhm);
  if (name == "rect" || name == "uniform") return uniform(lambda0, fwhm);
  throw std::invalid_argument("unknown spectrum kind: " + name);
}

double SpectralDistribution::pdf(double lambda) const {
  const double x = lambda - lambda0_;
  switch (kind_) {
    case SpectrumKind::kMonochromatic:
      throw std::logic_error(
          "SpectralDistribution: monochromatic kind has no density");
    case SpectrumKind::kGaussian: {
      const double s = width_;
      return std::exp(-0.5 * x * x / (s * s)) /
             (s * std::sqrt(2.0 * kPi));
    }
    case SpectrumKind::kSinc2: {
      if (lambda < support_min_ || lambda > support_max_) return 0.0;
      const double v = sinc(width_ * x);
      return (width_ / kPi) * v * v / sinc2_norm_;
    }
    case SpectrumKind::kTriangular: {
      if (lambda <= support_min_ || lambda >= support_max_) return 0.0;
      const double w = width_;
      return (1.0 - std::abs(x) / w) / w;
    }
    case SpectrumKind::kUniform:
      return lambda >= support_min_ && lambda <= support_max_ ? 1.0 / width_
                                                              : 0.0;
  }
  return 0.0;
}

Matrix plate_unitary(double delta, double alpha) {
  const double c = std::cos(0.5 * delta);
  const double s = std::sin(0.5 * delta);
  const double nz = std::cos(2.0 * alpha);
  const double nx = std::sin(2.0 * alpha);
  const Complex i(0.0, 1.0);
  Matrix u(2, 2);
  u(0, 0) = c - i * s * nz;
  u(0, 1) = -i * s * nx;
  u(1, 0) = -i * s * nx;
  u(1, 1) = c + i * s * nz;
  return u;
}

double optical_length(double lambda, const PlateParams& p) {
  if (!(lambda > 0.0))
    throw std::domain_error("optical_length: wavelength must be > 0");
  return 2.0 * kPi * p.delta_n * p.h / lambda;
}

std::pair<double, double> linearize(const PlateParams& p) {
  return {p.a, p.b};
}

std::pair<double, double> linearize(
    const std::function<double(double)>& delta_of_lambda, double lambda0) {
  if (!(lambda0 > 0.0))
    throw std::domain_error("linearize: central wavelength must be > 0");
  const double step = lambda0 * 1e-6;
  const double a = delta_of_lambda(lambda0);
  const double b =
      (delta_of_lambda(lambda0 + step) - delta_of_lambda(lambda0 - step)) /
      (2.0 * step);
  return {a, b};
}

FourierCoeffs fourier_coeffs(const SpectralDistribution& spec, double b) {
  switch (spec.kind()) {
    case SpectrumKind::kMonochromatic:
      return {1.0, 0.0};
    case SpectrumKind::kGaussian: {
      const double s = spec.width_param();
      return {std::exp(-0.5 * b * b * s * s), 0.0};
    }
    case SpectrumKind::kSinc2: {
      const double k = spec.width_param();
      return {std::max(0.0, 1.0 - std::abs(b) / (2.0 * k)), 0.0};
    }
    case SpectrumKind::kTriangular: {
      const double v = sinc(0.5 * b * spec.width_param());
      return {v * v, 0.0};
    }
    case SpectrumKind::kUniform:
      return {sinc(0.5 * b * spec.width_param()), 0.0};
  }
  return {1.0, 0.0};
}

FourierCoeffs fourier_coeffs_quadrature(const SpectralDistribution& spec,
                                        double b) {
  if (spec.kind() == SpectrumKind::kMonochromatic) return {1.0, 0.0};
  const double lo = spec.support_min();
  const double hi = spec.support_max();
  const double mid = spec.lambda0();
  // Panels no wider than half an oscillation; a bare adaptive pass can
  // alias on the cos(b x) factor (and on the sinc^2 density itself) and
  // stop early.
  double rate = std::abs(b);
  if (spec.kind() == SpectrumKind::kSinc2) rate += 2.0 * spec.width_param();
  const auto integrate = [&](auto weight) {
    const auto f = [&](double lambda) {
      return weight(b * (lambda - mid)) * spec.pdf(lambda);
    };
    const auto half = [&](double x0, double x1) {
      const int panels =
          1 + static_cast<int>(std::min(5e4, (x1 - x0) * rate / kPi));
      const double tol = 0.5e-10 / panels;
      const double step = (x1 - x0) / panels;
      double acc = 0.0;
      for (int i = 0; i < panels; ++i)
        acc += adaptive_simpson(f, x0 + i * step, x0 + (i + 1) * step, tol);
      return acc;
    };
    return half(lo, mid) + half(mid, hi);
  };
  const double ic = integrate([](double x) { return std::cos(x); });
  const double is = integrate([](double x) { return std::sin(x); });
  return {ic, is};
}

ChiMatrix analytic_chi(const PlateParams& p, const SpectralDistribution& spec) {
  const FourierCoeffs fc = fourier_coeffs(spec, p.b);
  const double cos_a = std::cos(p.a);
  const double sin_a = std::sin(p.a);
  const Complex i(0.0, 1.0);
  const double r11 = 0.5 * (1.0 + fc.ic * cos_a - fc.is * sin_a);
  const double r22 = 0.5 * (1.0 - fc.ic * cos_a + fc.is * sin_a);
  const Complex r12 = 0.5 * i * (fc.is * cos_a + fc.ic * sin_a);

  Vector phi1(4), phi2(4);
  const double r = 1.0 / std::numbers::sqrt2;
  phi1 << r, 0.0, 0.0, r;
  phi2 << r * p.nz, r * p.nx, r * p.nx, -r * p.nz;

  Matrix chi = 2.0 * (r11 * phi1 * phi1.adjoint() + r22 * phi2 * phi2.adjoint() +
                      r12 * phi1 * phi2.adjoint() +
                      std::conj(r12) * phi2 * phi1.adjoint());
  return ChiMatrix(2, std::move(chi));
}

double plate_purity(const FourierCoeffs& fc) {
  return 0.5 * (1.0 + fc.ic * fc.ic + fc.is * fc.is);
}

namespace {

double sample_offset(const SpectralDistribution& spec, std::mt19937_64& gen) {
  switch (spec.kind()) {
    case SpectrumKind::kMonochromatic:
      return 0.0;
    case SpectrumKind::kGaussian: {
      const double u1 = 1.0 - uniform_unit(gen);  // (0, 1]
      const double u2 = uniform_unit(gen);
      return spec.width_param() * std::sqrt(-2.0 * std::log(u1)) *
             std::cos(2.0 * kPi * u2);
    }
    case SpectrumKind::kUniform:
      return spec.width_param() * (uniform_unit(gen) - 0.5);
    case SpectrumKind::kTriangular: {
      const double u = uniform_unit(gen);
      const double w = spec.width_param();
      return u < 0.5 ? w * (std::sqrt(2.0 * u) - 1.0)
                     : w * (1.0 - std::sqrt(2.0 * (1.0 - u)));
    }
    case SpectrumKind::kSinc2: {
      const double k = spec.width_param();
      const double half_support = kSinc2Zeros * kPi / k;
      // Rejection from the envelope min(1, 1/(kx)^2): half the mass is
      // the central uniform box, a quarter sits in each 1/x^2 tail.
      while (true) {
        const double u = uniform_unit(gen);
        double x;
        if (u < 0.5) {
          x = (4.0 * u - 1.0) / k;
        } else {
          const double v = uniform_unit(gen);
          const double mag = 1.0 / (k * (1.0 - v));
          x = u < 0.75 ? mag : -mag;
        }
        if (std::abs(x) > half_support) continue;
        const double target = sinc(k * x);
        const double envelope =
            std::min(1.0, 1.0 / ((k * x) * (k * x)));
        if (uniform_unit(gen) * envelope <= target * target) return x;
      }
    }
  }
  return 0.0;
}

}  // namespace

ChiMatrix monte_carlo_chi(const PlateParams& p,
                          const SpectralDistribution& spec, long n_samples,
                          std::uint64_t seed, DeltaModel model) {
  if (n_samples < 1)
    throw std::domain_error("monte_carlo_chi: need at least one sample");
  std::mt19937_64 gen(seed);
  Matrix accum = Matrix::Zero(4, 4);
  Vector vec(4);
  for (long i = 0; i < n_samples; ++i) {
    const double lambda = spec.lambda0() + sample_offset(spec, gen);
    double delta;
    if (model == DeltaModel::kExact) {
      if (!(lambda > 0.0))
        throw std::runtime_error(
            "monte_carlo_chi: sampled a nonpositive wavelength; the spectrum "
            "is too wide for the exact optical-length model");
      delta = optical_length(lambda, p);
    } else {
      delta = p.a + p.b * (lambda - spec.lambda0());
    }
    const Matrix u = plate_unitary(delta, p.alpha);
    // chi of a unitary process is the outer product of its row-major
    // vectorization.
    vec << u(0, 0), u(0, 1), u(1, 0), u(1, 1);
    accum.noalias() += vec * vec.adjoint();
  }
  return ChiMatrix(2, accum / static_cast<double>(n_samples));
}

std::vector<PuritySweepPoint> purity_vs_thickness(
    SpectrumKind kind, double fwhm, double alpha, double delta_n,
    double lambda0, const std::vector<double>& h_values) {
  if (h_values.empty())
    throw std::invalid_argument("purity_vs_thickness: empty thickness range");
  for (std::size_t i = 1; i < h_values.size(); ++i)
    if (!(h_values[i] > h_values[i - 1]))
      throw std::invalid_argument(
          "purity_vs_thickness: thicknesses must be strictly ascending");
  const SpectralDistribution spec = [&] {
    switch (kind) {
      case SpectrumKind::kMonochromatic:
        return SpectralDistribution::monochromatic(lambda0);
      case SpectrumKind::kGaussian:
        return SpectralDistribution::gaussian(lambda0, fwhm);
      case SpectrumKind::kSinc2:
        return SpectralDistribution::sinc2(lambda0, fwhm);
      case SpectrumKind::kTriangular:
        return SpectralDistribution::triangular(lambda0, fwhm);
      case SpectrumKind::kUniform:
        return SpectralDistribution::uniform(lambda0, fwhm);
    }
    throw std::invalid_argument("purity_vs_thickness: bad spectrum kind");
  }();
  std::vector<PuritySweepPoint> out;
  out.reserve(h_values.size());
  for (double h : h_values) {
    const PlateParams p(h, delta_n, alpha, lambda0);
    const FourierCoeffs fc = fourier_coeffs(spec, p.b);
    out.push_back({h, p.a, p.b, fc.ic, fc.is, plate_purity(fc)});
  }
  return out;
}

}  // namespace qnoise
