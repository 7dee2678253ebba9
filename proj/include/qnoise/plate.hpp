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

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qnoise/process.hpp"
#include "qnoise/types.hpp"

namespace qnoise {

/// Birefringent plate parameters and the linearization of its optical
/// length delta(lambda) = 2 pi dn h / lambda around the spectral
/// center:
///   a = delta(lambda0),  b = d delta / d lambda at lambda0 = -a/lambda0.
/// nz, nx are the generator components cos(2 alpha), sin(2 alpha) of
/// the plate unitary. Lengths are in micrometers, angles in radians.
struct PlateParams {
  PlateParams(double h, double delta_n, double alpha, double lambda0);

  double h;
  double delta_n;
  double alpha;
  double lambda0;

  double a;
  double b;
  double nz;
  double nx;
};

enum class SpectrumKind {
  kMonochromatic,
  kGaussian,
  kSinc2,
  kTriangular,
  kUniform,
};

/// Normalized wavelength density p(lambda), symmetric about lambda0.
/// Every kind is parameterized by its full width at half maximum.
///
/// Internal shape parameters: Gaussian sigma = fwhm / (2 sqrt(2 ln 2));
/// uniform full width = fwhm; triangular base half-width = fwhm; sinc^2
/// scale k such that sinc^2(k x) drops to 1/2 at |x| = fwhm/2.
///
/// The sinc^2 density has 1/x^2 tails; it is truncated at 256 zero
/// spacings on each side and renormalized, which moves its Fourier
/// coefficients about 4e-4 away from the untruncated closed form.
class SpectralDistribution {
 public:
  static SpectralDistribution monochromatic(double lambda0);
  static SpectralDistribution gaussian(double lambda0, double fwhm);
  static SpectralDistribution sinc2(double lambda0, double fwhm);
  static SpectralDistribution triangular(double lambda0, double fwhm);
  static SpectralDistribution uniform(double lambda0, double fwhm);

  /// Accepts the CLI names: mono, gauss, sinc, tri, rect.
  static SpectralDistribution from_name(const std::string& name,
                                        double lambda0, double fwhm);

  SpectrumKind kind() const { return kind_; }
  double lambda0() const { return lambda0_; }
  double fwhm() const { return fwhm_; }

  /// Kind-specific scale: sigma, k, half-width or full width (0 for
  /// monochromatic).
  double width_param() const { return width_; }

  /// Density value; zero outside the support. Not defined for the
  /// monochromatic kind.
  double pdf(double lambda) const;

  /// Quadrature window; the full support for the compact kinds, +-8
  /// sigma for Gaussian, the truncation window for sinc^2.
  double support_min() const { return support_min_; }
  double support_max() const { return support_max_; }

 private:
  SpectralDistribution(SpectrumKind kind, double lambda0, double fwhm);

  SpectrumKind kind_;
  double lambda0_;
  double fwhm_;
  double width_ = 0.0;
  double support_min_;
  double support_max_;
  double sinc2_norm_ = 1.0;  // truncated-tail renormalization
};

/// Fourier coefficients of the spectral density at frequency b:
///   I_c = int cos(b(lambda - lambda0)) p(lambda) dlambda,
///   I_s = int sin(b(lambda - lambda0)) p(lambda) dlambda.
/// I_s vanishes for every symmetric distribution.
struct FourierCoeffs {
  double ic;
  double is;
};

/// Plate unitary in the {|V>, |H>} basis:
///   cos(delta/2) I - i sin(delta/2) (cos(2a) sz + sin(2a) sx).
Matrix plate_unitary(double delta, double alpha);

/// delta(lambda) = 2 pi dn h / lambda.
double optical_length(double lambda, const PlateParams& p);

/// (a, b) of the linear model delta(lambda) ~ a + b (lambda - lambda0).
std::pair<double, double> linearize(const PlateParams& p);

/// Linearization of a user-supplied optical length function; the slope
/// comes from a central difference with step lambda0 * 1e-6.
std::pair<double, double> linearize(
    const std::function<double(double)>& delta_of_lambda, double lambda0);

/// Closed-form coefficients (exact characteristic functions; for
/// sinc^2 the untruncated triangle max(0, 1 - |b|/(2k))).
FourierCoeffs fourier_coeffs(const SpectralDistribution& spec, double b);

/// Same integrals by adaptive quadrature over the support, absolute
/// tolerance 1e-10. Cross-check route for the closed forms.
FourierCoeffs fourier_coeffs_quadrature(const SpectralDistribution& spec,
                                        double b);

/// Rank-<=2 process matrix of the plate under the linearized optical
/// length, assembled from the Fourier coefficients of the spectrum.
ChiMatrix analytic_chi(const PlateParams& p, const SpectralDistribution& spec);

/// (1 + I_c^2 + I_s^2) / 2; the purity of chi/2.
double plate_purity(const FourierCoeffs& fc);

enum class DeltaModel {
  kExact,       // delta = 2 pi dn h / lambda per sample
  kLinearized,  // delta = a + b (lambda - lambda0) per sample
};

/// Spectral-averaging estimate of the plate process matrix: sample
/// wavelengths from the spectrum, average the unitary process matrices
/// of the per-wavelength plates. Deterministic for a fixed seed. The
/// linearized mode isolates Monte-Carlo error from linearization error.
ChiMatrix monte_carlo_chi(const PlateParams& p,
                          const SpectralDistribution& spec, long n_samples,
                          std::uint64_t seed,
                          DeltaModel model = DeltaModel::kExact);

struct PuritySweepPoint {
  double h;
  double a;
  double b;
  double ic;
  double is;
  double purity;
};

/// Plate purity across thicknesses: for each h, linearize, take the
/// closed-form Fourier coefficients and evaluate the purity.
std::vector<PuritySweepPoint> purity_vs_thickness(
    SpectrumKind kind, double fwhm, double alpha, double delta_n,
    double lambda0, const std::vector<double>& h_values);

}  // namespace qnoise
