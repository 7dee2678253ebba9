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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qnoise/plate.hpp"
#include "qnoise/quadrature.hpp"
#include "test_util.hpp"

using namespace qnoise;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

}  // namespace

TEST_CASE("adaptive simpson basics") {
  CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-11));
  CHECK(adaptive_simpson([](double x) { return std::cos(x); }, 0.0, 20.0,
                         1e-12) == doctest::Approx(std::sin(20.0)).epsilon(1e-10));
  // A singular integrand cannot converge within a tiny depth budget.
  CHECK_THROWS_AS(adaptive_simpson(
                      [](double x) { return 1.0 / std::sqrt(x + 1e-300); },
                      0.0, 1.0, 1e-12, 8),
                  std::runtime_error);
}

TEST_CASE("plate unitary special cases") {
  CHECK(max_abs(plate_unitary(0.0, 0.7) - Matrix::Identity(2, 2)) < 1e-15);

  // Half-wave plate at 45 degrees: -i times the exchange of V and H.
  const Complex mi(0.0, -1.0);
  CHECK(max_abs(plate_unitary(kPi, kPi / 4.0) - mi * pauli_x()) < 1e-15);

  // Half-wave plate at 0: a pure relative phase.
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = Complex(0.0, -1.0);
  expected(1, 1) = Complex(0.0, 1.0);
  CHECK(max_abs(plate_unitary(kPi, 0.0) - expected) < 1e-15);
}

TEST_CASE("plate unitary is unitary for random arguments") {
  std::mt19937 gen(3);
  std::uniform_real_distribution<double> delta(-30.0, 30.0);
  std::uniform_real_distribution<double> alpha(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Matrix u = plate_unitary(delta(gen), alpha(gen));
    worst = std::max(worst,
                     max_abs(u.adjoint() * u - Matrix::Identity(2, 2)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("optical length") {
  // dn * h equal to the wavelength gives a full 2 pi turn.
  const PlateParams full(100.0, 0.01, 0.0, 0.8);
  CHECK(optical_length(1.0, full) == doctest::Approx(2.0 * kPi));
  CHECK(optical_length(2.0, full) == doctest::Approx(kPi));
  CHECK_THROWS_AS(optical_length(0.0, full), std::domain_error);
  CHECK_THROWS_AS(optical_length(-1.0, full), std::domain_error);
}

TEST_CASE("linearization of the worked example") {
  const PlateParams p(100.0, 0.01, 0.3, 0.8);
  const auto [a, b] = linearize(p);
  CHECK(a == doctest::Approx(2.5 * kPi).epsilon(1e-15));          // 7.853981...
  CHECK(b == doctest::Approx(-2.0 * kPi / 0.64).epsilon(1e-15));  // -9.817477...
  CHECK(optical_length(0.8, p) == doctest::Approx(a).epsilon(1e-15));

  // Constant-birefringence identity and linearity in thickness.
  CHECK(b * p.lambda0 == doctest::Approx(-a).epsilon(1e-15));
  const PlateParams doubled(200.0, 0.01, 0.3, 0.8);
  CHECK(doubled.a == doctest::Approx(2.0 * a));
  CHECK(doubled.b == doctest::Approx(2.0 * b));
}

TEST_CASE("finite-difference slope agrees with the closed form") {
  const PlateParams p(100.0, 0.01, 0.0, 0.8);
  const auto [a_fd, b_fd] =
      linearize([&](double lam) { return optical_length(lam, p); }, 0.8);
  CHECK(a_fd == doctest::Approx(p.a).epsilon(1e-12));
  CHECK(b_fd == doctest::Approx(p.b).epsilon(1e-6));
}

TEST_CASE("plate parameter validation") {
  CHECK_THROWS_AS(PlateParams(0.0, 0.01, 0.0, 0.8), std::domain_error);
  CHECK_THROWS_AS(PlateParams(1.0, -0.01, 0.0, 0.8), std::domain_error);
  CHECK_THROWS_AS(PlateParams(1.0, 0.01, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(SpectralDistribution::gaussian(0.8, 0.0), std::domain_error);
  CHECK_THROWS_AS(SpectralDistribution::from_name("boxcar", 0.8, 0.1),
                  std::invalid_argument);
}

TEST_CASE("densities are normalized and carry the right fwhm") {
  const double lambda0 = 0.8, fwhm = 0.07;
  const SpectralDistribution kinds[] = {
      SpectralDistribution::gaussian(lambda0, fwhm),
      SpectralDistribution::uniform(lambda0, fwhm),
      SpectralDistribution::triangular(lambda0, fwhm),
      SpectralDistribution::sinc2(lambda0, fwhm)};
  for (const auto& spec : kinds) {
    // At zero frequency the cosine coefficient is the total mass.
    const double mass = fourier_coeffs_quadrature(spec, 0.0).ic;
    CHECK(std::abs(mass - 1.0) <= 1e-9);
  }
  // Half maximum sits at +-fwhm/2 for the smooth kinds.
  for (const auto& spec :
       {SpectralDistribution::gaussian(lambda0, fwhm),
        SpectralDistribution::triangular(lambda0, fwhm),
        SpectralDistribution::sinc2(lambda0, fwhm)}) {
    CHECK(spec.pdf(lambda0 + 0.5 * fwhm) ==
          doctest::Approx(0.5 * spec.pdf(lambda0)).epsilon(1e-12));
    CHECK(spec.pdf(lambda0 - 0.5 * fwhm) ==
          doctest::Approx(0.5 * spec.pdf(lambda0)).epsilon(1e-12));
  }
}

TEST_CASE("closed-form fourier coefficients match quadrature") {
  const double lambda0 = 0.8;
  for (double fwhm : {0.02, 0.1, 0.25}) {
    const SpectralDistribution kinds[] = {
        SpectralDistribution::gaussian(lambda0, fwhm),
        SpectralDistribution::uniform(lambda0, fwhm),
        SpectralDistribution::triangular(lambda0, fwhm)};
    for (const auto& spec : kinds)
      for (double b : {-50.0, -20.0, -5.0, 0.0, 3.0, 17.0, 50.0}) {
        const FourierCoeffs closed = fourier_coeffs(spec, b);
        const FourierCoeffs quad = fourier_coeffs_quadrature(spec, b);
        CHECK(std::abs(closed.ic - quad.ic) <= 1e-8);
        CHECK(std::abs(quad.is) <= 1e-10);
        CHECK(std::abs(closed.is) == 0.0);
        CHECK(std::abs(closed.ic) <= 1.0);
      }
  }
}

TEST_CASE("closed-form values at a hand-checked point") {
  const double lambda0 = 0.8, fwhm = 0.1, b = -12.0;
  const SpectralDistribution gauss =
      SpectralDistribution::gaussian(lambda0, fwhm);
  const double sigma = gauss.width_param();
  CHECK(fourier_coeffs(gauss, b).ic ==
        doctest::Approx(std::exp(-0.5 * b * b * sigma * sigma)).epsilon(1e-15));

  const SpectralDistribution rect =
      SpectralDistribution::uniform(lambda0, fwhm);
  CHECK(fourier_coeffs(rect, b).ic ==
        doctest::Approx(std::sin(0.5 * b * fwhm) / (0.5 * b * fwhm))
            .epsilon(1e-15));

  const SpectralDistribution tri =
      SpectralDistribution::triangular(lambda0, fwhm);
  const double s = std::sin(0.5 * b * fwhm) / (0.5 * b * fwhm);
  CHECK(fourier_coeffs(tri, b).ic == doctest::Approx(s * s).epsilon(1e-15));
}

TEST_CASE("sinc2 coefficients approach the closed form as truncation allows") {
  // The 1/x^2 tails put the quadrature within the truncated mass of the
  // untruncated closed form, not at the 1e-8 level of the compact kinds.
  const SpectralDistribution spec = SpectralDistribution::sinc2(0.8, 0.05);
  const double k = spec.width_param();
  for (double b : {0.0, 0.3 * k, 1.1 * k, 2.5 * k}) {
    const FourierCoeffs closed = fourier_coeffs(spec, b);
    const FourierCoeffs quad = fourier_coeffs_quadrature(spec, b);
    CHECK(std::abs(closed.ic - quad.ic) < 2e-3);
    CHECK(std::abs(quad.is) <= 1e-10);
  }
  // Beyond twice the scale the closed form hits zero and stays there.
  CHECK(fourier_coeffs(spec, 2.0 * k).ic == 0.0);
  CHECK(fourier_coeffs(spec, 5.0 * k).ic == 0.0);
}

TEST_CASE("analytic chi reduces to the unitary process for monochromatic light") {
  for (double alpha : {0.0, 0.35, kPi / 4.0}) {
    const PlateParams p(120.0, 0.009, alpha, 0.8);
    const SpectralDistribution mono = SpectralDistribution::monochromatic(0.8);
    const ChiMatrix chi = analytic_chi(p, mono);
    const ChiMatrix direct =
        chi_from_channel(unitary_channel(plate_unitary(p.a, alpha)));
    CHECK(max_abs(chi.matrix() - direct.matrix()) <= 1e-10);
    CHECK(plate_purity(fourier_coeffs(mono, p.b)) == 1.0);
  }
}

TEST_CASE("vanishing coherence gives the flat two-level mixture") {
  // Pick the thickness where the uniform spectrum's sinc hits its first
  // zero: |b| w / 2 = pi, so h = lambda0^2 / (dn * w).
  const double lambda0 = 0.8, dn = 0.01, w = 0.1;
  const double h = lambda0 * lambda0 / (dn * w);
  const PlateParams p(h, dn, 0.45, lambda0);
  const SpectralDistribution rect = SpectralDistribution::uniform(lambda0, w);
  const FourierCoeffs fc = fourier_coeffs(rect, p.b);
  CHECK(std::abs(fc.ic) < 1e-12);

  const ChiMatrix chi = analytic_chi(p, rect);
  const double r = 1.0 / std::numbers::sqrt2;
  Vector phi1(4), phi2(4);
  phi1 << r, 0, 0, r;
  phi2 << r * p.nz, r * p.nx, r * p.nx, -r * p.nz;
  const Matrix expected = phi1 * phi1.adjoint() + phi2 * phi2.adjoint();
  CHECK(max_abs(chi.matrix() - expected) < 1e-12);
  CHECK(purity(chi.to_density()) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("analytic chi has rank at most two across random parameters") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PlateParams p(1.0 + 400.0 * unit(gen), 0.005 + 0.01 * unit(gen),
                        kPi * unit(gen), 0.8);
    const double fwhm = 0.005 + 0.3 * unit(gen);
    const SpectralDistribution spec =
        i % 4 == 0   ? SpectralDistribution::gaussian(0.8, fwhm)
        : i % 4 == 1 ? SpectralDistribution::uniform(0.8, fwhm)
        : i % 4 == 2 ? SpectralDistribution::triangular(0.8, fwhm)
                     : SpectralDistribution::sinc2(0.8, fwhm);
    const ChiMatrix chi = analytic_chi(p, spec);
    CHECK(chi.rank() <= 2);
    const RealVector ev = hermitian_eigenvalues(chi.matrix());
    worst = std::max(worst, std::max(std::abs(ev(0)), std::abs(ev(1))));

    // Purity from the coefficients equals purity from the spectrum.
    const double direct = plate_purity(fourier_coeffs(spec, p.b));
    CHECK(std::abs(direct - purity(chi.to_density())) <= 1e-10);
    CHECK(direct >= 0.5);
    CHECK(direct <= 1.0);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("monte carlo chi is deterministic and exact for monochromatic light") {
  const PlateParams p(75.0, 0.01, 0.6, 0.8);
  const SpectralDistribution mono = SpectralDistribution::monochromatic(0.8);
  const ChiMatrix one = monte_carlo_chi(p, mono, 1, 42);
  const ChiMatrix many = monte_carlo_chi(p, mono, 5000, 43);
  const ChiMatrix direct =
      chi_from_channel(unitary_channel(plate_unitary(p.a, p.alpha)));
  CHECK(max_abs(one.matrix() - direct.matrix()) < 1e-12);
  CHECK(max_abs(many.matrix() - direct.matrix()) < 1e-12);

  const SpectralDistribution gauss = SpectralDistribution::gaussian(0.8, 0.05);
  const ChiMatrix run1 = monte_carlo_chi(p, gauss, 4000, 7);
  const ChiMatrix run2 = monte_carlo_chi(p, gauss, 4000, 7);
  CHECK(max_abs(run1.matrix() - run2.matrix()) == 0.0);
  const ChiMatrix run3 = monte_carlo_chi(p, gauss, 4000, 8);
  CHECK(max_abs(run1.matrix() - run3.matrix()) > 0.0);

  CHECK_THROWS_AS(monte_carlo_chi(p, mono, 0, 1), std::domain_error);
}

TEST_CASE("monte carlo oracle matches the analytic model in linearized mode") {
  // 5x5 grid of thickness and width for each spectrum kind; in
  // linearized mode the analytic model is exact, so the residual is
  // pure sampling noise of order 1/sqrt(n).
  const double lambda0 = 0.8;
  const long n = 100000;
  const double tol = 3.0 / std::sqrt(static_cast<double>(n));
  int salt = 0;
  double worst = 0.0;
  for (double h : {20.0, 60.0, 110.0, 170.0, 240.0}) {
    for (double fwhm : {0.01, 0.04, 0.09, 0.16, 0.25}) {
      const SpectralDistribution kinds[] = {
          SpectralDistribution::gaussian(lambda0, fwhm),
          SpectralDistribution::uniform(lambda0, fwhm),
          SpectralDistribution::triangular(lambda0, fwhm),
          SpectralDistribution::sinc2(lambda0, fwhm)};
      for (const auto& spec : kinds) {
        const PlateParams p(h, 0.01, 0.7, lambda0);
        const ChiMatrix analytic = analytic_chi(p, spec);
        const ChiMatrix mc =
            monte_carlo_chi(p, spec, n, 1000 + ++salt, DeltaModel::kLinearized);
        worst = std::max(worst,
                         trace_distance(analytic.to_density().matrix(),
                                        mc.to_density().matrix()));
      }
    }
  }
  CHECK(worst <= tol);
}

TEST_CASE("exact optical length stays close for narrow spectra") {
  const double lambda0 = 0.8;
  const PlateParams p(100.0, 0.01, 0.5, lambda0);
  // sigma / lambda0 = 1e-3
  const double fwhm = 2.0 * std::sqrt(2.0 * std::numbers::ln2) * 1e-3 * lambda0;
  const SpectralDistribution spec =
      SpectralDistribution::gaussian(lambda0, fwhm);
  const ChiMatrix analytic = analytic_chi(p, spec);
  const ChiMatrix mc =
      monte_carlo_chi(p, spec, 50000, 5, DeltaModel::kExact);
  CHECK(trace_distance(analytic.to_density().matrix(),
                       mc.to_density().matrix()) <= 1e-3);
}

TEST_CASE("purity sweep shapes") {
  const double lambda0 = 0.8, dn = 0.01, fwhm = 0.1;
  std::vector<double> hs;
  for (int i = 1; i <= 160; ++i) hs.push_back(i * 10.0);

  SUBCASE("monochromatic light keeps purity one") {
    for (const auto& pt : purity_vs_thickness(SpectrumKind::kMonochromatic,
                                              0.0, 0.2, dn, lambda0, hs))
      CHECK(pt.purity == 1.0);
  }

  SUBCASE("gaussian decays monotonically to one half") {
    const auto sweep = purity_vs_thickness(SpectrumKind::kGaussian, fwhm, 0.2,
                                           dn, lambda0, hs);
    for (std::size_t i = 1; i < sweep.size(); ++i)
      CHECK(sweep[i].purity <= sweep[i - 1].purity + 1e-15);
    const SpectralDistribution gauss =
        SpectralDistribution::gaussian(lambda0, fwhm);
    const double sigma = gauss.width_param();
    for (const auto& pt : sweep) {
      const double expected =
          0.5 * (1.0 + std::exp(-pt.b * pt.b * sigma * sigma));
      CHECK(pt.purity == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  SUBCASE("uniform spectrum dips to one half and revives") {
    const auto sweep = purity_vs_thickness(SpectrumKind::kUniform, fwhm, 0.2,
                                           dn, lambda0, hs);
    // First sinc zero: |b| = 2 pi / w at h = lambda0^2 / (dn w).
    const double h_zero = lambda0 * lambda0 / (dn * fwhm);
    std::size_t at = 0;
    double best = 1e9;
    for (std::size_t i = 0; i < sweep.size(); ++i)
      if (std::abs(sweep[i].h - h_zero) < best) {
        best = std::abs(sweep[i].h - h_zero);
        at = i;
      }
    CHECK(sweep[at].purity == doctest::Approx(0.5).epsilon(1e-6));
    // Revival after the zero; the second sinc lobe peaks at |sinc| ~ 0.217,
    // so the recovered purity tops out near 0.5236.
    double rebound = 0.5;
    for (std::size_t i = at; i < sweep.size(); ++i)
      rebound = std::max(rebound, sweep[i].purity);
    CHECK(rebound > 0.52);
  }

  SUBCASE("triangular spectrum touches one half and revives") {
    const auto sweep = purity_vs_thickness(SpectrumKind::kTriangular, fwhm,
                                           0.2, dn, lambda0, hs);
    double lowest = 1.0, rebound_after = 0.0;
    std::size_t low_at = 0;
    for (std::size_t i = 0; i < sweep.size(); ++i)
      if (sweep[i].purity < lowest) {
        lowest = sweep[i].purity;
        low_at = i;
      }
    CHECK(lowest == doctest::Approx(0.5).epsilon(1e-4));
    for (std::size_t i = low_at; i < sweep.size(); ++i)
      rebound_after = std::max(rebound_after, sweep[i].purity);
    CHECK(rebound_after > 0.5 + 1e-3);
  }

  SUBCASE("sinc2 spectrum reaches one half and stays there") {
    const auto sweep = purity_vs_thickness(SpectrumKind::kSinc2, fwhm, 0.2, dn,
                                           lambda0, hs);
    const SpectralDistribution spec =
        SpectralDistribution::sinc2(lambda0, fwhm);
    const double k = spec.width_param();
    bool saw_plateau = false;
    for (const auto& pt : sweep) {
      if (std::abs(pt.b) >= 2.0 * k) {
        CHECK(pt.purity == 0.5);
        saw_plateau = true;
      }
    }
    CHECK(saw_plateau);
  }

  SUBCASE("thin plates keep purity near one for every kind") {
    for (SpectrumKind kind :
         {SpectrumKind::kGaussian, SpectrumKind::kUniform,
          SpectrumKind::kTriangular, SpectrumKind::kSinc2}) {
      const auto sweep =
          purity_vs_thickness(kind, fwhm, 0.2, dn, lambda0, {1e-6});
      CHECK(sweep.front().purity == doctest::Approx(1.0).epsilon(1e-8));
    }
  }

  CHECK_THROWS_AS(
      purity_vs_thickness(SpectrumKind::kGaussian, fwhm, 0.2, dn, lambda0, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(purity_vs_thickness(SpectrumKind::kGaussian, fwhm, 0.2, dn,
                                      lambda0, {2.0, 1.0}),
                  std::invalid_argument);
}
