#pragma once

#include <vector>

#include "hexisr/hexgeom.hpp"
#include "hexisr/specfun.hpp"

namespace hexisr {

using specfun::SeriesControl;

/// Largest normalized radius x = r / delta accepted by location-based evaluators.
inline constexpr double kMaxNormalizedRadius = 0.99;

/// Truncation of the Fourier series in theta.
struct IsrSeriesParams {
  int fourier_terms = 5;  ///< harmonics n = 1..N kept
  SeriesControl h_control{};
};

/// Hexagonal lattice zeta sum
///   omega(b) = sum_{k>=1} sum_{j<k} (k^2 + j^2 - jk)^-b
///            = 3^-b zeta(b) (zeta(b, 1/3) - zeta(b, 2/3)).
double omega(double b);

/// ISR evaluators for a fixed amplitude loss exponent b.
///
/// Holds omega(b + h) for every h until omega(b + h) - 1 < 1e-14, past which
/// the value 1 is used. Immutable after construction, so one instance may be
/// shared between threads.
class OmniIsr {
 public:
  explicit OmniIsr(double b, SeriesControl ctl = {});

  double b() const { return b_; }
  const SeriesControl& control() const { return ctl_; }

  /// omega(b + h), h >= 0.
  double omega_shifted(int h) const;

  /// Angular average of the ISR,
  ///   6 x^2b / Gamma(b)^2 sum_h Gamma(b+h)^2 / h!^2 omega(b+h) x^2h,   0 <= x < 1.
  double h0(double x) const;

  /// Large-n form of the n-th Fourier coefficient,
  ///   6 Gamma(b+6n) / (Gamma(b) Gamma(1+6n)) x^(2b+6n) / (1-x^2)^b.
  double hn_approx(int n, double x) const;

  /// H0 + 2 sum_{n=1..terms} hn_approx(n) cos(6 n theta).
  double fourier(double x, double theta, int terms) const;

  /// Closed form with every harmonic n >= 1 summed:
  ///   H0 - 12 c + 2 c sum_{l=0..5} Re[(1 - x e^{i(theta + l pi/3)})^-b],  c = x^2b / (1-x^2)^b.
  double closed(double x, double theta) const;

  /// Mean ISR over a uniform disk of radius kappa * delta, 0 < kappa < 1.
  double misr(double kappa) const;

 private:
  double b_;
  SeriesControl ctl_;
  std::vector<double> omega_;  // omega(b + h) while it differs from 1
};

/// Theta-averaged ISR H0(x, b).
double h0(double x, double b, const SeriesControl& ctl = {});

/// Asymptotic n-th Fourier coefficient; n >= 1.
double hn_approx(int n, double x, double b);

/// Truncated Fourier series of the ISR at m.
double isr_fourier(const Location& m, const NetworkConfig& cfg, const IsrSeriesParams& p = {});

/// Production ISR evaluator (all harmonics in closed form).
double isr_closed(const Location& m, const NetworkConfig& cfg);

/// Second-order Maclaurin development 6 x^2b (omega(b) + omega(b+1) b^2 x^2).
double isr_order2(double x, double b);

/// Simple approximation 6 x^2b ((1 + (1-b)^2 x^2) / (1-x^2)^(2b-1) + omega(b) - 1).
double isr_simple(double x, double b);

/// Fluid-model baseline 2 pi x^2b / (sqrt3 (b-1)) (1-x)^(2-2b).
double baseline_fluid(double x, double b);

/// Literature baseline zeta(2b-1) x^2b / (1-x)^2b (1 + 4 (1-x)^b + (1-x)^2b / (1+x)^2b).
double baseline_karray(double x, double b);

/// Mean ISR over a uniform disk of radius kappa * delta. Independent of delta.
double misr(double b, double kappa, const SeriesControl& ctl = {});

/// sqrt(sqrt3 / (2 pi)): radius of the disk with the area of the hexagonal cell, in units of delta.
double equal_area_kappa();

}  // namespace hexisr
