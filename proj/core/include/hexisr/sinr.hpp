#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "hexisr/hexgeom.hpp"
#include "hexisr/isr_omni.hpp"

namespace hexisr {

enum class TrafficKind { UniformDisk, LognormalRadius };

/// User-location distribution over the central cell. The angle is always
/// uniform. For LognormalRadius, ln(r / delta) ~ N(mu, sigma^2) truncated to r <= R.
struct TrafficModel {
  TrafficKind kind = TrafficKind::UniformDisk;
  double mu = 0.0;
  double sigma = 1.0;

  static TrafficModel uniform() { return {}; }
  static TrafficModel lognormal(double mu, double sigma) {
    return {TrafficKind::LognormalRadius, mu, sigma};
  }
  void validate() const;

  /// Radial CDF T(r) = P(|m| <= r) for a cell of radius R (meters).
  double radial_cdf(double r, double R, double delta) const;
};

/// Sampled CCDF. Thresholds are linear SINR values, ascending.
struct CcdfCurve {
  std::vector<double> thresholds;
  std::vector<double> probabilities;

  /// `sinr_db,ccdf` rows with 6 significant digits. When `source` is non-empty
  /// a third column carries it (header `sinr_db,ccdf,source`).
  void write_csv(std::ostream& out, std::string_view source = {}, bool header = true) const;
};

/// How g^-1 is evaluated.
enum class Inverter {
  SeriesReversion,  ///< second-order closed-form reversion of g
  Bisection,        ///< numerical root of g(x) = y
};

/// Noise-normalization constant a P_N / P (delta / 1 km)^2b.
double y0(const NetworkConfig& cfg);

/// SINR machinery for one configuration; caches the H0 evaluator.
///
/// With reuse v the interference term uses H0(x / sqrt(v)); v = 1 gives
///   g(x) = eta H0(x) + y0 x^2b.
class SinrModel {
 public:
  explicit SinrModel(const NetworkConfig& cfg);

  const NetworkConfig& config() const { return cfg_; }
  double y0() const { return y0_; }

  /// 1 / SINR at normalized radius x (theta-averaged ISR).
  double g(double x) const;

  /// Closed-form approximate inverse
  ///   C / sqrt(1/2 + sqrt(1/4 + beta C^2)),
  ///   C = (y / (6 eta omega(b) v^-b + y0))^(1/2b),
  ///   beta = 6 b eta omega(b+1) v^(-b-1) / (6 eta omega(b) v^-b + y0).
  double g_inverse(double y) const;

  /// Root of g(x) = y on [0, x_max] by bisection; returns x_max if g(x_max) <= y.
  double g_inverse_exact(double y, double x_max = kMaxNormalizedRadius) const;

  /// SINR with the full theta-dependent ISR; +inf at the site.
  double sinr_at(const Location& m) const;

  /// Lambda(y) = min(delta g^-1(1/y), R), meters.
  double lambda(double y, Inverter inv = Inverter::SeriesReversion) const;

  /// Psi(y) = T(Lambda(y)) per threshold.
  CcdfCurve ccdf(std::span<const double> y_grid, const TrafficModel& traffic,
                 Inverter inv = Inverter::SeriesReversion) const;

 private:
  NetworkConfig cfg_;
  OmniIsr omni_;
  double y0_;
  double lead_;  // 6 eta omega(b) v^-b + y0
  double beta_;
};

double g(double x, const NetworkConfig& cfg);
double g_inverse(double y, const NetworkConfig& cfg);
double sinr_at(const Location& m, const NetworkConfig& cfg);
double lambda_y(double y, const NetworkConfig& cfg, Inverter inv = Inverter::SeriesReversion);
CcdfCurve sinr_ccdf(std::span<const double> y_grid, const NetworkConfig& cfg, const TrafficModel& traffic,
                    Inverter inv = Inverter::SeriesReversion);

/// Linear thresholds from `from_db` to `to_db` inclusive in `step_db` steps.
/// Defaults: -10 dB to 50 dB by 0.5 dB (121 points).
std::vector<double> sinr_grid(double from_db = -10.0, double to_db = 50.0, double step_db = 0.5);

}  // namespace hexisr
