#include "hexisr/sinr.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "hexisr/error.hpp"
#include "hexisr/specfun.hpp"
#include "hexisr/units.hpp"

namespace hexisr {

namespace {

std::string format_g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

void TrafficModel::validate() const {
  if (kind == TrafficKind::LognormalRadius && !(sigma > 0.0)) {
    throw DomainError("TrafficModel: sigma must be > 0 for Log-normal radius");
  }
  if (!std::isfinite(mu)) {
    throw DomainError("TrafficModel: mu must be finite");
  }
}

double TrafficModel::radial_cdf(double r, double R, double delta) const {
  if (r <= 0.0) return 0.0;
  if (r >= R) return 1.0;
  if (kind == TrafficKind::UniformDisk) {
    return (r * r) / (R * R);
  }
  using specfun::std_normal_cdf;
  return std_normal_cdf((std::log(r / delta) - mu) / sigma) /
         std_normal_cdf((std::log(R / delta) - mu) / sigma);
}

void CcdfCurve::write_csv(std::ostream& out, std::string_view source, bool header) const {
  if (header) {
    out << (source.empty() ? "sinr_db,ccdf\n" : "sinr_db,ccdf,source\n");
  }
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    out << format_g6(linear_to_db(thresholds[i])) << ',' << format_g6(probabilities[i]);
    if (!source.empty()) {
      out << ',' << source;
    }
    out << '\n';
  }
}

double y0(const NetworkConfig& cfg) {
  return cfg.a * cfg.P_N / cfg.P * std::pow(cfg.delta / kPathlossReferenceMeters, 2.0 * cfg.b);
}

SinrModel::SinrModel(const NetworkConfig& cfg) : cfg_(cfg), omni_(cfg.b), y0_(hexisr::y0(cfg)) {
  cfg_.validate();
  const double b = cfg_.b;
  const double v = cfg_.reuse_v;
  lead_ = 6.0 * cfg_.eta * omni_.omega_shifted(0) * std::pow(v, -b) + y0_;
  beta_ = 6.0 * b * cfg_.eta * omni_.omega_shifted(1) * std::pow(v, -b - 1.0) / lead_;
}

double SinrModel::g(double x) const {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("g: x must lie in [0, 1)");
  }
  const double b = cfg_.b;
  return cfg_.eta * omni_.h0(x / std::sqrt(cfg_.reuse_v)) + y0_ * std::pow(x, 2.0 * b);
}

double SinrModel::g_inverse(double y) const {
  if (!(y >= 0.0)) {
    throw DomainError("g_inverse: y must be >= 0");
  }
  const double c = std::pow(y / lead_, 1.0 / (2.0 * cfg_.b));
  return c / std::sqrt(0.5 + std::sqrt(0.25 + beta_ * c * c));
}

double SinrModel::g_inverse_exact(double y, double x_max) const {
  if (!(y >= 0.0)) {
    throw DomainError("g_inverse_exact: y must be >= 0");
  }
  if (y == 0.0) return 0.0;
  if (g(x_max) <= y) return x_max;
  double lo = 0.0;
  double hi = x_max;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double SinrModel::sinr_at(const Location& m) const {
  const double x = m.normalized_radius(cfg_.delta);
  if (x == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  const double xv = x / std::sqrt(cfg_.reuse_v);
  if (xv > kMaxNormalizedRadius) {
    throw DomainError("sinr_at: |m| / (sqrt(v) delta) must be <= 0.99");
  }
  const double f = omni_.closed(xv, m.theta());
  return 1.0 / (cfg_.eta * f + y0_ * std::pow(x, 2.0 * cfg_.b));
}

double SinrModel::lambda(double y, Inverter inv) const {
  if (!(y > 0.0)) {
    throw DomainError("lambda_y: y must be > 0");
  }
  const double target = 1.0 / y;
  const double x_cell = cfg_.R / cfg_.delta;
  if (inv == Inverter::Bisection) {
    return cfg_.delta * g_inverse_exact(target, x_cell);
  }
  return std::min(cfg_.delta * g_inverse(target), cfg_.R);
}

CcdfCurve SinrModel::ccdf(std::span<const double> y_grid, const TrafficModel& traffic, Inverter inv) const {
  traffic.validate();
  CcdfCurve curve;
  curve.thresholds.assign(y_grid.begin(), y_grid.end());
  curve.probabilities.reserve(y_grid.size());
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    if (i > 0 && !(y_grid[i] > y_grid[i - 1])) {
      throw DomainError("sinr_ccdf: thresholds must be strictly ascending");
    }
    curve.probabilities.push_back(traffic.radial_cdf(lambda(y_grid[i], inv), cfg_.R, cfg_.delta));
  }
  return curve;
}

double g(double x, const NetworkConfig& cfg) { return SinrModel(cfg).g(x); }

double g_inverse(double y, const NetworkConfig& cfg) { return SinrModel(cfg).g_inverse(y); }

double sinr_at(const Location& m, const NetworkConfig& cfg) { return SinrModel(cfg).sinr_at(m); }

double lambda_y(double y, const NetworkConfig& cfg, Inverter inv) { return SinrModel(cfg).lambda(y, inv); }

CcdfCurve sinr_ccdf(std::span<const double> y_grid, const NetworkConfig& cfg, const TrafficModel& traffic,
                    Inverter inv) {
  return SinrModel(cfg).ccdf(y_grid, traffic, inv);
}

std::vector<double> sinr_grid(double from_db, double to_db, double step_db) {
  if (!(step_db > 0.0) || !(to_db >= from_db)) {
    throw DomainError("sinr_grid: need step > 0 and to >= from");
  }
  std::vector<double> out;
  const auto n = static_cast<int>(std::floor((to_db - from_db) / step_db + 1e-9));
  for (int i = 0; i <= n; ++i) {
    out.push_back(db_to_linear(from_db + i * step_db));
  }
  return out;
}

}  // namespace hexisr
