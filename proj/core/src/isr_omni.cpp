#include "hexisr/isr_omni.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "hexisr/error.hpp"

namespace hexisr {

namespace {

constexpr double kOmegaUnitThreshold = 1e-14;
// Past this order the closed form is replaced by the first lattice shells.
constexpr double kOmegaDirectFrom = 40.0;

void require_b(double b, const char* what) {
  if (!(b > 1.0) || !std::isfinite(b)) {
    throw DomainError(std::string(what) + ": b must be > 1");
  }
}

void require_x(double x, double x_max, const char* what) {
  if (!(x >= 0.0 && x < x_max)) {
    throw DomainError(std::string(what) + ": normalized radius out of range");
  }
}

double location_x(const Location& m, const NetworkConfig& cfg, const char* what) {
  const double x = m.normalized_radius(cfg.delta);
  if (x > kMaxNormalizedRadius) {
    throw DomainError(std::string(what) + ": |m| / delta must be <= 0.99");
  }
  return x;
}

double omega_shells(double b) {
  double sum = 0.0;
  for (int k = 8; k >= 1; --k) {
    for (int j = k - 1; j >= 0; --j) {
      sum += std::pow(static_cast<double>(k * k + j * j - j * k), -b);
    }
  }
  return sum;
}

// Sum of c_h w_h z^h with c_0 = 1, c_{h+1} = c_h ((b+h)/(h+1))^2 and
// 0 < w_h <= w_0 non-increasing. Stops once the current term and the
// geometric tail bound are both below rel_tol of the sum.
template <class Weight>
double squared_pochhammer_series(double b, double z, const SeriesControl& ctl, Weight&& w,
                                 const char* what) {
  double coeff = 1.0;
  double zpow = 1.0;
  double sum = 0.0;
  for (int h = 0; h < ctl.max_terms; ++h) {
    const double term = coeff * w(h) * zpow;
    sum += term;
    const double growth = (b + h) / (h + 1.0);
    const double rho = z * growth * growth;
    if (term <= ctl.rel_tol * sum && rho < 1.0 && term * rho / (1.0 - rho) <= ctl.rel_tol * sum) {
      return sum;
    }
    if (term == 0.0) {
      return sum;
    }
    coeff *= growth * growth;
    zpow *= z;
  }
  throw ConvergenceError(std::string(what) + ": series did not converge within max_terms");
}

}  // namespace

double omega(double b) {
  require_b(b, "omega");
  if (b >= kOmegaDirectFrom) {
    return omega_shells(b);
  }
  using specfun::hurwitz_zeta;
  using specfun::riemann_zeta;
  return std::pow(3.0, -b) * riemann_zeta(b) *
         (hurwitz_zeta(b, 1.0 / 3.0) - hurwitz_zeta(b, 2.0 / 3.0));
}

OmniIsr::OmniIsr(double b, SeriesControl ctl) : b_(b), ctl_(ctl) {
  require_b(b, "OmniIsr");
  ctl_.validate();
  for (int h = 0;; ++h) {
    const double w = omega(b + h);
    if (w - 1.0 < kOmegaUnitThreshold) {
      break;
    }
    omega_.push_back(w);
  }
}

double OmniIsr::omega_shifted(int h) const {
  return h < static_cast<int>(omega_.size()) ? omega_[static_cast<std::size_t>(h)] : 1.0;
}

double OmniIsr::h0(double x) const {
  require_x(x, 1.0, "h0");
  if (x == 0.0) {
    return 0.0;
  }
  const double series = squared_pochhammer_series(
      b_, x * x, ctl_, [this](int h) { return omega_shifted(h); }, "h0");
  return 6.0 * std::pow(x, 2.0 * b_) * series;
}

double OmniIsr::hn_approx(int n, double x) const {
  if (n < 1) {
    throw DomainError("hn_approx: n must be >= 1");
  }
  require_x(x, 1.0, "hn_approx");
  if (x == 0.0) {
    return 0.0;
  }
  // Gamma(b+6n) / (Gamma(b) Gamma(1+6n)) as a product
  double ratio = 1.0;
  for (int i = 0; i < 6 * n; ++i) {
    ratio *= (b_ + i) / (i + 1.0);
  }
  return 6.0 * ratio * std::pow(x, 2.0 * b_ + 6.0 * n) / std::pow(1.0 - x * x, b_);
}

double OmniIsr::fourier(double x, double theta, int terms) const {
  if (terms < 0) {
    throw DomainError("isr_fourier: fourier_terms must be >= 0");
  }
  double sum = h0(x);
  for (int n = 1; n <= terms; ++n) {
    sum += 2.0 * hn_approx(n, x) * std::cos(6.0 * n * theta);
  }
  return sum;
}

double OmniIsr::closed(double x, double theta) const {
  require_x(x, 1.0, "isr_closed");
  if (x == 0.0) {
    return 0.0;
  }
  const double c = std::pow(x, 2.0 * b_) / std::pow(1.0 - x * x, b_);
  double ring = 0.0;
  for (int l = 0; l < 6; ++l) {
    const std::complex<double> u = std::polar(x, theta + l * std::numbers::pi / 3.0);
    ring += std::pow(1.0 - u, -b_).real();
  }
  return h0(x) - 12.0 * c + 2.0 * c * ring;
}

double OmniIsr::misr(double kappa) const {
  if (!(kappa > 0.0 && kappa < 1.0)) {
    throw DomainError("misr: kappa must lie in (0, 1)");
  }
  const double series = squared_pochhammer_series(
      b_, kappa * kappa, ctl_,
      [this](int h) { return omega_shifted(h) * (b_ + 1.0) / (b_ + h + 1.0); }, "misr");
  return 6.0 * std::pow(kappa, 2.0 * b_) * series / (b_ + 1.0);
}

double h0(double x, double b, const SeriesControl& ctl) {
  return OmniIsr(b, ctl).h0(x);
}

double hn_approx(int n, double x, double b) {
  require_b(b, "hn_approx");
  return OmniIsr(b).hn_approx(n, x);
}

double isr_fourier(const Location& m, const NetworkConfig& cfg, const IsrSeriesParams& p) {
  const double x = location_x(m, cfg, "isr_fourier");
  return OmniIsr(cfg.b, p.h_control).fourier(x, m.theta(), p.fourier_terms);
}

double isr_closed(const Location& m, const NetworkConfig& cfg) {
  const double x = location_x(m, cfg, "isr_closed");
  return OmniIsr(cfg.b).closed(x, m.theta());
}

double isr_order2(double x, double b) {
  require_b(b, "isr_order2");
  require_x(x, 1.0, "isr_order2");
  return 6.0 * std::pow(x, 2.0 * b) * (omega(b) + omega(b + 1.0) * b * b * x * x);
}

double isr_simple(double x, double b) {
  require_b(b, "isr_simple");
  require_x(x, 1.0, "isr_simple");
  const double lead = (1.0 + (1.0 - b) * (1.0 - b) * x * x) / std::pow(1.0 - x * x, 2.0 * b - 1.0);
  return 6.0 * std::pow(x, 2.0 * b) * (lead + omega(b) - 1.0);
}

double baseline_fluid(double x, double b) {
  require_b(b, "baseline_fluid");
  require_x(x, 1.0, "baseline_fluid");
  return 2.0 * std::numbers::pi * std::pow(x, 2.0 * b) /
         (std::numbers::sqrt3 * (b - 1.0)) * std::pow(1.0 - x, 2.0 - 2.0 * b);
}

double baseline_karray(double x, double b) {
  require_b(b, "baseline_karray");
  require_x(x, 1.0, "baseline_karray");
  const double one_minus = 1.0 - x;
  return specfun::riemann_zeta(2.0 * b - 1.0) * std::pow(x, 2.0 * b) /
         std::pow(one_minus, 2.0 * b) *
         (1.0 + 4.0 * std::pow(one_minus, b) + std::pow(one_minus / (1.0 + x), 2.0 * b));
}

double misr(double b, double kappa, const SeriesControl& ctl) {
  return OmniIsr(b, ctl).misr(kappa);
}

double equal_area_kappa() {
  return std::sqrt(std::numbers::sqrt3 / (2.0 * std::numbers::pi));
}

}  // namespace hexisr
