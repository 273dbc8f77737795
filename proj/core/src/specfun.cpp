#include "hexisr/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hexisr/error.hpp"

namespace hexisr::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_2, B_4, ..., B_16 divided by (2j)!.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0};

constexpr int kZetaExplicitTerms = 20;
constexpr int kZetaMaxExplicitTerms = 1 << 20;

double lanczos_sum(double xm1) {
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    a += kLanczos[i] / (xm1 + static_cast<double>(i));
  }
  return a;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(what) + ": argument must be > 0, got " + std::to_string(x));
  }
}

double hurwitz_em(double s, double q, int n, double* last_correction) {
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += std::pow(q + k, -s);
  }
  const double a = q + n;
  const double a_pow = std::pow(a, -s);
  double result = sum + a * a_pow / (s - 1.0) + 0.5 * a_pow;

  // Term j >= 1: B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1)
  double rising = s;
  double a_term = a_pow / a;
  double correction = 0.0;
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    correction = kBernoulliOverFactorial[j] * rising * a_term;
    result += correction;
    const double m = 2.0 * static_cast<double>(j) + 1.0;
    rising *= (s + m) * (s + m + 1.0);
    a_term /= a * a;
  }
  *last_correction = correction;
  return result;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("SeriesControl: rel_tol must lie in (0, 1)");
  }
  if (max_terms < 16) {
    throw DomainError("SeriesControl: max_terms must be >= 16");
  }
}

double gamma(double x) {
  require_positive(x, "gamma");
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  if (x > 140.0) {
    return std::exp(log_gamma(x));
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, xm1 + 0.5) * std::exp(-t) *
         lanczos_sum(xm1);
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm1));
}

double riemann_zeta(double s) {
  if (!(s > 1.0)) {
    throw DomainError("riemann_zeta: s must be > 1");
  }
  return hurwitz_zeta(s, 1.0);
}

double hurwitz_zeta(double s, double q, const SeriesControl& ctl) {
  if (!(s > 1.0)) {
    throw DomainError("hurwitz_zeta: s must be > 1");
  }
  if (!(q > 0.0 && q <= 1.0)) {
    throw DomainError("hurwitz_zeta: q must lie in (0, 1]");
  }
  ctl.validate();
  for (int n = kZetaExplicitTerms; n <= kZetaMaxExplicitTerms; n *= 2) {
    double last = 0.0;
    const double value = hurwitz_em(s, q, n, &last);
    if (std::abs(last) <= ctl.rel_tol * std::abs(value)) {
      return value;
    }
  }
  throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin remainder did not reach tolerance");
}

double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl) {
  if (!(c > 0.0)) {
    throw DomainError("gauss_2f1: c must be > 0");
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("gauss_2f1: z must lie in [0, 1)");
  }
  ctl.validate();

  double prefactor = 1.0;
  if (z > 0.5) {
    prefactor = std::pow(1.0 - z, c - a - b);
    const double a2 = c - a;
    const double b2 = c - b;
    a = a2;
    b = b2;
  }

  double term = 1.0;
  double sum = 1.0;
  if (z == 0.0) {
    return prefactor;
  }
  for (int n = 0; n < ctl.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    const double ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    term *= ratio;
    sum += term;
    if (term == 0.0) {
      return prefactor * sum;  // terminating (polynomial) series
    }
    // Ratio of consecutive terms tends to z; bound the remainder geometrically
    // by the larger of the current ratio and z once it is below one.
    const double next = std::abs((a + dn + 1.0) * (b + dn + 1.0) / ((c + dn + 1.0) * (dn + 2.0))) * z;
    const double rho = std::max(next, z);
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= ctl.rel_tol * std::abs(sum)) {
        return prefactor * sum;
      }
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within max_terms");
}

double std_normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("std_normal_quantile: p must lie in (0, 1)");
  }
  // Acklam's rational approximation followed by one Halley step.
  static constexpr std::array<double, 6> a = {-3.969683028665376e+01, 2.209460984245205e+02,
                                              -2.759285104469687e+02, 1.383577518672690e+02,
                                              -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr std::array<double, 5> b = {-5.447609879822406e+01, 1.615858368580409e+02,
                                              -1.556989798598866e+02, 6.680131188771972e+01,
                                              -1.328068155288572e+01};
  static constexpr std::array<double, 6> c = {-7.784894002430293e-03, -3.223964580411365e-01,
                                              -2.400758277161838e+00, -2.549732539343734e+00,
                                              4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr std::array<double, 4> d = {7.784695709041462e-03, 3.224671290700398e-01,
                                              2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x = 0.0;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = std_normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace hexisr::specfun
