#pragma once

// Special functions used by the lattice-sum closed forms. Real arguments only.

namespace hexisr::specfun {

/// Truncation policy shared by every infinite series in the library.
struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 10'000;

  /// Throws DomainError unless 0 < rel_tol < 1 and max_terms >= 16.
  void validate() const;
};

/// Euler Gamma for x > 0 (Lanczos, g = 7, nine coefficients).
double gamma(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Riemann zeta for real s > 1.
double riemann_zeta(double s);

/// Hurwitz zeta sum_{k>=0} (k + q)^-s for s > 1 and 0 < q <= 1.
///
/// Euler-Maclaurin with 20 explicit terms and Bernoulli corrections up to
/// B_16. If the last correction is not below `ctl.rel_tol` of the result the
/// explicit part is doubled until it is.
double hurwitz_zeta(double s, double q, const SeriesControl& ctl = {});

/// Gauss hypergeometric 2F1(a, b; c; z) on 0 <= z < 1 by its power series.
///
/// For z > 1/2 the Euler transformation
///   2F1(a, b; c; z) = (1 - z)^(c - a - b) 2F1(c - a, c - b; c; z)
/// is applied first. Throws ConvergenceError if `ctl.max_terms` is reached.
double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl = {});

/// Standard normal CDF, P(N(0,1) <= z).
double std_normal_cdf(double z);

/// Inverse of std_normal_cdf for p in (0, 1).
double std_normal_quantile(double p);

}  // namespace hexisr::specfun
