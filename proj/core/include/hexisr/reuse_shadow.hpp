#pragma once

#include "hexisr/hexgeom.hpp"

namespace hexisr {

/// Location-dependent reuse: inner_v for |m| <= r0, outer_v beyond.
struct FfrPattern {
  double inner_v = 1.0;
  double outer_v = 3.0;
  double r0 = 300.0;  ///< meters

  /// Throws DomainError unless 0 < r0 < R and 1 <= inner_v <= outer_v.
  void validate(const NetworkConfig& cfg) const;
  double reuse_at(double r) const { return r <= r0 ? inner_v : outer_v; }
};

/// First two moments of the i.i.d. Log-normal shadowing factor chi.
struct ShadowingParams {
  double mean_chi = 1.0;
  double var_chi = 0.0;

  void validate() const;

  /// chi = 10^(X/10) with X ~ N(0, sigma_db^2): zero median in dB.
  static ShadowingParams from_sigma_db(double sigma_db);
};

/// Log-normal (mu, sigma) of ln Y matching a given mean and variance of Y.
struct LognormalFit {
  double mu = 0.0;
  double sigma = 0.0;
};
LognormalFit lognormal_from_moments(double mean, double variance);

struct IsrMoments {
  double mean = 0.0;
  double variance = 0.0;
};

/// ISR under reuse v: f(m / sqrt(v), b). Throws DomainError if the scaled
/// normalized radius exceeds 0.99 or v < 1.
double isr_reuse(const Location& m, const NetworkConfig& cfg, double v);

/// isr_reuse with v picked from the pattern by |m|.
double isr_ffr(const Location& m, const NetworkConfig& cfg, const FfrPattern& ffr);

/// Fenton-Wilkinson moments of the shadowed ISR:
///   mean = f(m, b) E[chi],  variance = f(m, 2b) Var[chi].
IsrMoments shadowed_isr_moments(const Location& m, const NetworkConfig& cfg, const ShadowingParams& sh);

}  // namespace hexisr
