#include "hexisr/reuse_shadow.hpp"

#include <cmath>
#include <numbers>

#include "hexisr/error.hpp"
#include "hexisr/isr_omni.hpp"

namespace hexisr {

void FfrPattern::validate(const NetworkConfig& cfg) const {
  if (!(inner_v >= 1.0 && outer_v >= inner_v)) {
    throw DomainError("FfrPattern: need 1 <= inner_v <= outer_v");
  }
  if (!(r0 > 0.0 && r0 < cfg.R)) {
    throw DomainError("FfrPattern: r0 must lie in (0, R)");
  }
}

void ShadowingParams::validate() const {
  if (!(mean_chi > 0.0)) throw DomainError("ShadowingParams: mean_chi must be > 0");
  if (!(var_chi >= 0.0)) throw DomainError("ShadowingParams: var_chi must be >= 0");
}

ShadowingParams ShadowingParams::from_sigma_db(double sigma_db) {
  if (!(sigma_db >= 0.0)) {
    throw DomainError("ShadowingParams: sigma_db must be >= 0");
  }
  const double s = sigma_db * std::numbers::ln10 / 10.0;
  const double s2 = s * s;
  return {std::exp(0.5 * s2), std::expm1(s2) * std::exp(s2)};
}

LognormalFit lognormal_from_moments(double mean, double variance) {
  if (!(mean > 0.0) || !(variance >= 0.0)) {
    throw DomainError("lognormal_from_moments: need mean > 0 and variance >= 0");
  }
  const double s2 = std::log1p(variance / (mean * mean));
  return {std::log(mean) - 0.5 * s2, std::sqrt(s2)};
}

double isr_reuse(const Location& m, const NetworkConfig& cfg, double v) {
  if (!(v >= 1.0)) {
    throw DomainError("isr_reuse: v must be >= 1");
  }
  const Location scaled = Location::polar(m.r() / std::sqrt(v), m.theta());
  if (scaled.normalized_radius(cfg.delta) > kMaxNormalizedRadius) {
    throw DomainError("isr_reuse: scaled normalized radius must be <= 0.99");
  }
  return isr_closed(scaled, cfg);
}

double isr_ffr(const Location& m, const NetworkConfig& cfg, const FfrPattern& ffr) {
  return isr_reuse(m, cfg, ffr.reuse_at(m.r()));
}

IsrMoments shadowed_isr_moments(const Location& m, const NetworkConfig& cfg, const ShadowingParams& sh) {
  sh.validate();
  return {isr_closed(m, cfg) * sh.mean_chi, isr_closed(m, cfg.with_b(2.0 * cfg.b)) * sh.var_chi};
}

}  // namespace hexisr
