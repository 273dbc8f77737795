#include "hexisr/hexgeom.hpp"

#include <cmath>
#include <numbers>

#include "hexisr/error.hpp"

namespace hexisr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) {
    t += kTwoPi;
  }
  // fmod of a tiny negative value can round up to exactly 2pi
  return t >= kTwoPi ? 0.0 : t;
}

double wrap_to_pi(double theta) {
  return normalize_angle(theta + std::numbers::pi) - std::numbers::pi;
}

Location Location::polar(double r, double theta) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("Location: radius must be finite and >= 0");
  }
  Location loc;
  loc.r_ = r;
  loc.theta_ = normalize_angle(theta);
  loc.x_ = r * std::cos(loc.theta_);
  loc.y_ = r * std::sin(loc.theta_);
  return loc;
}

Location Location::cartesian(double x, double y) {
  Location loc;
  loc.x_ = x;
  loc.y_ = y;
  loc.r_ = std::hypot(x, y);
  loc.theta_ = loc.r_ > 0.0 ? normalize_angle(std::atan2(y, x)) : 0.0;
  return loc;
}

void NetworkConfig::validate() const {
  if (!(delta > 0.0)) throw DomainError("NetworkConfig: delta must be > 0");
  if (!(b > 1.0)) throw DomainError("NetworkConfig: b must be > 1");
  if (!(a > 0.0)) throw DomainError("NetworkConfig: a must be > 0");
  if (!(P > 0.0)) throw DomainError("NetworkConfig: P must be > 0");
  if (!(P_N >= 0.0)) throw DomainError("NetworkConfig: P_N must be >= 0");
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("NetworkConfig: eta must lie in [0, 1]");
  if (!(R > 0.0 && R < delta)) throw DomainError("NetworkConfig: R must lie in (0, delta)");
  if (!(reuse_v >= 1.0)) throw DomainError("NetworkConfig: reuse_v must be >= 1");
}

Location site_position(const SiteIndex& idx, double delta) {
  if (!idx.valid()) {
    throw DomainError("site_position: invalid site index");
  }
  const double k = idx.k;
  const double j = idx.j;
  const double dist = delta * std::sqrt(k * k + j * j - j * k);
  const double angle = std::atan2(j * std::numbers::sqrt3, 2.0 * k - j) + idx.l * std::numbers::pi / 3.0;
  return Location::polar(dist, angle);
}

std::vector<SiteIndex> enumerate_rings(int k_max) {
  if (k_max < 1) {
    throw DomainError("enumerate_rings: k_max must be >= 1");
  }
  std::vector<SiteIndex> out;
  out.reserve(static_cast<std::size_t>(site_count(k_max)));
  for (int k = 1; k <= k_max; ++k) {
    for (int l = 0; l < 6; ++l) {
      for (int j = 0; j < k; ++j) {
        out.push_back({l, k, j});
      }
    }
  }
  return out;
}

double sector_angle(const Location& site, const Location& m, int c) {
  if (c < 1 || c > 3) {
    throw DomainError("sector_angle: sector must be 1, 2 or 3");
  }
  const std::complex<double> d = m.complex() - site.complex();
  if (d == std::complex<double>{}) {
    throw GeometryError("sector_angle: user location coincides with the site");
  }
  return std::numbers::pi * (2.0 * c - 3.0) / 3.0 + std::arg(d);
}

}  // namespace hexisr
