#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hexisr {

/// Index (l, k, j) of a site: region l in 0..5, ring k >= 1, j in 0..k-1.
struct SiteIndex {
  int l = 0;
  int k = 1;
  int j = 0;

  bool valid() const { return l >= 0 && l <= 5 && k >= 1 && j >= 0 && j <= k - 1; }
  friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
};

/// A point of the plane in polar form. The angle is normalized to [0, 2pi)
/// and the Cartesian components are cached.
class Location {
 public:
  Location() = default;

  /// r >= 0 (DomainError otherwise); theta is reduced modulo 2pi.
  static Location polar(double r, double theta);
  static Location cartesian(double x, double y);
  static Location from_complex(std::complex<double> z) { return cartesian(z.real(), z.imag()); }

  double r() const { return r_; }
  double theta() const { return theta_; }
  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> complex() const { return {x_, y_}; }

  /// Distance to the central site in units of the inter-site distance.
  double normalized_radius(double delta) const { return r_ / delta; }

 private:
  double r_ = 0.0;
  double theta_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Physical and network scalars.
///
/// Linear units throughout: `a` is the pathloss at 1 km (so L = a * d_km^(2b)),
/// `P` and `P_N` are in mW, `delta` and `R` in meters.
struct NetworkConfig {
  double delta = 1000.0;  ///< inter-site distance
  double b = 1.5;         ///< amplitude loss exponent, pathloss exponent is 2b
  double a = 1e13;        ///< 130 dB
  double P = 1e6;         ///< 60 dBm
  double P_N = 5.011872336272714e-10;  ///< -93 dBm
  double eta = 1.0;
  double R = 525.037568;  ///< delta * sqrt(sqrt(3) / (2 pi))
  double reuse_v = 1.0;

  /// Throws DomainError on b <= 1, R outside (0, delta), eta outside [0, 1] or reuse_v < 1.
  void validate() const;
  NetworkConfig with_b(double new_b) const {
    NetworkConfig c = *this;
    c.b = new_b;
    return c;
  }
};

/// Position of a site per the ring/region parametrization:
///   D = delta * sqrt(k^2 + j^2 - jk), angle = atan(j sqrt3 / (2k - j)) + l pi / 3.
Location site_position(const SiteIndex& idx, double delta);

/// All 6k sites of rings 1..k_max, ring by ring, region-major within a ring.
std::vector<SiteIndex> enumerate_rings(int k_max);

/// Number of sites in rings 1..k_max: 3 k_max (k_max + 1).
constexpr std::int64_t site_count(int k_max) {
  return 3 * static_cast<std::int64_t>(k_max) * (k_max + 1);
}

/// Angle between the azimuth of sector c (1..3) of `site` and the user:
/// pi (2c - 3) / 3 + arg(m - site). Not reduced modulo 2pi.
/// Throws GeometryError when m coincides with the site.
double sector_angle(const Location& site, const Location& m, int c);

/// Reduce an angle to [0, 2pi).
double normalize_angle(double theta);

/// Reduce an angle to [-pi, pi).
double wrap_to_pi(double theta);

}  // namespace hexisr
