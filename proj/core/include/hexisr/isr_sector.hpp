#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <span>

#include "hexisr/hexgeom.hpp"
#include "hexisr/isr_omni.hpp"

namespace hexisr {

/// Horizontal mask of one sector relative to its boresight, G(phi) <= 1.
///
/// Stored as attenuation in dB at integer degrees -180..179 and linearly
/// interpolated in dB between samples, wrapping at +-180.
class AntennaMask {
 public:
  static constexpr int kSamples = 360;

  /// G_dB(phi) = -min(12 (phi / beamwidth)^2, max_attenuation): the 3 dB
  /// points sit at +-beamwidth/2 and the backlobe is floored at max_attenuation.
  static AntennaMask parametric(double beamwidth_deg = 65.0, double max_attenuation_db = 25.0);

  /// G = 1 in every direction.
  static AntennaMask flat();

  /// Attenuation samples (dB, >= 0) for angles -180, -179, ..., 179 degrees.
  /// Throws FormatError unless the sample at 0 degrees is 0 dB and all are finite and >= 0.
  static AntennaMask from_samples(std::span<const double> attenuation_db);

  /// Two-column text table `angle_degrees attenuation_dB` (whitespace or comma
  /// separated, `#` comments). Exactly 360 rows covering the integer degrees of [-180, 180).
  static AntennaMask parse(std::istream& in);
  static AntennaMask load(const std::filesystem::path& path);

  /// Linear mask value at phi (radians, any range).
  double gain(double phi) const;
  double attenuation_db(double phi) const;

  /// Full width between the 3 dB points, from the samples.
  double beamwidth_deg() const { return beamwidth_deg_; }
  /// Attenuation at 180 degrees.
  double backlobe_db() const { return attenuation_[0]; }
  /// Smallest linear gain over all directions.
  double floor_gain() const { return floor_gain_; }

 private:
  AntennaMask() = default;
  void finish();

  std::array<double, kSamples> attenuation_{};
  double beamwidth_deg_ = 0.0;
  double floor_gain_ = 1.0;
};

/// Projections of the site mask on cos(3 p theta), p = 0, 1, 2.
/// The closed forms use alpha0 and alpha1 only; alpha2 is reported so callers
/// can check that it is small.
struct SiteMaskCoeffs {
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// Sum of the three collocated sector masks, G(phi - pi/3) + G(phi + pi/3) + G(phi + pi).
double site_mask(const AntennaMask& mask, double phi);

/// alpha_p = 3/pi int_0^{pi/3} G_s(theta) cos(3 p theta) dtheta by composite
/// Simpson with 1024 panels.
SiteMaskCoeffs mask_coeffs(const AntennaMask& mask);

/// Tri-sector ISR for a user served by sector 1 of the central site (boresight
/// at theta = pi/3). Evaluators for one (b, mask) pair; immutable.
class SectorIsr {
 public:
  SectorIsr(double b, AntennaMask mask);

  const AntennaMask& mask() const { return mask_; }
  const SiteMaskCoeffs& coeffs() const { return coeffs_; }
  const OmniIsr& omni() const { return omni_; }

  /// Intra-site part -1 + G_s(theta) / G(theta - pi/3).
  double intrasite(double theta) const;

  /// G(theta - pi/3) times the inter-site ISR, first-ring alpha1 correction:
  ///   alpha0 f + 2 alpha1 x^2b sum_l Re[(x e^{i theta} - e^{i l pi/3})^3] / |x e^{i theta} - e^{i l pi/3}|^(2b+3).
  double intersite_weighted(double x, double theta) const;

  /// Total ISR F = intrasite + intersite_weighted / G(theta - pi/3).
  double total(double x, double theta) const;

 private:
  AntennaMask mask_;
  SiteMaskCoeffs coeffs_;
  OmniIsr omni_;
};

/// Tri-sectorized ISR at m (served by sector 1 of the central site).
double isr_trisector(const Location& m, const NetworkConfig& cfg, const AntennaMask& mask);

/// Inter-site tri-sector ISR weighted by the serving mask, G(theta - pi/3) f_s(m, b).
double intersite_sector_isr(const Location& m, const NetworkConfig& cfg, const AntennaMask& mask);

}  // namespace hexisr
