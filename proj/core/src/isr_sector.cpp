#include "hexisr/isr_sector.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hexisr/error.hpp"

namespace hexisr {

namespace {

constexpr int kZeroIndex = 180;  // sample index of 0 degrees
constexpr int kSimpsonPanels = 1024;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double db_to_linear_loss(double att_db) { return std::pow(10.0, -att_db / 10.0); }

// Angle (degrees, >= 0) at which the attenuation first reaches 3 dB walking
// away from boresight in direction `step`.
double half_beamwidth(const std::array<double, AntennaMask::kSamples>& att, int step) {
  for (int d = 1; d <= 180; ++d) {
    const int i = (kZeroIndex + step * d + AntennaMask::kSamples) % AntennaMask::kSamples;
    const int prev = (kZeroIndex + step * (d - 1) + AntennaMask::kSamples) % AntennaMask::kSamples;
    if (att[static_cast<std::size_t>(i)] >= 3.0) {
      const double lo = att[static_cast<std::size_t>(prev)];
      const double hi = att[static_cast<std::size_t>(i)];
      return (d - 1) + (3.0 - lo) / (hi - lo);
    }
  }
  return 180.0;
}

}  // namespace

AntennaMask AntennaMask::parametric(double beamwidth_deg, double max_attenuation_db) {
  if (!(beamwidth_deg > 0.0 && beamwidth_deg <= 360.0)) {
    throw DomainError("AntennaMask: beamwidth must lie in (0, 360] degrees");
  }
  if (!(max_attenuation_db > 0.0) || !std::isfinite(max_attenuation_db)) {
    throw DomainError("AntennaMask: max attenuation must be finite and > 0");
  }
  AntennaMask mask;
  for (int i = 0; i < kSamples; ++i) {
    const double deg = i - 180.0;
    const double ratio = deg / beamwidth_deg;
    mask.attenuation_[static_cast<std::size_t>(i)] = std::min(12.0 * ratio * ratio, max_attenuation_db);
  }
  mask.finish();
  return mask;
}

AntennaMask AntennaMask::flat() {
  AntennaMask mask;
  mask.finish();
  return mask;
}

AntennaMask AntennaMask::from_samples(std::span<const double> attenuation_db) {
  if (attenuation_db.size() != kSamples) {
    throw FormatError("AntennaMask: expected 360 samples, got " + std::to_string(attenuation_db.size()));
  }
  AntennaMask mask;
  for (int i = 0; i < kSamples; ++i) {
    const double v = attenuation_db[static_cast<std::size_t>(i)];
    if (!std::isfinite(v) || v < 0.0) {
      throw FormatError("AntennaMask: attenuation at " + std::to_string(i - 180) +
                        " deg must be finite and >= 0 dB");
    }
    mask.attenuation_[static_cast<std::size_t>(i)] = v;
  }
  if (mask.attenuation_[kZeroIndex] != 0.0) {
    throw FormatError("AntennaMask: attenuation at boresight (0 deg) must be 0 dB");
  }
  mask.finish();
  return mask;
}

AntennaMask AntennaMask::parse(std::istream& in) {
  std::vector<double> samples(kSamples, 0.0);
  std::vector<bool> seen(kSamples, false);
  std::string line;
  int line_no = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double angle = 0.0;
    double att = 0.0;
    if (!(fields >> angle)) {
      continue;  // blank or comment-only
    }
    std::string extra;
    if (!(fields >> att) || (fields >> extra)) {
      throw FormatError("mask table line " + std::to_string(line_no) + ": expected two columns");
    }
    if (angle != std::round(angle) || angle < -180.0 || angle >= 180.0) {
      throw FormatError("mask table line " + std::to_string(line_no) +
                        ": angle must be an integer degree in [-180, 180)");
    }
    const auto idx = static_cast<std::size_t>(static_cast<int>(angle) + 180);
    if (seen[idx]) {
      throw FormatError("mask table line " + std::to_string(line_no) + ": duplicate angle");
    }
    seen[idx] = true;
    samples[idx] = att;
    ++rows;
  }
  if (rows != kSamples) {
    throw FormatError("mask table: expected 360 rows covering [-180, 180), got " + std::to_string(rows));
  }
  return from_samples(samples);
}

AntennaMask AntennaMask::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open mask table " + path.string());
  }
  return parse(in);
}

void AntennaMask::finish() {
  beamwidth_deg_ = half_beamwidth(attenuation_, +1) + half_beamwidth(attenuation_, -1);
  const double worst = *std::max_element(attenuation_.begin(), attenuation_.end());
  floor_gain_ = db_to_linear_loss(worst);
}

double AntennaMask::attenuation_db(double phi) const {
  const double deg = wrap_to_pi(phi) * kRadToDeg + 180.0;  // [0, 360)
  double whole = std::floor(deg);
  double frac = deg - whole;
  auto i = static_cast<int>(whole);
  if (i >= kSamples) {  // rounding at the upper edge
    i = kSamples - 1;
    frac = 1.0;
  }
  const double lo = attenuation_[static_cast<std::size_t>(i)];
  const double hi = attenuation_[static_cast<std::size_t>((i + 1) % kSamples)];
  return lo + frac * (hi - lo);
}

double AntennaMask::gain(double phi) const {
  return db_to_linear_loss(attenuation_db(phi));
}

double site_mask(const AntennaMask& mask, double phi) {
  constexpr double third = std::numbers::pi / 3.0;
  return mask.gain(phi - third) + mask.gain(phi + third) + mask.gain(phi + std::numbers::pi);
}

SiteMaskCoeffs mask_coeffs(const AntennaMask& mask) {
  const double upper = std::numbers::pi / 3.0;
  const double h = upper / kSimpsonPanels;
  std::array<double, 3> acc{};
  for (int i = 0; i <= kSimpsonPanels; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == kSimpsonPanels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double gs = site_mask(mask, t);
    for (int p = 0; p < 3; ++p) {
      acc[static_cast<std::size_t>(p)] += w * gs * std::cos(3.0 * p * t);
    }
  }
  const double scale = 3.0 / std::numbers::pi * h / 3.0;
  return {acc[0] * scale, acc[1] * scale, acc[2] * scale};
}

SectorIsr::SectorIsr(double b, AntennaMask mask)
    : mask_(std::move(mask)), coeffs_(mask_coeffs(mask_)), omni_(b) {}

double SectorIsr::intrasite(double theta) const {
  const double serving = mask_.gain(theta - std::numbers::pi / 3.0);
  return -1.0 + site_mask(mask_, theta) / serving;
}

double SectorIsr::intersite_weighted(double x, double theta) const {
  const double b = omni_.b();
  const double f = omni_.closed(x, theta);
  if (x == 0.0) {
    return 0.0;
  }
  const std::complex<double> m = std::polar(x, theta);
  double first_ring = 0.0;
  for (int l = 0; l < 6; ++l) {
    const std::complex<double> d = m - std::polar(1.0, l * std::numbers::pi / 3.0);
    first_ring += (d * d * d).real() / std::pow(std::abs(d), 2.0 * b + 3.0);
  }
  return coeffs_.alpha0 * f + 2.0 * coeffs_.alpha1 * std::pow(x, 2.0 * b) * first_ring;
}

double SectorIsr::total(double x, double theta) const {
  const double serving = mask_.gain(theta - std::numbers::pi / 3.0);
  if (!(serving > 0.0)) {
    throw DomainError("isr_trisector: serving mask gain underflowed");
  }
  return intrasite(theta) + intersite_weighted(x, theta) / serving;
}

double isr_trisector(const Location& m, const NetworkConfig& cfg, const AntennaMask& mask) {
  const double x = m.normalized_radius(cfg.delta);
  if (x > kMaxNormalizedRadius) {
    throw DomainError("isr_trisector: |m| / delta must be <= 0.99");
  }
  return SectorIsr(cfg.b, mask).total(x, m.theta());
}

double intersite_sector_isr(const Location& m, const NetworkConfig& cfg, const AntennaMask& mask) {
  const double x = m.normalized_radius(cfg.delta);
  if (x > kMaxNormalizedRadius) {
    throw DomainError("intersite_sector_isr: |m| / delta must be <= 0.99");
  }
  return SectorIsr(cfg.b, mask).intersite_weighted(x, m.theta());
}

}  // namespace hexisr
