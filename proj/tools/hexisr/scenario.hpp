#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace hexisr::cli {

/// Bad command line or scenario content; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable file; maps to exit code 4.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every setting a scenario file or the command line may carry. Unset fields
/// fall back to the built-in defaults when the command resolves them.
///
/// File syntax: one `key = value` per line, `#` starts a comment. Keys:
///   delta_m             inter-site distance, meters
///   cell_radius_m       serving-cell radius R, meters (default: equal-area disk)
///   b                   amplitude loss exponent (pathloss exponent 2b)
///   env                 outdoor | indoor | custom
///   a_db                pathloss at 1 km, dB (only with env = custom)
///   power_dbm           cell transmit power, dBm
///   noise_dbm           thermal noise power, dBm
///   eta                 load of the interfering cells, linear in [0, 1]
///   reuse_v             frequency reuse factor, linear >= 1
///   traffic             uniform | lognormal
///   mu, sigma           Log-normal radius parameters of ln(r / delta)
///   users, rings, seed  Monte-Carlo size and seed
///   inverse             prop3 | bisect
///   mask                parametric | flat | path to a 360-row table
///   beamwidth_deg       3 dB beamwidth of the parametric mask, degrees
///   max_attenuation_db  attenuation floor of the parametric mask, dB
///   shadowing_sigma_db  Log-normal shadowing spread, dB
///   output              output CSV path
struct Scenario {
  std::optional<double> delta_m;
  std::optional<double> cell_radius_m;
  std::optional<double> b;
  std::optional<std::string> env;
  std::optional<double> a_db;
  std::optional<double> power_dbm;
  std::optional<double> noise_dbm;
  std::optional<double> eta;
  std::optional<double> reuse_v;
  std::optional<std::string> traffic;
  std::optional<double> mu;
  std::optional<double> sigma;
  std::optional<int> users;
  std::optional<int> rings;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> inverse;
  std::optional<std::string> mask;
  std::optional<double> beamwidth_deg;
  std::optional<double> max_attenuation_db;
  std::optional<double> shadowing_sigma_db;
  std::optional<std::string> output;

  /// Fields set in `top` replace the ones here.
  void overlay(const Scenario& top);
};

/// Throws UsageError naming the line on unknown keys, duplicates or bad values.
Scenario parse_scenario(std::istream& in, const std::string& source = "scenario");

/// Throws IoError if the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace hexisr::cli
