#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hexisr/hexgeom.hpp"
#include "hexisr/isr_sector.hpp"
#include "hexisr/reuse_shadow.hpp"
#include "hexisr/sinr.hpp"

namespace hexisr {

/// Simulation size and switches for the lattice oracle.
struct SimConfig {
  int rings = 1000;
  int n_users = 20000;
  std::uint64_t seed = 12345;
  bool sectorized = false;
  /// Mask used when `sectorized` is set.
  AntennaMask mask = AntennaMask::parametric();
  /// Log-normal shadowing with the given dB spread on every interferer.
  std::optional<double> shadowing_sigma_db;

  /// Throws DomainError unless rings >= 1, n_users >= 1 and sigma_db >= 0.
  void validate() const;
};

/// Empirical CCDF of a sample set: query(y) is the fraction of samples > y.
class EmpiricalCcdf {
 public:
  explicit EmpiricalCcdf(std::vector<double> samples);

  const std::vector<double>& sorted_samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double query(double y) const;

  /// Sample quantile in the lower-interpolated sense (0 <= p <= 1).
  double quantile(double p) const;

  /// Exact sup_y |query(y) - psi(y)| for a continuous psi, checked on both
  /// sides of every jump.
  double sup_distance(const std::function<double(double)>& psi) const;

  /// Largest gap to an analytic curve restricted to its thresholds.
  double sup_distance(const CcdfCurve& curve) const;

  CcdfCurve evaluate(std::span<const double> y_grid) const;

  /// Same schema as CcdfCurve, preceded by a `# source=montecarlo` line.
  void write_csv(std::ostream& out, std::span<const double> y_grid) const;

 private:
  std::vector<double> samples_;
};

/// Literal lattice ISR sum(|m| / |m - S|)^2b over rings 1..rings, summed ring by
/// ring in ascending order with compensated addition. Returns 0 at the origin.
/// Throws GeometryError if m coincides with a site, DomainError for rings < 1.
double direct_isr(const Location& m, const NetworkConfig& cfg, int rings);

/// Literal sectorized ISR: intra-site term plus the full lattice sum weighted
/// by the site mask, normalized by the serving sector gain G(theta - pi/3).
double direct_isr_sector(const Location& m, const NetworkConfig& cfg, const AntennaMask& mask,
                         int rings);

/// Fast evaluator of sum |m - S|^-2b over a fixed ring count, for normalized
/// positions |m| < 1.
///
/// Rings up to `near_rings` are summed term by term. The rest use the
/// expansion |S - m|^-2b = |S|^-2b (1 - m/S)^-b (1 - conj(m/S))^-b,
/// collapsed onto precomputed lattice moments, which is exact to rounding
/// for |m| / |S| below 0.03.
class LatticeIsrSummer {
 public:
  LatticeIsrSummer(double b, int rings, int near_rings = 40, int order = 12);

  double b() const { return b_; }
  int rings() const { return rings_; }

  double near_interference(std::complex<double> m) const;
  double far_interference(std::complex<double> m) const;
  double interference(std::complex<double> m) const {
    return near_interference(m) + far_interference(m);
  }
  /// |m|^2b * interference(m).
  double isr(std::complex<double> m) const;

 private:
  double b_;
  int rings_;
  int near_rings_;
  int order_;
  std::vector<double> coeff_;             // (b)_p / p!
  std::vector<double> moments_;           // indexed [p + q][|p - q| / 6]
};

/// i.i.d. user locations. Radius r = R sqrt(u) for UniformDisk, truncated
/// inverse CDF for LognormalRadius; theta uniform in [0, 2pi). User i draws
/// from its own stream of `seed`.
std::vector<Location> sample_users(const TrafficModel& traffic, double R, double delta, int n,
                                   std::uint64_t seed);

/// Per-user SINR with the full theta-dependent lattice ISR (equal loads).
std::vector<double> simulate_sinr(const NetworkConfig& cfg, const TrafficModel& traffic,
                                  const SimConfig& sim);

EmpiricalCcdf empirical_sinr_ccdf(const NetworkConfig& cfg, const TrafficModel& traffic,
                                  const SimConfig& sim);

/// Samples of the shadowed ISR sum(|m| / |m - S|)^2b chi_S at one location.
///
/// Interferers up to `near_rings` get their own Log-normal chi. The remaining
/// rings enter through a normal variable with the exact mean and variance of
/// their aggregate, so the first two moments of every sample stay exact.
class ShadowedIsrOracle {
 public:
  ShadowedIsrOracle(const NetworkConfig& cfg, int rings, int near_rings = 10);

  std::vector<double> sample(const Location& m, const ShadowingParams& sh, int trials,
                             std::uint64_t seed) const;

 private:
  NetworkConfig cfg_;
  int near_rings_;
  LatticeIsrSummer summer_b_;
  LatticeIsrSummer summer_2b_;
};

/// Sample mean of isr_closed over a uniform disk of normalized radius kappa.
double misr_monte_carlo(double b, double kappa, int n, std::uint64_t seed);

/// Arithmetic mean and unbiased variance with their standard errors.
struct SampleMoments {
  double mean = 0.0;
  double variance = 0.0;
  double mean_stderr = 0.0;
  double variance_stderr = 0.0;
};
SampleMoments sample_moments(std::span<const double> xs);

}  // namespace hexisr
