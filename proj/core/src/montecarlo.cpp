#include "hexisr/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "hexisr/error.hpp"
#include "hexisr/rng.hpp"
#include "hexisr/specfun.hpp"

namespace hexisr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// d2 -> d2^-b. Exponents that are multiples of 1/4 go through square roots,
// which is several times faster than pow and just as accurate.
class InversePower {
 public:
  explicit InversePower(double b) {
    const double quarters = 4.0 * b;
    if (quarters == std::round(quarters) && quarters <= 64.0) {
      whole_ = static_cast<int>(quarters) / 4;
      rem_ = static_cast<int>(quarters) % 4;
      fast_ = true;
    }
    b_ = b;
  }

  double operator()(double d2) const {
    if (!fast_) {
      return std::pow(d2, -b_);
    }
    double p = 1.0;
    for (int i = 0; i < whole_; ++i) p *= d2;
    switch (rem_) {
      case 1: p *= std::sqrt(std::sqrt(d2)); break;
      case 2: p *= std::sqrt(d2); break;
      case 3: p *= std::sqrt(d2) * std::sqrt(std::sqrt(d2)); break;
      default: break;
    }
    return 1.0 / p;
  }

 private:
  double b_ = 0.0;
  int whole_ = 0;
  int rem_ = 0;
  bool fast_ = false;
};

// Unit vectors e^{i l pi/3}, l = 0..6. Site (l, k, j) is (k-j) u[l] + j u[l+1].
const std::array<std::complex<double>, 7>& hex_units() {
  static const std::array<std::complex<double>, 7> units = [] {
    std::array<std::complex<double>, 7> u{};
    for (int l = 0; l < 7; ++l) {
      u[static_cast<std::size_t>(l)] = std::polar(1.0, l * std::numbers::pi / 3.0);
    }
    u[6] = u[0];
    return u;
  }();
  return units;
}

template <class F>
void for_each_site_in_ring(int k, F&& f) {
  const auto& u = hex_units();
  for (int l = 0; l < 6; ++l) {
    const auto ul = u[static_cast<std::size_t>(l)];
    const auto un = u[static_cast<std::size_t>(l + 1)];
    for (int j = 0; j < k; ++j) {
      f(static_cast<double>(k - j) * ul + static_cast<double>(j) * un);
    }
  }
}

// Sum of |m - S|^-2b over rings [k_from, k_to], normalized units.
double lattice_interference(std::complex<double> m, int k_from, int k_to, const InversePower& inv) {
  Neumaier total;
  for (int k = k_from; k <= k_to; ++k) {
    Neumaier ring;
    for_each_site_in_ring(k, [&](std::complex<double> s) {
      const double d2 = std::norm(m - s);
      if (d2 == 0.0) {
        throw GeometryError("lattice sum: location coincides with a site");
      }
      ring.add(inv(d2));
    });
    total.add(ring.value());
  }
  return total.value();
}

void require_rings(int rings, const char* what) {
  if (rings < 1) {
    throw DomainError(std::string(what) + ": rings must be >= 1");
  }
}

struct ChiLaw {
  double mean = 1.0;
  double variance = 0.0;
  double mu = 0.0;
  double sigma = 0.0;

  explicit ChiLaw(const ShadowingParams& sh) : mean(sh.mean_chi), variance(sh.var_chi) {
    sh.validate();
    if (variance > 0.0) {
      const auto fit = lognormal_from_moments(mean, variance);
      mu = fit.mu;
      sigma = fit.sigma;
    }
  }

  double draw(Rng& rng) const {
    return variance > 0.0 ? std::exp(mu + sigma * rng.normal()) : mean;
  }
};

constexpr std::uint32_t kShadowingDomain = 1;

}  // namespace

void SimConfig::validate() const {
  if (rings < 1) throw DomainError("SimConfig: rings must be >= 1");
  if (n_users < 1) throw DomainError("SimConfig: n_users must be >= 1");
  if (shadowing_sigma_db && !(*shadowing_sigma_db >= 0.0 && std::isfinite(*shadowing_sigma_db))) {
    throw DomainError("SimConfig: shadowing sigma must be finite and >= 0 dB");
  }
  if (sectorized && shadowing_sigma_db) {
    throw DomainError("SimConfig: shadowing is only simulated for omni-directional sites");
  }
}

EmpiricalCcdf::EmpiricalCcdf(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw DomainError("EmpiricalCcdf: need at least one sample");
  }
  if (std::any_of(samples_.begin(), samples_.end(), [](double v) { return std::isnan(v); })) {
    throw DomainError("EmpiricalCcdf: NaN sample");
  }
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalCcdf::query(double y) const {
  const auto above = samples_.end() - std::upper_bound(samples_.begin(), samples_.end(), y);
  return static_cast<double>(above) / static_cast<double>(samples_.size());
}

double EmpiricalCcdf::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("EmpiricalCcdf::quantile: p must lie in [0, 1]");
  }
  const double pos = p * static_cast<double>(samples_.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, samples_.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0) return samples_[lo];
  return samples_[lo] + frac * (samples_[hi] - samples_[lo]);
}

double EmpiricalCcdf::sup_distance(const std::function<double(double)>& psi) const {
  const auto n = static_cast<double>(samples_.size());
  double worst = 0.0;
  std::size_t i = 0;
  while (i < samples_.size()) {
    std::size_t j = i;
    while (j < samples_.size() && samples_[j] == samples_[i]) ++j;
    const double p = psi(samples_[i]);
    const double before = static_cast<double>(samples_.size() - i) / n;
    const double after = static_cast<double>(samples_.size() - j) / n;
    worst = std::max({worst, std::abs(p - before), std::abs(p - after)});
    i = j;
  }
  return worst;
}

double EmpiricalCcdf::sup_distance(const CcdfCurve& curve) const {
  double worst = 0.0;
  for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
    worst = std::max(worst, std::abs(query(curve.thresholds[i]) - curve.probabilities[i]));
  }
  return worst;
}

CcdfCurve EmpiricalCcdf::evaluate(std::span<const double> y_grid) const {
  CcdfCurve curve;
  curve.thresholds.assign(y_grid.begin(), y_grid.end());
  curve.probabilities.reserve(y_grid.size());
  for (double y : y_grid) {
    curve.probabilities.push_back(query(y));
  }
  return curve;
}

void EmpiricalCcdf::write_csv(std::ostream& out, std::span<const double> y_grid) const {
  out << "# source=montecarlo\n";
  evaluate(y_grid).write_csv(out);
}

double direct_isr(const Location& m, const NetworkConfig& cfg, int rings) {
  cfg.validate();
  require_rings(rings, "direct_isr");
  if (m.r() == 0.0) {
    return 0.0;
  }
  const std::complex<double> x = m.complex() / cfg.delta;
  const double sum = lattice_interference(x, 1, rings, InversePower(cfg.b));
  return std::pow(std::abs(x), 2.0 * cfg.b) * sum;
}

double direct_isr_sector(const Location& m, const NetworkConfig& cfg, const AntennaMask& mask,
                         int rings) {
  cfg.validate();
  require_rings(rings, "direct_isr_sector");
  if (m.r() == 0.0) {
    throw GeometryError("direct_isr_sector: location coincides with the serving site");
  }
  const double theta = m.theta();
  const double serving = mask.gain(theta - std::numbers::pi / 3.0);
  const double intra = -1.0 + site_mask(mask, theta) / serving;

  const std::complex<double> x = m.complex() / cfg.delta;
  const InversePower inv(cfg.b);
  Neumaier total;
  for (int k = 1; k <= rings; ++k) {
    Neumaier ring;
    for_each_site_in_ring(k, [&](std::complex<double> s) {
      const std::complex<double> d = x - s;
      const double d2 = std::norm(d);
      if (d2 == 0.0) {
        throw GeometryError("direct_isr_sector: location coincides with a site");
      }
      ring.add(inv(d2) * site_mask(mask, std::arg(d)));
    });
    total.add(ring.value());
  }
  return intra + std::pow(std::abs(x), 2.0 * cfg.b) * total.value() / serving;
}

LatticeIsrSummer::LatticeIsrSummer(double b, int rings, int near_rings, int order)
    : b_(b), rings_(rings), near_rings_(std::min(near_rings, rings)), order_(order) {
  if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("LatticeIsrSummer: b must be > 1");
  require_rings(rings, "LatticeIsrSummer");
  if (near_rings < 0) throw DomainError("LatticeIsrSummer: near_rings must be >= 0");
  if (order < 0) throw DomainError("LatticeIsrSummer: order must be >= 0");

  coeff_.resize(static_cast<std::size_t>(order + 1));
  coeff_[0] = 1.0;
  for (int p = 1; p <= order; ++p) {
    coeff_[static_cast<std::size_t>(p)] = coeff_[static_cast<std::size_t>(p - 1)] * (b + p - 1) / p;
  }

  const int sums = 2 * order + 1;
  const int harmonics = order / 6 + 1;
  moments_.assign(static_cast<std::size_t>(sums * harmonics), 0.0);
  if (near_rings_ >= rings_) {
    return;
  }

  const InversePower inv(b);
  std::vector<Neumaier> acc(moments_.size());
  std::vector<double> ring(moments_.size());
  std::vector<std::complex<double>> harm(static_cast<std::size_t>(harmonics));
  for (int k = near_rings_ + 1; k <= rings_; ++k) {
    std::fill(ring.begin(), ring.end(), 0.0);
    for_each_site_in_ring(k, [&](std::complex<double> s) {
      const double s2 = std::norm(s);
      const double abs_s = std::sqrt(s2);
      const std::complex<double> e = s / abs_s;
      const std::complex<double> e2 = e * e;
      const std::complex<double> e6 = e2 * e2 * e2;
      harm[0] = 1.0;
      for (int t = 1; t < harmonics; ++t) {
        harm[static_cast<std::size_t>(t)] = harm[static_cast<std::size_t>(t - 1)] * e6;
      }
      double w = inv(s2);
      const double r_inv = 1.0 / abs_s;
      for (int sum = 0; sum < sums; ++sum) {
        for (int t = 0; t < harmonics; ++t) {
          ring[static_cast<std::size_t>(sum * harmonics + t)] += w * harm[static_cast<std::size_t>(t)].real();
        }
        w *= r_inv;
      }
    });
    for (std::size_t i = 0; i < ring.size(); ++i) {
      acc[i].add(ring[i]);
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    moments_[i] = acc[i].value();
  }
}

double LatticeIsrSummer::near_interference(std::complex<double> m) const {
  if (near_rings_ < 1) return 0.0;
  return lattice_interference(m, 1, near_rings_, InversePower(b_));
}

double LatticeIsrSummer::far_interference(std::complex<double> m) const {
  if (near_rings_ >= rings_) return 0.0;
  const int harmonics = order_ / 6 + 1;
  const double r = std::abs(m);
  const double theta = std::arg(m);
  std::vector<double> rpow(static_cast<std::size_t>(2 * order_ + 1), 1.0);
  for (std::size_t i = 1; i < rpow.size(); ++i) rpow[i] = rpow[i - 1] * r;

  double total = 0.0;
  for (int p = 0; p <= order_; ++p) {
    for (int q = p % 6; q <= order_; q += 6) {
      const int t = std::abs(p - q) / 6;
      const double moment = moments_[static_cast<std::size_t>((p + q) * harmonics + t)];
      total += coeff_[static_cast<std::size_t>(p)] * coeff_[static_cast<std::size_t>(q)] *
               rpow[static_cast<std::size_t>(p + q)] * std::cos((p - q) * theta) * moment;
    }
  }
  return total;
}

double LatticeIsrSummer::isr(std::complex<double> m) const {
  const double r = std::abs(m);
  if (r == 0.0) return 0.0;
  if (!(r < 1.0)) throw DomainError("LatticeIsrSummer: |m| must be < 1 in units of delta");
  return std::pow(r, 2.0 * b_) * interference(m);
}

std::vector<Location> sample_users(const TrafficModel& traffic, double R, double delta, int n,
                                   std::uint64_t seed) {
  traffic.validate();
  if (n < 1) throw DomainError("sample_users: n must be >= 1");
  if (!(R > 0.0) || !(delta > 0.0)) throw DomainError("sample_users: R and delta must be > 0");

  double trunc = 1.0;
  if (traffic.kind == TrafficKind::LognormalRadius) {
    trunc = specfun::std_normal_cdf((std::log(R / delta) - traffic.mu) / traffic.sigma);
  }
  std::vector<Location> users;
  users.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    const double u = rng.uniform();
    const double theta = kTwoPi * rng.uniform();
    double r = 0.0;
    if (traffic.kind == TrafficKind::UniformDisk) {
      r = R * std::sqrt(u);
    } else {
      r = delta * std::exp(traffic.mu + traffic.sigma * specfun::std_normal_quantile(u * trunc));
      r = std::min(r, R);
    }
    users.push_back(Location::polar(r, theta));
  }
  return users;
}

std::vector<double> simulate_sinr(const NetworkConfig& cfg, const TrafficModel& traffic,
                                  const SimConfig& sim) {
  cfg.validate();
  sim.validate();
  const auto users = sample_users(traffic, cfg.R, cfg.delta, sim.n_users, sim.seed);
  const double y0v = y0(cfg);
  const double scale = std::sqrt(cfg.reuse_v);
  std::vector<double> sinr;
  sinr.reserve(users.size());

  if (sim.sectorized) {
    // The sector layout repeats every 2pi/3, so every user is rotated into the
    // sector whose boresight points at pi/3.
    constexpr double kSectorSpan = kTwoPi / 3.0;
    NetworkConfig co = cfg;
    co.delta = cfg.delta * scale;
    for (const auto& m : users) {
      const double theta = std::fmod(m.theta(), kSectorSpan);
      const Location rotated = Location::polar(m.r(), theta);
      const double serving = sim.mask.gain(theta - std::numbers::pi / 3.0);
      const double f = direct_isr_sector(rotated, co, sim.mask, sim.rings);
      const double x = m.normalized_radius(cfg.delta);
      sinr.push_back(1.0 / (cfg.eta * f + y0v * std::pow(x, 2.0 * cfg.b) / serving));
    }
    return sinr;
  }

  const LatticeIsrSummer summer(cfg.b, sim.rings);
  std::optional<ShadowedIsrOracle> shadowed;
  std::optional<ShadowingParams> sh;
  if (sim.shadowing_sigma_db) {
    sh = ShadowingParams::from_sigma_db(*sim.shadowing_sigma_db);
    NetworkConfig co = cfg;
    co.delta = cfg.delta * scale;
    shadowed.emplace(co, sim.rings);
  }
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& m = users[i];
    const double x = m.normalized_radius(cfg.delta);
    double f = 0.0;
    if (!shadowed) {
      f = summer.isr(m.complex() / (cfg.delta * scale));
    } else if (x > 0.0) {
      // a separate stream family keeps the fading draws independent of the position draws
      const std::uint64_t user_seed = Rng::stream(sim.seed, i, kShadowingDomain)();
      f = shadowed->sample(m, *sh, 1, user_seed).front();
    }
    sinr.push_back(1.0 / (cfg.eta * f + y0v * std::pow(x, 2.0 * cfg.b)));
  }
  return sinr;
}

EmpiricalCcdf empirical_sinr_ccdf(const NetworkConfig& cfg, const TrafficModel& traffic,
                                  const SimConfig& sim) {
  return EmpiricalCcdf(simulate_sinr(cfg, traffic, sim));
}

ShadowedIsrOracle::ShadowedIsrOracle(const NetworkConfig& cfg, int rings, int near_rings)
    : cfg_(cfg),
      near_rings_(std::min(near_rings, rings)),
      summer_b_(cfg.b, rings, near_rings),
      summer_2b_(2.0 * cfg.b, rings, near_rings) {
  cfg_.validate();
}

std::vector<double> ShadowedIsrOracle::sample(const Location& m, const ShadowingParams& sh, int trials,
                                              std::uint64_t seed) const {
  if (trials < 1) throw DomainError("ShadowedIsrOracle: trials must be >= 1");
  const ChiLaw chi(sh);
  const std::complex<double> x = m.complex() / cfg_.delta;
  const double r = std::abs(x);
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("ShadowedIsrOracle: need 0 < |m| < delta");
  }
  const double b = cfg_.b;
  const InversePower inv(b);
  std::vector<double> near;
  for (int k = 1; k <= near_rings_; ++k) {
    for_each_site_in_ring(k, [&](std::complex<double> s) { near.push_back(std::pow(r, 2.0 * b) * inv(std::norm(x - s))); });
  }
  const double far_mean = chi.mean * std::pow(r, 2.0 * b) * summer_b_.far_interference(x);
  const double far_sd = std::sqrt(chi.variance * std::pow(r, 4.0 * b) * summer_2b_.far_interference(x));

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    auto rng = Rng::stream(seed, static_cast<std::uint64_t>(t));
    double acc = 0.0;
    for (double w : near) acc += w * chi.draw(rng);
    if (far_sd > 0.0) acc += far_sd * rng.normal();
    out.push_back(acc + far_mean);
  }
  return out;
}

double misr_monte_carlo(double b, double kappa, int n, std::uint64_t seed) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("misr_monte_carlo: kappa must lie in (0, 1)");
  if (n < 1) throw DomainError("misr_monte_carlo: n must be >= 1");
  const OmniIsr omni(b);
  Neumaier acc;
  for (int i = 0; i < n; ++i) {
    auto rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
    const double r = kappa * std::sqrt(rng.uniform());
    acc.add(omni.closed(r, kTwoPi * rng.uniform()));
  }
  return acc.value() / n;
}

SampleMoments sample_moments(std::span<const double> xs) {
  if (xs.size() < 2) throw DomainError("sample_moments: need at least two samples");
  const auto n = static_cast<double>(xs.size());
  Neumaier s;
  for (double v : xs) s.add(v);
  const double mean = s.value() / n;
  Neumaier m2;
  Neumaier m4;
  for (double v : xs) {
    const double d2 = (v - mean) * (v - mean);
    m2.add(d2);
    m4.add(d2 * d2);
  }
  const double var = m2.value() / (n - 1.0);
  const double mu4 = m4.value() / n;
  SampleMoments out;
  out.mean = mean;
  out.variance = var;
  out.mean_stderr = std::sqrt(var / n);
  out.variance_stderr = std::sqrt(std::max(0.0, mu4 - var * var) / n);
  return out;
}

}  // namespace hexisr
