#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hexisr/error.hpp"
#include "hexisr/isr_omni.hpp"
#include "hexisr/montecarlo.hpp"
#include "hexisr/reuse_shadow.hpp"
#include "oracle/lattice_oracle.hpp"

using namespace hexisr;
using oracle::rel_err;

namespace {

constexpr double pi = std::numbers::pi;

Location at(double x, double theta, const NetworkConfig& cfg = {}) {
  return Location::polar(x * cfg.delta, theta);
}

}  // namespace

TEST_SUITE("reuse_shadow") {
  TEST_CASE("v = 1 is the plain closed form") {
    NetworkConfig cfg;
    for (double x : {0.1, 0.3, 0.5}) {
      CHECK(isr_reuse(at(x, 0.2), cfg, 1.0) == isr_closed(at(x, 0.2), cfg));
    }
  }

  TEST_CASE("reuse scales the location by 1/sqrt(v)") {
    NetworkConfig cfg;
    for (double v : {3.0, 4.0, 7.0}) {
      const auto m = at(0.5, 0.3);
      const double ref = isr_closed(at(0.5 / std::sqrt(v), 0.3), cfg);
      CHECK(rel_err(isr_reuse(m, cfg, v), ref) <= 1e-15);
    }
  }

  TEST_CASE("large-v asymptote") {
    for (double b : {1.25, 1.5, 2.0}) {
      NetworkConfig cfg;
      cfg.b = b;
      const double x = 0.3, v = 49.0;
      const double asym = 6.0 * omega(b) * std::pow(x, 2.0 * b) / std::pow(v, b);
      CHECK(rel_err(isr_reuse(at(x, 0.0), cfg, v), asym) <= 0.01);
    }
  }

  TEST_CASE("ISR decreases with v and increases with x") {
    NetworkConfig cfg;
    double prev = INFINITY;
    for (double v : {1.0, 3.0, 4.0, 7.0, 9.0, 12.0}) {
      const double f = isr_reuse(at(0.5, 0.1), cfg, v);
      CHECK(f < prev);
      prev = f;
    }
    double last = 0.0;
    for (int i = 1; i <= 50; ++i) {
      const double f = isr_reuse(at(0.6 * i / 50, 0.1), cfg, 3.0);
      CHECK(f > last);
      last = f;
    }
  }

  TEST_CASE("reuse domain") {
    NetworkConfig cfg;
    CHECK_THROWS_AS(isr_reuse(at(0.3, 0.0), cfg, 0.5), DomainError);
    CHECK_NOTHROW(isr_reuse(at(1.5, 0.0), cfg, 3.0));
    CHECK_THROWS_AS(isr_reuse(at(1.8, 0.0), cfg, 3.0), DomainError);
  }

  TEST_CASE("FFR picks the inner reuse up to and including r0") {
    NetworkConfig cfg;
    FfrPattern ffr;
    CHECK_NOTHROW(ffr.validate(cfg));
    CHECK(isr_ffr(Location::polar(ffr.r0, 0.0), cfg, ffr) == isr_reuse(Location::polar(ffr.r0, 0.0), cfg, 1.0));
    CHECK(isr_ffr(Location::polar(ffr.r0 + 1.0, 0.0), cfg, ffr) ==
          isr_reuse(Location::polar(ffr.r0 + 1.0, 0.0), cfg, 3.0));
    // at r0 the outer band cuts the ISR by roughly 3^b
    const double inner = isr_ffr(Location::polar(ffr.r0, 0.0), cfg, ffr);
    const double outer = isr_reuse(Location::polar(ffr.r0, 0.0), cfg, 3.0);
    CHECK(inner / outer == doctest::Approx(std::pow(3.0, cfg.b)).epsilon(0.15));

    FfrPattern same{3.0, 3.0, 200.0};
    CHECK(isr_ffr(at(0.1, 0.0), cfg, same) == isr_reuse(at(0.1, 0.0), cfg, 3.0));
    CHECK(isr_ffr(at(0.4, 0.0), cfg, same) == isr_reuse(at(0.4, 0.0), cfg, 3.0));

    CHECK_THROWS_AS((FfrPattern{3.0, 1.0, 200.0}.validate(cfg)), DomainError);
    CHECK_THROWS_AS((FfrPattern{1.0, 3.0, cfg.R}.validate(cfg)), DomainError);
    CHECK_THROWS_AS((FfrPattern{1.0, 3.0, 0.0}.validate(cfg)), DomainError);
  }

  TEST_CASE("Fenton-Wilkinson moments") {
    NetworkConfig cfg;
    const auto m = at(0.3, 0.4);
    const auto none = shadowed_isr_moments(m, cfg, {});
    CHECK(none.mean == isr_closed(m, cfg));
    CHECK(none.variance == 0.0);

    const auto two = shadowed_isr_moments(m, cfg, {2.0, 0.5});
    CHECK(two.mean == doctest::Approx(2.0 * none.mean).epsilon(1e-15));
    CHECK(two.variance == doctest::Approx(0.5 * isr_closed(m, cfg.with_b(3.0))).epsilon(1e-15));
    CHECK_THROWS_AS(shadowed_isr_moments(m, cfg, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(shadowed_isr_moments(m, cfg, {1.0, -1.0}), DomainError);
  }

  TEST_CASE("shadowing parameters from a dB spread") {
    const auto zero = ShadowingParams::from_sigma_db(0.0);
    CHECK(zero.mean_chi == 1.0);
    CHECK(zero.var_chi == 0.0);
    const auto sh = ShadowingParams::from_sigma_db(6.0);
    const double s = 6.0 * std::log(10.0) / 10.0;
    CHECK(sh.mean_chi == doctest::Approx(std::exp(s * s / 2)).epsilon(1e-14));
    CHECK(sh.var_chi == doctest::Approx((std::exp(s * s) - 1) * std::exp(s * s)).epsilon(1e-14));
    const auto fit = lognormal_from_moments(sh.mean_chi, sh.var_chi);
    CHECK(std::abs(fit.mu) < 1e-14);
    CHECK(fit.sigma == doctest::Approx(s).epsilon(1e-14));
    CHECK_THROWS_AS(ShadowingParams::from_sigma_db(-1.0), DomainError);
  }
}

TEST_SUITE("reuse_shadow.oracle") {
  TEST_CASE("shadowed ISR moments vs the stochastic lattice (sigma 6 dB)") {
    NetworkConfig cfg;
    const auto m = at(0.25, pi / 6);
    const auto sh = ShadowingParams::from_sigma_db(6.0);
    const auto fw = shadowed_isr_moments(m, cfg, sh);
    const ShadowedIsrOracle oracle_sum(cfg, 1000);
    const auto samples = oracle_sum.sample(m, sh, 100000, 12345);
    const auto mom = sample_moments(samples);
    CHECK(rel_err(fw.mean, mom.mean) <= 0.01);
    CHECK(rel_err(fw.variance, mom.variance) <= 0.05);
  }
}
