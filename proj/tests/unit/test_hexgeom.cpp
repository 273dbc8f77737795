#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "hexisr/error.hpp"
#include "hexisr/hexgeom.hpp"

using namespace hexisr;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("hexgeom") {
  TEST_CASE("SiteIndex validity") {
    CHECK(SiteIndex{0, 1, 0}.valid());
    CHECK(SiteIndex{5, 3, 2}.valid());
    CHECK_FALSE(SiteIndex{6, 1, 0}.valid());
    CHECK_FALSE(SiteIndex{0, 0, 0}.valid());
    CHECK_FALSE(SiteIndex{0, 2, 2}.valid());
    CHECK_FALSE(SiteIndex{0, 2, -1}.valid());
  }

  TEST_CASE("Location normalizes angles and caches coordinates") {
    const auto a = Location::polar(2.0, -pi / 2);
    CHECK(a.theta() == doctest::Approx(1.5 * pi));
    CHECK(a.x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(a.y() == doctest::Approx(-2.0));
    const auto b = Location::polar(1.0, 5 * pi);
    CHECK(b.theta() == doctest::Approx(pi));
    const auto c = Location::cartesian(-1.0, 0.0);
    CHECK(c.r() == 1.0);
    CHECK(c.theta() == doctest::Approx(pi));
    CHECK(Location::cartesian(0.0, 0.0).theta() == 0.0);
    CHECK(Location::polar(500.0, 0.3).normalized_radius(1000.0) == 0.5);
    CHECK_THROWS_AS(Location::polar(-1.0, 0.0), DomainError);
    for (double t : {-7.0, -0.1, 0.0, 3.0, 6.3, 100.0}) {
      const double n = normalize_angle(t);
      CHECK(n >= 0.0);
      CHECK(n < 2 * pi);
      const double w = wrap_to_pi(t);
      CHECK(w >= -pi);
      CHECK(w < pi);
    }
  }

  TEST_CASE("NetworkConfig validation") {
    NetworkConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    CHECK_THROWS_AS(cfg.with_b(1.0).validate(), DomainError);
    auto c = cfg;
    c.R = cfg.delta;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = cfg;
    c.eta = 1.5;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = cfg;
    c.reuse_v = 0.5;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = cfg;
    c.eta = 0.0;
    CHECK_NOTHROW(c.validate());
  }

  TEST_CASE("site_position examples") {
    const auto s0 = site_position({0, 1, 0}, 1.0);
    CHECK(s0.r() == doctest::Approx(1.0));
    CHECK(s0.theta() == doctest::Approx(0.0));
    const auto s1 = site_position({0, 2, 1}, 1.0);
    CHECK(s1.r() == doctest::Approx(std::sqrt(3.0)));
    CHECK(s1.theta() == doctest::Approx(pi / 6));
    const auto s2 = site_position({3, 1, 0}, 1.0);
    CHECK(s2.r() == doctest::Approx(1.0));
    CHECK(s2.theta() == doctest::Approx(pi));
    CHECK_THROWS_AS(site_position({0, 1, 1}, 1.0), DomainError);
  }

  TEST_CASE("enumerate_rings counts") {
    CHECK(enumerate_rings(1).size() == 6);
    CHECK(enumerate_rings(2).size() == 18);
    CHECK(site_count(1000) == 3003000);
    CHECK(enumerate_rings(1000).size() == 3003000u);
    CHECK_THROWS_AS(enumerate_rings(0), DomainError);
  }

  TEST_CASE("lattice sites are distinct and at least delta away") {
    const auto sites = enumerate_rings(30);
    std::set<std::pair<long long, long long>> seen;
    for (const auto& idx : sites) {
      REQUIRE(idx.valid());
      const auto p = site_position(idx, 1.0);
      CHECK(p.r() >= 1.0 - 1e-12);
      CHECK(p.r() >= idx.k * std::sqrt(3.0) / 2.0 - 1e-12);
      seen.emplace(std::llround(p.x() * 1e6), std::llround(p.y() * 1e6));
    }
    CHECK(seen.size() == sites.size());
  }

  TEST_CASE("every region holds the same distances") {
    std::multiset<long long> regions[6];
    for (const auto& idx : enumerate_rings(12)) {
      regions[idx.l].insert(std::llround(site_position(idx, 1.0).r() * 1e9));
    }
    for (int l = 1; l < 6; ++l) CHECK(regions[l] == regions[0]);
  }

  TEST_CASE("sector_angle") {
    const auto site = Location::cartesian(1.0, 0.0);
    CHECK(sector_angle(site, Location::cartesian(2.0, 0.0), 2) == doctest::Approx(pi / 3));
    CHECK(sector_angle(site, Location::cartesian(0.0, 0.0), 2) == doctest::Approx(pi / 3 + pi));
    const auto m = Location::cartesian(0.3, -1.7);
    CHECK(sector_angle(site, m, 3) - sector_angle(site, m, 1) == doctest::Approx(4 * pi / 3));
    CHECK_THROWS_AS(sector_angle(site, site, 1), GeometryError);
    CHECK_THROWS_AS(sector_angle(site, m, 4), DomainError);
  }
}
