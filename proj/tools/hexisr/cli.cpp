#include "hexisr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "hexisr/error.hpp"
#include "hexisr/isr_omni.hpp"
#include "hexisr/isr_sector.hpp"
#include "hexisr/montecarlo.hpp"
#include "hexisr/scenario.hpp"
#include "hexisr/sinr.hpp"
#include "hexisr/units.hpp"

namespace hexisr::cli {

namespace {

constexpr double kOutdoorDb = 130.0;
constexpr double kIndoorDb = 166.0;
constexpr double kDefaultPowerDbm = 60.0;
constexpr double kDefaultNoiseDbm = -93.0;
constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double dbm_to_mw(double dbm) { return db_to_linear(dbm); }

// Scenario file (if any) overlaid with the flags given on the command line.
struct Settings {
  Scenario flags;
  std::string scenario_path;

  Scenario merged() const {
    Scenario s;
    if (!scenario_path.empty()) {
      s = load_scenario(scenario_path);
    }
    s.overlay(flags);
    return s;
  }
};

void add_scenario_flag(CLI::App* app, Settings& st) {
  app->add_option("--scenario", st.scenario_path, "key = value scenario file; flags override it");
  app->add_option("--out", st.flags.output, "write CSV here instead of stdout");
}

void add_network_flags(CLI::App* app, Settings& st) {
  app->add_option("--b", st.flags.b, "amplitude loss exponent b > 1 (pathloss exponent 2b)");
  app->add_option("--delta", st.flags.delta_m, "inter-site distance, meters");
}

void add_mask_flags(CLI::App* app, Settings& st) {
  app->add_option("--mask", st.flags.mask, "parametric | flat | path to a 360-row attenuation table");
  app->add_option("--beamwidth-deg", st.flags.beamwidth_deg, "3 dB beamwidth of the parametric mask");
  app->add_option("--max-att-db", st.flags.max_attenuation_db, "attenuation floor of the parametric mask, dB");
}

NetworkConfig resolve_network(const Scenario& s) {
  NetworkConfig cfg;
  if (s.delta_m) cfg.delta = *s.delta_m;
  cfg.R = s.cell_radius_m ? *s.cell_radius_m : cfg.delta * equal_area_kappa();
  if (s.b) cfg.b = *s.b;
  if (s.eta) cfg.eta = *s.eta;
  if (s.reuse_v) cfg.reuse_v = *s.reuse_v;

  const std::string env = s.env.value_or("outdoor");
  double a_db = kOutdoorDb;
  if (env == "outdoor" || env == "indoor") {
    if (s.a_db) {
      throw UsageError("--a-db is only accepted with --env custom");
    }
    a_db = env == "outdoor" ? kOutdoorDb : kIndoorDb;
  } else if (env == "custom") {
    if (!s.a_db) {
      throw UsageError("--env custom requires --a-db");
    }
    a_db = *s.a_db;
  } else {
    throw UsageError("--env must be outdoor, indoor or custom");
  }
  cfg.a = db_to_linear(a_db);
  cfg.P = dbm_to_mw(s.power_dbm.value_or(kDefaultPowerDbm));
  cfg.P_N = dbm_to_mw(s.noise_dbm.value_or(kDefaultNoiseDbm));
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// Only b matters for the normalized ISR commands.
double resolve_b(const Scenario& s) {
  const double b = s.b.value_or(NetworkConfig{}.b);
  if (!(b > 1.0) || !std::isfinite(b)) {
    throw UsageError("--b must be > 1");
  }
  return b;
}

TrafficModel resolve_traffic(const Scenario& s) {
  const std::string kind = s.traffic.value_or("uniform");
  if (kind == "uniform") {
    if (s.mu || s.sigma) {
      throw UsageError("--mu and --sigma require --traffic lognormal");
    }
    return TrafficModel::uniform();
  }
  if (kind != "lognormal") {
    throw UsageError("--traffic must be uniform or lognormal");
  }
  if (!s.mu || !s.sigma) {
    throw UsageError("--traffic lognormal requires --mu and --sigma");
  }
  const auto t = TrafficModel::lognormal(*s.mu, *s.sigma);
  try {
    t.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return t;
}

AntennaMask resolve_mask(const Scenario& s) {
  const std::string kind = s.mask.value_or("parametric");
  if (kind != "parametric" && (s.beamwidth_deg || s.max_attenuation_db)) {
    throw UsageError("--beamwidth-deg and --max-att-db only apply to --mask parametric");
  }
  if (kind == "parametric") {
    try {
      return AntennaMask::parametric(s.beamwidth_deg.value_or(65.0), s.max_attenuation_db.value_or(25.0));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (kind == "flat") {
    return AntennaMask::flat();
  }
  try {
    return AntennaMask::load(kind);
  } catch (const std::ios_base::failure& e) {
    throw IoError(e.what());
  } catch (const FormatError& e) {
    throw IoError(e.what());
  }
}

int resolve_rings(const Scenario& s) {
  const int rings = s.rings.value_or(1000);
  if (rings < 1) throw UsageError("--rings must be >= 1");
  return rings;
}

std::vector<double> x_grid(double x_max, int points) {
  if (points < 1) throw UsageError("--points must be >= 1");
  if (!(x_max > 0.0 && x_max <= kMaxNormalizedRadius)) {
    throw UsageError("--x-max must lie in (0, 0.99]");
  }
  std::vector<double> xs;
  for (int i = 1; i <= points; ++i) {
    xs.push_back(x_max * i / points);
  }
  return xs;
}

void check_methods(const std::vector<std::string>& methods, const std::vector<std::string>& allowed) {
  if (methods.empty()) throw UsageError("--method needs at least one entry");
  for (const auto& m : methods) {
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
      throw UsageError("unknown method '" + m + "'");
    }
  }
}

using Curve = std::function<double(double)>;

void write_isr_csv(std::ostream& os, const std::vector<double>& xs, const std::vector<std::string>& methods,
                   const std::function<Curve(const std::string&)>& make) {
  const bool tagged = methods.size() > 1;
  os << (tagged ? "x,isr,method\n" : "x,isr\n");
  for (const auto& method : methods) {
    const Curve f = make(method);
    for (double x : xs) {
      os << num(x) << ',' << num(f(x));
      if (tagged) os << ',' << method;
      os << '\n';
    }
  }
}

struct IsrOpts {
  double theta_deg = 0.0;
  double x_max = 1.0 / std::numbers::sqrt3;
  int points = 50;
  std::vector<std::string> methods{"closed"};
  int fourier_terms = 5;
};

void cmd_isr(const Settings& st, const IsrOpts& o, std::ostream& os) {
  const Scenario s = st.merged();
  const double b = resolve_b(s);
  const int rings = resolve_rings(s);
  check_methods(o.methods, {"closed", "fourier", "h0", "order2", "simple", "fluid", "karray", "direct"});
  if (o.fourier_terms < 0) throw UsageError("--fourier-terms must be >= 0");
  const auto xs = x_grid(o.x_max, o.points);
  NetworkConfig cfg;
  if (s.delta_m) cfg.delta = *s.delta_m;
  cfg.b = b;
  cfg.R = cfg.delta * equal_area_kappa();
  const double theta = o.theta_deg * kDegToRad;

  os << "# hexisr isr\n# b=" << num(b) << "\n# theta_deg=" << num(o.theta_deg) << "\n# x_max="
     << num(o.x_max) << "\n# points=" << o.points << "\n# fourier_terms=" << o.fourier_terms
     << "\n# rings=" << rings << '\n';

  const OmniIsr omni(b);
  write_isr_csv(os, xs, o.methods, [&](const std::string& m) -> Curve {
    if (m == "closed") return [&](double x) { return omni.closed(x, theta); };
    if (m == "fourier") return [&](double x) { return omni.fourier(x, theta, o.fourier_terms); };
    if (m == "h0") return [&](double x) { return omni.h0(x); };
    if (m == "order2") return [b](double x) { return isr_order2(x, b); };
    if (m == "simple") return [b](double x) { return isr_simple(x, b); };
    if (m == "fluid") return [b](double x) { return baseline_fluid(x, b); };
    if (m == "karray") return [b](double x) { return baseline_karray(x, b); };
    return [&](double x) { return direct_isr(Location::polar(x * cfg.delta, theta), cfg, rings); };
  });
}

void cmd_sector(const Settings& st, const IsrOpts& o, std::ostream& os) {
  const Scenario s = st.merged();
  const double b = resolve_b(s);
  const int rings = resolve_rings(s);
  check_methods(o.methods, {"closed", "direct"});
  const auto xs = x_grid(o.x_max, o.points);
  const AntennaMask mask = resolve_mask(s);
  NetworkConfig cfg;
  if (s.delta_m) cfg.delta = *s.delta_m;
  cfg.b = b;
  cfg.R = cfg.delta * equal_area_kappa();
  const double theta = o.theta_deg * kDegToRad;

  os << "# hexisr sector\n# b=" << num(b) << "\n# theta_deg=" << num(o.theta_deg) << "\n# x_max="
     << num(o.x_max) << "\n# points=" << o.points << "\n# mask=" << s.mask.value_or("parametric")
     << "\n# mask_beamwidth_deg=" << num(mask.beamwidth_deg()) << "\n# rings=" << rings << '\n';

  const SectorIsr sector(b, mask);
  write_isr_csv(os, xs, o.methods, [&](const std::string& m) -> Curve {
    if (m == "closed") return [&](double x) { return sector.total(x, theta); };
    return [&](double x) { return direct_isr_sector(Location::polar(x * cfg.delta, theta), cfg, mask, rings); };
  });
}

struct CcdfOpts {
  bool analytic = false;
  bool simulate = false;
  bool sectorized = false;
  double from_db = -10.0;
  double to_db = 50.0;
  double step_db = 0.5;
};

void cmd_sinr_ccdf(const Settings& st, const CcdfOpts& o, std::ostream& os) {
  const Scenario s = st.merged();
  const NetworkConfig cfg = resolve_network(s);
  const TrafficModel traffic = resolve_traffic(s);
  const bool simulate = o.simulate;
  const bool analytic = o.analytic || !o.simulate;

  const std::string inverse = s.inverse.value_or("prop3");
  if (inverse != "prop3" && inverse != "bisect") {
    throw UsageError("--inverse must be prop3 or bisect");
  }
  const Inverter inv = inverse == "prop3" ? Inverter::SeriesReversion : Inverter::Bisection;

  SimConfig sim;
  sim.rings = resolve_rings(s);
  sim.n_users = s.users.value_or(sim.n_users);
  sim.seed = s.seed.value_or(sim.seed);
  sim.sectorized = o.sectorized;
  sim.shadowing_sigma_db = s.shadowing_sigma_db;
  if (sim.sectorized) sim.mask = resolve_mask(s);
  if (analytic && (sim.sectorized || sim.shadowing_sigma_db)) {
    throw UsageError("--sectorized and --shadowing-db only apply to a --simulate-only run");
  }
  try {
    sim.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  std::vector<double> grid;
  try {
    grid = sinr_grid(o.from_db, o.to_db, o.step_db);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  os << "# hexisr sinr-ccdf\n# b=" << num(cfg.b) << "\n# delta_m=" << num(cfg.delta)
     << "\n# cell_radius_m=" << num(cfg.R) << "\n# a_db=" << num(linear_to_db(cfg.a))
     << "\n# power_dbm=" << num(linear_to_db(cfg.P)) << "\n# noise_dbm=" << num(linear_to_db(cfg.P_N))
     << "\n# eta=" << num(cfg.eta) << "\n# reuse_v=" << num(cfg.reuse_v) << "\n# traffic="
     << (traffic.kind == TrafficKind::UniformDisk ? "uniform" : "lognormal");
  if (traffic.kind == TrafficKind::LognormalRadius) {
    os << "\n# mu=" << num(traffic.mu) << "\n# sigma=" << num(traffic.sigma);
  }
  if (analytic) os << "\n# inverse=" << inverse;
  if (simulate) {
    os << "\n# users=" << sim.n_users << "\n# rings=" << sim.rings << "\n# seed=" << sim.seed;
    if (sim.sectorized) os << "\n# sectorized=1";
    if (sim.shadowing_sigma_db) os << "\n# shadowing_sigma_db=" << num(*sim.shadowing_sigma_db);
  }
  os << '\n';

  const SinrModel model(cfg);
  if (analytic && !simulate) {
    model.ccdf(grid, traffic, inv).write_csv(os);
    return;
  }
  const EmpiricalCcdf empirical = empirical_sinr_ccdf(cfg, traffic, sim);
  if (!analytic) {
    empirical.write_csv(os, grid);
    return;
  }
  const CcdfCurve curve = model.ccdf(grid, traffic, inv);
  curve.write_csv(os, "analytic", true);
  empirical.evaluate(grid).write_csv(os, "montecarlo", false);
  const double sup = empirical.sup_distance(
      [&](double y) { return traffic.radial_cdf(model.lambda(y, inv), cfg.R, cfg.delta); });
  os << "# sup_norm=" << num(sup) << "\n# sup_norm_on_grid=" << num(empirical.sup_distance(curve)) << '\n';
}

struct MisrOpts {
  std::optional<double> kappa;
  bool check = false;
  int samples = 100000;
};

void cmd_misr(const Settings& st, const MisrOpts& o, std::ostream& os) {
  const Scenario s = st.merged();
  const double b = resolve_b(s);
  const double kappa = o.kappa.value_or(equal_area_kappa());
  if (!(kappa > 0.0 && kappa < 1.0)) throw UsageError("--kappa must lie in (0, 1)");
  if (o.samples < 1) throw UsageError("--samples must be >= 1");
  const std::uint64_t seed = s.seed.value_or(SimConfig{}.seed);

  const double value = misr(b, kappa);
  os << "# hexisr misr\n# b=" << num(b) << "\n# kappa=" << num(kappa) << '\n';
  if (!o.check) {
    os << "b,kappa,misr\n" << num(b) << ',' << num(kappa) << ',' << num(value) << '\n';
    return;
  }
  const double mc = misr_monte_carlo(b, kappa, o.samples, seed);
  os << "# samples=" << o.samples << "\n# seed=" << seed << '\n';
  os << "b,kappa,misr,mc_mean,rel_gap\n"
     << num(b) << ',' << num(kappa) << ',' << num(value) << ',' << num(mc) << ','
     << num(std::abs(mc / value - 1.0)) << '\n';
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path);
  if (!file || !(file << text) || !file.flush()) {
    throw IoError("cannot write " + *path);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interference and SINR in hexagonal cellular networks", "hexisr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hexisr 0.1.0");

  Settings isr_st;
  IsrOpts isr_o;
  auto* isr = app.add_subcommand("isr", "ISR of an omni-directional network along a ray, as CSV");
  add_scenario_flag(isr, isr_st);
  add_network_flags(isr, isr_st);
  isr->add_option("--theta-deg", isr_o.theta_deg, "direction of the ray, degrees");
  isr->add_option("--x-max", isr_o.x_max, "largest |m| / delta (<= 0.99)");
  isr->add_option("--points", isr_o.points, "number of x points in (0, x-max]");
  isr->add_option("--method", isr_o.methods, "closed,fourier,h0,order2,simple,fluid,karray,direct")
      ->delimiter(',');
  isr->add_option("--rings", isr_st.flags.rings, "rings of the direct lattice sum");
  isr->add_option("--fourier-terms", isr_o.fourier_terms, "harmonics of the truncated Fourier series");

  Settings sec_st;
  IsrOpts sec_o;
  auto* sector = app.add_subcommand("sector", "ISR of a tri-sectorized network along a ray, as CSV");
  add_scenario_flag(sector, sec_st);
  add_network_flags(sector, sec_st);
  add_mask_flags(sector, sec_st);
  sector->add_option("--theta-deg", sec_o.theta_deg, "direction of the ray, degrees");
  sector->add_option("--x-max", sec_o.x_max, "largest |m| / delta (<= 0.99)");
  sector->add_option("--points", sec_o.points, "number of x points in (0, x-max]");
  sector->add_option("--method", sec_o.methods, "closed,direct")->delimiter(',');
  sector->add_option("--rings", sec_st.flags.rings, "rings of the direct lattice sum");

  Settings ccdf_st;
  CcdfOpts ccdf_o;
  auto* ccdf = app.add_subcommand("sinr-ccdf", "SINR CCDF over the serving cell, as CSV");
  add_scenario_flag(ccdf, ccdf_st);
  add_network_flags(ccdf, ccdf_st);
  add_mask_flags(ccdf, ccdf_st);
  auto& f = ccdf_st.flags;
  ccdf->add_option("--cell-radius", f.cell_radius_m, "serving-cell radius R, meters (default equal-area disk)");
  ccdf->add_option("--env", f.env, "outdoor (a = 130 dB) | indoor (a = 166 dB) | custom");
  ccdf->add_option("--a-db", f.a_db, "pathloss at 1 km in dB, with --env custom");
  ccdf->add_option("--power-dbm", f.power_dbm, "cell transmit power, dBm (default 60)");
  ccdf->add_option("--noise-dbm", f.noise_dbm, "thermal noise, dBm (default -93)");
  ccdf->add_option("--eta", f.eta, "load of interfering cells in [0, 1]");
  ccdf->add_option("--reuse", f.reuse_v, "frequency reuse factor v >= 1");
  ccdf->add_option("--traffic", f.traffic, "uniform | lognormal");
  ccdf->add_option("--mu", f.mu, "mean of ln(r / delta), lognormal traffic");
  ccdf->add_option("--sigma", f.sigma, "standard deviation of ln(r / delta), lognormal traffic");
  ccdf->add_flag("--analytic", ccdf_o.analytic, "closed-form CCDF (default when --simulate is absent)");
  ccdf->add_flag("--simulate", ccdf_o.simulate, "Monte-Carlo CCDF from the lattice oracle");
  ccdf->add_option("--users", f.users, "simulated users (default 20000)");
  ccdf->add_option("--rings", f.rings, "simulated rings (default 1000)");
  ccdf->add_option("--seed", f.seed, "simulation seed");
  ccdf->add_option("--inverse", f.inverse, "prop3 (closed-form reversion) | bisect (exact root)");
  ccdf->add_option("--from-db", ccdf_o.from_db, "first SINR threshold, dB");
  ccdf->add_option("--to-db", ccdf_o.to_db, "last SINR threshold, dB");
  ccdf->add_option("--step-db", ccdf_o.step_db, "threshold step, dB");
  ccdf->add_flag("--sectorized", ccdf_o.sectorized, "simulate tri-sector sites (slow; --simulate only)");
  ccdf->add_option("--shadowing-db", f.shadowing_sigma_db,
                   "Log-normal shadowing spread in dB with zero median (--simulate only)");

  Settings misr_st;
  MisrOpts misr_o;
  auto* misr_cmd = app.add_subcommand("misr", "mean ISR over a disk of radius kappa * delta");
  add_scenario_flag(misr_cmd, misr_st);
  add_network_flags(misr_cmd, misr_st);
  misr_cmd->add_option("--kappa", misr_o.kappa, "disk radius over delta (default equal-area 0.525)");
  misr_cmd->add_flag("--check", misr_o.check, "compare with a Monte-Carlo average of the closed form");
  misr_cmd->add_option("--samples", misr_o.samples, "Monte-Carlo samples for --check");
  misr_cmd->add_option("--seed", misr_st.flags.seed, "Monte-Carlo seed for --check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Settings* st = nullptr;
  std::function<void(std::ostream&)> body;
  if (isr->parsed()) {
    st = &isr_st;
    body = [&](std::ostream& os) { cmd_isr(isr_st, isr_o, os); };
  } else if (sector->parsed()) {
    st = &sec_st;
    body = [&](std::ostream& os) { cmd_sector(sec_st, sec_o, os); };
  } else if (ccdf->parsed()) {
    st = &ccdf_st;
    body = [&](std::ostream& os) { cmd_sinr_ccdf(ccdf_st, ccdf_o, os); };
  } else {
    st = &misr_st;
    body = [&](std::ostream& os) { cmd_misr(misr_st, misr_o, os); };
  }

  try {
    std::ostringstream buffer;
    body(buffer);
    emit(buffer.str(), st->merged().output, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "hexisr: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "hexisr: " << e.what() << '\n';
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "hexisr: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    err << "hexisr: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
}

}  // namespace hexisr::cli
