#include "hexisr/scenario.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>

namespace hexisr::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& text) {
  T value{};
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError("'" + text + "' is not a valid number");
  }
  return value;
}

using Setter = std::function<void(Scenario&, const std::string&)>;

template <class T>
Setter number(std::optional<T> Scenario::*field) {
  return [field](Scenario& s, const std::string& v) { s.*field = parse_number<T>(v); };
}

Setter text(std::optional<std::string> Scenario::*field) {
  return [field](Scenario& s, const std::string& v) { s.*field = v; };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"delta_m", number(&Scenario::delta_m)},
      {"cell_radius_m", number(&Scenario::cell_radius_m)},
      {"b", number(&Scenario::b)},
      {"env", text(&Scenario::env)},
      {"a_db", number(&Scenario::a_db)},
      {"power_dbm", number(&Scenario::power_dbm)},
      {"noise_dbm", number(&Scenario::noise_dbm)},
      {"eta", number(&Scenario::eta)},
      {"reuse_v", number(&Scenario::reuse_v)},
      {"traffic", text(&Scenario::traffic)},
      {"mu", number(&Scenario::mu)},
      {"sigma", number(&Scenario::sigma)},
      {"users", number(&Scenario::users)},
      {"rings", number(&Scenario::rings)},
      {"seed", number(&Scenario::seed)},
      {"inverse", text(&Scenario::inverse)},
      {"mask", text(&Scenario::mask)},
      {"beamwidth_deg", number(&Scenario::beamwidth_deg)},
      {"max_attenuation_db", number(&Scenario::max_attenuation_db)},
      {"shadowing_sigma_db", number(&Scenario::shadowing_sigma_db)},
      {"output", text(&Scenario::output)},
  };
  return table;
}

template <class T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

}  // namespace

void Scenario::overlay(const Scenario& top) {
  take(delta_m, top.delta_m);
  take(cell_radius_m, top.cell_radius_m);
  take(b, top.b);
  take(env, top.env);
  take(a_db, top.a_db);
  take(power_dbm, top.power_dbm);
  take(noise_dbm, top.noise_dbm);
  take(eta, top.eta);
  take(reuse_v, top.reuse_v);
  take(traffic, top.traffic);
  take(mu, top.mu);
  take(sigma, top.sigma);
  take(users, top.users);
  take(rings, top.rings);
  take(seed, top.seed);
  take(inverse, top.inverse);
  take(mask, top.mask);
  take(beamwidth_deg, top.beamwidth_deg);
  take(max_attenuation_db, top.max_attenuation_db);
  take(shadowing_sigma_db, top.shadowing_sigma_db);
  take(output, top.output);
}

Scenario parse_scenario(std::istream& in, const std::string& source) {
  Scenario scenario;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(where + "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw UsageError(where + "unknown key '" + key + "'");
    }
    if (!seen.insert(key).second) {
      throw UsageError(where + "duplicate key '" + key + "'");
    }
    if (value.empty()) {
      throw UsageError(where + "missing value for '" + key + "'");
    }
    try {
      it->second(scenario, value);
    } catch (const UsageError& e) {
      throw UsageError(where + key + ": " + e.what());
    }
  }
  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read scenario file " + path.string());
  }
  return parse_scenario(in, path.string());
}

}  // namespace hexisr::cli
