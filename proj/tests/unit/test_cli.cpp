#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hexisr/cli.hpp"
#include "hexisr/isr_omni.hpp"
#include "hexisr/scenario.hpp"

using hexisr::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

// value of a `# key=value` comment line
std::string comment_value(const std::string& text, const std::string& key) {
  const std::string tag = "# " + key + "=";
  const auto pos = text.find(tag);
  if (pos == std::string::npos) return {};
  const auto end = text.find('\n', pos);
  return text.substr(pos + tag.size(), end - pos - tag.size());
}

// sinr_db -> ccdf for the rows tagged `source`
std::map<double, double> ccdf_rows(const std::string& text, const std::string& source = {}) {
  std::map<double, double> rows;
  for (const auto& line : data_lines(text)) {
    const auto c = split(line);
    if (c[0] == "sinr_db") continue;
    if (!source.empty() && (c.size() < 3 || c[2] != source)) continue;
    rows[std::stod(c[0])] = std::stod(c[1]);
  }
  return rows;
}

double median_db(const std::map<double, double>& ccdf) {
  double prev_y = 0.0, prev_p = 1.0;
  for (const auto& [y, p] : ccdf) {
    if (p <= 0.5) return prev_y + (prev_p - 0.5) / (prev_p - p) * (y - prev_y);
    prev_y = y;
    prev_p = p;
  }
  return NAN;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("isr: closed and direct curves agree within 1% (b = 1.4)") {
  const auto r = invoke({"isr", "--method", "closed,direct", "--b", "1.4", "--theta-deg", "0"});
  REQUIRE(r.code == 0);
  const auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 101);
  CHECK(rows[0] == "x,isr,method");
  std::map<std::string, double> closed;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = split(rows[i]);
    if (c[2] == "closed") closed[c[0]] = std::stod(c[1]);
  }
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = split(rows[i]);
    if (c[2] == "direct") worst = std::max(worst, std::abs(closed.at(c[0]) / std::stod(c[1]) - 1.0));
  }
  CHECK(worst <= 0.01);
}

TEST_CASE("isr: k-array baseline errs by more than 20% at the edge (b = 1.4)") {
  const auto k = invoke({"isr", "--method", "karray", "--b", "1.4", "--points", "1"});
  const auto c = invoke({"isr", "--method", "closed", "--b", "1.4", "--points", "1"});
  REQUIRE(k.code == 0);
  REQUIRE(c.code == 0);
  const auto kr = data_lines(k.out), cr = data_lines(c.out);
  CHECK(kr[0] == "x,isr");
  const double kv = std::stod(split(kr[1])[1]), cv = std::stod(split(cr[1])[1]);
  CHECK(std::abs(kv / cv - 1.0) > 0.2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"isr", "--points", "0"}).code == 2);
  CHECK(invoke({"isr", "--method", "bogus"}).code == 2);
  CHECK(invoke({"isr", "--b", "1.0"}).code == 2);
  CHECK(invoke({"isr", "--x-max", "1.2"}).code == 2);
  CHECK(invoke({"isr", "--nope"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"sector", "--method", "fourier"}).code == 2);
  CHECK(invoke({"sector", "--mask", "flat", "--beamwidth-deg", "70"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--mu", "-2"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--traffic", "lognormal", "--mu", "-2"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--env", "custom"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--env", "outdoor", "--a-db", "120"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--inverse", "newton"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--sectorized"}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--eta", "1.5"}).code == 2);
  CHECK(invoke({"misr", "--kappa", "1.0"}).code == 2);
  CHECK(invoke({"misr", "--kappa", "0"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("numeric failure exits with 3") {
  // the harmonic series needs far more terms than the cap when b is huge at x = 0.99
  const auto r = invoke({"isr", "--method", "closed", "--b", "200", "--x-max", "0.99", "--points", "1"});
  CHECK(r.code == 3);
  CHECK(r.err.find("numeric failure") != std::string::npos);
}

TEST_CASE("I/O failures exit with 4") {
  CHECK(invoke({"isr", "--scenario", "/nonexistent/file.scn"}).code == 4);
  CHECK(invoke({"isr", "--points", "2", "--out", "/nonexistent/dir/out.csv"}).code == 4);
  CHECK(invoke({"sector", "--mask", "/nonexistent/mask.txt", "--points", "2"}).code == 4);
  const auto bad_mask = temp_file("hexisr_bad_mask.txt", "0 0\n1 1\n");
  CHECK(invoke({"sector", "--mask", bad_mask.string(), "--points", "2"}).code == 4);
}

TEST_CASE("--out writes the CSV to a file") {
  const auto path = std::filesystem::temp_directory_path() / "hexisr_cli_out.csv";
  std::filesystem::remove(path);
  const auto r = invoke({"isr", "--points", "3", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == invoke({"isr", "--points", "3"}).out);
}

TEST_CASE("scenario files") {
  const auto unknown = temp_file("hexisr_unknown.scn", "b = 1.5\ncolour = blue\n");
  const auto r = invoke({"sinr-ccdf", "--scenario", unknown.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("colour") != std::string::npos);
  CHECK(invoke({"sinr-ccdf", "--scenario", temp_file("hexisr_dup.scn", "b = 1.5\nb = 2\n").string()}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--scenario", temp_file("hexisr_noeq.scn", "b 1.5\n").string()}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--scenario", temp_file("hexisr_num.scn", "b = fast\n").string()}).code == 2);
  CHECK(invoke({"sinr-ccdf", "--scenario", temp_file("hexisr_empty.scn", "b =\n").string()}).code == 2);

  // flags override file keys
  const auto file = temp_file("hexisr_ok.scn", "# comment\nb = 2   # trailing\nenv = indoor\n");
  const auto from_file = invoke({"sinr-ccdf", "--scenario", file.string()});
  REQUIRE(from_file.code == 0);
  CHECK(comment_value(from_file.out, "b") == "2");
  CHECK(comment_value(from_file.out, "a_db") == "166");
  const auto overridden = invoke({"sinr-ccdf", "--scenario", file.string(), "--b", "1.25"});
  CHECK(comment_value(overridden.out, "b") == "1.25");
}

TEST_CASE("the shipped default scenario") {
  const std::string path = std::string(HEXISR_SCENARIO_DIR) + "/default.scn";
  const auto r = invoke({"sinr-ccdf", "--scenario", path});
  REQUIRE(r.code == 0);
  CHECK(comment_value(r.out, "delta_m") == "1000");
  CHECK(std::abs(std::stod(comment_value(r.out, "cell_radius_m")) / 1000.0 - hexisr::equal_area_kappa()) < 1e-9);
  CHECK(comment_value(r.out, "power_dbm") == "60");
  CHECK(comment_value(r.out, "noise_dbm") == "-93");
  CHECK(comment_value(r.out, "eta") == "1");
  CHECK(comment_value(r.out, "a_db") == "130");
  CHECK(comment_value(r.out, "b") == "1.5");
  // the default scenario is the built-in default
  CHECK(r.out == invoke({"sinr-ccdf"}).out);
}

TEST_CASE("sinr-ccdf analytic output schema") {
  const auto r = invoke({"sinr-ccdf", "--from-db", "0", "--to-db", "2", "--step-db", "1"});
  REQUIRE(r.code == 0);
  const auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "sinr_db,ccdf");
  CHECK(split(rows[1])[0] == "0");
  CHECK(split(rows[3])[0] == "2");
}

TEST_CASE("sinr-ccdf: a single simulated user still gives a valid CSV") {
  const auto r = invoke({"sinr-ccdf", "--users", "1", "--simulate", "--rings", "50"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# source=montecarlo\n") != std::string::npos);
  const auto rows = ccdf_rows(r.out);
  REQUIRE(rows.size() == 121);
  int steps = 0;
  double last = 1.0;
  for (const auto& [y, p] : rows) {
    CHECK((p == 0.0 || p == 1.0));
    if (p != last) ++steps;
    last = p;
  }
  CHECK(steps <= 1);
}

TEST_CASE("sinr-ccdf: center hotspot, analytic vs simulated") {
  const auto r = invoke({"sinr-ccdf", "--traffic", "lognormal", "--mu", "-2", "--sigma", "0.5", "--env", "outdoor",
                         "--b", "1.5", "--analytic", "--simulate"});
  REQUIRE(r.code == 0);
  CHECK(ccdf_rows(r.out, "analytic").size() == 121);
  CHECK(ccdf_rows(r.out, "montecarlo").size() == 121);
  CHECK(std::stod(comment_value(r.out, "sup_norm")) <= 0.02);
}

TEST_CASE("sinr-ccdf: indoor median SINR sits 2 to 3 dB below outdoor (b = 2)") {
  const auto out = invoke({"sinr-ccdf", "--env", "outdoor", "--b", "2", "--step-db", "0.1"});
  const auto in = invoke({"sinr-ccdf", "--env", "indoor", "--b", "2", "--step-db", "0.1"});
  REQUIRE(out.code == 0);
  REQUIRE(in.code == 0);
  const double shift = median_db(ccdf_rows(out.out)) - median_db(ccdf_rows(in.out));
  INFO("median shift " << shift << " dB");
  CHECK(shift >= 2.0);
  CHECK(shift <= 3.0);
}

TEST_CASE("sinr-ccdf: sectorized and shadowed simulation runs") {
  const auto sec = invoke({"sinr-ccdf", "--simulate", "--sectorized", "--users", "20", "--rings", "20"});
  CHECK(sec.code == 0);
  CHECK(comment_value(sec.out, "sectorized") == "1");
  const auto sh = invoke({"sinr-ccdf", "--simulate", "--shadowing-db", "6", "--users", "200", "--rings", "50"});
  CHECK(sh.code == 0);
  CHECK(comment_value(sh.out, "shadowing_sigma_db") == "6");
}

TEST_CASE("misr: Monte-Carlo check within 0.5% (b = 2)") {
  const auto r = invoke({"misr", "--b", "2", "--check"});
  REQUIRE(r.code == 0);
  const auto rows = data_lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "b,kappa,misr,mc_mean,rel_gap");
  CHECK(std::stod(split(rows[1])[4]) <= 0.005);
}

TEST_CASE("misr does not depend on the inter-site distance") {
  CHECK(invoke({"misr", "--b", "1.5", "--delta", "500"}).out == invoke({"misr", "--b", "1.5", "--delta", "2000"}).out);
}

TEST_CASE("misr grows with kappa") {
  const auto lo = data_lines(invoke({"misr", "--kappa", "0.5"}).out);
  const auto hi = data_lines(invoke({"misr", "--kappa", "0.577"}).out);
  CHECK(std::stod(split(lo[1])[2]) < std::stod(split(hi[1])[2]));
}

TEST_CASE("output is byte-stable across runs") {
  const std::vector<std::string> args{"sinr-ccdf", "--analytic", "--simulate", "--users", "500", "--rings", "100"};
  CHECK(invoke(args).out == invoke(args).out);
  CHECK(invoke({"sector", "--method", "closed,direct", "--rings", "50", "--points", "5"}).out ==
        invoke({"sector", "--method", "closed,direct", "--rings", "50", "--points", "5"}).out);
}
