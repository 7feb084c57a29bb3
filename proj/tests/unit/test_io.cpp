#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "stokeslab/babenko.hpp"
#include "stokeslab/error.hpp"
#include "stokeslab/io.hpp"
#include "stokeslab/singularity.hpp"

using namespace stokeslab;
using namespace stokeslab::io;
namespace fs = std::filesystem;
using babenko::WaveBranch;
using spectral::DepthMode;
using spectral::Grid;
using spectral::PeriodicProfile;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("stokeslab_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path operator/(const std::string& name) const { return path / name; }
};

WaveBranch small_branch(int n = 64, double target = 0.1) {
  babenko::SolverConfig cfg;
  cfg.n = n;
  return babenko::continue_branch(babenko::small_amplitude_seed(n, 0.002, DepthMode::infinite()), target, cfg);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("branch record layout") {
  auto b = small_branch();
  const auto rec = branch_record(b.entries[0]);
  CHECK(rec.find('\n') == std::string::npos);
  auto j = nlohmann::ordered_json::parse(rec);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"s", "c", "N", "mode", "cos_coeffs", "residual_norm", "mean_zero_value",
                                         "crest_gap"});
  CHECK(j["N"] == 64);
  CHECK(j["mode"] == "deep");
  CHECK(j["cos_coeffs"].size() == 32);
}

TEST_CASE("branch round trip") {
  auto b = small_branch();
  auto back = parse_branch(format_branch(b));
  REQUIRE(back.size() == b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto& x = b.entries[i];
    const auto& y = back.entries[i];
    CHECK(x.height == y.height);
    CHECK(x.state.speed == y.state.speed);
    CHECK(x.cos_coeffs == y.cos_coeffs);
    CHECK(max_difference(x.state.profile, y.state.profile) <= 1e-14);
    CHECK(x.diagnostics.crest_gap == y.diagnostics.crest_gap);
    CHECK(x.diagnostics.tail_fraction == doctest::Approx(y.diagnostics.tail_fraction).epsilon(1e-12));
  }
  CHECK(format_branch(back) == format_branch(b));

  TempDir dir;
  store_branch(b, dir / "b.jsonl");
  CHECK(slurp(dir / "b.jsonl") == format_branch(b));
  CHECK(format_branch(load_branch(dir / "b.jsonl")) == format_branch(b));
}

TEST_CASE("finite depth mode survives the file") {
  babenko::SolverConfig cfg;
  cfg.n = 32;
  auto b = babenko::continue_branch(babenko::small_amplitude_seed(32, 0.002, DepthMode::finite(1.5)), 0.01, cfg);
  auto back = parse_branch(format_branch(b));
  CHECK(back.entries.back().state.mode == DepthMode::finite(1.5));
}

TEST_CASE("empty and blank files") {
  CHECK(parse_branch("").empty());
  CHECK(parse_branch("\n\n  \n").empty());
}

TEST_CASE("malformed records report their line") {
  auto b = small_branch();
  const auto good = format_branch(b);
  const auto first = good.substr(0, good.find('\n') + 1);
  const auto truncated = first + first.substr(0, first.size() / 2) + "\n";
  try {
    parse_branch(truncated);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  auto j = nlohmann::ordered_json::parse(branch_record(b.entries[0]));
  for (const char* key : {"s", "c", "N", "mode", "cos_coeffs"}) {
    auto k = j;
    k.erase(key);
    CHECK_THROWS_AS(parse_branch_record(k.dump(), 1), ParseError);
  }
  auto wrong = j;
  wrong["N"] = 128;
  CHECK_THROWS_AS(parse_branch_record(wrong.dump(), 1), ParseError);
  wrong = j;
  wrong["mode"] = "shallow";
  CHECK_THROWS_AS(parse_branch_record(wrong.dump(), 1), ParseError);
  wrong = j;
  wrong["c"] = "fast";
  CHECK_THROWS_AS(parse_branch_record(wrong.dump(), 1), ParseError);
  CHECK_THROWS_AS(parse_branch_record("[1,2]", 1), ParseError);

  auto other = small_branch(32, 0.01);
  CHECK_THROWS_AS(parse_branch(first + format_branch(other)), ParseError);
}

TEST_CASE("missing file") {
  TempDir dir;
  CHECK_THROWS_AS(load_branch(dir / "nope.jsonl"), IoError);
  CHECK_THROWS_AS(read_csv(dir / "nope.csv"), IoError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  for (double v : {M_PI, -1e-300, 6.02e23, 5e-324}) CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
}

TEST_CASE("CSV round trip") {
  CsvTable t{{"a", "b"}, {{1.0, -2.5}, {M_PI, 1e-17}, {std::numeric_limits<double>::quiet_NaN(), 3.0}}};
  auto back = parse_csv(format_csv(t));
  CHECK(back.header == t.header);
  REQUIRE(back.rows.size() == 3);
  CHECK(back.rows[1][0] == M_PI);
  CHECK(back.rows[1][1] == 1e-17);
  CHECK(std::isnan(back.rows[2][0]));
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_csv("a,b\n1,x\n"), ParseError);

  TempDir dir;
  auto p = PeriodicProfile::from_function(Grid(32), [](double u) { return std::cos(u) + 0.1 * std::cos(3 * u); });
  write_profile_csv(p, dir / "p.csv");
  CHECK(slurp(dir / "p.csv").rfind("u,value\n", 0) == 0);
  CHECK(max_difference(read_profile_csv(dir / "p.csv"), p) == 0.0);
}

TEST_CASE("plot export") {
  TempDir dir;
  auto b = small_branch();
  auto files = export_plot_data(b, dir.path);
  CHECK(files.size() == 2 * b.size());
  CHECK(indexed_name("profile", 7) == "profile_0007.csv");
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(fs::exists(dir / indexed_name("profile", i)));
    CHECK(fs::exists(dir / indexed_name("surface", i)));
  }
  auto surf = read_csv(dir / indexed_name("surface", 0));
  CHECK(surf.header == std::vector<std::string>{"x", "y"});
  CHECK(surf.rows.size() == 64);

  WaveBranch flat;
  flat.entries.push_back({0.0, {PeriodicProfile::constant(Grid(64), 0.0), 1.0, DepthMode::infinite()},
                          std::vector<double>(32, 0.0), {}});
  TempDir d2;
  export_plot_data(flat, d2.path);
  for (const auto& row : read_csv(d2 / "surface_0000.csv").rows) CHECK(row[1] == 0.0);
  CHECK_THROWS_AS(export_plot_data(WaveBranch{}, d2.path), InvalidArgument);

  WaveBranch toy;
  toy.entries.push_back({0.0, {PeriodicProfile::constant(Grid(16), 0.0), 1.0, DepthMode::toy()},
                         std::vector<double>(8, 0.0), {}});
  TempDir d3;
  CHECK(export_plot_data(toy, d3.path).size() == 1);
}

TEST_CASE("fit CSV matches the reported residual") {
  TempDir dir;
  auto prof = PeriodicProfile::from_function(Grid(2048), [](double u) {
    return 0.5 - 0.8 * std::pow(std::abs(u), 0.7) - 0.1 * u * u;
  });
  auto fit = singularity::crest_fit_about(prof, 0.5);
  write_fit_csv(prof, 0.5, fit, dir / "fit.csv");
  auto t = read_csv(dir / "fit.csv");
  CHECK(t.header == std::vector<std::string>{"u", "deviation", "model", "residual"});
  REQUIRE(static_cast<int>(t.rows.size()) == fit.points);
  double acc = 0.0;
  for (const auto& r : t.rows) acc += r[3] * r[3];
  CHECK(std::abs(std::sqrt(acc / static_cast<double>(t.rows.size())) - fit.rms_residual) <= 1e-12);
}

TEST_CASE("report JSON") {
  auto e = to_json(singularity::find_exponents());
  CHECK(e["beta_root"].get<double>() == doctest::Approx(2.0 / 3.0));
  singularity::SingularityFit f;
  f.A = 1.0;
  f.beta = 0.5;
  CHECK(to_json(f)["B"].is_null());
  f.B = 2.0;
  f.mu = 1.5;
  CHECK(to_json(f)["mu"] == 1.5);
}

TEST_CASE("command names") {
  CHECK(parse_command("solve") == Command::solve);
  CHECK(parse_command("continue") == Command::extend);
  CHECK(parse_command("analyze") == Command::analyze);
  CHECK(parse_command("verify") == Command::verify);
  CHECK_THROWS_AS(parse_command("plot"), ConfigError);
}

TEST_CASE("run configuration checks") {
  RunConfig c;
  c.command = Command::solve;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.out = "x.jsonl";
  CHECK_NOTHROW(c.validate());
  c.n = 7;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = RunConfig{};
  c.command = Command::extend;
  c.branch = "b.jsonl";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.command = Command::analyze;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.command = Command::verify;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("solve, continue and analyze through run") {
  TempDir dir;
  std::ostringstream log;
  RunConfig solve;
  solve.command = Command::solve;
  solve.n = 128;
  solve.height = 0.002;
  solve.out = dir / "one.jsonl";
  run(solve, log);
  auto one = load_branch(solve.out);
  REQUIRE(one.size() == 1);
  CHECK(one.entries[0].state.speed == doctest::Approx(1.0 + 0.002 * 0.002 / 8).epsilon(1e-9));

  RunConfig cont;
  cont.command = Command::extend;
  cont.n = 128;
  cont.branch = dir / "b.jsonl";
  cont.to_height = 0.1;
  run(cont, log);
  const auto first = slurp(cont.branch);
  cont.to_height = 0.3;
  run(cont, log);
  const auto second = slurp(cont.branch);
  CHECK(second.rfind(first, 0) == 0);
  CHECK(load_branch(cont.branch).entries.back().height == 0.3);

  cont.to_height = 0.2;
  CHECK_THROWS_AS(run(cont, log), InvalidArgument);
  CHECK(slurp(cont.branch) == second);
  cont.to_height = 0.5;
  cont.n = 256;
  CHECK_THROWS_AS(run(cont, log), ConfigError);
  cont.n.reset();
  cont.mode = DepthMode::toy();
  CHECK_THROWS_AS(run(cont, log), ConfigError);
  CHECK(slurp(cont.branch) == second);

  RunConfig an;
  an.command = Command::analyze;
  an.branch = cont.branch;
  an.out = dir / "fits.csv";
  run(an, log);
  auto t = read_csv(an.out);
  CHECK(t.header == std::vector<std::string>{"s", "c", "crest_gap", "beta", "A", "rms", "crest_angle_deg"});
  CHECK(t.rows.size() == load_branch(cont.branch).size());

  an.subleading = true;
  an.export_dir = dir / "plots";
  run(an, log);
  t = read_csv(an.out);
  CHECK(t.header.size() == 9);
  CHECK(fs::exists(dir / "plots" / "profile_0000.csv"));
}

TEST_CASE("resumed file equals a single run") {
  TempDir dir;
  std::ostringstream log;
  RunConfig full;
  full.command = Command::extend;
  full.n = 64;
  full.branch = dir / "full.jsonl";
  full.to_height = 0.3;
  run(full, log);
  auto states = load_branch(full.branch);
  REQUIRE(states.size() > 4);

  RunConfig part = full;
  part.branch = dir / "part.jsonl";
  part.to_height = states.entries[3].height;
  run(part, log);
  part.to_height = 0.3;
  run(part, log);
  CHECK(slurp(part.branch) == slurp(full.branch));
}

TEST_CASE("verify writes a report") {
  TempDir dir;
  std::ostringstream log;
  RunConfig v;
  v.command = Command::verify;
  v.n = 4096;
  v.out = dir / "verify.json";
  run(v, log);
  auto j = nlohmann::json::parse(slurp(v.out));
  for (const char* key : {"exponents", "lemmas", "action", "log_case", "cancellation"}) CHECK(j.contains(key));
  CHECK(j["exponents"]["beta_root"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(j["lemmas"].size() == 6);
  CHECK(log.str().find("grant root") != std::string::npos);
}

}  // TEST_SUITE
