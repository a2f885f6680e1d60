// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "novlab/char_solver.hpp"
#include "novlab/config.hpp"
#include "novlab/io.hpp"
#include "novlab/kinematics.hpp"

using namespace novlab;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "novlab_test_io";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("config defaults echo and round-trip") {
  const RunConfig def;
  const std::string echo = echo_config(def);
  const RunConfig back = parse_config_text(echo);
  CHECK(echo_config(back) == echo);
  CHECK(back.grid.n == 4096);
  CHECK(back.u0.amplitude == -1.2);
  CHECK(back.time.dt == 1e-3);
}

TEST_CASE("config overrides parse") {
  const std::string text = R"([u0]
preset = "gaussian"
amplitude = -0.5
# comment
[grid]
N = 128
L = 10.0
[time]
dt = 0.002
)";
  const RunConfig cfg = parse_config_text(text);
  CHECK(cfg.u0.amplitude == -0.5);
  CHECK(cfg.grid.n == 128);
  CHECK(cfg.grid.half_width == 10.0);
  CHECK(cfg.time.dt == 0.002);
  CHECK(cfg.time.t_end == 5.0);  // untouched default
}

TEST_CASE("unknown keys and malformed values are rejected") {
  CHECK_THROWS_AS(parse_config_text("[grid]\nM = 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("[nosuch]\nN = 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("[grid]\nN = twelve\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("[grid]\nN = 8\n"), std::invalid_argument);  // N < 16
  CHECK_THROWS_AS(parse_config_text("[u0]\npreset = gaussian\n"), std::invalid_argument);
}

TEST_CASE("snapshot CSV round-trips bit-exactly") {
  const GaussianProfile u0(-0.7, 0.1, 1.3);
  CharState s = init_from_u0(u0, 5.0, 32);
  s.t = 0.125;
  CharState s2 = s;
  s2.t = 0.25;
  const std::vector<CharState> snaps{s, s2};

  const fs::path path = temp_file("snaps.csv");
  write_snapshots_csv(path.string(), snaps);
  const std::vector<CharState> back = read_snapshots_csv(path.string());
  REQUIRE(back.size() == 2);
  CHECK(back[0].t == s.t);
  CHECK(back[1].t == s2.t);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back[0].Y[i] == s.Y[i]);
    CHECK(back[0].x[i] == s.x[i]);
    CHECK(back[0].u[i] == s.u[i]);
    CHECK(back[0].v[i] == s.v[i]);
    CHECK(back[0].q[i] == s.q[i]);
  }
}

TEST_CASE("order report JSON carries exact rational strings") {
  SingularPointConfig<Rational> cfg(Model::Novikov,
                                    pi_plus([] {
                                      Jet<Rational> off(12);
                                      off[1] = 1;
                                      return off;
                                    }()),
                                    Jet<Rational>::constant(12, 1));
  const OrderReport<Rational> rep = orders(cfg);
  const auto j = nlohmann::json::parse(order_report_to_json(rep));
  CHECK(j["model"] == "novikov");
  CHECK(j["ord_u"] == 4);
  CHECK(j["ord_x"] == 5);
  CHECK(j["exponent"] == "4/5");
  CHECK(j["lead_u"] == "-1/32");
  CHECK(j["lead_x"] == "1/80");
  CHECK(j["paper_claims"]["u_Y4"] == "1/2");
  CHECK(j["oracle_values"]["u_Y4"] == "-3/4");
  CHECK(j["discrepancies"].size() == 2);
}

TEST_CASE("event JSONL uses the pinned keys") {
  SingularEvent e;
  e.t0 = 1.5;
  e.Y0 = 0.25;
  e.x0 = 0.5;
  e.u0 = -0.75;
  e.vY = 2.0;
  e.vYY = 0.125;
  e.type = EventType::TypeII_generic;
  const auto j = nlohmann::json::parse(event_to_json(e));
  CHECK(j["t0"] == 1.5);
  CHECK(j["Y0"] == 0.25);
  CHECK(j["x0"] == 0.5);
  CHECK(j["u0"] == -0.75);
  CHECK(j["vY"] == 2.0);
  CHECK(j["vYY"] == 0.125);
  CHECK(j["type"] == "TypeII_generic");
}

TEST_CASE("g17 formatting round-trips doubles") {
  for (const double v : {1.0 / 3.0, 2.0e-17, -123456.789012345678, 1e-300}) {
    const std::string s = fmt_g17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}
