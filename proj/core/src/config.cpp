// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "novlab/io.hpp"

namespace novlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for '" + key + "': " + v);
  }
}

int parse_int(const std::string& v, const std::string& key) {
  const double d = parse_number(v, key);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw std::invalid_argument("config: '" + key + "' must be an integer");
  return i;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("config: '" + key + "' must be true or false");
}

std::string parse_string(const std::string& v, const std::string& key) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
    return v.substr(1, v.size() - 2);
  throw std::invalid_argument("config: '" + key + "' must be a quoted string");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;

  using Setter = std::function<void(const std::string&, const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"u0.preset", [&](const std::string& v, const std::string& k) { cfg.u0.preset = parse_string(v, k); }},
      {"u0.amplitude", [&](const std::string& v, const std::string& k) { cfg.u0.amplitude = parse_number(v, k); }},
      {"u0.center", [&](const std::string& v, const std::string& k) { cfg.u0.center = parse_number(v, k); }},
      {"u0.width", [&](const std::string& v, const std::string& k) { cfg.u0.width = parse_number(v, k); }},
      {"u0.slope", [&](const std::string& v, const std::string& k) { cfg.u0.slope = parse_number(v, k); }},
      {"u0.path", [&](const std::string& v, const std::string& k) { cfg.u0.path = parse_string(v, k); }},
      {"grid.L", [&](const std::string& v, const std::string& k) { cfg.grid.half_width = parse_number(v, k); }},
      {"grid.N", [&](const std::string& v, const std::string& k) { cfg.grid.n = parse_int(v, k); }},
      {"time.dt", [&](const std::string& v, const std::string& k) { cfg.time.dt = parse_number(v, k); }},
      {"time.t_end", [&](const std::string& v, const std::string& k) { cfg.time.t_end = parse_number(v, k); }},
      {"time.snapshot_every", [&](const std::string& v, const std::string& k) { cfg.time.snapshot_every = parse_number(v, k); }},
      {"time.snapshot_fine", [&](const std::string& v, const std::string& k) { cfg.time.snapshot_fine = parse_number(v, k); }},
      {"time.event_window", [&](const std::string& v, const std::string& k) { cfg.time.event_window = parse_number(v, k); }},
      {"time.stop_after_first_event", [&](const std::string& v, const std::string& k) { cfg.time.stop_after_first_event = parse_bool(v, k); }},
      {"time.stop_margin", [&](const std::string& v, const std::string& k) { cfg.time.stop_margin = parse_number(v, k); }},
      {"time.energy_every", [&](const std::string& v, const std::string& k) { cfg.time.energy_every = parse_int(v, k); }},
      {"analysis.theta1", [&](const std::string& v, const std::string& k) { cfg.analysis.theta1 = parse_number(v, k); }},
      {"analysis.theta2", [&](const std::string& v, const std::string& k) { cfg.analysis.theta2 = parse_number(v, k); }},
      {"analysis.fit_min_cells", [&](const std::string& v, const std::string& k) { cfg.analysis.fit_min_cells = parse_int(v, k); }},
      {"analysis.fit_max_cells", [&](const std::string& v, const std::string& k) { cfg.analysis.fit_max_cells = parse_int(v, k); }},
      {"analysis.fit_ladder_levels", [&](const std::string& v, const std::string& k) { cfg.analysis.fit_ladder_levels = parse_int(v, k); }},
      {"analysis.fit_w_cap", [&](const std::string& v, const std::string& k) { cfg.analysis.fit_w_cap = parse_number(v, k); }},
      {"analysis.fit_floor_factor", [&](const std::string& v, const std::string& k) { cfg.analysis.fit_floor_factor = parse_number(v, k); }},
      {"compare.t_end", [&](const std::string& v, const std::string& k) { cfg.compare.t_end = parse_number(v, k); }},
      {"compare.snapshot_every", [&](const std::string& v, const std::string& k) { cfg.compare.snapshot_every = parse_number(v, k); }},
      {"compare.slope_cap", [&](const std::string& v, const std::string& k) { cfg.compare.slope_cap = parse_number(v, k); }},
  };

  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: bad section at line " + std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " + std::to_string(lineno));
    const std::string key = section + "." + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw std::invalid_argument("config: unknown key '" + key + "'");
    it->second(value, key);
  }
  validate(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string echo_config(const RunConfig& c) {
  std::ostringstream o;
  o << "[u0]\n";
  o << "preset = \"" << c.u0.preset << "\"\n";
  o << "amplitude = " << fmt_g17(c.u0.amplitude) << "\n";
  o << "center = " << fmt_g17(c.u0.center) << "\n";
  o << "width = " << fmt_g17(c.u0.width) << "\n";
  o << "slope = " << fmt_g17(c.u0.slope) << "\n";
  o << "path = \"" << c.u0.path << "\"\n";
  o << "\n[grid]\n";
  o << "L = " << fmt_g17(c.grid.half_width) << "\n";
  o << "N = " << c.grid.n << "\n";
  o << "\n[time]\n";
  o << "dt = " << fmt_g17(c.time.dt) << "\n";
  o << "t_end = " << fmt_g17(c.time.t_end) << "\n";
  o << "snapshot_every = " << fmt_g17(c.time.snapshot_every) << "\n";
  o << "snapshot_fine = " << fmt_g17(c.time.snapshot_fine) << "\n";
  o << "event_window = " << fmt_g17(c.time.event_window) << "\n";
  o << "stop_after_first_event = " << (c.time.stop_after_first_event ? "true" : "false") << "\n";
  o << "stop_margin = " << fmt_g17(c.time.stop_margin) << "\n";
  o << "energy_every = " << c.time.energy_every << "\n";
  o << "\n[analysis]\n";
  o << "theta1 = " << fmt_g17(c.analysis.theta1) << "\n";
  o << "theta2 = " << fmt_g17(c.analysis.theta2) << "\n";
  o << "fit_min_cells = " << c.analysis.fit_min_cells << "\n";
  o << "fit_max_cells = " << c.analysis.fit_max_cells << "\n";
  o << "fit_ladder_levels = " << c.analysis.fit_ladder_levels << "\n";
  o << "fit_w_cap = " << fmt_g17(c.analysis.fit_w_cap) << "\n";
  o << "fit_floor_factor = " << fmt_g17(c.analysis.fit_floor_factor) << "\n";
  o << "\n[compare]\n";
  o << "t_end = " << fmt_g17(c.compare.t_end) << "\n";
  o << "snapshot_every = " << fmt_g17(c.compare.snapshot_every) << "\n";
  o << "slope_cap = " << fmt_g17(c.compare.slope_cap) << "\n";
  return o.str();
}

std::unique_ptr<InitialProfile> make_profile(const RunConfig::Profile& p) {
  if (p.preset == "gaussian")
    return std::make_unique<GaussianProfile>(p.amplitude, p.center, p.width);
  if (p.preset == "peakon") return std::make_unique<PeakonProfile>(p.amplitude);
  if (p.preset == "linear") return std::make_unique<LinearProfile>(p.slope);
  if (p.preset == "zero") return std::make_unique<ZeroProfile>();
  if (p.preset == "table")
    return std::make_unique<TableProfile>(TableProfile::from_csv(p.path));
  throw std::invalid_argument("unknown u0 preset: " + p.preset);
}

RunOptions run_options(const RunConfig& cfg) {
  RunOptions o;
  o.snapshot_every = cfg.time.snapshot_every;
  o.snapshot_fine = cfg.time.snapshot_fine;
  o.event_window = cfg.time.event_window;
  o.stop_after_first_event = cfg.time.stop_after_first_event;
  o.stop_margin = cfg.time.stop_margin;
  o.energy_every = cfg.time.energy_every;
  return o;
}

FitConfig fit_config(const RunConfig& cfg) {
  FitConfig f;
  f.theta1 = cfg.analysis.theta1;
  f.theta2 = cfg.analysis.theta2;
  f.min_cells = cfg.analysis.fit_min_cells;
  f.max_cells = cfg.analysis.fit_max_cells;
  f.ladder_levels = cfg.analysis.fit_ladder_levels;
  f.w_cap = cfg.analysis.fit_w_cap;
  f.floor_factor = cfg.analysis.fit_floor_factor;
  return f;
}

void validate(const RunConfig& cfg) {
  if (cfg.grid.n < 16) throw std::invalid_argument("config: grid.N must be >= 16");
  if (!(cfg.grid.half_width > 0)) throw std::invalid_argument("config: grid.L must be > 0");
  if (!(cfg.time.dt > 0)) throw std::invalid_argument("config: time.dt must be > 0");
  if (!(cfg.time.t_end > 0)) throw std::invalid_argument("config: time.t_end must be > 0");
  if (cfg.time.energy_every < 1)
    throw std::invalid_argument("config: time.energy_every must be >= 1");
  if (cfg.analysis.fit_min_cells < 1 || cfg.analysis.fit_max_cells <= cfg.analysis.fit_min_cells)
    throw std::invalid_argument("config: fit cell window is empty");
  if (cfg.analysis.fit_ladder_levels < 1)
    throw std::invalid_argument("config: fit_ladder_levels must be >= 1");
  if (!(cfg.analysis.fit_w_cap > 0))
    throw std::invalid_argument("config: fit_w_cap must be > 0");
  if (!(cfg.analysis.fit_floor_factor >= 1))
    throw std::invalid_argument("config: fit_floor_factor must be >= 1");
  if (!(cfg.compare.t_end > 0) || !(cfg.compare.slope_cap > 0))
    throw std::invalid_argument("config: compare parameters must be positive");
}

}  // namespace novlab
