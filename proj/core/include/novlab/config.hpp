// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>

#include "novlab/analysis.hpp"
#include "novlab/char_solver.hpp"
#include "novlab/profiles.hpp"

namespace novlab {

/// Run configuration, TOML-style sections. Every numeric default is embedded
/// here and echoed next to the outputs, so any artifact can be reproduced
/// from its echo alone.
struct RunConfig {
  struct Profile {
    std::string preset = "gaussian";  // gaussian | peakon | linear | table | zero
    double amplitude = -1.2;
    double center = 0.0;
    double width = 1.0;
    double slope = 1.0;   // linear preset
    std::string path;     // table preset
  } u0;

  struct Grid {
    double half_width = 20.0;
    int n = 4096;
  } grid;

  struct Time {
    double dt = 1e-3;
    double t_end = 5.0;
    double snapshot_every = 0.05;
    double snapshot_fine = 0.01;
    double event_window = 0.45;
    bool stop_after_first_event = true;
    double stop_margin = 0.45;
    int energy_every = 1;
  } time;

  struct Analysis {
    double theta1 = 0.0;  // 0 = auto
    double theta2 = 1e-3;
    int fit_min_cells = 5;
    int fit_max_cells = 40;
    int fit_ladder_levels = 4;
    double fit_w_cap = 1.0;
    double fit_floor_factor = 30.0;
  } analysis;

  struct Compare {
    double t_end = 0.5;
    double snapshot_every = 0.1;
    double slope_cap = 50.0;
  } compare;
};

/// Parses a TOML-style file onto the defaults; unknown sections or keys are
/// rejected.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Serializes the effective configuration; parse(echo(c)) == c.
std::string echo_config(const RunConfig& cfg);

std::unique_ptr<InitialProfile> make_profile(const RunConfig::Profile& p);

RunOptions run_options(const RunConfig& cfg);
FitConfig fit_config(const RunConfig& cfg);

void validate(const RunConfig& cfg);

}  // namespace novlab
