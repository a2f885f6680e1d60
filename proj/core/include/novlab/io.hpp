// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// File formats. Floats are written with 17 significant digits so that values
// round-trip bit-exactly; object keys are emitted in a fixed order so that
// identical runs produce byte-identical files.

#pragma once

#include <string>
#include <vector>

#include "novlab/analysis.hpp"
#include "novlab/char_state.hpp"
#include "novlab/kinematics.hpp"
#include "novlab/rational.hpp"
#include "novlab/ref_solver.hpp"

namespace novlab {

/// Shortest-faithful decimal: %.17g.
std::string fmt_g17(double v);

// Snapshot CSV: header `t,Y,x,u,v,q`, one row per node, snapshots
// concatenated in time order.
void write_snapshots_csv(const std::string& path, const std::vector<CharState>& snaps);
std::vector<CharState> read_snapshots_csv(const std::string& path);

// Energy CSV: header `t,E1,Qtot,jac_min`.
void write_energy_csv(const std::string& path, const std::vector<EnergySample>& samples);

// Reference-solution CSV: header `t,x,u`.
void write_ref_csv(const std::string& path, const std::vector<RefState>& snaps);

// Raw solver events, one JSON object per line.
void write_raw_events_jsonl(const std::string& path, const std::vector<RawEvent>& events);

// Analyzed events, one {t0, Y0, x0, u0, vY, vYY, type} object per line.
void write_events_jsonl(const std::string& path, const std::vector<SingularEvent>& events);
std::string event_to_json(const SingularEvent& e);

// Fit report.
std::string analysis_report_to_json(const AnalysisReport& report);
void write_analysis_report(const std::string& path, const AnalysisReport& report);

// Per-event plot data: header `r,abs_du,side`.
void write_plot_csv(const std::string& path, const EventAnalysis& event);

// Order reports (exact coefficients serialize as "p/q" strings).
std::string order_report_to_json(const OrderReport<Rational>& rep);
std::string order_report_to_json(const OrderReport<double>& rep);

// Deviation series CSV: header `t,l2_rel`.
void write_deviation_csv(const std::string& path,
                         const std::vector<std::pair<double, double>>& series);

}  // namespace novlab
