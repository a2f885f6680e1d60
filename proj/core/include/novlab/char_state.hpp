// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace novlab {

/// Solver state on a fixed uniform grid of characteristic labels Y.
/// v = 2 arctan(u_x) is tracked as a continuous real (never wrapped) so that
/// crossings of pi are plain sign changes; q = (1 + u_x^2)^2 / Y_x stays
/// positive along the flow.
struct CharState {
  double t = 0.0;
  std::vector<double> Y;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> q;

  std::size_t size() const { return Y.size(); }
};

struct EnergySample {
  double t = 0.0;
  double e1 = 0.0;      // H1 energy integral in Y variables
  double q_total = 0.0; // integral of q dY (diagnostic, not conserved)
  double jac_min = 0.0; // min_i q_i cos^4(v_i/2)
};

/// One per-node sign change of v - pi between consecutive accepted steps.
struct RawEvent {
  double t_lo = 0.0;
  double t_hi = 0.0;
  int node = 0;
  double y = 0.0;
  double v_lo = 0.0;
  double v_hi = 0.0;
};

struct RunStats {
  double min_q = 0.0;              // min over all accepted steps and nodes
  double max_x_decrease = 0.0;     // worst backward step in x, absolute
  double max_dt_vt = 0.0;          // max over steps of dt * max|dv/dT|
  long long steps = 0;
  bool stopped_on_event = false;
  std::string stop_reason;
};

struct TrajectoryRecord {
  std::vector<CharState> snapshots;   // strictly increasing t
  std::vector<EnergySample> energy;
  std::vector<RawEvent> events_raw;
  RunStats stats;
};

}  // namespace novlab
