// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Semilinear evolution in characteristic variables:
//   u_T = -dxP1 - P2
//   v_T = -u sin^2(v/2) + 2u^3 cos^2(v/2) - 2 cos^2(v/2) (P1 + dxP2)
//   q_T =  q [(2u^3 + u) - 2 (P1 + dxP2)] sin v
//   x_T =  u^2
// on a fixed uniform Y grid. The system stays smooth through wave breaking
// (v = pi), which is where the x-space description degenerates.

#pragma once

#include <memory>

#include "novlab/char_state.hpp"
#include "novlab/errors.hpp"
#include "novlab/profiles.hpp"

namespace novlab {

/// Divergence detected mid-run; carries everything integrated up to and
/// including the last good state.
class RunDivergedError : public DivergenceError {
 public:
  RunDivergedError(const std::string& what, TrajectoryRecord partial)
      : DivergenceError(what),
        partial_(std::make_shared<const TrajectoryRecord>(std::move(partial))) {}

  const TrajectoryRecord& partial() const { return *partial_; }

 private:
  std::shared_ptr<const TrajectoryRecord> partial_;
};

struct CharDeriv {
  std::vector<double> u_t, v_t, q_t, x_t;
};

/// Builds t = 0 data: a uniform grid in Y = int_0^x (1 + u0'^2)^2 dz, the
/// physical positions x(Y) integrated with classical 4th-order steps, and
/// u = u0(x), v = 2 arctan(u0'(x)), q = 1.
CharState init_from_u0(const InitialProfile& u0, double half_width, int n_nodes);

CharDeriv rhs(const CharState& state);

/// One classical 4-stage step; throws DivergenceError on non-finite values.
CharState step_rk4(const CharState& state, double dt);

struct RunOptions {
  double snapshot_every = 0.05;   // coarse cadence, always kept
  double snapshot_fine = 0.005;   // fine cadence kept near v = pi events
  double event_window = 0.06;     // half-width of the fine-kept window
  bool stop_after_first_event = false;
  double stop_margin = 0.06;      // extra integration time past the event
  int energy_every = 1;           // energy series stride, in steps
};

TrajectoryRecord run(CharState state, double dt, double t_end,
                     const RunOptions& options = {});

/// H1 energy in Y variables: sum (u^2 cos^4(v/2) + sin^2(v/2) cos^2(v/2)) q dY.
/// Bounded at v = pi; this is the conserved monitor.
double energy_h1(const CharState& state);

/// Diagnostic only: sum q dY = int (1 + u_x^2)^2 dx; not a conserved quantity.
double q_total(const CharState& state);

/// Max deviation of the evolved x from the cumulative trapezoid of
/// x_Y = q cos^4(v/2); a discrete consistency check of the Jacobian relation.
double x_consistency(const CharState& state);

struct JacobianMin {
  double value = 0.0;
  std::size_t index = 0;
};

/// Minimum of q cos^4(v/2) over the grid; tends to 0 at breaking.
JacobianMin jacobian_min(const CharState& state);

}  // namespace novlab
