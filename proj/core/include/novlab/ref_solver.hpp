// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Direct x-space integrator of u_t + u^2 u_x + dxP1 + P2 = 0 on a uniform
// grid. Valid only while the solution stays smooth; used to cross-validate
// the characteristic solver on the shared pre-breaking window.

#pragma once

#include <utility>
#include <vector>

#include "novlab/char_state.hpp"
#include "novlab/profiles.hpp"

namespace novlab {

struct RefState {
  double t = 0.0;
  std::vector<double> x;  // uniform
  std::vector<double> u;
  double slope_cap = 50.0;

  std::size_t size() const { return x.size(); }
};

RefState ref_init(const InitialProfile& u0, double half_width, int n_nodes,
                  double slope_cap = 50.0);

/// u_x by 4th-order centered differences (zero extension at the ends),
/// nonlocal terms by the exponential-kernel scan. Throws BreakdownError once
/// max|u_x| reaches the slope cap.
std::vector<double> ref_rhs(const RefState& state);

RefState ref_step_rk4(const RefState& state, double dt);

std::vector<RefState> ref_run(RefState state, double dt, double t_end,
                              double snapshot_every);

double ref_energy_h1(const RefState& state);

/// Max over shared snapshot times of the relative L2 deviation between the
/// resampled characteristic solution and the reference solution. Throws
/// ComparisonImpossibleError when no valid pre-breaking overlap exists.
double compare_solutions(const TrajectoryRecord& char_record,
                         const std::vector<RefState>& ref_snapshots,
                         std::vector<std::pair<double, double>>* per_time = nullptr);

}  // namespace novlab
