// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "novlab/errors.hpp"
#include "novlab/interp.hpp"

namespace novlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct LocalDiffs {
  double vY = 0.0;
  double vYY = 0.0;
};

LocalDiffs centered_diffs(const CharState& snap, std::size_t node) {
  const std::size_t n = snap.size();
  const std::size_t j = std::clamp<std::size_t>(node, 1, n - 2);
  const double dy = snap.Y[1] - snap.Y[0];
  return {(snap.v[j + 1] - snap.v[j - 1]) / (2.0 * dy),
          (snap.v[j + 1] - 2.0 * snap.v[j] + snap.v[j - 1]) / (dy * dy)};
}

// Local curvature scale for the v_Y threshold; the global maximum would be
// dominated by curvature far from the event.
double local_max_vyy(const CharState& snap, std::size_t node, std::size_t radius) {
  const std::size_t n = snap.size();
  const double dy = snap.Y[1] - snap.Y[0];
  const std::size_t lo = node > radius ? node - radius : 1;
  const std::size_t hi = std::min(node + radius, n - 2);
  double m = 0.0;
  for (std::size_t i = std::max<std::size_t>(lo, 1); i <= hi; ++i)
    m = std::max(m, std::abs(snap.v[i + 1] - 2.0 * snap.v[i] + snap.v[i - 1]) / (dy * dy));
  return m;
}

std::size_t nearest_snapshot(const std::vector<CharState>& snaps, double t) {
  std::size_t best = 0;
  double dist = std::abs(snaps[0].t - t);
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    const double d = std::abs(snaps[i].t - t);
    if (d < dist) {
      dist = d;
      best = i;
    }
  }
  return best;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<SingularEvent> detect_events(const TrajectoryRecord& record) {
  const auto& snaps = record.snapshots;
  if (snaps.size() < 2)
    throw std::invalid_argument("detect_events: need >= 2 snapshots");
  const double dy = snaps[0].Y[1] - snaps[0].Y[0];

  std::vector<SingularEvent> candidates;

  // Crossings along Y inside each snapshot; t0 is the snapshot time itself.
  for (std::size_t si = 0; si < snaps.size(); ++si) {
    const CharState& s = snaps[si];
    const std::size_t n = s.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double a = s.v[i] - kPi;
      const double b = s.v[i + 1] - kPi;
      double theta;
      if (a == 0.0) {
        theta = 0.0;
      } else if ((a < 0.0) != (b < 0.0)) {
        theta = a / (a - b);
      } else {
        continue;
      }
      SingularEvent e;
      e.t0 = s.t;
      e.Y0 = s.Y[i] + theta * dy;
      const std::size_t j = theta < 0.5 ? i : i + 1;
      const LocalDiffs d = centered_diffs(s, j);
      e.vY = d.vY;
      e.vYY = d.vYY;
      e.x0 = interp_cubic(s.Y, s.x, e.Y0);
      e.u0 = interp_cubic(s.Y, s.u, e.Y0);
      e.snapshot_index = static_cast<int>(si);
      candidates.push_back(std::move(e));
    }
  }

  // Crossings along t at fixed Y between consecutive snapshots.
  for (std::size_t si = 0; si + 1 < snaps.size(); ++si) {
    const CharState& sa = snaps[si];
    const CharState& sb = snaps[si + 1];
    const std::size_t n = sa.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double a = sa.v[i] - kPi;
      const double b = sb.v[i] - kPi;
      if (a == 0.0 || b == 0.0 || (a < 0.0) == (b < 0.0)) continue;
      const double theta = a / (a - b);
      SingularEvent e;
      e.t0 = sa.t + theta * (sb.t - sa.t);
      e.Y0 = sa.Y[i];
      const std::size_t src = theta < 0.5 ? si : si + 1;
      const LocalDiffs d = centered_diffs(snaps[src], i);
      e.vY = d.vY;
      e.vYY = d.vYY;
      e.x0 = (1.0 - theta) * sa.x[i] + theta * sb.x[i];
      e.u0 = (1.0 - theta) * sa.u[i] + theta * sb.u[i];
      e.snapshot_index = static_cast<int>(src);
      candidates.push_back(std::move(e));
    }
  }

  // Keep the earliest representative of every Y-cluster (3-cell radius).
  std::sort(candidates.begin(), candidates.end(),
            [](const SingularEvent& a, const SingularEvent& b) { return a.t0 < b.t0; });
  std::vector<SingularEvent> events;
  for (SingularEvent& c : candidates) {
    bool duplicate = false;
    for (const SingularEvent& kept : events)
      if (std::abs(kept.Y0 - c.Y0) < 3.0 * dy) {
        duplicate = true;
        break;
      }
    if (!duplicate) events.push_back(std::move(c));
  }
  return events;
}

SingularEvent classify_event(SingularEvent e, double theta1, double theta2) {
  if (!(theta1 > 0.0) || !(theta2 > 0.0))
    throw std::invalid_argument("classify_event: thresholds must be positive");
  if (std::abs(e.vY) >= theta1) {
    e.type = EventType::TypeII_generic;
  } else if (std::abs(e.vYY) >= theta2) {
    e.type = EventType::TypeI;
  } else {
    e.type = EventType::Unclassified;
    e.resolution_flags.push_back("vY and vYY both below thresholds");
  }
  return e;
}

ExponentFit fit_exponent(std::span<const double> x, std::span<const double> u,
                         double x0, double u0_val, double r_min, double r_max,
                         Side side) {
  if (!(r_min > 0.0) || !(r_max > r_min))
    throw std::invalid_argument("fit_exponent: need 0 < r_min < r_max");

  std::vector<double> lr, lu;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = side == Side::Right ? x[i] - x0 : x0 - x[i];
    if (r < r_min || r > r_max) continue;
    const double du = std::abs(u[i] - u0_val);
    if (du == 0.0) continue;
    lr.push_back(std::log(r));
    lu.push_back(std::log(du));
  }
  const int n = static_cast<int>(lr.size());
  if (n < 4) throw WindowError("fit_exponent: fewer than 4 points in window");

  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lr[i];
    my += lu[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lr[i] - mx) * (lr[i] - mx);
    sxy += (lr[i] - mx) * (lu[i] - my);
    syy += (lu[i] - my) * (lu[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0)
    throw DegenerateFitError("fit_exponent: zero spread in log coordinates");

  ExponentFit fit;
  fit.alpha = sxy / sxx;
  fit.a_hat = std::exp(my - fit.alpha * mx);
  fit.side = side;
  fit.r_min = r_min;
  fit.r_max = r_max;
  fit.n_points = n;
  double ssr = 0.0;
  for (int i = 0; i < n; ++i) {
    const double pred = my + fit.alpha * (lr[i] - mx);
    ssr += (lu[i] - pred) * (lu[i] - pred);
  }
  fit.r_squared = 1.0 - ssr / syy;
  return fit;
}

AnalysisReport analyze_run(const TrajectoryRecord& record, const FitConfig& cfg) {
  AnalysisReport report;
  if (record.snapshots.size() < 2) return report;
  std::vector<SingularEvent> events = detect_events(record);
  if (events.empty()) return report;

  const auto& snaps = record.snapshots;
  const double dy = snaps[0].Y[1] - snaps[0].Y[0];

  for (SingularEvent& raw : events) {
    const std::size_t si = nearest_snapshot(snaps, raw.t0);
    const CharState& snap = snaps[si];
    const std::size_t n = snap.size();

    const std::size_t near_node = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(0.0, (raw.Y0 - snap.Y[0]) / dy + 0.5)), n - 1);
    const double theta1 =
        cfg.theta1 > 0.0 ? cfg.theta1
                         : 10.0 * dy * local_max_vyy(snap, near_node, 10);
    SingularEvent ev = classify_event(raw, theta1, cfg.theta2);

    // Re-center on the crossing inside this snapshot; the cusp is exact at
    // the snapshot time there.
    double y_star = ev.Y0;
    bool found = false;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double a = snap.v[i] - kPi;
      const double b = snap.v[i + 1] - kPi;
      if (a != 0.0 && (a < 0.0) == (b < 0.0)) continue;
      const double theta = a == 0.0 ? 0.0 : a / (a - b);
      const double yc = snap.Y[i] + theta * dy;
      const double dist = std::abs(yc - ev.Y0);
      if (dist < best_dist) {
        best_dist = dist;
        y_star = yc;
        found = true;
      }
    }
    if (!found) ev.resolution_flags.push_back("no crossing in nearest snapshot");

    const double x0 = interp_cubic(snap.Y, snap.x, y_star);
    const double u0 = interp_cubic(snap.Y, snap.u, y_star);

    EventAnalysis ea;
    ea.event = ev;
    ea.event.x0 = x0;
    ea.event.u0 = u0;

    std::vector<double> refs;
    if (ev.type == EventType::TypeI)
      refs = {3.0 / 4.0, 7.0 / 9.0};
    else
      refs = {4.0 / 5.0};

    // Base node: last node at or left of the crossing.
    std::ptrdiff_t il = 0;
    while (il + 1 < static_cast<std::ptrdiff_t>(n) && snap.Y[il + 1] <= y_star) ++il;

    const auto jacobian = [&](std::ptrdiff_t j) {
      const double ch = std::cos(0.5 * snap.v[static_cast<std::size_t>(j)]);
      return snap.q[static_cast<std::size_t>(j)] * ch * ch * ch * ch;
    };

    std::vector<double> primary_alphas;
    for (const Side side : {Side::Left, Side::Right}) {
      const auto node_at = [&](int k) -> std::ptrdiff_t {
        return side == Side::Right ? il + k : il + 1 - k;
      };

      // Nodes available before |v - pi| leaves the near-angle zone or the
      // level set is crossed again (another branch); windows stay in the
      // near half of the distance to a companion crossing.
      const std::ptrdiff_t first = node_at(1);
      if (first < 0 || first >= static_cast<std::ptrdiff_t>(n)) continue;
      const bool ref_sign = snap.v[static_cast<std::size_t>(first)] > kPi;
      int same_sign = 0;
      int within_w = 0;
      bool crossed = false;
      bool w_ok = true;
      for (std::ptrdiff_t j = first; j >= 0 && j < static_cast<std::ptrdiff_t>(n);
           j += side == Side::Right ? 1 : -1) {
        const double w = snap.v[static_cast<std::size_t>(j)] - kPi;
        if ((w > 0.0) != ref_sign) {
          crossed = true;
          break;
        }
        ++same_sign;
        if (w_ok && std::abs(w) <= cfg.w_cap)
          ++within_w;
        else
          w_ok = false;
      }
      const int branch_cap = crossed ? same_sign / 2 : same_sign;
      const int cap = std::min({cfg.max_cells, branch_cap, within_w});
      if (cap < cfg.min_cells + 4) continue;  // need >= 5 usable nodes

      // Offsets from the crossing by the Jacobian relation x_Y = q cos^4(v/2),
      // which vanishes exactly at the crossing. Trapezoid over the partial
      // first cell, then node to node.
      const std::ptrdiff_t anchor = side == Side::Right ? il + 1 : il;
      const double partial = side == Side::Right ? snap.Y[static_cast<std::size_t>(anchor)] - y_star
                                                 : y_star - snap.Y[static_cast<std::size_t>(anchor)];
      std::vector<double> r(static_cast<std::size_t>(cap) + 1, 0.0);
      std::vector<double> uu(static_cast<std::size_t>(cap) + 1, 0.0);
      r[1] = 0.5 * jacobian(anchor) * partial;
      uu[1] = snap.u[static_cast<std::size_t>(anchor)];
      bool in_range = true;
      for (int k = 2; k <= cap; ++k) {
        const std::ptrdiff_t node = node_at(k);
        if (node < 0 || node >= static_cast<std::ptrdiff_t>(n)) {
          in_range = false;
          r.resize(static_cast<std::size_t>(k));
          uu.resize(static_cast<std::size_t>(k));
          break;
        }
        r[static_cast<std::size_t>(k)] =
            r[static_cast<std::size_t>(k - 1)] +
            0.5 * (jacobian(node_at(k - 1)) + jacobian(node)) * dy;
        uu[static_cast<std::size_t>(k)] = snap.u[static_cast<std::size_t>(node)];
      }
      const int have = in_range ? cap : static_cast<int>(r.size()) - 1;
      if (have < cfg.min_cells + 4) continue;

      // Inner cutoff: past the |u - u0| bias level measured at the cells
      // adjacent to the crossing, where the genuine quartic growth takes
      // over.
      double du_inner = 0.0;
      for (int k = 1; k <= std::min(3, have); ++k)
        du_inner = std::max(du_inner, std::abs(uu[static_cast<std::size_t>(k)] - u0));
      int k_min = 0;
      for (int k = cfg.min_cells; k + 4 <= have; ++k) {
        if (std::abs(uu[static_cast<std::size_t>(k)] - u0) >=
            cfg.floor_factor * du_inner) {
          k_min = k;
          break;
        }
      }
      if (k_min == 0) continue;
      const double r_min = r[static_cast<std::size_t>(k_min)];
      if (!(r_min > 0.0)) continue;

      // Ladder halves the cell count per level (a factor ~2^5 in r).
      int cells = have;
      for (int level = 0; level < cfg.ladder_levels; ++level) {
        const double r_max = r[static_cast<std::size_t>(cells)];
        if (r_max > r_min) {
          try {
            ExponentFit base = fit_exponent(r, uu, 0.0, u0, r_min, r_max, Side::Right);
            base.side = side;
            primary_alphas.push_back(base.alpha);
            for (const double ref : refs) {
              ExponentFit f = base;
              f.alpha_ref = ref;
              ea.fits.push_back(f);
            }
          } catch (const WindowError&) {
          } catch (const DegenerateFitError&) {
          }
        }
        if (cells <= k_min + 4) break;
        cells = std::max(k_min + 4, cells / 2);
      }

      for (int k = cfg.min_cells; k <= have; ++k)
        ea.points.push_back({r[static_cast<std::size_t>(k)],
                             std::abs(uu[static_cast<std::size_t>(k)] - u0), side});
    }
    if (!primary_alphas.empty()) ea.median_alpha = median(primary_alphas);
    report.events.push_back(std::move(ea));
  }
  return report;
}

}  // namespace novlab
