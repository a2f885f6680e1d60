// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace novlab {

using nlohmann::json;

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

void write_snapshots_csv(const std::string& path, const std::vector<CharState>& snaps) {
  std::ofstream out = open_out(path);
  out << "t,Y,x,u,v,q\n";
  for (const CharState& s : snaps) {
    const std::string t = fmt_g17(s.t);
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << t << ',' << fmt_g17(s.Y[i]) << ',' << fmt_g17(s.x[i]) << ','
          << fmt_g17(s.u[i]) << ',' << fmt_g17(s.v[i]) << ',' << fmt_g17(s.q[i])
          << '\n';
    }
  }
}

std::vector<CharState> read_snapshots_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open snapshots: " + path);
  std::string line;
  if (!std::getline(in, line) || split_csv(line) != std::vector<std::string>{"t", "Y", "x", "u", "v", "q"})
    throw std::runtime_error("bad snapshots header in " + path);

  std::vector<CharState> snaps;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 6) throw std::runtime_error("bad snapshots row in " + path);
    const double t = std::strtod(f[0].c_str(), nullptr);
    if (snaps.empty() || snaps.back().t != t) {
      CharState s;
      s.t = t;
      snaps.push_back(std::move(s));
    }
    CharState& s = snaps.back();
    s.Y.push_back(std::strtod(f[1].c_str(), nullptr));
    s.x.push_back(std::strtod(f[2].c_str(), nullptr));
    s.u.push_back(std::strtod(f[3].c_str(), nullptr));
    s.v.push_back(std::strtod(f[4].c_str(), nullptr));
    s.q.push_back(std::strtod(f[5].c_str(), nullptr));
  }
  return snaps;
}

void write_energy_csv(const std::string& path, const std::vector<EnergySample>& samples) {
  std::ofstream out = open_out(path);
  out << "t,E1,Qtot,jac_min\n";
  for (const EnergySample& s : samples)
    out << fmt_g17(s.t) << ',' << fmt_g17(s.e1) << ',' << fmt_g17(s.q_total) << ','
        << fmt_g17(s.jac_min) << '\n';
}

void write_ref_csv(const std::string& path, const std::vector<RefState>& snaps) {
  std::ofstream out = open_out(path);
  out << "t,x,u\n";
  for (const RefState& s : snaps) {
    const std::string t = fmt_g17(s.t);
    for (std::size_t i = 0; i < s.size(); ++i)
      out << t << ',' << fmt_g17(s.x[i]) << ',' << fmt_g17(s.u[i]) << '\n';
  }
}

void write_raw_events_jsonl(const std::string& path, const std::vector<RawEvent>& events) {
  std::ofstream out = open_out(path);
  for (const RawEvent& e : events) {
    json j;
    j["t_lo"] = e.t_lo;
    j["t_hi"] = e.t_hi;
    j["node"] = e.node;
    j["Y"] = e.y;
    j["v_lo"] = e.v_lo;
    j["v_hi"] = e.v_hi;
    out << j.dump() << '\n';
  }
}

std::string event_to_json(const SingularEvent& e) {
  json j;
  j["t0"] = e.t0;
  j["Y0"] = e.Y0;
  j["x0"] = e.x0;
  j["u0"] = e.u0;
  j["vY"] = e.vY;
  j["vYY"] = e.vYY;
  j["type"] = event_type_name(e.type);
  return j.dump();
}

void write_events_jsonl(const std::string& path, const std::vector<SingularEvent>& events) {
  std::ofstream out = open_out(path);
  for (const SingularEvent& e : events) out << event_to_json(e) << '\n';
}

namespace {

json fit_to_json(const ExponentFit& f) {
  json j;
  j["side"] = side_name(f.side);
  j["window"] = {f.r_min, f.r_max};
  j["alpha"] = f.alpha;
  j["A_hat"] = f.a_hat;
  j["r2"] = f.r_squared;
  j["n_points"] = f.n_points;
  j["alpha_ref"] = f.alpha_ref;
  j["abs_dev"] = std::abs(f.alpha - f.alpha_ref);
  return j;
}

}  // namespace

std::string analysis_report_to_json(const AnalysisReport& report) {
  json out;
  out["events"] = json::array();
  for (const EventAnalysis& ea : report.events) {
    json je;
    je["event"] = json::parse(event_to_json(ea.event));
    if (!ea.event.resolution_flags.empty()) je["event"]["flags"] = ea.event.resolution_flags;
    je["fits"] = json::array();
    for (const ExponentFit& f : ea.fits) je["fits"].push_back(fit_to_json(f));
    if (ea.median_alpha) je["median_alpha"] = *ea.median_alpha;
    out["events"].push_back(std::move(je));
  }
  return out.dump(2);
}

void write_analysis_report(const std::string& path, const AnalysisReport& report) {
  open_out(path) << analysis_report_to_json(report) << '\n';
}

void write_plot_csv(const std::string& path, const EventAnalysis& event) {
  std::ofstream out = open_out(path);
  out << "r,abs_du,side\n";
  for (const PlotPoint& p : event.points)
    out << fmt_g17(p.r) << ',' << fmt_g17(p.abs_du) << ',' << side_name(p.side) << '\n';
}

namespace {

template <class T>
json order_report_json_impl(const OrderReport<T>& rep) {
  const auto coeff = [](const T& v) -> json {
    if constexpr (std::is_same_v<T, Rational>) {
      return to_string(v);
    } else {
      return v;
    }
  };
  json j;
  j["model"] = model_name(rep.model);
  j["ord_u"] = rep.ord_u;
  j["ord_x"] = rep.ord_x;
  j["lead_u"] = coeff(rep.lead_u);
  j["lead_x"] = coeff(rep.lead_x);
  j["exponent"] = coeff(rep.exponent);
  json claims = json::object(), oracle = json::object();
  for (const auto& [k, v] : rep.claims) claims[k] = coeff(v);
  for (const auto& [k, v] : rep.oracle) oracle[k] = coeff(v);
  j["paper_claims"] = std::move(claims);
  j["oracle_values"] = std::move(oracle);
  j["discrepancies"] = rep.discrepancies;
  return j;
}

}  // namespace

std::string order_report_to_json(const OrderReport<Rational>& rep) {
  return order_report_json_impl(rep).dump(2);
}

std::string order_report_to_json(const OrderReport<double>& rep) {
  return order_report_json_impl(rep).dump(2);
}

void write_deviation_csv(const std::string& path,
                         const std::vector<std::pair<double, double>>& series) {
  std::ofstream out = open_out(path);
  out << "t,l2_rel\n";
  for (const auto& [t, dev] : series) out << fmt_g17(t) << ',' << fmt_g17(dev) << '\n';
}

}  // namespace novlab
