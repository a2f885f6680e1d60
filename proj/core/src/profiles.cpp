// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/profiles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "novlab/interp.hpp"

namespace novlab {

GaussianProfile::GaussianProfile(double amplitude, double center, double width)
    : a_(amplitude), c_(center), w_(width) {
  if (!(width > 0)) throw std::invalid_argument("gaussian width must be > 0");
}

double GaussianProfile::value(double x) const {
  const double z = (x - c_) / w_;
  return a_ * std::exp(-z * z);
}

double GaussianProfile::slope(double x) const {
  const double z = (x - c_) / w_;
  return -2.0 * z / w_ * a_ * std::exp(-z * z);
}

PeakonProfile::PeakonProfile(double amplitude) : a_(amplitude) {}

double PeakonProfile::value(double x) const { return a_ * std::exp(-std::abs(x)); }

double PeakonProfile::slope(double x) const {
  if (x == 0.0) return 0.0;
  return -a_ * (x > 0 ? 1.0 : -1.0) * std::exp(-std::abs(x));
}

struct TableProfile::Impl {
  PchipInterpolant interp;
  explicit Impl(std::vector<double> x, std::vector<double> u)
      : interp(std::move(x), std::move(u)) {}
};

TableProfile::TableProfile(std::vector<double> x, std::vector<double> u)
    : impl_(std::make_shared<Impl>(std::move(x), std::move(u))) {}

TableProfile TableProfile::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile table: " + path);
  std::vector<double> xs, us;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',')) continue;
    try {
      xs.push_back(std::stod(a));
      us.push_back(std::stod(b));
    } catch (const std::exception&) {
      continue;  // header row
    }
  }
  return TableProfile(std::move(xs), std::move(us));
}

double TableProfile::value(double x) const {
  if (x < impl_->interp.x_min() || x > impl_->interp.x_max()) return 0.0;
  return impl_->interp(x);
}

double TableProfile::slope(double x) const {
  if (x < impl_->interp.x_min() || x > impl_->interp.x_max()) return 0.0;
  return impl_->interp.derivative(x);
}

}  // namespace novlab
