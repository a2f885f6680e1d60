// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

namespace novlab {

/// Initial wave profile u0; implementations supply the value and the slope.
class InitialProfile {
 public:
  virtual ~InitialProfile() = default;
  virtual double value(double x) const = 0;
  virtual double slope(double x) const = 0;
};

class GaussianProfile final : public InitialProfile {
 public:
  GaussianProfile(double amplitude, double center, double width);
  double value(double x) const override;
  double slope(double x) const override;

 private:
  double a_, c_, w_;
};

/// a * e^{-|x|}; the slope at x = 0 is taken as 0 (kink midpoint).
class PeakonProfile final : public InitialProfile {
 public:
  explicit PeakonProfile(double amplitude);
  double value(double x) const override;
  double slope(double x) const override;

 private:
  double a_;
};

class LinearProfile final : public InitialProfile {
 public:
  explicit LinearProfile(double s) : s_(s) {}
  double value(double x) const override { return s_ * x; }
  double slope(double) const override { return s_; }

 private:
  double s_;
};

class ZeroProfile final : public InitialProfile {
 public:
  double value(double) const override { return 0.0; }
  double slope(double) const override { return 0.0; }
};

/// Tabulated profile (monotone-cubic interpolated); zero outside the table.
class TableProfile final : public InitialProfile {
 public:
  TableProfile(std::vector<double> x, std::vector<double> u);
  static TableProfile from_csv(const std::string& path);
  double value(double x) const override;
  double slope(double x) const override;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace novlab
