// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable category, e.g. "parse_error".
  virtual const char* kind() const noexcept { return "error"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }
  const char* kind() const noexcept override { return "parse_error"; }

 private:
  int line_;
};

#define SURGE_DEFINE_ERROR(Name, tag)                              \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return tag; }     \
  };

SURGE_DEFINE_ERROR(IndexError, "index_error")
SURGE_DEFINE_ERROR(ShapeError, "shape_error")
SURGE_DEFINE_ERROR(ResourceError, "resource_error")
SURGE_DEFINE_ERROR(UnsupportedError, "unsupported_error")
SURGE_DEFINE_ERROR(InvalidOperator, "invalid_operator")
SURGE_DEFINE_ERROR(SectorError, "sector_error")
SURGE_DEFINE_ERROR(ConfigError, "config_error")

#undef SURGE_DEFINE_ERROR

/// Raised when the optimizer produces a non-finite energy. Carries the last
/// parameter vector with a finite energy.
class OptimizationError : public Error {
 public:
  OptimizationError(const std::string& what, std::vector<double> last_theta,
                    double last_energy)
      : Error(what), last_theta_(std::move(last_theta)), last_energy_(last_energy) {}
  const std::vector<double>& last_theta() const noexcept { return last_theta_; }
  double last_energy() const noexcept { return last_energy_; }
  const char* kind() const noexcept override { return "optimization_error"; }

 private:
  std::vector<double> last_theta_;
  double last_energy_;
};

}  // namespace surge
