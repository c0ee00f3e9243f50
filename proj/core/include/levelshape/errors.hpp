// Copyright 2026 The levelshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEVELSHAPE_ERRORS_HPP
#define LEVELSHAPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levelshape {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration, schema violations, missing input files.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Nonlinear or linear solver failure; carries the last residual.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}
  double last_residual() const { return last_residual_; }

 private:
  double last_residual_ = 0.0;
};

/// Geometric failure: points outside the grid, degenerate seeds,
/// trajectories leaving the admissible region, failed closure.
class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& what) : Error(what) {}
};

/// Masked solve requested on an empty node set {g < 0}.
class EmptyShapeError : public Error {
 public:
  explicit EmptyShapeError(const std::string& what) : Error(what) {}
};

}  // namespace levelshape

#endif  // LEVELSHAPE_ERRORS_HPP
