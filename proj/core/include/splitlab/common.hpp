// Copyright 2026 The splitlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitlab {

enum class Errc {
  NotPrime,
  SizeExceeded,
  NotIrreducible,
  DivisionByZero,
  ContextMismatch,
  ZeroElement,
  FactorBoundExceeded,
  FactorSearchExceeded,
  BothZero,
  DegreeZero,
  BoundOrder,
  ScanBoundExceeded,
  IterationBoundExceeded,
  DimensionMismatch,
  ShapeMismatch,
  NotSquare,
  Singular,
  NotMonic,
  NotGenerator,
  ZeroBasePoint,
  SingularMoebius,
  ZeroDenominator,
  UnknownStatement,
  BadArgs,
  ParseError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Limits on exhaustive work. Every scan checks its candidate count against
/// `scan` before starting, so an oversized request fails fast instead of
/// running for hours.
struct Bounds {
  std::uint64_t scan = std::uint64_t{1} << 24;
  // Trial-division limit when factoring q^d - 1.
  std::uint64_t factor = std::uint64_t{1} << 32;
  // Cap on sequential iteration (recurrence orbits, matrix powers).
  std::uint64_t iteration = std::uint64_t{1} << 28;

  /// Defaults, with SPLITLAB_SCAN_BOUND overriding `scan` when set.
  static Bounds from_env();
};

/// Process-wide defaults, read from the environment once.
const Bounds& default_bounds();

enum class CountMethod { closed, brute };
enum class Match { match, mismatch, formula_unavailable };
enum class FormulaStatus { proved, conjectural };

std::string_view to_string(Match m) noexcept;
std::string_view to_string(FormulaStatus s) noexcept;

}  // namespace splitlab
