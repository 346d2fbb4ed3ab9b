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

#include "splitlab/common.hpp"

#include <cstdlib>
#include <string>

namespace splitlab {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::FactorBoundExceeded: return "FactorBoundExceeded";
    case Errc::FactorSearchExceeded: return "FactorSearchExceeded";
    case Errc::BothZero: return "BothZero";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::BoundOrder: return "BoundOrder";
    case Errc::ScanBoundExceeded: return "ScanBoundExceeded";
    case Errc::IterationBoundExceeded: return "IterationBoundExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::Singular: return "Singular";
    case Errc::NotMonic: return "NotMonic";
    case Errc::NotGenerator: return "NotGenerator";
    case Errc::ZeroBasePoint: return "ZeroBasePoint";
    case Errc::SingularMoebius: return "SingularMoebius";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::UnknownStatement: return "UnknownStatement";
    case Errc::BadArgs: return "BadArgs";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

std::string_view to_string(Match m) noexcept {
  switch (m) {
    case Match::match: return "match";
    case Match::mismatch: return "mismatch";
    case Match::formula_unavailable: return "formula_unavailable";
  }
  return "?";
}

std::string_view to_string(FormulaStatus s) noexcept {
  return s == FormulaStatus::proved ? "proved" : "conjectural";
}

Bounds Bounds::from_env() {
  Bounds b;
  if (const char* env = std::getenv("SPLITLAB_SCAN_BOUND"); env != nullptr && *env != '\0') {
    try {
      b.scan = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, std::string("SPLITLAB_SCAN_BOUND is not an integer: ") + env);
    }
  }
  return b;
}

const Bounds& default_bounds() {
  static const Bounds bounds = Bounds::from_env();
  return bounds;
}

}  // namespace splitlab
