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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitlab/common.hpp"
#include "splitlab/number_theory.hpp"

namespace splitlab {

enum class Statement {
  SSC,
  PSSC,
  LOWER_BOUND,
  M2_THEOREM,
  SPLITANDBASES,
  NOBASES,
  GENBB,
  ELEMSPLIT,
  WEAK_SSC,
  ENDO_SSC,
  NILPOTENT,
  PVRC,
  BCSCC,
  PFC,
  IFC,
  CHAIN,
};

std::string_view statement_name(Statement s) noexcept;
/// Throws UnknownStatement.
Statement parse_statement(std::string_view id);
const std::vector<Statement>& all_statements();

/// Grid points are integer tuples. Most statements take "q,m,n"; GENBB takes
/// "q,N1,N2", NILPOTENT "q,m" and ENDO_SSC "q,n".
using GridPoint = std::vector<std::uint64_t>;

std::size_t grid_arity(Statement s) noexcept;
/// "a,b,c;d,e,f". Throws ParseError on malformed input or wrong arity.
std::vector<GridPoint> parse_grid(Statement s, std::string_view spec);
std::vector<GridPoint> default_grid(Statement s);

struct VerificationJob {
  Statement statement = Statement::SSC;
  std::vector<GridPoint> grid;
  Bounds bounds = default_bounds();
  std::uint64_t seed = 0;
  bool timing = false;
};

enum class RowVerdict { match, mismatch, skipped };
std::string_view to_string(RowVerdict v) noexcept;

struct VerdictRow {
  Statement statement = Statement::SSC;
  GridPoint point;
  // Point parameters plus any per-row qualifier, e.g. "q=2,m=2,n=2,f=1,1,0,0,1".
  std::string params;
  std::optional<BigInt> brute;
  std::optional<BigInt> formula;
  FormulaStatus status = FormulaStatus::proved;
  RowVerdict verdict = RowVerdict::skipped;
  std::optional<double> seconds;
  std::string note;
};

struct VerdictSummary {
  std::size_t rows = 0;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t skipped = 0;
  std::size_t proved_mismatch = 0;
  std::size_t conjectural_mismatch = 0;
};

struct Verdict {
  VerificationJob job;
  std::vector<VerdictRow> rows;
  VerdictSummary summary;
  std::optional<double> wall_seconds;

  /// 0 when every row matches or is skipped, 1 on a mismatch at a proved
  /// statement, 2 when only conjectural rows mismatch.
  int exit_status() const noexcept;
};

/// Runs every grid point. A point that raises an Error (bound overrun,
/// invalid instance) becomes a skipped row carrying the message.
Verdict verify(const VerificationJob& job);

enum class ReportFormat { json, csv, text };
ReportFormat parse_format(std::string_view name);

std::string render(const Verdict& verdict, ReportFormat format);
/// Writes to `path`, or stdout when it is empty or "-". Throws IoError.
void emit(const Verdict& verdict, ReportFormat format, const std::string& path);

}  // namespace splitlab
