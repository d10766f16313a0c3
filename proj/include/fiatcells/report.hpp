#pragma once

// JSON and text renderings of analysis results. Text output is line oriented
// and stable; cells are numbered from 1 with prefixes R, L and T.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fiatcells/cells.hpp"
#include "fiatcells/multicat.hpp"
#include "fiatcells/strong_cells.hpp"

namespace fiatcells {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view tool_version = "1.0.0";

std::string sha256_hex(std::string_view data);

/// {tool, version, command, input_sha256, seed, result}. Absent input or seed gives null.
Json envelope(std::string_view command, std::optional<std::string_view> input,
              std::optional<std::uint64_t> seed, Json result);

/// Integers that fit 64 bits become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& value);

Json validation_json(const MultiCat& cat, const ValidationReport& report);
std::string validation_text(const MultiCat& cat, const ValidationReport& report);

std::string cell_name(CellKind kind, std::size_t index);
Json partition_json(const MultiCat& cat, const CellPartition& partition);
/// Class list followed by the covering relations.
std::string partition_text(const MultiCat& cat, const CellPartition& partition);
/// Every comparable pair of distinct classes, not only covers.
std::string order_text(const MultiCat& cat, const CellPartition& partition);

Json lint_json(const LintReport& report);
std::string lint_text(const LintReport& report);

struct Analysis {
  bool valid = false;
  bool lint_passes = false;
  Json document;
  std::string text;
};

/// Validation, the three partitions, per-cell verdicts, Duflo elements, m-tables,
/// Cartan blocks, left constancy of m and the lint. An invalid table yields the
/// validation section only.
Analysis report_analyze(const MultiCat& cat);

}  // namespace fiatcells
