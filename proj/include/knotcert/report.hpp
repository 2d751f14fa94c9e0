#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotcert/certificate.hpp"
#include "knotcert/link_diagram.hpp"

namespace knotcert {

enum class InputFormat { Auto, Pd, Gauss, Braid, Json };

struct AnalyzeOptions {
  enum class Mode { Analyze, Invariants, Bridges };
  Mode mode = Mode::Analyze;
  InputFormat format = InputFormat::Auto;
  bool assume_nontrivial = false;
  bool json = false;
  /// Worker threads for batch analysis. Output order and bytes are
  /// independent of this value.
  std::uint32_t jobs = 1;
};

/// One input record and what became of it. `error` set means the record
/// failed to parse or validate; `output` then carries the error report.
struct RecordResult {
  std::uint64_t index = 0;
  std::string input;
  bool error = false;
  std::string output;
};

struct BatchResult {
  std::vector<RecordResult> records;
  std::uint64_t parsed = 0;
  std::uint64_t failed = 0;
  /// Fully rendered report, one line per record plus a trailing summary in
  /// JSON mode. Byte-identical across runs and --jobs settings.
  std::string rendered;
};

/// Parses one record in the given format (Auto sniffs: '{' JSON, "BR("
/// braid, leading 'O'/'U' signed code, otherwise crossing-tuple text).
/// Throws ParseError / ValidationError on bad input.
LinkDiagram parse_record(const std::string& line, InputFormat format);

/// Reads records from `in` (one per line; '#' comments and blank lines are
/// skipped; a stream whose first non-space byte is '[' is a JSON array of
/// records), analyzes each, and renders the report. Never throws on record
/// errors: they become error lines and count into the summary.
BatchResult analyze_batch(std::istream& in, const AnalyzeOptions& opts);

/// Renders one certificate as a human-readable text block.
std::string certificate_to_text(const Certificate& cert);

}  // namespace knotcert
