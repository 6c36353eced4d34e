#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msrlab/repair.hpp"

namespace msrlab {

/// Construction metadata carried in the optional "structure" section. Node
/// indices and positions here are 0-based; the file stores them 1-based.
struct StructureMeta {
  int case_id = 2;
  std::size_t Q = 0;
  /// Per repairable node: the support of each of its v rows.
  std::vector<std::vector<std::vector<std::size_t>>> supports;
  std::vector<std::string> coefficient_sources;

  bool operator==(const StructureMeta&) const = default;
};

struct CodeFile {
  CodeSpec spec;
  std::optional<RepairScheme> scheme;
  std::optional<StructureMeta> structure;
};

/// Canonical JSON text: fixed key order, two-space indentation, arrays of
/// numbers on one line. deserialize followed by serialize reproduces the text
/// byte for byte.
std::string serialize(const CodeFile& file);

/// Throws ParseError naming the offending path; unknown keys are rejected.
CodeFile deserialize(const std::string& text);

CodeFile read_code_file(const std::string& path);
void write_code_file(const std::string& path, const CodeFile& file);

}  // namespace msrlab
