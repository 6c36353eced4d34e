#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msrlab/code.hpp"

namespace msrlab {

enum class RepairMode { General, HelperIndependent, Constant };

std::string to_string(RepairMode mode);
RepairMode parse_repair_mode(const std::string& text);

/// beta x alpha repair matrix, either a list of accessed rows (0-based) or a
/// full matrix. Construction enforces rank beta.
class RepairMatrix {
 public:
  static RepairMatrix access(std::vector<std::size_t> rows, std::size_t alpha);
  static RepairMatrix full(Matrix m);

  bool is_access() const noexcept { return std::holds_alternative<std::vector<std::size_t>>(value_); }
  const std::vector<std::size_t>& access_rows() const { return std::get<std::vector<std::size_t>>(value_); }
  const Matrix& full_matrix() const { return std::get<Matrix>(value_); }

  std::size_t beta() const noexcept;
  std::size_t alpha() const noexcept { return alpha_; }
  Matrix matrix(const FieldPtr& field) const;

  bool operator==(const RepairMatrix& other) const;

 private:
  RepairMatrix(std::variant<std::vector<std::size_t>, Matrix> value, std::size_t alpha)
      : value_(std::move(value)), alpha_(alpha) {}
  std::variant<std::vector<std::size_t>, Matrix> value_;
  std::size_t alpha_;
};

/// (helper, failed, helper set); a missing helper or helper set is a wildcard.
struct RepairKey {
  std::optional<std::size_t> helper;
  std::size_t failed = 0;
  std::optional<std::vector<std::size_t>> helpers;

  auto operator<=>(const RepairKey&) const = default;
};

/// 1-based text form "i,j", "i,j,D..." or "*,j" for a constant entry.
std::string to_string(const RepairKey& key);

struct RepairScheme {
  RepairMode mode = RepairMode::Constant;
  std::vector<std::size_t> w_nodes;
  std::map<RepairKey, RepairMatrix> entries;

  void set_constant(std::size_t failed, RepairMatrix m);
  void set(std::size_t helper, std::size_t failed, RepairMatrix m);
  void set(std::size_t helper, std::size_t failed, std::vector<std::size_t> helpers, RepairMatrix m);

  /// The matrix a helper applies when failed is repaired from helpers, or
  /// null when the scheme does not define it.
  const RepairMatrix* find(std::size_t helper, std::size_t failed, const std::vector<std::size_t>& helpers) const;
  /// Wildcard-mode lookup; null when undefined or the scheme is general.
  const RepairMatrix* find(std::size_t helper, std::size_t failed) const;

  /// Key shapes must match the mode, every matrix must be beta x alpha of
  /// rank beta and W must lie inside the code. Throws InvalidParams,
  /// ModeMismatch or BlockSizeMismatch.
  void validate(const CodeSpec& spec) const;
};

struct CombinationMap {
  std::size_t failed = 0;
  std::vector<std::size_t> helpers;
  std::vector<Matrix> T;  // alpha x beta per helper, same order as helpers
};

struct Bandwidth {
  std::size_t beta = 0;
  std::size_t total = 0;
};

Bandwidth bandwidth(const CodeParams& params);

/// Solves sum_i T_i S_i G_i == G_j over the helpers in one linear system.
/// Throws Infeasible when the scheme cannot repair failed from helpers and
/// MissingMatrix when a repair matrix is undefined.
CombinationMap derive_combination(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed,
                                  const std::vector<std::size_t>& helpers);
std::optional<CombinationMap> try_derive_combination(const CodeSpec& spec, const RepairScheme& scheme,
                                                     std::size_t failed, const std::vector<std::size_t>& helpers);

struct RepairResult {
  Block block;
  std::size_t downloaded = 0;
};

RepairResult repair_node(const CodeSpec& spec, const RepairScheme& scheme, const Codeword& c, std::size_t failed,
                         const std::vector<std::size_t>& helpers);

struct AlignmentFailure {
  std::size_t parity = 0;      // node index
  std::size_t systematic = 0;  // node index of u_b
};

struct AlignmentReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<AlignmentFailure> failures;
};

/// <S_(u_b,j)> == <S_(p_i,j) A_{p_i,u_b}> for every parity p_i and every
/// systematic u_b != j. Needs a systematic j in W and a wildcard-mode scheme.
AlignmentReport check_interference_alignment(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed);

struct FullRankReport {
  bool pass = false;
  std::size_t rank = 0;
  std::size_t alpha = 0;
};

/// Rank of the stacked S_i * (block column j of G_i) over i in helpers, taken
/// modulo the stacked block columns of systematic nodes outside the helper
/// set (their symbols are not downloaded and must be cancelled).
FullRankReport check_full_rank(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed,
                               const std::vector<std::size_t>& helpers);

struct AccessOffender {
  RepairKey key;
  std::size_t row = 0;
};

struct AccessReport {
  bool pass = true;
  std::vector<AccessOffender> offenders;
  /// Accessed positions per entry where every row is a (scaled) basis row.
  std::map<RepairKey, std::vector<std::size_t>> pattern;
};

/// strict: rows must be standard basis vectors; lenient: nonzero multiples.
AccessReport check_optimal_access(const RepairScheme& scheme, bool strict = true);

struct SweepFailure {
  std::size_t failed = 0;
  std::vector<std::size_t> helpers;
  std::string reason;
};

struct SweepReport {
  bool pass = true;
  std::size_t pairs = 0;
  std::size_t messages = 0;
  std::vector<SweepFailure> failures;
};

/// Every j in W against every d-subset of the other nodes: derives the
/// combination and checks exact repair on all k*alpha basis messages.
SweepReport repair_sweep(const CodeSpec& spec, const RepairScheme& scheme);

}  // namespace msrlab
