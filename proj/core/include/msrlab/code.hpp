#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msrlab/matrix.hpp"

namespace msrlab {

/// Parameters of an (n, k, d) vector code with sub-packetization alpha.
struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t alpha = 0;
  FieldPtr field;

  std::size_t r() const noexcept { return n - k; }
  std::size_t s() const noexcept { return d - k + 1; }
  std::size_t beta() const noexcept { return alpha / s(); }
  std::size_t B() const noexcept { return k * alpha; }

  /// Throws InvalidParams or DivisibilityError. r == 0 is accepted only with
  /// d == k, the degenerate code that is its own message.
  void validate() const;
};

using Block = std::vector<Elem>;

/// Systematic code: identity blocks on the systematic nodes and the r x k grid
/// of alpha x alpha blocks A_{p_i,u_j} on the parity nodes. Node indices are
/// 0-based here; files and the CLI use 1-based indices.
struct CodeSpec {
  CodeParams params;
  std::vector<std::size_t> systematic;
  std::vector<std::size_t> parity;
  std::vector<Matrix> blocks;  // row-major: blocks[i * k + j] == A_{p_i,u_j}

  const FieldPtr& field() const noexcept { return params.field; }
  const Matrix& A(std::size_t i, std::size_t j) const { return blocks.at(i * params.k + j); }
  Matrix& A(std::size_t i, std::size_t j) { return blocks.at(i * params.k + j); }

  /// Position of node in the systematic / parity list.
  std::optional<std::size_t> systematic_index(std::size_t node) const;
  std::optional<std::size_t> parity_index(std::size_t node) const;

  /// The alpha x k*alpha slice of the generator belonging to node.
  Matrix generator_rows(std::size_t node) const;

  /// Checks the node partition and block shapes; throws BlockSizeMismatch,
  /// InvalidParams or FieldMismatch.
  void validate() const;
};

/// Default layout: systematic nodes 0..k-1, parity nodes k..n-1.
CodeSpec make_systematic_code(CodeParams params, std::vector<Matrix> blocks);

struct Message {
  FieldPtr field;
  std::vector<Block> blocks;  // k blocks of length alpha
};

struct Codeword {
  FieldPtr field;
  std::vector<Block> blocks;  // n blocks ordered by node index
};

/// n*alpha x k*alpha generator, rows grouped by node index.
Matrix assemble_generator(const CodeSpec& spec);

Codeword encode(const CodeSpec& spec, const Message& m);

/// Message with a single 1 at flat position index in [0, k*alpha).
Message basis_message(const CodeSpec& spec, std::size_t index);

struct MdsReport {
  bool pass = true;
  std::size_t minors_checked = 0;
  /// First singular block submatrix: parity positions and systematic positions.
  std::vector<std::size_t> witness_parity;
  std::vector<std::size_t> witness_systematic;
  /// The k-node subset (0-based, sorted) that fails to decode because of it.
  std::vector<std::size_t> witness_nodes;
};

inline constexpr std::size_t kMdsCheckMaxNodes = 12;

/// Block-minor test: every m x m block submatrix of the A grid, 1 <= m <=
/// min(r, k), must be nonsingular. Throws LimitExceeded above 12 nodes.
MdsReport mds_check(const CodeSpec& spec);

/// Recovers the message from the blocks of the given nodes (0-based, any
/// order). Throws Underdetermined when the nodes do not pin the message down
/// and Infeasible when the blocks are not consistent with any codeword.
Message decode_from_nodes(const CodeSpec& spec, const std::vector<std::size_t>& nodes,
                          const std::vector<Block>& symbols);

/// Restriction to the kept nodes (0-based). Kept nodes are renumbered in
/// increasing order; d becomes min(d, n' - 1), or k when nothing but the
/// systematic nodes remains.
CodeSpec puncture(const CodeSpec& spec, const std::vector<std::size_t>& keep);

}  // namespace msrlab
