#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "msrlab/repair.hpp"

namespace msrlab {

inline constexpr std::uint64_t kSearchMaxCandidates = std::uint64_t{1} << 24;

/// Per-helper access lists for one failed node: lists[h] belongs to the h-th
/// node other than the failed one, in increasing node order.
using AccessCandidate = std::vector<std::vector<std::size_t>>;

struct SearchSpec {
  CodeSpec spec;
  std::vector<std::size_t> targets;  // 0-based, repaired nodes
  std::uint64_t max_candidates = kSearchMaxCandidates;  // per target node
};

struct NodeStats {
  std::size_t node = 0;
  std::uint64_t candidates = 0;
  std::uint64_t feasible_count = 0;
};

struct SearchStats {
  std::vector<NodeStats> per_node;
  double elapsed_ms = 0;
};

struct SearchResult {
  std::optional<RepairScheme> found;
  SearchStats stats;
};

/// True iff the candidate repairs failed from every d-subset of the other
/// nodes (a single subset when d = n-1).
bool node_feasible(const CodeSpec& spec, std::size_t failed, const AccessCandidate& candidate);

/// True iff the candidate repairs failed from the given helper set.
bool node_feasible(const CodeSpec& spec, std::size_t failed, const AccessCandidate& candidate,
                   const std::vector<std::size_t>& helpers);

/// Enumerates C(alpha,beta)^(n-1) access candidates per target node in
/// mixed-radix order (first helper most significant, lexicographic lists) and
/// keeps the first feasible one. Repair of one node only involves that node's
/// matrices, so the nodes are searched independently. The returned scheme is
/// helper independent with W = targets. Throws LimitExceeded.
SearchResult exhaustive_search(const SearchSpec& sspec);

/// {"per_node": [{"node", "candidates", "feasible_count"}], "elapsed_ms"}, 1-based nodes.
std::string stats_json(const SearchStats& stats);

}  // namespace msrlab
