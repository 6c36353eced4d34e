#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>

#include "msrlab/repair.hpp"

namespace msrlab {

using BigInt = boost::multiprecision::cpp_int;

/// Lower bounds on alpha for optimal-access repair.
enum class BoundMode {
  MsrAllNode,          // d = n-1, all nodes repaired
  MsrConstant,         // d = n-1, S_(i,j) = S_j
  MsrAnyDHelperIndep,  // any d, S^D_(i,j) = S_(i,j)
  MdsSubset,           // d = n-1, w nodes repaired
  MdsSubsetAnyD,       // any d, w <= d nodes repaired
};

/// CLI names: msr, msr-const, msr-anyd, mds-subset, mds-subset-anyd.
std::string to_string(BoundMode mode);
BoundMode parse_bound_mode(const std::string& text);

struct BoundQuery {
  BoundMode mode = BoundMode::MsrAllNode;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::optional<std::uint64_t> w;  // subset modes only
};

struct BoundResult {
  BigInt value;
  std::string branch;   // "min-first", "min-second" or "unconditional"
  std::string formula;  // the instantiated expression
};

/// Exact integer bound. Throws InvalidParams when the query is outside the
/// mode's hypotheses (the d = n-1 modes reject any other d).
BoundResult bound(const BoundQuery& q);

/// Previously known bound for the mode, as display text.
std::string previous_bound(BoundMode mode);

enum class Verdict { Achieves, Exceeds, Violates };
std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Achieves;
  BigInt bound;
  std::size_t alpha = 0;
  std::string detail;
};

/// Compares a code's alpha with the bound of a matching query. Throws
/// ModeMismatch when the parameters or the scheme do not fit the mode. A
/// Violates verdict is only returned after the scheme passed a full repair
/// sweep, and carries diagnostics.
Comparison compare(const CodeSpec& spec, const RepairScheme& scheme, const BoundQuery& q);

}  // namespace msrlab
