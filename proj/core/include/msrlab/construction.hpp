#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msrlab/serialize.hpp"

namespace msrlab {

struct ConstructionConfig {
  std::uint64_t seed = 1;
  std::size_t max_retries = 64;
};

/// Deterministic sampling shared by the constructors: draws use rng() % n so
/// the sequence does not depend on the standard library's distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  Elem nonzero(const Field& f) { return static_cast<Elem>(1 + below(f.order() - 1)); }
  /// count distinct values from pool, in draw order.
  std::vector<Elem> distinct(std::vector<Elem> pool, std::size_t count);

 private:
  std::mt19937_64 rng_;
};

/// Coefficients of a Case-2 code (alpha = Q = d-k+1, beta = 1).
struct Case2Form {
  std::size_t Q = 0;
  std::vector<std::vector<Block>> v;     // v[i][j]: row j of A_{p_i,u_j}, j < Q
  std::vector<std::vector<Block>> diag;  // diag[i][j][t]: entry (t,t) of A_{p_i,u_j}, j < Q, t != j
  std::vector<Matrix> p_prime;           // per plane l < Q: r x (k-Q) diagonal entries
};

/// Coefficients of a Case-1 code (Q = k, alpha = s^(k/s)).
struct Case1Form {
  std::size_t s = 0;
  std::size_t digits = 0;                                  // k / s
  std::vector<std::vector<std::size_t>> access;            // per systematic j
  std::vector<std::vector<std::vector<std::size_t>>> supports;  // [j][t]
};

struct BuiltCode {
  CodeSpec spec;
  RepairScheme scheme;
  StructureMeta meta;
  std::size_t attempts = 0;

  CodeFile file() const { return {spec, scheme, meta}; }
};

struct Case2Build : BuiltCode {
  Case2Form form;
};

struct Case1Build : BuiltCode {
  Case1Form form;
};

/// Throws ParamViolation or ConstructionFailed.
Case2Build build_case2(std::size_t n, std::size_t k, std::size_t d, const FieldPtr& field,
                       const ConstructionConfig& config = {});

/// n = 8, k = 4, d = 6, alpha = 3; needs q >= 8.
Case2Build build_coupled_example(const FieldPtr& field, const ConstructionConfig& config = {});

Case1Build build_case1(std::size_t n, std::size_t k, std::size_t d, const FieldPtr& field,
                       const ConstructionConfig& config = {});

/// Random dense blocks, resampled until mds_check passes. Systematic layout.
CodeSpec random_mds_code(std::size_t n, std::size_t k, std::size_t d, std::size_t alpha, const FieldPtr& field,
                         std::uint64_t seed, std::size_t max_retries = 256);

struct StructureItem {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct StructureReport {
  bool pass = true;
  std::vector<StructureItem> items;
};

StructureReport verify_structure_case1(const CodeSpec& spec, const RepairScheme& scheme);
StructureReport verify_structure_case2(const CodeSpec& spec, const RepairScheme& scheme);

/// r*alpha x n*alpha matrix [-A | I] with column blocks in node order and
/// row blocks in parity order; H * c == 0 for every codeword.
Matrix parity_check_matrix(const CodeSpec& spec);

/// Rows regrouped by plane (row l of every parity block) and columns by plane
/// (symbol l of every node).
Matrix plane_ordered(const Matrix& h, std::size_t alpha);

/// Rebuilds the code from a parity-check matrix of the form [-A | I] in the
/// default systematic layout.
CodeSpec code_from_parity_check(const Matrix& h, const CodeParams& params);

/// Parity-check matrix written directly from the Case-2 coefficients.
Matrix case2_parity_check(const Case2Form& form, const CodeParams& params);

}  // namespace msrlab
