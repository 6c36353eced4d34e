#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msrlab/repair.hpp"

namespace msrlab {

// All node arguments are 0-based. Schemes must be helper-set independent
// (constant or helper_independent); S_(p,u) is looked up with helper p.

/// dim of the intersection of <S_(p,u)> over u in U. Throws MissingMatrix.
std::size_t intersection_dim(const CodeSpec& spec, const RepairScheme& scheme, std::size_t p,
                             const std::vector<std::size_t>& U);

struct InvarianceReport {
  bool pass = true;
  std::map<std::size_t, std::size_t> dims;  // helper -> intersection dim
};

InvarianceReport check_invariance(const CodeSpec& spec, const RepairScheme& scheme, const std::vector<std::size_t>& P,
                                  const std::vector<std::size_t>& U);

struct InequalityReport {
  bool pass = true;
  std::size_t lhs = 0;  // sum over P of the |U|-fold dims
  std::size_t rhs = 0;  // (|U|-1)-fold dim at p, U without its last element
};

/// Needs |U| >= 2.
InequalityReport check_lemma1_inequality(const CodeSpec& spec, const RepairScheme& scheme,
                                         const std::vector<std::size_t>& P, const std::vector<std::size_t>& U,
                                         std::size_t p);

struct CascadeReport {
  bool pass = true;
  bool holds = true;     // dim * s^|U| <= alpha
  bool enforced = true;  // false for |U| >= k when alpha >= s^(k-1)
  std::size_t dim = 0;
};

/// dim <= alpha / s^|U| in exact integers. Outside the region where the
/// inequality is claimed, holds is reported and pass stays true.
CascadeReport check_cascade(const CodeSpec& spec, const RepairScheme& scheme, std::size_t p,
                            const std::vector<std::size_t>& U);

struct MembershipReport {
  bool pass = true;
  bool exempt = false;  // alpha == 1 or s == 1
  std::size_t max = 0;
  std::size_t bound = 0;                 // floor(log_s alpha)
  std::vector<std::size_t> per_vector;   // e_t -> number of spaces containing it
};

/// Counts, for each e_t, the repair spaces that contain it. The spaces are
/// S_j for a constant scheme, otherwise S_(p,j) for the given helper p.
/// Throws NotOptimalAccess when a matrix is not made of scaled basis rows.
MembershipReport max_membership(const CodeSpec& spec, const RepairScheme& scheme,
                                std::optional<std::size_t> p = std::nullopt);

enum class AuditMode { Thm1, Cor2, Cor3 };

std::string to_string(AuditMode mode);
AuditMode parse_audit_mode(const std::string& text);

struct AuditReport {
  AuditMode mode = AuditMode::Cor2;
  std::optional<std::size_t> helper;          // the distinguished helper, if any
  std::vector<std::size_t> right_nodes;       // failed node of each right vertex
  std::vector<std::size_t> left_degree;       // per e_t
  std::vector<std::size_t> right_degree;      // per right vertex
  std::map<std::size_t, std::size_t> left_histogram;  // degree -> count
  std::size_t left_sum = 0;
  std::size_t right_sum = 0;
  bool edge_identity = true;  // left_sum == right_sum == beta * #right
  std::size_t max_left_degree = 0;
  std::size_t log_bound = 0;  // floor(log_s alpha)
  bool bound_applies = true;  // max_left_degree <= log_bound
  std::uint64_t implied_bound = 1;     // s^ceil(#right / s)
  std::uint64_t recomputed_bound = 1;  // s^ceil(right_sum / alpha)
  bool saturated = false;              // implied_bound == alpha
};

/// Bipartite graph between e_1..e_alpha and the repair spaces of the mode:
/// Thm1: S_(n,j), j != n; Cor3: S_j for all j; Cor2: S_(h,j), j in W, where h
/// is the largest node outside W. Throws NotOptimalAccess or MissingMatrix.
AuditReport bipartite_audit(const CodeSpec& spec, const RepairScheme& scheme, AuditMode mode);

struct ProofAuditReport {
  bool pass = true;
  std::size_t invariance_checked = 0;
  std::size_t inequality_checked = 0;
  std::size_t cascade_checked = 0;
  std::vector<std::string> failures;
};

/// Runs invariance and the intersection inequality for every U in W with
/// 2 <= |U| <= min(max_u, k-1), every s-subset P of the other nodes and every
/// p in P (each element of U taking the "last" role), plus the cascade for
/// every U in W with 1 <= |U| <= max_u and every helper outside U.
ProofAuditReport proof_audit(const CodeSpec& spec, const RepairScheme& scheme, std::size_t max_u = 3);

}  // namespace msrlab
