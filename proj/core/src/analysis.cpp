#include "msrlab/analysis.hpp"

#include <algorithm>

#include "msrlab/combinatorics.hpp"
#include "msrlab/subspace.hpp"

namespace msrlab {
namespace {

void require_wildcard(const RepairScheme& scheme) {
  if (scheme.mode == RepairMode::General)
    throw Error(ErrorKind::ModeMismatch, "analysis needs a helper-set-independent scheme");
}

Subspace repair_space(const CodeSpec& spec, const RepairScheme& scheme, std::size_t p, std::size_t u) {
  const RepairMatrix* m = scheme.find(p, u);
  if (!m)
    throw Error(ErrorKind::MissingMatrix,
                "no repair matrix for helper " + std::to_string(p + 1) + " and failed node " + std::to_string(u + 1));
  return Subspace::row_space(m->matrix(spec.field()));
}

// Positions of the basis rows spanning the space, or NotOptimalAccess.
std::vector<std::size_t> access_positions(const CodeSpec& spec, const RepairMatrix& m) {
  if (m.is_access()) return m.access_rows();
  const Matrix full = m.matrix(spec.field());
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < full.rows(); ++t) {
    std::size_t nonzero = 0, where = 0;
    for (std::size_t c = 0; c < full.cols(); ++c)
      if (full(t, c) != 0) {
        ++nonzero;
        where = c;
      }
    if (nonzero != 1) throw Error(ErrorKind::NotOptimalAccess, "row " + std::to_string(t + 1) + " is not a basis row");
    out.push_back(where);
  }
  return out;
}

std::size_t floor_log(std::size_t base, std::size_t value) {
  std::size_t e = 0;
  for (std::uint64_t p = base; p <= value; p *= base) ++e;
  return e;
}

std::uint64_t ipow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= base;
  return out;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

std::string nodes_text(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

}  // namespace

std::size_t intersection_dim(const CodeSpec& spec, const RepairScheme& scheme, std::size_t p,
                             const std::vector<std::size_t>& U) {
  require_wildcard(scheme);
  if (U.empty()) return spec.params.alpha;
  Subspace acc = repair_space(spec, scheme, p, U.front());
  for (std::size_t i = 1; i < U.size(); ++i) acc = intersect(acc, repair_space(spec, scheme, p, U[i]));
  return acc.dim();
}

InvarianceReport check_invariance(const CodeSpec& spec, const RepairScheme& scheme, const std::vector<std::size_t>& P,
                                  const std::vector<std::size_t>& U) {
  InvarianceReport report;
  for (auto p : P) report.dims[p] = intersection_dim(spec, scheme, p, U);
  for (const auto& [p, dim] : report.dims)
    if (dim != report.dims.begin()->second) report.pass = false;
  return report;
}

InequalityReport check_lemma1_inequality(const CodeSpec& spec, const RepairScheme& scheme,
                                         const std::vector<std::size_t>& P, const std::vector<std::size_t>& U,
                                         std::size_t p) {
  if (U.size() < 2) throw Error(ErrorKind::InvalidParams, "inequality needs |U| >= 2");
  InequalityReport report;
  for (auto pi : P) report.lhs += intersection_dim(spec, scheme, pi, U);
  const std::vector<std::size_t> shorter(U.begin(), U.end() - 1);
  report.rhs = intersection_dim(spec, scheme, p, shorter);
  report.pass = report.lhs <= report.rhs;
  return report;
}

CascadeReport check_cascade(const CodeSpec& spec, const RepairScheme& scheme, std::size_t p,
                            const std::vector<std::size_t>& U) {
  CascadeReport report;
  const std::uint64_t s = spec.params.s(), alpha = spec.params.alpha;
  report.dim = intersection_dim(spec, scheme, p, U);
  // dim <= floor(alpha / s^|U|)  <=>  dim * s^|U| <= alpha, evaluated without overflow.
  std::uint64_t scaled = report.dim;
  for (std::size_t i = 0; i < U.size() && scaled <= alpha; ++i) scaled *= s;
  report.holds = scaled <= alpha;
  const std::uint64_t k = spec.params.k;
  report.enforced = !(U.size() >= k && alpha >= ipow(s, k - 1));
  report.pass = report.holds || !report.enforced;
  return report;
}

MembershipReport max_membership(const CodeSpec& spec, const RepairScheme& scheme, std::optional<std::size_t> p) {
  require_wildcard(scheme);
  const std::size_t alpha = spec.params.alpha, s = spec.params.s();
  MembershipReport report;
  report.per_vector.assign(alpha, 0);
  report.exempt = alpha == 1 || s == 1;
  report.bound = s >= 2 ? floor_log(s, alpha) : 0;
  for (const auto& [key, m] : scheme.entries) {
    if (scheme.mode == RepairMode::HelperIndependent) {
      if (!p) throw Error(ErrorKind::InvalidParams, "a helper is needed for a helper-dependent scheme");
      if (key.helper != p) continue;
    }
    for (auto t : access_positions(spec, m)) ++report.per_vector[t];
  }
  report.max = report.per_vector.empty() ? 0 : *std::max_element(report.per_vector.begin(), report.per_vector.end());
  report.pass = report.exempt || report.max <= report.bound;
  return report;
}

std::string to_string(AuditMode mode) {
  switch (mode) {
    case AuditMode::Thm1: return "thm1";
    case AuditMode::Cor2: return "cor2";
    case AuditMode::Cor3: return "cor3";
  }
  return "unknown";
}

AuditMode parse_audit_mode(const std::string& text) {
  if (text == "thm1") return AuditMode::Thm1;
  if (text == "cor2") return AuditMode::Cor2;
  if (text == "cor3") return AuditMode::Cor3;
  throw Error(ErrorKind::InvalidParams, "unknown audit mode '" + text + "'");
}

AuditReport bipartite_audit(const CodeSpec& spec, const RepairScheme& scheme, AuditMode mode) {
  require_wildcard(scheme);
  const std::size_t n = spec.params.n, alpha = spec.params.alpha, s = spec.params.s();
  const std::size_t beta = bandwidth(spec.params).beta;
  AuditReport report;
  report.mode = mode;

  std::vector<std::size_t> right;
  switch (mode) {
    case AuditMode::Thm1:
      report.helper = n - 1;
      right = iota_nodes(n - 1);
      break;
    case AuditMode::Cor3:
      if (scheme.mode != RepairMode::Constant)
        throw Error(ErrorKind::ModeMismatch, "cor3 audit needs a constant scheme");
      right = iota_nodes(n);
      break;
    case AuditMode::Cor2: {
      right = scheme.w_nodes;
      std::sort(right.begin(), right.end());
      for (std::size_t h = n; h-- > 0;)
        if (!std::binary_search(right.begin(), right.end(), h)) {
          report.helper = h;
          break;
        }
      if (!report.helper) throw Error(ErrorKind::InvalidParams, "W covers every node");
      break;
    }
  }
  report.right_nodes = right;
  report.left_degree.assign(alpha, 0);
  for (auto j : right) {
    const RepairMatrix* m = report.helper ? scheme.find(*report.helper, j) : scheme.find(0, j);
    if (!m)
      throw Error(ErrorKind::MissingMatrix, "no repair matrix for failed node " + std::to_string(j + 1));
    auto pos = access_positions(spec, *m);
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    report.right_degree.push_back(pos.size());
    report.right_sum += pos.size();
    for (auto t : pos) ++report.left_degree[t];
  }
  for (auto deg : report.left_degree) {
    report.left_sum += deg;
    ++report.left_histogram[deg];
    report.max_left_degree = std::max(report.max_left_degree, deg);
  }
  report.edge_identity = report.left_sum == report.right_sum && report.right_sum == beta * right.size();
  if (s >= 2) {
    report.log_bound = floor_log(s, alpha);
    report.bound_applies = report.max_left_degree <= report.log_bound;
    report.implied_bound = ipow(s, ceil_div(right.size(), s));
    report.recomputed_bound = ipow(s, ceil_div(report.right_sum, alpha));
  } else {
    report.bound_applies = false;
  }
  report.saturated = report.bound_applies && report.implied_bound == alpha;
  return report;
}

ProofAuditReport proof_audit(const CodeSpec& spec, const RepairScheme& scheme, std::size_t max_u) {
  ProofAuditReport report;
  const std::size_t s = spec.params.s(), k = spec.params.k;
  std::vector<std::size_t> w = scheme.w_nodes;
  std::sort(w.begin(), w.end());
  const auto nodes = iota_nodes(spec.params.n);

  for (std::size_t size = 1; size <= std::min(max_u, w.size()); ++size) {
    for_each_subset(w, size, [&](const std::vector<std::size_t>& U) {
      const auto others = without(nodes, U);
      for (auto p : others) {
        ++report.cascade_checked;
        if (!check_cascade(spec, scheme, p, U).pass) {
          report.pass = false;
          report.failures.push_back("cascade U=" + nodes_text(U) + " p=" + std::to_string(p + 1));
        }
      }
      if (size < 2 || size > k - 1) return;
      for_each_subset(others, s, [&](const std::vector<std::size_t>& P) {
        ++report.invariance_checked;
        if (!check_invariance(spec, scheme, P, U).pass) {
          report.pass = false;
          report.failures.push_back("invariance U=" + nodes_text(U) + " P=" + nodes_text(P));
        }
        for (std::size_t last = 0; last < U.size(); ++last) {
          std::vector<std::size_t> ordered = without(U, {U[last]});
          ordered.push_back(U[last]);
          for (auto p : P) {
            ++report.inequality_checked;
            if (!check_lemma1_inequality(spec, scheme, P, ordered, p).pass) {
              report.pass = false;
              report.failures.push_back("inequality U=" + nodes_text(ordered) + " P=" + nodes_text(P) +
                                        " p=" + std::to_string(p + 1));
            }
          }
        }
      });
    });
  }
  return report;
}

}  // namespace msrlab
