#include "msrlab/bounds.hpp"

#include <algorithm>

namespace msrlab {
namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::string power_text(std::uint64_t base, std::uint64_t num, std::uint64_t den) {
  return std::to_string(base) + "^ceil(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

// min{b^ceil(top/b), b^(k-1)}
BoundResult min_form(std::uint64_t b, std::uint64_t top, std::uint64_t k) {
  const BigInt first = big_pow(b, ceil_div(top, b));
  const BigInt second = big_pow(b, k - 1);
  BoundResult out;
  out.formula = "min{" + power_text(b, top, b) + ", " + std::to_string(b) + "^" + std::to_string(k - 1) + "}";
  if (first <= second) {
    out.value = first;
    out.branch = "min-first";
  } else {
    out.value = second;
    out.branch = "min-second";
  }
  return out;
}

BoundResult subset_form(std::uint64_t b, std::uint64_t w, std::uint64_t k) {
  if (w > k - 1) return min_form(b, w, k);
  BoundResult out;
  out.value = big_pow(b, ceil_div(w, b));
  out.branch = "unconditional";
  out.formula = power_text(b, w, b);
  return out;
}

}  // namespace

std::string to_string(BoundMode mode) {
  switch (mode) {
    case BoundMode::MsrAllNode: return "msr";
    case BoundMode::MsrConstant: return "msr-const";
    case BoundMode::MsrAnyDHelperIndep: return "msr-anyd";
    case BoundMode::MdsSubset: return "mds-subset";
    case BoundMode::MdsSubsetAnyD: return "mds-subset-anyd";
  }
  return "unknown";
}

BoundMode parse_bound_mode(const std::string& text) {
  for (auto m : {BoundMode::MsrAllNode, BoundMode::MsrConstant, BoundMode::MsrAnyDHelperIndep, BoundMode::MdsSubset,
                 BoundMode::MdsSubsetAnyD})
    if (to_string(m) == text) return m;
  throw Error(ErrorKind::InvalidParams, "unknown bound mode '" + text + "'");
}

BoundResult bound(const BoundQuery& q) {
  if (q.k < 1 || q.k > q.d || q.d + 1 > q.n)
    throw Error(ErrorKind::InvalidParams, "need 1 <= k <= d <= n-1");
  const std::uint64_t r = q.n - q.k, s = q.d - q.k + 1;
  const bool full_d = q.d == q.n - 1;
  const bool subset = q.mode == BoundMode::MdsSubset || q.mode == BoundMode::MdsSubsetAnyD;
  if (subset && !q.w) throw Error(ErrorKind::InvalidParams, "subset modes need w");
  if (!subset && q.w) throw Error(ErrorKind::InvalidParams, "w only applies to subset modes");
  switch (q.mode) {
    case BoundMode::MsrAllNode:
      if (!full_d) throw Error(ErrorKind::InvalidParams, "mode msr needs d = n-1");
      return min_form(r, q.n - 1, q.k);
    case BoundMode::MsrConstant:
      if (!full_d) throw Error(ErrorKind::InvalidParams, "mode msr-const needs d = n-1");
      return min_form(r, q.n, q.k);
    case BoundMode::MsrAnyDHelperIndep:
      return min_form(s, q.n - 1, q.k);
    case BoundMode::MdsSubset:
      if (!full_d) throw Error(ErrorKind::InvalidParams, "mode mds-subset needs d = n-1");
      if (*q.w < 1 || *q.w > q.n - 1) throw Error(ErrorKind::InvalidParams, "need 1 <= w <= n-1");
      return subset_form(r, *q.w, q.k);
    case BoundMode::MdsSubsetAnyD:
      if (*q.w < 1 || *q.w > q.d) throw Error(ErrorKind::InvalidParams, "need 1 <= w <= d");
      return subset_form(s, *q.w, q.k);
  }
  throw Error(ErrorKind::InvalidParams, "unknown mode");
}

std::string previous_bound(BoundMode mode) {
  switch (mode) {
    case BoundMode::MsrAllNode: return "alpha >= r^((k-1)/r)";
    case BoundMode::MsrConstant: return "alpha >= r^(k/r)";
    case BoundMode::MdsSubset: return "alpha >= r^((k-1)/r) for w = k";
    case BoundMode::MsrAnyDHelperIndep:
    case BoundMode::MdsSubsetAnyD: return "none";
  }
  return "none";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Achieves: return "achieves";
    case Verdict::Exceeds: return "exceeds";
    case Verdict::Violates: return "violates";
  }
  return "unknown";
}

Comparison compare(const CodeSpec& spec, const RepairScheme& scheme, const BoundQuery& q) {
  const auto& p = spec.params;
  if (q.n != p.n || q.k != p.k || q.d != p.d)
    throw Error(ErrorKind::ModeMismatch, "query parameters differ from the code");
  const bool subset = q.mode == BoundMode::MdsSubset || q.mode == BoundMode::MdsSubsetAnyD;
  if (subset) {
    if (q.w && *q.w > scheme.w_nodes.size())
      throw Error(ErrorKind::ModeMismatch, "w exceeds the number of repairable nodes");
  } else if (scheme.w_nodes.size() != p.n) {
    throw Error(ErrorKind::ModeMismatch, "mode " + to_string(q.mode) + " needs every node repairable");
  }
  if (q.mode == BoundMode::MsrConstant && scheme.mode != RepairMode::Constant)
    throw Error(ErrorKind::ModeMismatch, "msr-const needs a constant scheme");
  if (q.mode == BoundMode::MsrAnyDHelperIndep && scheme.mode == RepairMode::General)
    throw Error(ErrorKind::ModeMismatch, "msr-anyd needs helper-set-independent matrices");

  const auto b = bound(q);
  Comparison out;
  out.bound = b.value;
  out.alpha = p.alpha;
  if (BigInt(p.alpha) == b.value) {
    out.verdict = Verdict::Achieves;
  } else if (BigInt(p.alpha) > b.value) {
    out.verdict = Verdict::Exceeds;
  } else {
    const auto access = check_optimal_access(scheme, false);
    const auto sweep = repair_sweep(spec, scheme);
    if (!access.pass || !sweep.pass)
      throw Error(ErrorKind::ModeMismatch, "scheme is not an optimal-access repair scheme for this code");
    out.verdict = Verdict::Violates;
    out.detail = "alpha=" + std::to_string(p.alpha) + " is below " + b.formula + " = " + b.value.str() +
                 " although all " + std::to_string(sweep.pairs) + " repairs succeed; this is an implementation bug";
  }
  return out;
}

}  // namespace msrlab
