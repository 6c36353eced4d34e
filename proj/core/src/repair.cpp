#include "msrlab/repair.hpp"

#include <algorithm>
#include <sstream>

#include "msrlab/combinatorics.hpp"
#include "msrlab/parallel.hpp"
#include "msrlab/subspace.hpp"

namespace msrlab {

std::string to_string(RepairMode mode) {
  switch (mode) {
    case RepairMode::General: return "general";
    case RepairMode::HelperIndependent: return "helper_independent";
    case RepairMode::Constant: return "constant";
  }
  return "unknown";
}

RepairMode parse_repair_mode(const std::string& text) {
  if (text == "general") return RepairMode::General;
  if (text == "helper_independent") return RepairMode::HelperIndependent;
  if (text == "constant") return RepairMode::Constant;
  throw Error(ErrorKind::ParseError, "unknown repair mode '" + text + "'");
}

RepairMatrix RepairMatrix::access(std::vector<std::size_t> rows, std::size_t alpha) {
  if (rows.empty()) throw Error(ErrorKind::InvalidParams, "access list is empty");
  std::vector<std::size_t> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidParams, "access list has repeated rows");
  if (sorted.back() >= alpha) throw Error(ErrorKind::InvalidParams, "access row out of range");
  return RepairMatrix(std::move(rows), alpha);
}

RepairMatrix RepairMatrix::full(Matrix m) {
  if (m.rows() == 0) throw Error(ErrorKind::InvalidParams, "repair matrix has no rows");
  if (rank(m) != m.rows()) throw Error(ErrorKind::InvalidParams, "repair matrix rank is below its row count");
  const std::size_t alpha = m.cols();
  return RepairMatrix(std::move(m), alpha);
}

std::size_t RepairMatrix::beta() const noexcept {
  return is_access() ? access_rows().size() : full_matrix().rows();
}

Matrix RepairMatrix::matrix(const FieldPtr& field) const {
  if (!is_access()) {
    if (!same_field(field, full_matrix().field())) throw Error(ErrorKind::FieldMismatch, "repair matrix field");
    return full_matrix();
  }
  const auto& rows = access_rows();
  Matrix m(field, rows.size(), alpha_);
  for (std::size_t t = 0; t < rows.size(); ++t) m(t, rows[t]) = 1;
  return m;
}

bool RepairMatrix::operator==(const RepairMatrix& other) const {
  if (alpha_ != other.alpha_ || is_access() != other.is_access()) return false;
  return is_access() ? access_rows() == other.access_rows() : full_matrix() == other.full_matrix();
}

std::string to_string(const RepairKey& key) {
  std::ostringstream os;
  if (key.helper)
    os << *key.helper + 1;
  else
    os << '*';
  os << ',' << key.failed + 1;
  if (key.helpers)
    for (auto h : *key.helpers) os << ',' << h + 1;
  return os.str();
}

void RepairScheme::set_constant(std::size_t failed, RepairMatrix m) {
  entries.insert_or_assign(RepairKey{std::nullopt, failed, std::nullopt}, std::move(m));
}

void RepairScheme::set(std::size_t helper, std::size_t failed, RepairMatrix m) {
  entries.insert_or_assign(RepairKey{helper, failed, std::nullopt}, std::move(m));
}

void RepairScheme::set(std::size_t helper, std::size_t failed, std::vector<std::size_t> helpers, RepairMatrix m) {
  std::sort(helpers.begin(), helpers.end());
  entries.insert_or_assign(RepairKey{helper, failed, std::move(helpers)}, std::move(m));
}

const RepairMatrix* RepairScheme::find(std::size_t helper, std::size_t failed,
                                       const std::vector<std::size_t>& helpers) const {
  if (mode == RepairMode::General) {
    std::vector<std::size_t> sorted = helpers;
    std::sort(sorted.begin(), sorted.end());
    auto it = entries.find(RepairKey{helper, failed, std::move(sorted)});
    return it == entries.end() ? nullptr : &it->second;
  }
  return find(helper, failed);
}

const RepairMatrix* RepairScheme::find(std::size_t helper, std::size_t failed) const {
  if (mode == RepairMode::General) return nullptr;
  RepairKey key{mode == RepairMode::Constant ? std::nullopt : std::optional<std::size_t>(helper), failed, std::nullopt};
  auto it = entries.find(key);
  return it == entries.end() ? nullptr : &it->second;
}

void RepairScheme::validate(const CodeSpec& spec) const {
  const std::size_t n = spec.params.n, alpha = spec.params.alpha;
  const std::size_t beta = bandwidth(spec.params).beta;
  for (auto w : w_nodes)
    if (w >= n) throw Error(ErrorKind::InvalidParams, "repairable node " + std::to_string(w + 1) + " out of range");
  for (const auto& [key, m] : entries) {
    const bool has_helper = key.helper.has_value(), has_set = key.helpers.has_value();
    const bool shape_ok = (mode == RepairMode::Constant && !has_helper && !has_set) ||
                          (mode == RepairMode::HelperIndependent && has_helper && !has_set) ||
                          (mode == RepairMode::General && has_helper && has_set);
    if (!shape_ok)
      throw Error(ErrorKind::ModeMismatch, "entry " + to_string(key) + " does not fit mode " + to_string(mode));
    if (key.failed >= n || (has_helper && (*key.helper >= n || *key.helper == key.failed)))
      throw Error(ErrorKind::InvalidParams, "entry " + to_string(key) + " names an invalid node");
    if (has_set) {
      const auto& hs = *key.helpers;
      if (hs.size() != spec.params.d || std::find(hs.begin(), hs.end(), key.failed) != hs.end() ||
          std::find(hs.begin(), hs.end(), *key.helper) == hs.end())
        throw Error(ErrorKind::InvalidParams, "entry " + to_string(key) + " has an invalid helper set");
    }
    if (m.alpha() != alpha || m.beta() != beta)
      throw Error(ErrorKind::BlockSizeMismatch, "entry " + to_string(key) + " must be " + std::to_string(beta) + "x" +
                                                    std::to_string(alpha));
    if (!m.is_access() && rank(m.full_matrix()) != beta)
      throw Error(ErrorKind::InvalidParams, "entry " + to_string(key) + " is not of full rank");
  }
}

Bandwidth bandwidth(const CodeParams& params) {
  if (params.d < params.k) throw Error(ErrorKind::InvalidParams, "d must be at least k");
  const std::size_t s = params.s();
  if (params.alpha % s != 0)
    throw Error(ErrorKind::DivisibilityError,
                "s=" + std::to_string(s) + " does not divide alpha=" + std::to_string(params.alpha));
  const std::size_t beta = params.alpha / s;
  return {beta, params.d * beta};
}

namespace {

void check_helper_set(const CodeSpec& spec, std::size_t failed, const std::vector<std::size_t>& helpers) {
  if (failed >= spec.params.n) throw Error(ErrorKind::InvalidParams, "failed node out of range");
  if (helpers.size() != spec.params.d)
    throw Error(ErrorKind::InvalidParams, "helper set must have d=" + std::to_string(spec.params.d) + " nodes");
  std::vector<std::size_t> sorted = helpers;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidParams, "helper set has repeated nodes");
  for (auto h : sorted)
    if (h >= spec.params.n || h == failed) throw Error(ErrorKind::InvalidParams, "invalid helper node");
}

Matrix repair_matrix(const CodeSpec& spec, const RepairScheme& scheme, std::size_t helper, std::size_t failed,
                     const std::vector<std::size_t>& helpers) {
  const RepairMatrix* m = scheme.find(helper, failed, helpers);
  if (!m) throw Error(ErrorKind::MissingMatrix, "no repair matrix for helper " + std::to_string(helper + 1) +
                                                    " and failed node " + std::to_string(failed + 1));
  return m->matrix(spec.field());
}

Matrix wildcard_matrix(const CodeSpec& spec, const RepairScheme& scheme, std::size_t helper, std::size_t failed) {
  const RepairMatrix* m = scheme.find(helper, failed);
  if (!m) throw Error(ErrorKind::MissingMatrix, "no repair matrix for helper " + std::to_string(helper + 1) +
                                                    " and failed node " + std::to_string(failed + 1));
  return m->matrix(spec.field());
}

void require_in_w(const RepairScheme& scheme, std::size_t failed) {
  if (std::find(scheme.w_nodes.begin(), scheme.w_nodes.end(), failed) == scheme.w_nodes.end())
    throw Error(ErrorKind::InvalidParams, "node " + std::to_string(failed + 1) + " is not repairable by the scheme");
}

}  // namespace

CombinationMap derive_combination(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed,
                                  const std::vector<std::size_t>& helpers) {
  require_in_w(scheme, failed);
  check_helper_set(spec, failed, helpers);
  std::vector<Matrix> rows;
  std::vector<std::size_t> widths;
  for (auto h : helpers) {
    const Matrix s = repair_matrix(spec, scheme, h, failed, helpers);
    widths.push_back(s.rows());
    rows.push_back(s * spec.generator_rows(h));
  }
  const Matrix t = solve_left(vstack(rows), spec.generator_rows(failed));
  CombinationMap out{failed, helpers, {}};
  std::size_t col = 0;
  for (auto w : widths) {
    out.T.push_back(t.block(0, col, t.rows(), w));
    col += w;
  }
  return out;
}

std::optional<CombinationMap> try_derive_combination(const CodeSpec& spec, const RepairScheme& scheme,
                                                     std::size_t failed, const std::vector<std::size_t>& helpers) {
  try {
    return derive_combination(spec, scheme, failed, helpers);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Infeasible) return std::nullopt;
    throw;
  }
}

namespace {

RepairResult apply_combination(const CodeSpec& spec, const RepairScheme& scheme, const CombinationMap& map,
                               const Codeword& c) {
  const Field& f = *spec.field();
  RepairResult out{Block(spec.params.alpha, 0), 0};
  for (std::size_t x = 0; x < map.helpers.size(); ++x) {
    const std::size_t h = map.helpers[x];
    const Matrix s = repair_matrix(spec, scheme, h, map.failed, map.helpers);
    const auto downloaded = s.apply(c.blocks.at(h));
    out.downloaded += downloaded.size();
    const auto part = map.T[x].apply(downloaded);
    for (std::size_t t = 0; t < out.block.size(); ++t) out.block[t] = f.add(out.block[t], part[t]);
  }
  return out;
}

}  // namespace

RepairResult repair_node(const CodeSpec& spec, const RepairScheme& scheme, const Codeword& c, std::size_t failed,
                         const std::vector<std::size_t>& helpers) {
  if (!same_field(c.field, spec.field())) throw Error(ErrorKind::FieldMismatch, "codeword over another field");
  if (c.blocks.size() != spec.params.n) throw Error(ErrorKind::DimensionMismatch, "codeword needs n blocks");
  const auto map = derive_combination(spec, scheme, failed, helpers);
  auto out = apply_combination(spec, scheme, map, c);
  const auto bw = bandwidth(spec.params);
  if (out.downloaded != bw.total)
    throw Error(ErrorKind::InvalidParams, "downloaded " + std::to_string(out.downloaded) + " symbols, expected " +
                                              std::to_string(bw.total));
  return out;
}

AlignmentReport check_interference_alignment(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed) {
  require_in_w(scheme, failed);
  if (!spec.systematic_index(failed))
    throw Error(ErrorKind::InvalidParams, "alignment is defined for a systematic failed node");
  if (scheme.mode == RepairMode::General)
    throw Error(ErrorKind::ModeMismatch, "alignment check needs a helper-set-independent scheme");
  AlignmentReport report;
  for (std::size_t b = 0; b < spec.params.k; ++b) {
    const std::size_t ub = spec.systematic[b];
    if (ub == failed) continue;
    const Subspace target = Subspace::row_space(wildcard_matrix(spec, scheme, ub, failed));
    for (std::size_t i = 0; i < spec.parity.size(); ++i) {
      const std::size_t p = spec.parity[i];
      const Subspace seen = Subspace::row_space(wildcard_matrix(spec, scheme, p, failed) * spec.A(i, b));
      ++report.checked;
      if (!(seen == target)) {
        report.pass = false;
        report.failures.push_back({p, ub});
      }
    }
  }
  return report;
}

FullRankReport check_full_rank(const CodeSpec& spec, const RepairScheme& scheme, std::size_t failed,
                               const std::vector<std::size_t>& helpers) {
  require_in_w(scheme, failed);
  check_helper_set(spec, failed, helpers);
  const auto j = spec.systematic_index(failed);
  if (!j) throw Error(ErrorKind::InvalidParams, "full-rank condition is defined for a systematic failed node");
  const std::size_t a = spec.params.alpha;
  // Systematic nodes outside the helper set contribute unknown interference.
  std::vector<std::size_t> absent;
  for (std::size_t b = 0; b < spec.params.k; ++b)
    if (b != *j && std::find(helpers.begin(), helpers.end(), spec.systematic[b]) == helpers.end()) absent.push_back(b);
  std::vector<Matrix> own, other;
  for (auto h : helpers) {
    const Matrix s = repair_matrix(spec, scheme, h, failed, helpers);
    const Matrix g = s * spec.generator_rows(h);
    own.push_back(g.block(0, *j * a, g.rows(), a));
    std::vector<Matrix> parts;
    for (auto b : absent) parts.push_back(g.block(0, b * a, g.rows(), a));
    if (!parts.empty()) other.push_back(hstack(parts));
  }
  FullRankReport report;
  report.alpha = a;
  if (other.empty()) {
    report.rank = rank(vstack(own));
  } else {
    const Matrix y = vstack(other);
    report.rank = rank(hstack({vstack(own), y})) - rank(y);
  }
  report.pass = report.rank == a;
  return report;
}

AccessReport check_optimal_access(const RepairScheme& scheme, bool strict) {
  AccessReport report;
  for (const auto& [key, m] : scheme.entries) {
    if (m.is_access()) {
      report.pattern[key] = m.access_rows();
      continue;
    }
    const Matrix& full = m.full_matrix();
    std::vector<std::size_t> positions;
    bool ok = true;
    for (std::size_t t = 0; t < full.rows(); ++t) {
      std::size_t nonzero = 0, where = 0;
      for (std::size_t c = 0; c < full.cols(); ++c)
        if (full(t, c) != 0) {
          ++nonzero;
          where = c;
        }
      const bool row_ok = nonzero == 1 && (!strict || full(t, where) == 1);
      if (!row_ok) {
        ok = false;
        report.pass = false;
        report.offenders.push_back({key, t});
      } else {
        positions.push_back(where);
      }
    }
    if (ok) report.pattern[key] = positions;
  }
  return report;
}

SweepReport repair_sweep(const CodeSpec& spec, const RepairScheme& scheme) {
  struct Job {
    std::size_t failed;
    std::vector<std::size_t> helpers;
  };
  std::vector<Job> jobs;
  const auto nodes = iota_nodes(spec.params.n);
  for (auto j : scheme.w_nodes)
    for_each_subset(without(nodes, {j}), spec.params.d,
                    [&](const std::vector<std::size_t>& hs) { jobs.push_back({j, hs}); });

  const std::size_t messages = spec.params.k * spec.params.alpha;
  std::vector<Codeword> basis;
  for (std::size_t x = 0; x < messages; ++x) basis.push_back(encode(spec, basis_message(spec, x)));

  auto results = parallel_map(jobs.size(), [&](std::size_t idx) -> std::optional<SweepFailure> {
    const Job& job = jobs[idx];
    std::optional<CombinationMap> map;
    try {
      map = try_derive_combination(spec, scheme, job.failed, job.helpers);
    } catch (const Error& e) {
      return SweepFailure{job.failed, job.helpers, e.what()};
    }
    if (!map) return SweepFailure{job.failed, job.helpers, "infeasible"};
    for (const auto& c : basis) {
      const auto got = apply_combination(spec, scheme, *map, c);
      if (got.block != c.blocks[job.failed]) return SweepFailure{job.failed, job.helpers, "mismatch"};
    }
    return std::nullopt;
  });

  SweepReport report;
  report.pairs = jobs.size();
  report.messages = messages;
  for (auto& r : results)
    if (r) {
      report.pass = false;
      report.failures.push_back(std::move(*r));
    }
  return report;
}

}  // namespace msrlab
