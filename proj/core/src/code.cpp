#include "msrlab/code.hpp"

#include <algorithm>

#include "msrlab/combinatorics.hpp"

namespace msrlab {

void CodeParams::validate() const {
  if (!field) throw Error(ErrorKind::InvalidParams, "code has no field");
  if (k == 0 || alpha == 0) throw Error(ErrorKind::InvalidParams, "k and alpha must be positive");
  if (k > n) throw Error(ErrorKind::InvalidParams, "k exceeds n");
  if (n == k) {
    if (d != k) throw Error(ErrorKind::InvalidParams, "a code with no parity nodes needs d == k");
  } else if (d < k || d > n - 1) {
    throw Error(ErrorKind::InvalidParams, "need k <= d <= n-1, got d=" + std::to_string(d));
  }
  if (alpha % s() != 0)
    throw Error(ErrorKind::DivisibilityError,
                "s=" + std::to_string(s()) + " does not divide alpha=" + std::to_string(alpha));
}

std::optional<std::size_t> CodeSpec::systematic_index(std::size_t node) const {
  auto it = std::find(systematic.begin(), systematic.end(), node);
  if (it == systematic.end()) return std::nullopt;
  return static_cast<std::size_t>(it - systematic.begin());
}

std::optional<std::size_t> CodeSpec::parity_index(std::size_t node) const {
  auto it = std::find(parity.begin(), parity.end(), node);
  if (it == parity.end()) return std::nullopt;
  return static_cast<std::size_t>(it - parity.begin());
}

Matrix CodeSpec::generator_rows(std::size_t node) const {
  const std::size_t a = params.alpha, k = params.k;
  Matrix out(field(), a, k * a);
  if (auto j = systematic_index(node)) {
    for (std::size_t t = 0; t < a; ++t) out(t, *j * a + t) = 1;
    return out;
  }
  auto i = parity_index(node);
  if (!i) throw Error(ErrorKind::InvalidParams, "node " + std::to_string(node + 1) + " is not in the code");
  for (std::size_t j = 0; j < k; ++j) out.set_block(0, j * a, A(*i, j));
  return out;
}

void CodeSpec::validate() const {
  params.validate();
  if (systematic.size() != params.k || parity.size() != params.r())
    throw Error(ErrorKind::InvalidParams, "node lists do not match k and n-k");
  std::vector<bool> seen(params.n, false);
  for (const auto* list : {&systematic, &parity})
    for (auto v : *list) {
      if (v >= params.n || seen[v])
        throw Error(ErrorKind::InvalidParams, "node lists must partition 1..n");
      seen[v] = true;
    }
  if (blocks.size() != params.r() * params.k)
    throw Error(ErrorKind::BlockSizeMismatch, "expected " + std::to_string(params.r() * params.k) + " blocks");
  for (const auto& b : blocks) {
    if (b.rows() != params.alpha || b.cols() != params.alpha)
      throw Error(ErrorKind::BlockSizeMismatch, "every block must be alpha x alpha");
    if (!same_field(b.field(), params.field)) throw Error(ErrorKind::FieldMismatch, "block over another field");
  }
}

CodeSpec make_systematic_code(CodeParams params, std::vector<Matrix> blocks) {
  CodeSpec spec;
  spec.params = std::move(params);
  spec.systematic = iota_nodes(spec.params.k);
  for (std::size_t v = spec.params.k; v < spec.params.n; ++v) spec.parity.push_back(v);
  spec.blocks = std::move(blocks);
  spec.validate();
  return spec;
}

Matrix assemble_generator(const CodeSpec& spec) {
  const std::size_t a = spec.params.alpha;
  for (const auto& b : spec.blocks)
    if (b.rows() != a || b.cols() != a) throw Error(ErrorKind::BlockSizeMismatch, "every block must be alpha x alpha");
  Matrix g(spec.field(), spec.params.n * a, spec.params.k * a);
  for (std::size_t node = 0; node < spec.params.n; ++node) g.set_block(node * a, 0, spec.generator_rows(node));
  return g;
}

Codeword encode(const CodeSpec& spec, const Message& m) {
  if (!same_field(m.field, spec.field())) throw Error(ErrorKind::FieldMismatch, "message over another field");
  const std::size_t a = spec.params.alpha, k = spec.params.k;
  if (m.blocks.size() != k) throw Error(ErrorKind::DimensionMismatch, "message needs k blocks");
  for (const auto& b : m.blocks) {
    if (b.size() != a) throw Error(ErrorKind::DimensionMismatch, "message block length differs from alpha");
    for (Elem v : b)
      if (!spec.field()->contains(v)) throw Error(ErrorKind::FieldMismatch, "message symbol outside the field");
  }
  const Field& f = *spec.field();
  Codeword c{spec.field(), std::vector<Block>(spec.params.n, Block(a, 0))};
  for (std::size_t j = 0; j < k; ++j) c.blocks[spec.systematic[j]] = m.blocks[j];
  for (std::size_t i = 0; i < spec.parity.size(); ++i) {
    Block& out = c.blocks[spec.parity[i]];
    for (std::size_t j = 0; j < k; ++j) {
      const auto part = spec.A(i, j).apply(m.blocks[j]);
      for (std::size_t t = 0; t < a; ++t) out[t] = f.add(out[t], part[t]);
    }
  }
  return c;
}

Message basis_message(const CodeSpec& spec, std::size_t index) {
  const std::size_t a = spec.params.alpha;
  Message m{spec.field(), std::vector<Block>(spec.params.k, Block(a, 0))};
  m.blocks.at(index / a).at(index % a) = 1;
  return m;
}

MdsReport mds_check(const CodeSpec& spec) {
  if (spec.params.n > kMdsCheckMaxNodes)
    throw Error(ErrorKind::LimitExceeded, "mds_check supports n <= " + std::to_string(kMdsCheckMaxNodes));
  const std::size_t a = spec.params.alpha, r = spec.params.r(), k = spec.params.k;
  MdsReport report;
  const auto rows = iota_nodes(r), cols = iota_nodes(k);
  for (std::size_t m = 1; m <= std::min(r, k) && report.pass; ++m) {
    for_each_subset(rows, m, [&](const std::vector<std::size_t>& ps) {
      for_each_subset(cols, m, [&](const std::vector<std::size_t>& js) {
        Matrix sub(spec.field(), m * a, m * a);
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < m; ++y) sub.set_block(x * a, y * a, spec.A(ps[x], js[y]));
        ++report.minors_checked;
        if (is_nonsingular(sub)) return true;
        report.pass = false;
        report.witness_parity = ps;
        report.witness_systematic = js;
        return false;
      });
      return report.pass;
    });
  }
  if (!report.pass) {
    // Dropping the chosen systematic nodes and keeping the chosen parities gives a k-set that cannot decode.
    std::vector<std::size_t> dropped;
    for (auto j : report.witness_systematic) dropped.push_back(spec.systematic[j]);
    report.witness_nodes = without(spec.systematic, dropped);
    for (auto i : report.witness_parity) report.witness_nodes.push_back(spec.parity[i]);
    std::sort(report.witness_nodes.begin(), report.witness_nodes.end());
  }
  return report;
}

Message decode_from_nodes(const CodeSpec& spec, const std::vector<std::size_t>& nodes,
                          const std::vector<Block>& symbols) {
  const std::size_t a = spec.params.alpha, k = spec.params.k;
  if (nodes.size() != symbols.size()) throw Error(ErrorKind::DimensionMismatch, "one block per node required");
  if (nodes.size() < k)
    throw Error(ErrorKind::Underdetermined,
                "need at least k=" + std::to_string(k) + " nodes, got " + std::to_string(nodes.size()));
  std::vector<Matrix> parts;
  Matrix y(spec.field(), 1, nodes.size() * a);
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    if (symbols[x].size() != a) throw Error(ErrorKind::DimensionMismatch, "block length differs from alpha");
    parts.push_back(spec.generator_rows(nodes[x]));
    for (std::size_t t = 0; t < a; ++t) {
      if (!spec.field()->contains(symbols[x][t])) throw Error(ErrorKind::FieldMismatch, "symbol outside the field");
      y(0, x * a + t) = symbols[x][t];
    }
  }
  const Matrix g = vstack(parts);
  if (rank(g) != k * a) throw Error(ErrorKind::Underdetermined, "selected nodes do not determine the message");
  // x^T * G^T == y^T
  const Matrix x = solve_left(g.transpose(), y);
  Message m{spec.field(), std::vector<Block>(k, Block(a, 0))};
  for (std::size_t i = 0; i < k * a; ++i) m.blocks[i / a][i % a] = x(0, i);
  return m;
}

CodeSpec puncture(const CodeSpec& spec, const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (auto v : kept)
    if (v >= spec.params.n) throw Error(ErrorKind::InvalidParams, "kept node out of range");
  for (auto u : spec.systematic)
    if (!std::binary_search(kept.begin(), kept.end(), u))
      throw Error(ErrorKind::UnsupportedPuncture, "systematic node " + std::to_string(u + 1) + " must be kept");
  auto renumber = [&](std::size_t v) {
    return static_cast<std::size_t>(std::lower_bound(kept.begin(), kept.end(), v) - kept.begin());
  };
  CodeSpec out;
  out.params = spec.params;
  out.params.n = kept.size();
  out.params.d = out.params.n == spec.params.k ? spec.params.k : std::min(spec.params.d, out.params.n - 1);
  for (auto u : spec.systematic) out.systematic.push_back(renumber(u));
  for (std::size_t i = 0; i < spec.parity.size(); ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), spec.parity[i])) continue;
    out.parity.push_back(renumber(spec.parity[i]));
    for (std::size_t j = 0; j < spec.params.k; ++j) out.blocks.push_back(spec.A(i, j));
  }
  out.validate();
  return out;
}

}  // namespace msrlab
