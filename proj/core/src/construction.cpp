#include "msrlab/construction.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "msrlab/combinatorics.hpp"
#include "msrlab/subspace.hpp"

namespace msrlab {

std::vector<Elem> Sampler::distinct(std::vector<Elem> pool, std::size_t count) {
  if (count > pool.size()) throw Error(ErrorKind::InvalidParams, "not enough distinct values");
  for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + below(pool.size() - i)]);
  pool.resize(count);
  return pool;
}

namespace {

std::vector<Elem> all_elements(const Field& f, bool include_zero) {
  std::vector<Elem> out;
  for (Elem x = include_zero ? 0 : 1; x < f.order(); ++x) out.push_back(x);
  return out;
}

std::string nodes_text(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::size_t digit(std::size_t t, std::size_t g, std::size_t s) { return (t / ipow(s, g)) % s; }

std::vector<std::size_t> single_support(const Block& row) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) out.push_back(c);
  return out;
}

Block row_of(const Matrix& m, std::size_t r) { return Block(m.row(r).begin(), m.row(r).end()); }

// Every square submatrix of m is nonsingular.
bool totally_invertible(const Matrix& m, std::string& witness) {
  const auto rows = iota_nodes(m.rows()), cols = iota_nodes(m.cols());
  bool ok = true;
  for (std::size_t size = 1; size <= std::min(m.rows(), m.cols()) && ok; ++size)
    for_each_subset(rows, size, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(cols, size, [&](const std::vector<std::size_t>& cs) {
        Matrix sub(m.field(), size, size);
        for (std::size_t a = 0; a < size; ++a)
          for (std::size_t b = 0; b < size; ++b) sub(a, b) = m(rs[a], cs[b]);
        if (is_nonsingular(sub)) return true;
        ok = false;
        witness = "rows " + nodes_text(rs) + " columns " + nodes_text(cs);
        return false;
      });
      return ok;
    });
  return ok;
}

// Every `size`-subset of the vectors is linearly independent.
bool mds_columns(const std::vector<Block>& vectors, std::size_t size, const FieldPtr& field, std::string& witness) {
  if (vectors.size() < size) {
    witness = "only " + std::to_string(vectors.size()) + " vectors for dimension " + std::to_string(size);
    return false;
  }
  bool ok = true;
  for_each_subset(iota_nodes(vectors.size()), size, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::vector<Elem>> rows;
    for (auto i : pick) rows.push_back(vectors[i]);
    if (rank(Matrix::from_rows(field, rows)) == size) return true;
    ok = false;
    witness = "parities " + nodes_text(pick) + " are dependent";
    return false;
  });
  return ok;
}

void add_item(StructureReport& report, std::string name, bool pass, std::string witness = {}) {
  if (!pass) report.pass = false;
  report.items.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

}  // namespace

namespace {

struct Case2Sampler {
  const FieldPtr& field;
  std::size_t n, k, Q;
  Sampler& rng;
  std::vector<Elem> nonzero, everything;

  std::size_t r() const { return n - k; }

  void vandermonde(Case2Form& form, std::size_t j) {
    const auto points = rng.distinct(nonzero, r());
    for (std::size_t i = 0; i < r(); ++i) {
      Block v(Q);
      for (std::size_t t = 0; t < Q; ++t) v[t] = field->pow(points[i], t);
      form.v[i][j] = std::move(v);
    }
  }

  void cauchy(Case2Form& form, std::size_t l) {
    Matrix c(field, r(), k - Q);
    if (k > Q) {
      const auto pts = rng.distinct(everything, r() + (k - Q));
      for (std::size_t i = 0; i < r(); ++i)
        for (std::size_t j = 0; j < k - Q; ++j) c(i, j) = field->inv(field->sub(pts[i], pts[r() + j]));
    }
    form.p_prime[l] = std::move(c);
  }

  std::size_t diag_count() const { return r() * Q * (Q - 1); }

  Elem& diag_at(Case2Form& form, std::size_t index) const {
    const std::size_t i = index / (Q * (Q - 1)), rest = index % (Q * (Q - 1));
    const std::size_t j = rest / (Q - 1), t = rest % (Q - 1);
    return form.diag[i][j][t < j ? t : t + 1];
  }

  Case2Form sample() {
    Case2Form form;
    form.Q = Q;
    form.v.assign(r(), std::vector<Block>(Q));
    form.diag.assign(r(), std::vector<Block>(Q, Block(Q, 0)));
    form.p_prime.assign(Q, Matrix(field, r(), k - Q));
    for (std::size_t j = 0; j < Q; ++j) vandermonde(form, j);
    for (std::size_t x = 0; x < diag_count(); ++x) diag_at(form, x) = rng.nonzero(*field);
    for (std::size_t l = 0; l < Q; ++l) cauchy(form, l);
    return form;
  }

  // Redraws one coefficient source: a diagonal entry, a Vandermonde column or a Cauchy array.
  void mutate(Case2Form& form) {
    const std::size_t arrays = k > Q ? Q : 0;
    const std::size_t pick = rng.below(diag_count() + Q + arrays);
    if (pick < diag_count())
      diag_at(form, pick) = rng.nonzero(*field);
    else if (pick < diag_count() + Q)
      vandermonde(form, pick - diag_count());
    else
      cauchy(form, pick - diag_count() - Q);
  }

  CodeSpec assemble(const Case2Form& form, const CodeParams& params) const {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < r(); ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Matrix a(field, Q, Q);
        if (j < Q) {
          for (std::size_t t = 0; t < Q; ++t) {
            if (t == j)
              for (std::size_t c = 0; c < Q; ++c) a(t, c) = form.v[i][j][c];
            else
              a(t, t) = form.diag[i][j][t];
          }
        } else {
          for (std::size_t l = 0; l < Q; ++l) a(l, l) = form.p_prime[l](i, j - Q);
        }
        blocks.push_back(std::move(a));
      }
    return make_systematic_code(params, std::move(blocks));
  }
};

RepairScheme case2_scheme(const CodeSpec& spec, std::size_t Q) {
  RepairScheme scheme;
  scheme.mode = RepairMode::Constant;
  for (std::size_t j = 0; j < Q; ++j) {
    const std::size_t u = spec.systematic[j];
    scheme.w_nodes.push_back(u);
    scheme.set_constant(u, RepairMatrix::access({j}, Q));
  }
  return scheme;
}

struct Defects {
  std::size_t count = 0;
  std::string first;
};

// Singular block minors plus (failed node, helper set) pairs without a repair.
Defects count_defects(const CodeSpec& spec, const RepairScheme& scheme) {
  Defects out;
  const std::size_t a = spec.params.alpha, r = spec.params.r(), k = spec.params.k;
  for (std::size_t m = 1; m <= std::min(r, k); ++m)
    for_each_subset(iota_nodes(r), m, [&](const std::vector<std::size_t>& ps) {
      for_each_subset(iota_nodes(k), m, [&](const std::vector<std::size_t>& js) {
        Matrix sub(spec.field(), m * a, m * a);
        for (std::size_t x = 0; x < m; ++x)
          for (std::size_t y = 0; y < m; ++y) sub.set_block(x * a, y * a, spec.A(ps[x], js[y]));
        if (is_nonsingular(sub)) return;
        if (out.count++ == 0) {
          std::vector<std::size_t> pn, sn;
          for (auto i : ps) pn.push_back(spec.parity[i]);
          for (auto j : js) sn.push_back(spec.systematic[j]);
          out.first = "singular block minor at parities " + nodes_text(pn) + " and systematic nodes " + nodes_text(sn);
        }
      });
    });
  for (auto j : scheme.w_nodes)
    for_each_subset(without(iota_nodes(spec.params.n), {j}), spec.params.d, [&](const std::vector<std::size_t>& hs) {
      if (try_derive_combination(spec, scheme, j, hs)) return;
      if (out.count++ == 0)
        out.first = "node " + std::to_string(j + 1) + " not repairable from " + nodes_text(hs);
    });
  return out;
}

constexpr std::size_t kLocalSteps = 400;

}  // namespace

Case2Build build_case2(std::size_t n, std::size_t k, std::size_t d, const FieldPtr& field,
                       const ConstructionConfig& config) {
  if (config.max_retries < 1) throw Error(ErrorKind::ParamViolation, "max_retries must be at least 1");
  if (k < 3) throw Error(ErrorKind::ParamViolation, "need k >= 3");
  if (d < k + 1) throw Error(ErrorKind::ParamViolation, "need d >= k+1");
  if (d > n - 1) throw Error(ErrorKind::ParamViolation, "need d <= n-1");
  const std::size_t Q = d - k + 1, r = n - k, q = field->order();
  if (Q > k) throw Error(ErrorKind::ParamViolation, "need Q = d-k+1 <= k");
  if (q - 1 < r)
    throw Error(ErrorKind::ParamViolation, "need q > r for " + std::to_string(r) + " distinct Vandermonde points");
  if (k > Q && q < r + (k - Q))
    throw Error(ErrorKind::ParamViolation, "need q >= r + k - Q for the Cauchy arrays");

  Sampler rng(config.seed);
  Case2Sampler sampler{field, n, k, Q, rng, all_elements(*field, false), all_elements(*field, true)};
  CodeParams params{n, k, d, Q, field};
  std::string last;

  // Each attempt is a fresh draw followed by single-coefficient redraws that
  // never increase the number of defects.
  for (std::size_t attempt = 1; attempt <= config.max_retries; ++attempt) {
    Case2Form form = sampler.sample();
    CodeSpec spec = sampler.assemble(form, params);
    RepairScheme scheme = case2_scheme(spec, Q);
    Defects defects = count_defects(spec, scheme);
    for (std::size_t step = 0; step < kLocalSteps && defects.count > 0; ++step) {
      Case2Form trial = form;
      sampler.mutate(trial);
      CodeSpec trial_spec = sampler.assemble(trial, params);
      Defects trial_defects = count_defects(trial_spec, scheme);
      if (trial_defects.count <= defects.count) {
        form = std::move(trial);
        spec = std::move(trial_spec);
        defects = std::move(trial_defects);
      }
    }
    if (defects.count > 0) {
      last = std::to_string(defects.count) + " defect(s), first: " + defects.first;
      continue;
    }

    Case2Build out;
    out.spec = std::move(spec);
    out.scheme = std::move(scheme);
    out.meta.case_id = 2;
    out.meta.Q = Q;
    for (std::size_t j = 0; j < Q; ++j) out.meta.supports.push_back({iota_nodes(Q)});
    out.meta.coefficient_sources = {"v: vandermonde columns at random distinct nonzero points",
                                    "p_prime: cauchy arrays at random distinct points",
                                    "diagonal: uniform nonzero", "seed: " + std::to_string(config.seed)};
    out.attempts = attempt;
    out.form = std::move(form);
    return out;
  }
  throw Error(ErrorKind::ConstructionFailed,
              "no verified Case-2 code after " + std::to_string(config.max_retries) + " attempts; last: " + last);
}

Case2Build build_coupled_example(const FieldPtr& field, const ConstructionConfig& config) {
  if (field->order() < 8) throw Error(ErrorKind::ConstructionFailed, "the coupled example needs q >= 8");
  Case2Build out;
  try {
    out = build_case2(8, 4, 6, field, config);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParamViolation) throw Error(ErrorKind::ConstructionFailed, e.what());
    throw;
  }
  // The code must also be recoverable from the parity-check matrix written from the coefficients.
  const Matrix h = case2_parity_check(out.form, out.spec.params);
  const CodeSpec again = code_from_parity_check(h, out.spec.params);
  if (again.blocks != out.spec.blocks)
    throw Error(ErrorKind::ConstructionFailed, "parity-check matrix disagrees with the generator");
  return out;
}

Case1Build build_case1(std::size_t n, std::size_t k, std::size_t d, const FieldPtr& field,
                       const ConstructionConfig& config) {
  if (config.max_retries < 1) throw Error(ErrorKind::ParamViolation, "max_retries must be at least 1");
  if (k < 3) throw Error(ErrorKind::ParamViolation, "need k >= 3");
  if (d < k + 1) throw Error(ErrorKind::ParamViolation, "need d >= k+1");
  if (n < d + 1) throw Error(ErrorKind::ParamViolation, "need n >= d+1");
  const std::size_t s = d - k + 1, r = n - k;
  if (k % s != 0) throw Error(ErrorKind::ParamViolation, "need s = d-k+1 to divide k");
  const std::size_t L = k / s, alpha = ipow(s, L), beta = alpha / s;
  if (alpha > 4096) throw Error(ErrorKind::ParamViolation, "alpha = " + std::to_string(alpha) + " is too large");
  if (field->order() - 1 < r)
    throw Error(ErrorKind::ParamViolation, "need q > r for " + std::to_string(r) + " distinct Vandermonde points");

  const Field& f = *field;
  const auto nonzero = all_elements(f, false);
  Sampler rng(config.seed);
  CodeParams params{n, k, d, alpha, field};

  Case1Form form;
  form.s = s;
  form.digits = L;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t g = j / s, c = j % s;
    std::vector<std::size_t> access;
    std::vector<std::vector<std::size_t>> supports;
    for (std::size_t t = 0; t < alpha; ++t) {
      if (digit(t, g, s) != c) continue;
      access.push_back(t);
      std::vector<std::size_t> line;
      for (std::size_t x = 0; x < s; ++x) line.push_back(t - c * ipow(s, g) + x * ipow(s, g));
      supports.push_back(std::move(line));
    }
    form.access.push_back(std::move(access));
    form.supports.push_back(std::move(supports));
  }

  // v rows of (node j, access index x) for every parity, drawn together.
  auto draw_rows = [&](std::vector<Matrix>& blocks, std::size_t j, std::size_t x) {
    const auto points = rng.distinct(nonzero, r);
    const auto& line = form.supports[j][x];
    for (std::size_t i = 0; i < r; ++i) {
      // Scaling a column keeps every s-subset independent and breaks the shared leading 1.
      const Elem scale = rng.nonzero(f);
      for (std::size_t c = 0; c < s; ++c)
        blocks[i * k + j](form.access[j][x], line[c]) = f.mul(scale, f.pow(points[i], c));
    }
  };
  std::vector<std::array<std::size_t, 3>> scalars;  // (i, j, t) of the M rows
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t < alpha; ++t)
        if (!std::binary_search(form.access[j].begin(), form.access[j].end(), t)) scalars.push_back({i, j, t});

  RepairScheme scheme;
  scheme.mode = RepairMode::Constant;
  for (std::size_t j = 0; j < k; ++j) {
    scheme.w_nodes.push_back(j);
    scheme.set_constant(j, RepairMatrix::access(form.access[j], alpha));
  }

  std::string last;
  for (std::size_t attempt = 1; attempt <= config.max_retries; ++attempt) {
    std::vector<Matrix> blocks(r * k, Matrix(field, alpha, alpha));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t x = 0; x < beta; ++x) draw_rows(blocks, j, x);
    for (const auto& [i, j, t] : scalars) blocks[i * k + j](t, t) = rng.nonzero(f);
    CodeSpec spec = make_systematic_code(params, blocks);
    Defects defects = count_defects(spec, scheme);
    for (std::size_t step = 0; step < kLocalSteps && defects.count > 0; ++step) {
      std::vector<Matrix> trial = blocks;
      const std::size_t pick = rng.below(k * beta + scalars.size());
      if (pick < k * beta) {
        draw_rows(trial, pick / beta, pick % beta);
      } else {
        const auto& [i, j, t] = scalars[pick - k * beta];
        trial[i * k + j](t, t) = rng.nonzero(f);
      }
      CodeSpec trial_spec = make_systematic_code(params, trial);
      Defects trial_defects = count_defects(trial_spec, scheme);
      if (trial_defects.count <= defects.count) {
        blocks = std::move(trial);
        spec = std::move(trial_spec);
        defects = std::move(trial_defects);
      }
    }
    if (defects.count > 0) {
      last = std::to_string(defects.count) + " defect(s), first: " + defects.first;
      continue;
    }
    Case1Build out;
    out.spec = std::move(spec);
    out.scheme = scheme;
    const auto structure = verify_structure_case1(out.spec, out.scheme);
    const auto sweep = repair_sweep(out.spec, out.scheme);
    if (!structure.pass || !sweep.pass) {
      last = !structure.pass ? "structure check failed" : "repair sweep failed";
      continue;
    }
    out.meta.case_id = 1;
    out.meta.Q = k;
    out.meta.supports = form.supports;
    out.meta.coefficient_sources = {"v: scaled vandermonde columns at random distinct nonzero points",
                                    "m: uniform nonzero scaled basis rows", "seed: " + std::to_string(config.seed)};
    out.attempts = attempt;
    out.form = form;
    return out;
  }
  throw Error(ErrorKind::ConstructionFailed,
              "no verified Case-1 code after " + std::to_string(config.max_retries) + " attempts; last: " + last);
}

CodeSpec random_mds_code(std::size_t n, std::size_t k, std::size_t d, std::size_t alpha, const FieldPtr& field,
                         std::uint64_t seed, std::size_t max_retries) {
  Sampler rng(seed);
  CodeParams params{n, k, d, alpha, field};
  params.validate();
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < (n - k) * k; ++b) {
      Matrix m(field, alpha, alpha);
      for (std::size_t x = 0; x < alpha; ++x)
        for (std::size_t y = 0; y < alpha; ++y) m(x, y) = static_cast<Elem>(rng.below(field->order()));
      blocks.push_back(std::move(m));
    }
    CodeSpec spec = make_systematic_code(params, std::move(blocks));
    if (mds_check(spec).pass) return spec;
  }
  throw Error(ErrorKind::ConstructionFailed, "no random MDS code found");
}

StructureReport verify_structure_case2(const CodeSpec& spec, const RepairScheme& scheme) {
  StructureReport report;
  const std::size_t Q = spec.params.s(), k = spec.params.k, r = spec.params.r(), alpha = spec.params.alpha;
  add_item(report, "alpha-equals-Q", alpha == Q, "alpha=" + std::to_string(alpha) + " Q=" + std::to_string(Q));
  if (alpha != Q || Q > k) return report;

  // Repair spaces S_{u_j} = <e_j> for the first Q systematic nodes.
  {
    bool ok = scheme.mode == RepairMode::Constant;
    std::string witness = ok ? "" : "scheme is not constant";
    std::vector<std::size_t> expected_w(spec.systematic.begin(), spec.systematic.begin() + Q);
    std::vector<std::size_t> w = scheme.w_nodes;
    std::sort(w.begin(), w.end());
    std::sort(expected_w.begin(), expected_w.end());
    if (ok && w != expected_w) {
      ok = false;
      witness = "W is not the first Q systematic nodes";
    }
    for (std::size_t j = 0; j < Q && ok; ++j) {
      const RepairMatrix* m = scheme.find(0, spec.systematic[j]);
      if (!m || !(Subspace::row_space(m->matrix(spec.field())) ==
                  Subspace::row_space(Matrix::unit_row(spec.field(), alpha, j)))) {
        ok = false;
        witness = "repair space of node " + std::to_string(spec.systematic[j] + 1) + " is not <e_" +
                  std::to_string(j + 1) + ">";
      }
    }
    add_item(report, "access-sets", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < Q && ok; ++j)
        for (std::size_t t = 0; t < Q && ok; ++t) {
          if (t == j) continue;
          for (std::size_t c = 0; c < Q; ++c)
            if (c != t && spec.A(i, j)(t, c) != 0) {
              ok = false;
              witness = "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] entry (" +
                        std::to_string(t + 1) + "," + std::to_string(c + 1) + ")";
              break;
            }
        }
    add_item(report, "diagonal-outside-row-j", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (std::size_t j = 0; j < Q && ok; ++j) {
      std::vector<Block> vs;
      for (std::size_t i = 0; i < r; ++i) vs.push_back(row_of(spec.A(i, j), j));
      if (!mds_columns(vs, Q, spec.field(), witness)) {
        ok = false;
        witness = "column " + std::to_string(j + 1) + ": " + witness;
      }
    }
    add_item(report, "v-mds-columns", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = Q; j < k && ok; ++j)
        for (std::size_t t = 0; t < Q && ok; ++t)
          for (std::size_t c = 0; c < Q; ++c)
            if (c != t && spec.A(i, j)(t, c) != 0) {
              ok = false;
              witness = "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] is not diagonal";
              break;
            }
    add_item(report, "p-prime-diagonal", ok, witness);
    if (ok && k > Q) {
      std::string w2;
      bool inv = true;
      for (std::size_t l = 0; l < Q && inv; ++l) {
        Matrix arr(spec.field(), r, k - Q);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = Q; j < k; ++j) arr(i, j - Q) = spec.A(i, j)(l, l);
        if (!totally_invertible(arr, w2)) {
          inv = false;
          w2 = "plane " + std::to_string(l + 1) + ": " + w2;
        }
      }
      add_item(report, "p-prime-totally-invertible", inv, w2);
    } else if (k > Q) {
      add_item(report, "p-prime-totally-invertible", false, "blocks are not diagonal");
    }
  }
  return report;
}

StructureReport verify_structure_case1(const CodeSpec& spec, const RepairScheme& scheme) {
  StructureReport report;
  const std::size_t s = spec.params.s(), k = spec.params.k, r = spec.params.r(), alpha = spec.params.alpha;
  const bool shape = s >= 2 && k % s == 0 && alpha == ipow(s, k / s);
  add_item(report, "alpha-equals-s^(k/s)", shape,
           "alpha=" + std::to_string(alpha) + " s=" + std::to_string(s) + " k=" + std::to_string(k));
  if (!shape) return report;
  const std::size_t beta = alpha / s;

  std::vector<std::vector<std::size_t>> access(k);
  {
    bool ok = scheme.mode == RepairMode::Constant;
    std::string witness = ok ? "" : "scheme is not constant";
    std::vector<std::size_t> w = scheme.w_nodes, sys = spec.systematic;
    std::sort(w.begin(), w.end());
    std::sort(sys.begin(), sys.end());
    if (ok && w != sys) {
      ok = false;
      witness = "W is not the systematic set";
    }
    const auto pattern = check_optimal_access(scheme, false).pattern;
    for (std::size_t j = 0; j < k && ok; ++j) {
      auto it = pattern.find(RepairKey{std::nullopt, spec.systematic[j], std::nullopt});
      if (it == pattern.end() || it->second.size() != beta) {
        ok = false;
        witness = "node " + std::to_string(spec.systematic[j] + 1) + " lacks a basis-row repair matrix of size beta";
        break;
      }
      access[j] = it->second;
      std::sort(access[j].begin(), access[j].end());
    }
    add_item(report, "access-sets", ok, witness);
    if (!ok) return report;
  }

  bool disjoint = true, same = true, mds = true, scaled = true;
  std::string w_disjoint, w_same, w_mds, w_scaled;
  for (std::size_t j = 0; j < k; ++j) {
    const std::string where = "node " + std::to_string(spec.systematic[j] + 1);
    std::set<std::size_t> used;
    for (std::size_t x = 0; x < beta; ++x) {
      const std::size_t t = access[j][x];
      const auto support = single_support(row_of(spec.A(0, j), t));
      if (support.size() != s && disjoint) {
        disjoint = false;
        w_disjoint = where + " row " + std::to_string(t + 1) + " has support size " + std::to_string(support.size());
      }
      for (auto c : support)
        if (!used.insert(c).second && disjoint) {
          disjoint = false;
          w_disjoint = where + " supports overlap at position " + std::to_string(c + 1);
        }
      std::vector<Block> restricted;
      for (std::size_t i = 0; i < r; ++i) {
        const Block row = row_of(spec.A(i, j), t);
        if (single_support(row) != support && same) {
          same = false;
          w_same = where + " row " + std::to_string(t + 1) + " differs at parity " + std::to_string(i + 1);
        }
        Block part;
        for (auto c : support) part.push_back(row[c]);
        restricted.push_back(std::move(part));
      }
      std::string w;
      if (support.size() == s && mds && !mds_columns(restricted, s, spec.field(), w)) {
        mds = false;
        w_mds = where + " row " + std::to_string(t + 1) + ": " + w;
      }
    }
    for (std::size_t i = 0; i < r && scaled; ++i) {
      std::set<std::size_t> cols;
      for (std::size_t t = 0; t < alpha; ++t) {
        if (std::binary_search(access[j].begin(), access[j].end(), t)) continue;
        const auto support = single_support(row_of(spec.A(i, j), t));
        if (support.size() != 1 || std::binary_search(access[j].begin(), access[j].end(), support[0]) ||
            !cols.insert(support[0]).second) {
          scaled = false;
          w_scaled = where + " parity " + std::to_string(i + 1) + " row " + std::to_string(t + 1);
          break;
        }
      }
    }
  }
  add_item(report, "disjoint-supports-of-size-s", disjoint, w_disjoint);
  add_item(report, "support-independent-of-parity", same, w_same);
  add_item(report, "v-mds-columns", mds, w_mds);
  add_item(report, "scaled-basis-rows", scaled, w_scaled);
  return report;
}

Matrix parity_check_matrix(const CodeSpec& spec) {
  const std::size_t a = spec.params.alpha, r = spec.params.r(), k = spec.params.k;
  const Field& f = *spec.field();
  Matrix h(spec.field(), r * a, spec.params.n * a);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Matrix& blk = spec.A(i, j);
      for (std::size_t x = 0; x < a; ++x)
        for (std::size_t y = 0; y < a; ++y) h(i * a + x, spec.systematic[j] * a + y) = f.neg(blk(x, y));
    }
    for (std::size_t x = 0; x < a; ++x) h(i * a + x, spec.parity[i] * a + x) = 1;
  }
  return h;
}

Matrix plane_ordered(const Matrix& h, std::size_t alpha) {
  const std::size_t r = h.rows() / alpha, n = h.cols() / alpha;
  Matrix out(h.field(), h.rows(), h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < alpha; ++l)
      for (std::size_t node = 0; node < n; ++node)
        for (std::size_t c = 0; c < alpha; ++c) out(l * r + i, c * n + node) = h(i * alpha + l, node * alpha + c);
  return out;
}

CodeSpec code_from_parity_check(const Matrix& h, const CodeParams& params) {
  const std::size_t a = params.alpha, r = params.r(), k = params.k;
  if (h.rows() != r * a || h.cols() != params.n * a)
    throw Error(ErrorKind::DimensionMismatch, "parity-check matrix shape does not match the parameters");
  const Field& f = *params.field;
  if (!(h.block(0, k * a, r * a, r * a) == Matrix::identity(params.field, r * a)))
    throw Error(ErrorKind::InvalidParams, "parity part of H is not the identity");
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix b(params.field, a, a);
      for (std::size_t x = 0; x < a; ++x)
        for (std::size_t y = 0; y < a; ++y) b(x, y) = f.neg(h(i * a + x, j * a + y));
      blocks.push_back(std::move(b));
    }
  return make_systematic_code(params, std::move(blocks));
}

Matrix case2_parity_check(const Case2Form& form, const CodeParams& params) {
  const std::size_t Q = form.Q, k = params.k, r = params.r();
  const Field& f = *params.field;
  Matrix h(params.field, r * Q, params.n * Q);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < Q; ++l) {
      const std::size_t row = i * Q + l;
      for (std::size_t j = 0; j < k; ++j) {
        if (j < Q && l == j) {
          for (std::size_t c = 0; c < Q; ++c) h(row, j * Q + c) = f.neg(form.v[i][j][c]);
        } else if (j < Q) {
          h(row, j * Q + l) = f.neg(form.diag[i][j][l]);
        } else {
          h(row, j * Q + l) = f.neg(form.p_prime[l](i, j - Q));
        }
      }
      h(row, (k + i) * Q + l) = 1;
    }
  return h;
}

}  // namespace msrlab
