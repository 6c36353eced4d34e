#include <gtest/gtest.h>

#include "msrlab/analysis.hpp"
#include "msrlab/combinatorics.hpp"
#include "msrlab/construction.hpp"
#include "support/expect.hpp"
#include "support/generators.hpp"

namespace msrlab {
namespace {

using testing::kind_of;

// Same matrices as a constant scheme, stored per (helper, failed) pair.
RepairScheme per_helper(const CodeSpec& spec, const RepairScheme& constant) {
  RepairScheme out;
  out.mode = RepairMode::HelperIndependent;
  out.w_nodes = constant.w_nodes;
  for (auto j : constant.w_nodes)
    for (std::size_t h = 0; h < spec.params.n; ++h)
      if (h != j) out.set(h, j, *constant.find(h, j));
  return out;
}

struct Codes {
  Case2Build case2 = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  Case2Build coupled = build_coupled_example(Field::make(13), {.seed = 1});
  Case1Build case1 = build_case1(7, 4, 5, Field::make(17), {.seed = 1});
};

const Codes& codes() {
  static const Codes c;
  return c;
}

TEST(IntersectionDim, Examples) {
  const auto& c2 = codes().case2;
  EXPECT_EQ(intersection_dim(c2.spec, c2.scheme, 3, {0}), 1u);
  EXPECT_EQ(intersection_dim(c2.spec, c2.scheme, 3, {0, 1}), 0u);
  RepairScheme same;
  same.mode = RepairMode::Constant;
  same.w_nodes = {0, 1, 2};
  for (auto j : same.w_nodes) same.set_constant(j, RepairMatrix::access({1}, 3));
  const auto& cp = codes().coupled;
  EXPECT_EQ(intersection_dim(cp.spec, same, 5, {0, 1, 2}), 1u);
  EXPECT_EQ(kind_of([&] { intersection_dim(cp.spec, same, 5, {3}); }), ErrorKind::MissingMatrix);
}

TEST(Invariance, ConstructedAndConstantSchemesPass) {
  for (const BuiltCode* b : {static_cast<const BuiltCode*>(&codes().case2), static_cast<const BuiltCode*>(&codes().coupled),
                             static_cast<const BuiltCode*>(&codes().case1)}) {
    const auto& w = b->scheme.w_nodes;
    const auto others = without(iota_nodes(b->spec.params.n), {w[0], w[1]});
    for (const auto& P : subsets(others, b->spec.params.s())) EXPECT_TRUE(check_invariance(b->spec, b->scheme, P, {w[0], w[1]}).pass);
  }
}

TEST(Invariance, RandomTampersAreDetected) {
  const auto& cp = codes().coupled;
  testing::Gen gen(50);
  const std::vector<std::size_t> U{0, 1}, P{5, 6, 7};
  std::size_t failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto scheme = per_helper(cp.spec, cp.scheme);
    const std::size_t p = P[gen.below(3)], u = U[gen.below(2)];
    if (trial % 2 == 0)
      scheme.set(p, u, RepairMatrix::access({gen.below(3)}, 3));
    else
      scheme.set(p, u, RepairMatrix::full(gen.of_rank(cp.spec.field(), 1, 3, 1)));
    if (!check_invariance(cp.spec, scheme, P, U).pass) ++failures;
  }
  EXPECT_GE(failures, 1u);
}

TEST(IntersectionInequality, HoldsOnConstructedCodes) {
  const auto& cp = codes().coupled;
  const std::vector<std::size_t> U{0, 1};
  for (const auto& P : subsets(without(iota_nodes(8), U), 3))
    for (auto p : P) {
      const auto r = check_lemma1_inequality(cp.spec, cp.scheme, P, U, p);
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.lhs, 0u);
      EXPECT_EQ(r.rhs, 1u);
    }
  const auto& c2 = codes().case2;
  for (const auto& P : subsets({2, 3, 4, 5, 6}, 2))
    EXPECT_TRUE(check_lemma1_inequality(c2.spec, c2.scheme, P, {0, 1}, P[0]).pass);
}

TEST(Cascade, Examples) {
  const auto& cp = codes().coupled;
  const auto one = check_cascade(cp.spec, cp.scheme, 7, {0});
  EXPECT_TRUE(one.pass);
  EXPECT_EQ(one.dim, 1u);  // beta == alpha / s
  const auto three = check_cascade(cp.spec, cp.scheme, 7, {0, 1, 2});
  EXPECT_TRUE(three.pass);
  EXPECT_EQ(three.dim, 0u);

  RepairScheme same;
  same.mode = RepairMode::Constant;
  same.w_nodes = {0, 1, 2};
  for (auto j : same.w_nodes) same.set_constant(j, RepairMatrix::access({0}, 3));
  const auto bad = check_cascade(cp.spec, same, 7, {0, 1});
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.dim, 1u);
}

TEST(Membership, ConstructedCodes) {
  const auto& cp = codes().coupled;
  const auto m = max_membership(cp.spec, cp.scheme);
  EXPECT_TRUE(m.pass);
  EXPECT_EQ(m.max, 1u);
  EXPECT_EQ(m.bound, 1u);
  const auto& c2 = codes().case2;
  const auto m2 = max_membership(c2.spec, c2.scheme);
  EXPECT_EQ(m2.max, 1u);
  EXPECT_EQ(m2.bound, 1u);
  const auto& c1 = codes().case1;
  const auto m1 = max_membership(c1.spec, c1.scheme);
  EXPECT_TRUE(m1.pass);
  EXPECT_LE(m1.max, m1.bound);
}

TEST(Membership, AlphaOneIsExempt) {
  auto f = Field::make(7);
  const auto spec = random_mds_code(4, 2, 2, 1, f, 1);
  RepairScheme s;
  s.mode = RepairMode::Constant;
  s.w_nodes = {0, 1};
  for (auto j : s.w_nodes) s.set_constant(j, RepairMatrix::access({0}, 1));
  const auto m = max_membership(spec, s);
  EXPECT_TRUE(m.exempt);
  EXPECT_TRUE(m.pass);
}

TEST(Membership, RejectsNonAccessRows) {
  const auto& c2 = codes().case2;
  auto s = c2.scheme;
  s.set_constant(0, RepairMatrix::full(Matrix::from_rows(c2.spec.field(), {{1, 1}})));
  EXPECT_EQ(kind_of([&] { max_membership(c2.spec, s); }), ErrorKind::NotOptimalAccess);
  EXPECT_EQ(kind_of([&] { bipartite_audit(c2.spec, s, AuditMode::Cor2); }), ErrorKind::NotOptimalAccess);
}

// A basis vector in more repair spaces than the log bound allows comes with
// a repair failure somewhere.
TEST(Membership, ViolationImpliesRepairFailure) {
  testing::Gen gen(404);
  std::size_t violations = 0;
  for (const BuiltCode* b : {static_cast<const BuiltCode*>(&codes().coupled), static_cast<const BuiltCode*>(&codes().case1)}) {
    const std::size_t alpha = b->spec.params.alpha, beta = b->spec.params.beta();
    for (int trial = 0; trial < 40; ++trial) {
      auto s = b->scheme;
      const std::size_t j = s.w_nodes[gen.below(s.w_nodes.size())];
      auto rows = gen.subset(alpha, beta);
      std::sort(rows.begin(), rows.end());
      s.set_constant(j, RepairMatrix::access(rows, alpha));
      const auto m = max_membership(b->spec, s);
      if (!m.pass) {
        ++violations;
        EXPECT_FALSE(repair_sweep(b->spec, s).pass);
      }
    }
  }
  EXPECT_GT(violations, 0u);
}

TEST(BipartiteAudit, ConstructedCodesSaturate) {
  const auto& cp = codes().coupled;
  const auto a = bipartite_audit(cp.spec, cp.scheme, AuditMode::Cor2);
  EXPECT_EQ(a.right_nodes.size(), 3u);
  EXPECT_EQ(a.right_degree, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(a.implied_bound, 3u);
  EXPECT_EQ(a.recomputed_bound, 3u);
  EXPECT_TRUE(a.edge_identity);
  EXPECT_TRUE(a.saturated);
  EXPECT_EQ(a.helper, std::optional<std::size_t>(7));
  const auto& c2 = codes().case2;
  const auto b = bipartite_audit(c2.spec, c2.scheme, AuditMode::Cor2);
  EXPECT_EQ(b.implied_bound, 2u);
  EXPECT_TRUE(b.saturated);
  const auto& c1 = codes().case1;
  const auto c = bipartite_audit(c1.spec, c1.scheme, AuditMode::Cor2);
  EXPECT_TRUE(c.edge_identity);
  EXPECT_EQ(c.implied_bound, c1.spec.params.alpha);
  EXPECT_EQ(c.left_sum, c.right_sum);
}

TEST(BipartiteAudit, EmptyRightSet) {
  const auto& c2 = codes().case2;
  RepairScheme s;
  s.mode = RepairMode::Constant;
  const auto a = bipartite_audit(c2.spec, s, AuditMode::Cor2);
  EXPECT_TRUE(a.right_nodes.empty());
  EXPECT_EQ(a.implied_bound, 1u);
  EXPECT_TRUE(a.edge_identity);
}

TEST(BipartiteAudit, ModeRequirements) {
  const auto& c2 = codes().case2;
  EXPECT_EQ(kind_of([&] { bipartite_audit(c2.spec, per_helper(c2.spec, c2.scheme), AuditMode::Cor3); }),
            ErrorKind::ModeMismatch);
  EXPECT_EQ(kind_of([&] { bipartite_audit(c2.spec, c2.scheme, AuditMode::Thm1); }), ErrorKind::MissingMatrix);
}

TEST(ProofAudit, PassesOnConstructedCodes) {
  for (const BuiltCode* b : {static_cast<const BuiltCode*>(&codes().case2), static_cast<const BuiltCode*>(&codes().coupled),
                             static_cast<const BuiltCode*>(&codes().case1)}) {
    const auto r = proof_audit(b->spec, b->scheme, 3);
    EXPECT_TRUE(r.pass) << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.cascade_checked, 0u);
    EXPECT_GT(r.invariance_checked, 0u);
    EXPECT_GT(r.inequality_checked, 0u);
  }
}

}  // namespace
}  // namespace msrlab
