#include <gtest/gtest.h>

#include "msrlab/analysis.hpp"
#include "msrlab/bounds.hpp"
#include "msrlab/combinatorics.hpp"
#include "msrlab/construction.hpp"
#include "support/coupled_template.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"

namespace msrlab {
namespace {

using testing::kCoupledTemplate;
using testing::kind_of;
using testing::pattern;

// Every property a constructed code must have, in order.
void expect_verified(const BuiltCode& b, int case_id, const BoundQuery& q) {
  const auto& spec = b.spec;
  const auto& scheme = b.scheme;
  const auto mds = mds_check(spec);
  EXPECT_TRUE(mds.pass);
  EXPECT_TRUE(oracle::all_subsets_decode(spec));
  EXPECT_TRUE(check_optimal_access(scheme, true).pass);
  for (auto j : scheme.w_nodes) {
    EXPECT_TRUE(check_interference_alignment(spec, scheme, j).pass) << "node " << j;
    for (const auto& hs : subsets(without(iota_nodes(spec.params.n), {j}), spec.params.d))
      EXPECT_TRUE(check_full_rank(spec, scheme, j, hs).pass);
  }
  const auto st = case_id == 1 ? verify_structure_case1(spec, scheme) : verify_structure_case2(spec, scheme);
  EXPECT_TRUE(st.pass);
  EXPECT_TRUE(repair_sweep(spec, scheme).pass);
  EXPECT_TRUE(oracle::valid_code(spec, scheme));
  EXPECT_EQ(compare(spec, scheme, q).verdict, Verdict::Achieves);
}

TEST(Case2, SevenThreeFour) {
  const auto b = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  EXPECT_EQ(b.spec.params.alpha, 2u);
  EXPECT_EQ(b.spec.params.beta(), 1u);
  EXPECT_EQ(b.scheme.w_nodes, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(b.scheme.mode, RepairMode::Constant);
  EXPECT_EQ(mds_check(b.spec).minors_checked, binomial(4, 1) * binomial(3, 1) + binomial(4, 2) * binomial(3, 2) +
                                                   binomial(4, 3) * binomial(3, 3));
  const Matrix g = assemble_generator(b.spec);
  EXPECT_EQ(g.block(0, 0, 6, 6), Matrix::identity(b.spec.field(), 6));
  expect_verified(b, 2, {BoundMode::MdsSubsetAnyD, 7, 3, 4, 2});
}

TEST(Case2, OtherParameters) {
  for (auto [n, k, d, q] : {std::tuple{8u, 4u, 6u, 13u}, {6u, 3u, 4u, 11u}, {9u, 4u, 6u, 16u}}) {
    FieldPtr f = q == 16 ? Field::make(2, 4, find_irreducible(2, 4)) : Field::make(q);
    const auto b = build_case2(n, k, d, f, {.seed = 3});
    expect_verified(b, 2, {BoundMode::MdsSubsetAnyD, n, k, d, d - k + 1});
  }
}

TEST(Case2, ParamViolations) {
  auto f = Field::make(13);
  EXPECT_EQ(kind_of([&] { build_case2(7, 3, 3, f); }), ErrorKind::ParamViolation);
  EXPECT_EQ(kind_of([&] { build_case2(6, 2, 3, f); }), ErrorKind::ParamViolation);
  EXPECT_EQ(kind_of([&] { build_case2(9, 3, 7, f); }), ErrorKind::ParamViolation);  // Q = 5 > k
  const auto small = kind_of([&] { build_case2(7, 3, 4, Field::make(2)); });
  EXPECT_TRUE(small == ErrorKind::ParamViolation || small == ErrorKind::ConstructionFailed);
}

TEST(Case2, StructureTamperIsReported) {
  const auto b = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  auto spec = b.spec;
  // row j of A_{p_2,u_1} made equal to that of A_{p_1,u_1}
  for (std::size_t c = 0; c < 2; ++c) spec.A(1, 0)(0, c) = spec.A(0, 0)(0, c);
  const auto st = verify_structure_case2(spec, b.scheme);
  EXPECT_FALSE(st.pass);
  bool flagged = false;
  for (const auto& item : st.items)
    if (item.name == "v-mds-columns") {
      flagged = !item.pass;
      EXPECT_FALSE(item.witness.empty());
    }
  EXPECT_TRUE(flagged);
}

TEST(Case2, IdentityBlocksFailStructure) {
  auto f = Field::make(13);
  const auto b = build_case2(7, 3, 4, f, {.seed = 1});
  auto spec = b.spec;
  for (auto& blk : spec.blocks) blk = Matrix::identity(f, 2);
  const auto st = verify_structure_case2(spec, b.scheme);
  EXPECT_FALSE(st.pass);
  EXPECT_FALSE(mds_check(spec).pass);
}

TEST(Coupled, MatchesTemplateAcrossFieldsAndSeeds) {
  for (auto f : {Field::make(13), Field::make(11), Field::make(2, 4, find_irreducible(2, 4)), Field::make(17)})
    for (std::uint64_t seed : {1u, 2u, 9u}) {
      const auto b = build_coupled_example(f, {.seed = seed});
      const Matrix h = plane_ordered(parity_check_matrix(b.spec), 3);
      ASSERT_EQ(h.rows(), 12u);
      ASSERT_EQ(h.cols(), 24u);
      EXPECT_EQ(pattern(h), kCoupledTemplate) << f->name() << " seed " << seed;
      EXPECT_EQ(pattern(plane_ordered(case2_parity_check(b.form, b.spec.params), 3)), kCoupledTemplate);
    }
}

TEST(Coupled, VerifiesAndRepairsFromEverySixHelpers) {
  const auto b = build_coupled_example(Field::make(13), {.seed = 1});
  EXPECT_EQ(b.spec.params.n, 8u);
  EXPECT_EQ(b.spec.params.alpha, 3u);
  EXPECT_EQ(b.scheme.w_nodes, (std::vector<std::size_t>{0, 1, 2}));
  expect_verified(b, 2, {BoundMode::MdsSubsetAnyD, 8, 4, 6, 3});
  const auto sets = subsets(without(iota_nodes(8), {1}), 6);
  EXPECT_EQ(sets.size(), 7u);
  for (const auto& hs : sets)
    for (std::size_t idx = 0; idx < 12; ++idx) {
      const auto c = encode(b.spec, basis_message(b.spec, idx));
      EXPECT_EQ(repair_node(b.spec, b.scheme, c, 1, hs).block, c.blocks[1]);
    }
}

TEST(Coupled, SmallFieldFails) {
  EXPECT_EQ(kind_of([] { build_coupled_example(Field::make(2)); }), ErrorKind::ConstructionFailed);
  EXPECT_EQ(kind_of([] { build_coupled_example(Field::make(7)); }), ErrorKind::ConstructionFailed);
}

TEST(Case1, SevenFourFive) {
  const auto b = build_case1(7, 4, 5, Field::make(17), {.seed = 1});
  EXPECT_EQ(b.spec.params.alpha, 4u);
  EXPECT_EQ(b.spec.params.beta(), 2u);
  EXPECT_EQ(b.scheme.w_nodes, (std::vector<std::size_t>{0, 1, 2, 3}));
  // base-2 digit slices: node j reads the positions whose digit j/2 equals j%2
  EXPECT_EQ(b.form.access[0], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(b.form.access[1], (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(b.form.access[2], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(b.form.access[3], (std::vector<std::size_t>{2, 3}));
  expect_verified(b, 1, {BoundMode::MdsSubsetAnyD, 7, 4, 5, 4});
  const auto m = max_membership(b.spec, b.scheme);
  EXPECT_EQ(m.max, 2u);
  EXPECT_EQ(m.bound, 2u);
}

TEST(Case1, ParamViolations) {
  auto f = Field::make(17);
  EXPECT_EQ(kind_of([&] { build_case1(8, 4, 6, f); }), ErrorKind::ParamViolation);  // s = 3 does not divide 4
  EXPECT_EQ(kind_of([&] { build_case1(5, 2, 3, f); }), ErrorKind::ParamViolation);
  EXPECT_EQ(kind_of([&] { build_case1(7, 4, 4, f); }), ErrorKind::ParamViolation);
}

TEST(ParityCheck, AnnihilatesCodewords) {
  for (const BuiltCode& b : std::vector<BuiltCode>{build_case2(7, 3, 4, Field::make(13), {.seed = 1}),
                                                   build_case1(7, 4, 5, Field::make(17), {.seed = 1})}) {
    const Matrix h = parity_check_matrix(b.spec);
    const std::size_t a = b.spec.params.alpha;
    EXPECT_EQ(h.rows(), b.spec.params.r() * a);
    for (std::size_t idx = 0; idx < b.spec.params.B(); ++idx) {
      const auto c = encode(b.spec, basis_message(b.spec, idx));
      std::vector<Elem> flat;
      for (const auto& blk : c.blocks) flat.insert(flat.end(), blk.begin(), blk.end());
      for (auto x : h.apply(flat)) EXPECT_EQ(x, 0u);
    }
    EXPECT_EQ(code_from_parity_check(h, b.spec.params).blocks, b.spec.blocks);
  }
}

TEST(ParityCheck, EmptyWithoutParities) {
  auto f = Field::make(5);
  const auto spec = make_systematic_code(CodeParams{3, 3, 3, 2, f}, {});
  EXPECT_EQ(parity_check_matrix(spec).rows(), 0u);
}

TEST(ParityCheck, ExplicitNegationInOddCharacteristic) {
  const auto b = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  const Matrix h = parity_check_matrix(b.spec);
  const Field& f = *b.spec.field();
  EXPECT_EQ(h(0, 0), f.neg(b.spec.A(0, 0)(0, 0)));
  EXPECT_EQ(h(0, 6), 1u);
}

TEST(Determinism, SameSeedSameBytes) {
  auto f = Field::make(13);
  EXPECT_EQ(serialize(build_case2(7, 3, 4, f, {.seed = 5}).file()), serialize(build_case2(7, 3, 4, f, {.seed = 5}).file()));
  EXPECT_NE(serialize(build_case2(7, 3, 4, f, {.seed = 5}).file()), serialize(build_case2(7, 3, 4, f, {.seed = 6}).file()));
  EXPECT_EQ(serialize(build_coupled_example(f, {.seed = 2}).file()), serialize(build_coupled_example(f, {.seed = 2}).file()));
  auto g = Field::make(17);
  EXPECT_EQ(serialize(build_case1(7, 4, 5, g, {.seed = 4}).file()), serialize(build_case1(7, 4, 5, g, {.seed = 4}).file()));
}

TEST(RandomMds, PassesOracle) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto spec = random_mds_code(5, 3, 4, 2, Field::make(7), seed);
    EXPECT_TRUE(mds_check(spec).pass);
    EXPECT_TRUE(oracle::all_subsets_decode(spec));
  }
}

}  // namespace
}  // namespace msrlab
