#include <gtest/gtest.h>

#include "msrlab/field.hpp"
#include "support/expect.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace msrlab {
namespace {

using testing::kind_of;

TEST(Field, MakesPrimeAndExtensionFields) {
  auto gf2 = Field::make(2);
  EXPECT_EQ(gf2->order(), 2u);
  auto gf8 = Field::make(2, 3, {1, 1, 0, 1});
  EXPECT_EQ(gf8->order(), 8u);
  EXPECT_EQ(gf8->name(), "GF(2^3)");
}

TEST(Field, RejectsNonPrimeCharacteristic) {
  EXPECT_EQ(kind_of([] { Field::make(4); }), ErrorKind::NonPrimeP);
  EXPECT_EQ(kind_of([] { Field::make(1); }), ErrorKind::NonPrimeP);
}

TEST(Field, RejectsReducibleOrMalformedPolynomials) {
  // x^2 + 1 = (x+1)^2 over GF(2)
  EXPECT_EQ(kind_of([] { Field::make(2, 2, {1, 0, 1}); }), ErrorKind::ReduciblePolynomial);
  EXPECT_EQ(kind_of([] { Field::make(2, 3, {1, 1, 1}); }), ErrorKind::InvalidPolynomial);
  EXPECT_EQ(kind_of([] { Field::make(3, 2, {1, 0, 2}); }), ErrorKind::InvalidPolynomial);
  EXPECT_EQ(kind_of([] { Field::make(5, 1, {1, 1}); }), ErrorKind::InvalidPolynomial);
  EXPECT_EQ(kind_of([] { Field::make(2, 17, {}); }), ErrorKind::InvalidParams);
}

TEST(Field, SmallExamples) {
  auto gf2 = Field::make(2);
  EXPECT_EQ(gf2->add(1, 1), 0u);
  auto gf13 = Field::make(13);
  EXPECT_EQ(gf13->inv(5), 8u);
  auto gf8 = Field::make(2, 3, {1, 1, 0, 1});
  // x * x^2 = x^3 = x + 1
  EXPECT_EQ(gf8->mul(2, 4), 3u);
}

TEST(Field, ZeroHasNoInverse) {
  auto gf7 = Field::make(7);
  EXPECT_EQ(kind_of([&] { (void)gf7->inv(0); }), ErrorKind::ZeroInverse);
}

TEST(Field, FieldElemRejectsMixing) {
  FieldElem a(Field::make(5), 2), b(Field::make(7), 3);
  EXPECT_EQ(kind_of([&] { (void)(a + b); }), ErrorKind::FieldMismatch);
  FieldElem c(Field::make(5), 4);
  EXPECT_EQ((a * c).value(), 3u);
}

TEST(Field, IrreducibilitySearch) {
  EXPECT_TRUE(is_irreducible(2, {1, 1, 0, 1}));
  EXPECT_FALSE(is_irreducible(2, {1, 0, 0, 1}));  // x^3 + 1 has root 1
  EXPECT_FALSE(is_irreducible(2, {1, 0, 1, 0, 1}));  // (x^2+x+1)^2
  for (std::uint32_t m = 2; m <= 5; ++m) {
    const auto poly = find_irreducible(2, m);
    EXPECT_TRUE(is_irreducible(2, poly));
    EXPECT_NO_THROW(Field::make(2, m, poly));
  }
}

// Field axioms checked on complete tables of every field with q <= 16.
class FieldAxioms : public ::testing::TestWithParam<FieldPtr> {};

TEST_P(FieldAxioms, ExhaustiveTables) {
  const Field& f = *GetParam();
  const Elem q = f.order();
  for (Elem a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    for (Elem b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.mul(a, b), oracle::poly_mul(f, a, b));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      for (Elem c = 0; c < q; ++c) {
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

std::vector<FieldPtr> fields_up_to_16() {
  std::vector<FieldPtr> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) out.push_back(Field::make(p));
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}}) out.push_back(Field::make(p, m, find_irreducible(p, m)));
  return out;
}

INSTANTIATE_TEST_SUITE_P(AllSmall, FieldAxioms, ::testing::ValuesIn(fields_up_to_16()),
                         [](const auto& info) { return "q" + std::to_string(info.param->order()); });

TEST(Field, PowMatchesRepeatedMultiplication) {
  testing::Gen gen(11);
  for (const auto& f : testing::small_fields())
    for (int trial = 0; trial < 20; ++trial) {
      const Elem a = gen.elem(*f);
      const std::uint64_t e = gen.below(40);
      Elem expect = 1;
      for (std::uint64_t i = 0; i < e; ++i) expect = f->mul(expect, a);
      EXPECT_EQ(f->pow(a, e), expect);
    }
}

}  // namespace
}  // namespace msrlab
