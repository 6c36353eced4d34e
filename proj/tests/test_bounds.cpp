#include <gtest/gtest.h>

#include "msrlab/bounds.hpp"
#include "msrlab/construction.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"

namespace msrlab {
namespace {

using testing::kind_of;

constexpr BoundMode kModes[] = {BoundMode::MsrAllNode, BoundMode::MsrConstant, BoundMode::MsrAnyDHelperIndep,
                                BoundMode::MdsSubset, BoundMode::MdsSubsetAnyD};

bool subset_mode(BoundMode m) { return m == BoundMode::MdsSubset || m == BoundMode::MdsSubsetAnyD; }

std::string value(BoundMode mode, std::uint64_t n, std::uint64_t k, std::uint64_t d,
                  std::optional<std::uint64_t> w = std::nullopt) {
  return bound({mode, n, k, d, w}).value.str();
}

TEST(Bound, SpotValues) {
  EXPECT_EQ(value(BoundMode::MsrAllNode, 10, 7, 9), "27");
  EXPECT_EQ(bound({BoundMode::MsrAllNode, 10, 7, 9, std::nullopt}).branch, "min-first");
  EXPECT_EQ(value(BoundMode::MdsSubset, 8, 6, 7, 3), "4");
  EXPECT_EQ(bound({BoundMode::MdsSubset, 8, 6, 7, 3}).branch, "unconditional");
  EXPECT_EQ(value(BoundMode::MdsSubsetAnyD, 9, 5, 5, 3), "1");
  EXPECT_EQ(value(BoundMode::MdsSubsetAnyD, 7, 3, 4, 2), "2");
  EXPECT_EQ(value(BoundMode::MdsSubsetAnyD, 7, 3, 4, 1), "2");
  EXPECT_EQ(value(BoundMode::MdsSubsetAnyD, 8, 4, 6, 3), "3");
}

TEST(Bound, LargeValuesAreExact) {
  EXPECT_EQ(value(BoundMode::MsrAllNode, 62, 60, 61), "2147483648");  // 2^31
  EXPECT_EQ(value(BoundMode::MsrAllNode, 150, 148, 149), "37778931862957161709568");  // 2^75
  EXPECT_EQ(value(BoundMode::MsrConstant, 200, 150, 199), "6250000");  // 50^4
}

TEST(Bound, RejectsQueriesOutsideHypotheses) {
  EXPECT_EQ(kind_of([] { bound({BoundMode::MsrAllNode, 10, 7, 8, std::nullopt}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { bound({BoundMode::MsrAnyDHelperIndep, 10, 7, 10, std::nullopt}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { bound({BoundMode::MdsSubset, 10, 7, 9, std::nullopt}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { bound({BoundMode::MdsSubset, 10, 7, 9, 10}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { bound({BoundMode::MdsSubsetAnyD, 10, 7, 8, 9}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { bound({BoundMode::MsrAllNode, 10, 7, 9, 3}); }), ErrorKind::InvalidParams);
  EXPECT_EQ(kind_of([] { parse_bound_mode("thm9"); }), ErrorKind::InvalidParams);
}

TEST(Bound, ModeNamesRoundTrip) {
  for (auto m : kModes) EXPECT_EQ(parse_bound_mode(to_string(m)), m);
  EXPECT_EQ(to_string(BoundMode::MsrAnyDHelperIndep), "msr-anyd");
}

// Every mode on the full grid against the integer oracle.
TEST(Bound, GridMatchesClosedForms) {
  std::size_t checked = 0;
  for (std::uint64_t n = 5; n <= 20; ++n)
    for (std::uint64_t k = 3; k <= n - 2; ++k)
      for (std::uint64_t d = k; d <= n - 1; ++d)
        for (auto mode : kModes) {
          std::vector<std::optional<std::uint64_t>> ws{std::nullopt};
          if (subset_mode(mode)) {
            ws.clear();
            for (std::uint64_t w = 1; w <= n - 1; ++w) ws.push_back(w);
          }
          for (auto w : ws) {
            const auto expect = oracle::bound_value(mode, n, k, d, w);
            if (!expect) {
              EXPECT_EQ(kind_of([&] { bound({mode, n, k, d, w}); }), ErrorKind::InvalidParams);
              continue;
            }
            ASSERT_EQ(value(mode, n, k, d, w), oracle::to_string(*expect))
                << to_string(mode) << " n=" << n << " k=" << k << " d=" << d << " w=" << (w ? *w : 0);
            ++checked;
          }
        }
  EXPECT_GT(checked, 10000u);
}

TEST(Bound, NonDecreasingInW) {
  for (std::uint64_t n = 5; n <= 20; ++n)
    for (std::uint64_t k = 3; k <= n - 2; ++k)
      for (std::uint64_t d = k; d <= n - 1; ++d) {
        if (d == n - 1)
          for (std::uint64_t w = 2; w <= n - 1; ++w)
            EXPECT_LE(bound({BoundMode::MdsSubset, n, k, d, w - 1}).value, bound({BoundMode::MdsSubset, n, k, d, w}).value);
        for (std::uint64_t w = 2; w <= d; ++w)
          EXPECT_LE(bound({BoundMode::MdsSubsetAnyD, n, k, d, w - 1}).value,
                    bound({BoundMode::MdsSubsetAnyD, n, k, d, w}).value);
      }
}

TEST(Bound, AllNodeAtMostConstant) {
  for (std::uint64_t n = 5; n <= 20; ++n)
    for (std::uint64_t k = 3; k <= n - 2; ++k)
      EXPECT_LE(bound({BoundMode::MsrAllNode, n, k, n - 1, std::nullopt}).value,
                bound({BoundMode::MsrConstant, n, k, n - 1, std::nullopt}).value);
}

TEST(Compare, ConstructedCodesAchieve) {
  const auto c2 = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  const auto a = compare(c2.spec, c2.scheme, {BoundMode::MdsSubsetAnyD, 7, 3, 4, 2});
  EXPECT_EQ(a.verdict, Verdict::Achieves);
  EXPECT_EQ(a.bound, 2);
  EXPECT_EQ(compare(c2.spec, c2.scheme, {BoundMode::MdsSubsetAnyD, 7, 3, 4, 1}).verdict, Verdict::Achieves);

  const auto cp = build_coupled_example(Field::make(13), {.seed = 1});
  const auto b = compare(cp.spec, cp.scheme, {BoundMode::MdsSubsetAnyD, 8, 4, 6, 3});
  EXPECT_EQ(b.verdict, Verdict::Achieves);
  EXPECT_EQ(b.bound, 3);

  const auto c1 = build_case1(7, 4, 5, Field::make(17), {.seed = 1});
  EXPECT_NE(compare(c1.spec, c1.scheme, {BoundMode::MdsSubsetAnyD, 7, 4, 5, 4}).verdict, Verdict::Violates);
}

TEST(Compare, ModeMismatch) {
  const auto c2 = build_case2(7, 3, 4, Field::make(13), {.seed = 1});
  EXPECT_EQ(kind_of([&] { compare(c2.spec, c2.scheme, {BoundMode::MdsSubsetAnyD, 8, 3, 4, 2}); }),
            ErrorKind::ModeMismatch);
  EXPECT_EQ(kind_of([&] { compare(c2.spec, c2.scheme, {BoundMode::MdsSubsetAnyD, 7, 3, 4, 3}); }),
            ErrorKind::ModeMismatch);
}

}  // namespace
}  // namespace msrlab
