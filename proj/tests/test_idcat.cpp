#include <gtest/gtest.h>

#include <random>

#include "stern/idcat.hpp"
#include "stern/seqcore.hpp"

using namespace diatomic;
using namespace diatomic::idcat;

namespace {

ZSeries series(std::initializer_list<long> c, std::size_t trunc) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ZSeries::from_coeffs(std::move(v), trunc);
}

const Catalog& shared() {
  static const Catalog catalog = Catalog::with_capacity(20000);
  return catalog;
}

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << name(r.id) << " e=" << r.params.e.value_or(0)
                          << " N=" << r.params.order << " mismatch at "
                          << (r.mismatch ? r.mismatch->index : 0);
  EXPECT_FALSE(r.mismatch.has_value());
  EXPECT_LE(r.effective_order, r.params.order);
}

}  // namespace

TEST(Names, RoundTrip) {
  ASSERT_EQ(all_identities().size(), 12u);
  for (IdentityId id : all_identities()) EXPECT_EQ(parse_identity(name(id)), id);
  EXPECT_EQ(name(IdentityId::twisted_tail), "thm_1_1");
  EXPECT_FALSE(parse_identity("nonsense"));
}

TEST(Generators, SAndT) {
  EXPECT_EQ(shared().gen_S(8), series({0, 1, 1, 2, 1, 3, 2, 3}, 8));
  EXPECT_EQ(shared().gen_T(8), series({0, 1, -1, 0, 1, 1, 0, -1}, 8));
  EXPECT_EQ(shared().gen_S(1), series({0}, 1));
}

// Prefixes computed independently by long division of the recurrence series.
TEST(Generators, DerivedSeriesPrefixes) {
  EXPECT_EQ(shared().gen_U(12), series({1, 0, -2, 0, 0, -2, 4, 2, -6, 4, 2, -6}, 12));
  EXPECT_EQ(shared().gen_G(12), series({1, -2, 2, 0, -4, 4, 2, -6, 4, 2, -10, 8}, 12));
  EXPECT_EQ(shared().gen_H(12), series({1, -2, -2, 4, 0, 0, 6, -6, -8, 10, -2, -8}, 12));
}

TEST(Generators, DefiningProductsRoundTrip) {
  const std::size_t n = 512;
  const auto& c = shared();
  const auto s_over_z = shift_down(c.gen_S(n + 1), 1);
  const auto& tab = c.tables();
  std::vector<Integer> tail(n), diff(n), sum(n);
  for (std::size_t k = 0; k < n; ++k) {
    tail[k] = tab.t(4 + k);                                  // (sum t(3+m) z^m) / z
    diff[k] = tab.s(3 + k) - tab.s(2 + k);                   // (sum (s(2+m)-s(1+m)) z^m) / z
    sum[k] = -(tab.t(3 + k) + tab.t(2 + k));                 // -(sum (t(2+m)+t(1+m)) z^m) / z
  }
  EXPECT_EQ(c.gen_U(n) * s_over_z, ZSeries::from_coeffs(tail, n));
  EXPECT_EQ(c.gen_G(n) * s_over_z, ZSeries::from_coeffs(diff, n));
  EXPECT_EQ(c.gen_H(n) * s_over_z, ZSeries::from_coeffs(sum, n));
}

TEST(ProdB, SmallCases) {
  EXPECT_EQ(prod_B(0, 8), ZSeries::constant(1, 8));
  EXPECT_EQ(prod_B(1, 8), series({1, 1, 1}, 8));
  EXPECT_EQ(prod_B(2, 8), series({1, 1, 2, 1, 2, 1, 1}, 8));
}

TEST(Functional, PassAtLargeAndSmallOrder) {
  expect_pass(shared().verify_functional_s(8192));
  expect_pass(shared().verify_functional_t(8192));
  expect_pass(shared().verify_functional_s(4));
  expect_pass(shared().verify_functional_t(4));
  EXPECT_THROW(shared().verify_functional_s(3), std::invalid_argument);
}

TEST(Functional, DetectsTamperedT) {
  auto tables = SequenceTables::compute(64);
  tables.set_t(5, tables.t(5) + 1);
  const Report r = Catalog(std::move(tables)).verify_functional_t(32);
  ASSERT_FALSE(r.passed());
  ASSERT_TRUE(r.mismatch);
  EXPECT_LE(r.mismatch->index, 11u);
}

TEST(TwistedIterated, BaseCaseAndLargerE) {
  const Report base = shared().verify_t_iterated(1, 4096);
  expect_pass(base);
  EXPECT_EQ(base.passed(), shared().verify_functional_t(4096).passed());
  for (std::size_t e = 2; e <= 5; ++e) expect_pass(shared().verify_t_iterated(e, 4096));
  EXPECT_THROW(shared().verify_t_iterated(0, 64), std::invalid_argument);
}

TEST(BacherProduct, ExactPolynomial) {
  // e = 1: z (1 + z^2)(1 + z + z^2) = z + z^2 + 2z^3 + z^4 + z^5 and
  // -(t(6) + t(7) z + ... + t(12) z^6) with t(6..12) = 0,-1,-1,-2,-1,-1,0.
  const auto t = twisted_range(13);
  std::vector<long> rhs;
  for (std::size_t n = 0; n <= 6; ++n) rhs.push_back(-t[6 + n].get_si());
  EXPECT_EQ(rhs, (std::vector<long>{0, 1, 1, 2, 1, 1, 0}));
  expect_pass(shared().verify_bacher_product(1, min_order(IdentityId::bacher_product, 1)));
  expect_pass(shared().verify_bacher_product(4, 256));
  for (std::size_t e = 1; e <= 6; ++e)
    expect_pass(shared().verify_bacher_product(e, min_order(IdentityId::bacher_product, e)));
  EXPECT_THROW(shared().verify_bacher_product(3, 24), std::invalid_argument);
}

TEST(PartialSums, BothClosedFormsAgree) {
  EXPECT_EQ(shared().gen_T(7), series({0, 1, -1, 0, 1, 1, 0}, 7));
  expect_pass(shared().verify_partial_sum(1, 7));
  expect_pass(shared().verify_partial_sum(3, 64));
  expect_pass(shared().verify_partial_sum_closed(1, 7));
  expect_pass(shared().verify_partial_sum_closed(4, 128));
  for (std::size_t e = 1; e <= 8; ++e) {
    const std::size_t n = min_order(IdentityId::partial_sum, e);
    const Report a = shared().verify_partial_sum(e, n);
    const Report b = shared().verify_partial_sum_closed(e, n);
    expect_pass(a);
    expect_pass(b);
  }
  EXPECT_THROW(shared().verify_partial_sum(2, 12), std::invalid_argument);
}

TEST(PartialSums, TamperedCoefficientFails) {
  auto tables = SequenceTables::compute(64);
  tables.set_t(3, 1);
  const Report r = Catalog(std::move(tables)).verify_partial_sum(2, 13);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.mismatch->index, 3u);
  EXPECT_EQ(r.mismatch->lhs, 1);
  EXPECT_EQ(r.mismatch->rhs, 0);
}

TEST(RatioTS, PassesForRangeOfE) {
  expect_pass(shared().verify_ratio_ts(0, 256));
  expect_pass(shared().verify_ratio_ts(1, 2048));
  expect_pass(shared().verify_ratio_ts(6, 4096));
}

TEST(TwistedTail, SmallCases) {
  expect_pass(shared().verify_twisted_tail(0, 1024));
  expect_pass(shared().verify_twisted_tail(1, 2048));
  EXPECT_EQ(shared().tables().t(7), -1);
  EXPECT_EQ(shared().tables().t(6), 0);
  for (std::size_t e = 2; e <= 6; ++e) expect_pass(shared().verify_twisted_tail(e, 1024));
}

TEST(SternDifference, SmallCases) {
  expect_pass(shared().verify_stern_difference(0, 512));
  expect_pass(shared().verify_stern_difference(3, 2048));
}

TEST(TwistedSum, SmallCases) {
  expect_pass(shared().verify_twisted_sum(0, 512));
  expect_pass(shared().verify_twisted_sum(3, 2048));
  // e = 0, coefficient 1: -(t(3) + t(2)) = 1, and (H S) at z^1 is H(0) s(1) = 1.
  const auto hs = shared().gen_H(4) * shared().gen_S(4);
  EXPECT_EQ(-(shared().tables().t(3) + shared().tables().t(2)), 1);
  EXPECT_EQ(hs[1], 1);
}

TEST(ProductSternSums, SmallCases) {
  expect_pass(shared().verify_product_stern_sums(0, 2));
  expect_pass(shared().verify_product_stern_sums(1, 4));
  EXPECT_EQ(shift_up(prod_B(1, 4), 1), series({0, 1, 1, 1}, 4));
  expect_pass(shared().verify_product_stern_sums(6, 256));
  EXPECT_THROW(shared().verify_product_stern_sums(3, 15), std::invalid_argument);
}

TEST(PointwiseRelations, FullRangeIncludingBoundary) {
  for (std::size_t e = 1; e <= 12; ++e) {
    const Report r = shared().verify_pointwise_relations(e);
    expect_pass(r);
    EXPECT_EQ(r.effective_order, std::size_t{1} << e);
  }
  // e = 1, m = 1: t(5) + t(3) = 1 = s(1).
  EXPECT_EQ(shared().tables().t(5) + shared().tables().t(3), 1);
}

TEST(PointwiseRelations, ReportsFirstBadPoint) {
  auto tables = SequenceTables::compute(64);
  tables.set_t(8 + 3, 7);
  const Report r = Catalog(std::move(tables)).verify_pointwise_relations(3);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.mismatch->index, 3u);
}

TEST(Catalog, RandomCorruptionIsCaught) {
  std::mt19937_64 rng(77);
  const auto clean = SequenceTables::compute(2048);
  for (int trial = 0; trial < 10; ++trial) {
    auto tables = clean;
    const std::size_t idx = rng() % 512;
    if (rng() & 1)
      tables.set_s(idx, tables.s(idx) + 1);
    else
      tables.set_t(idx, tables.t(idx) - 1);
    const Catalog c(std::move(tables));
    const bool caught =
        !c.verify_functional_s(1024).passed() || !c.verify_functional_t(1024).passed();
    EXPECT_TRUE(caught) << idx;
  }
}

TEST(Catalog, CapacityIsEnforced) {
  const Catalog small = Catalog::with_capacity(16);
  EXPECT_THROW(small.verify_twisted_tail(2, 64), std::out_of_range);
}

TEST(Catalog, FreeVerifySizesItsTables) {
  for (IdentityId id : all_identities()) {
    const std::size_t e = min_param(id) + 1;
    expect_pass(verify(id, e, std::max<std::size_t>(256, min_order(id, e))));
  }
}
