#include "stern/idcat.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "stern/seqcore.hpp"

namespace diatomic::idcat {

namespace {

struct Entry {
  IdentityId id;
  std::string_view wire;
};

constexpr std::array<Entry, 12> kEntries{{
    {IdentityId::stern_functional, "lemma_2_1_S"},
    {IdentityId::twisted_functional, "lemma_2_1_T"},
    {IdentityId::twisted_iterated, "lemma_2_2"},
    {IdentityId::bacher_product, "thm_2_3"},
    {IdentityId::partial_sum, "lemma_2_4"},
    {IdentityId::partial_sum_closed, "lemma_2_5"},
    {IdentityId::ratio_ts, "eq_2_2"},
    {IdentityId::twisted_tail, "thm_1_1"},
    {IdentityId::stern_difference, "thm_1_2_i"},
    {IdentityId::twisted_sum, "thm_1_2_ii"},
    {IdentityId::product_stern_sums, "lemma_3_1"},
    {IdentityId::pointwise_relations, "lemma_3_2"},
}};

constexpr std::array<IdentityId, 12> kOrder = [] {
  std::array<IdentityId, 12> ids{};
  for (std::size_t i = 0; i < kEntries.size(); ++i) ids[i] = kEntries[i].id;
  return ids;
}();

std::size_t pow2(std::size_t e) {
  if (e >= 8 * sizeof(std::size_t) - 2) throw std::out_of_range("exponent too large");
  return std::size_t{1} << e;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Integer sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

Report compare(IdentityId id, std::optional<std::size_t> e, std::size_t order,
               const ZSeries& lhs, const ZSeries& rhs, std::size_t effective) {
  Report r;
  r.id = id;
  r.params = {e, order};
  r.effective_order = effective;
  r.mismatch = eq_upto(lhs, rhs, effective);
  r.status = r.mismatch ? Status::fail : Status::pass;
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_order(IdentityId id, std::size_t e, std::size_t n) {
  const std::size_t need = min_order(id, e);
  require(n >= need, std::string(name(id)) + ": order " + std::to_string(n) +
                         " below the required " + std::to_string(need));
}

// 1 + z^{2^i} + z^{2^{i+1}} at order n.
ZSeries bacher_factor(std::size_t i, std::size_t n) {
  return ZSeries::constant(1, n) + ZSeries::monomial(1, pow2(i), n) +
         ZSeries::monomial(1, pow2(i + 1), n);
}

// prod_{i=j}^{e-1} (-z^{2^i}) at order n.
ZSeries neg_monomial_product(std::size_t j, std::size_t e, std::size_t n) {
  ZSeries p = ZSeries::constant(1, n);
  for (std::size_t i = j; i < e; ++i) p = p * ZSeries::monomial(-1, pow2(i), n);
  return p;
}

// sum_{j<e} (-1)^j P_j at order n.
ZSeries alternating_prod_sum(std::size_t e, std::size_t n) {
  ZSeries acc(n);
  ZSeries p = ZSeries::constant(1, n);
  for (std::size_t j = 0; j < e; ++j) {
    acc += scale(p, sign_pow(j));
    p = p * bacher_factor(j, n);
  }
  return acc;
}

}  // namespace

std::string_view name(IdentityId id) {
  for (const auto& entry : kEntries)
    if (entry.id == id) return entry.wire;
  return "unknown";
}

std::optional<IdentityId> parse_identity(std::string_view text) {
  for (const auto& entry : kEntries)
    if (entry.wire == text) return entry.id;
  return std::nullopt;
}

std::span<const IdentityId> all_identities() { return kOrder; }

bool is_unparameterized(IdentityId id) {
  return id == IdentityId::stern_functional || id == IdentityId::twisted_functional;
}

std::size_t min_param(IdentityId id) {
  switch (id) {
    case IdentityId::twisted_iterated:
    case IdentityId::bacher_product:
    case IdentityId::partial_sum:
    case IdentityId::partial_sum_closed:
    case IdentityId::ratio_ts:
    case IdentityId::pointwise_relations:
      return 1;
    default:
      return 0;
  }
}

std::size_t min_order(IdentityId id, std::size_t e) {
  switch (id) {
    case IdentityId::stern_functional:
    case IdentityId::twisted_functional:
      return 4;
    case IdentityId::bacher_product:
    case IdentityId::partial_sum:
    case IdentityId::partial_sum_closed:
      // Both sides have degree at most 3*2^e.
      return 3 * pow2(e) + 1;
    case IdentityId::product_stern_sums:
      // Degree 2^{k+1} - 1.
      return pow2(e + 1);
    default:
      return 1;
  }
}

std::size_t required_capacity(IdentityId id, std::size_t e, std::size_t order) {
  const std::size_t n = std::max(order, min_order(id, e));
  switch (id) {
    case IdentityId::stern_functional:
    case IdentityId::twisted_functional:
    case IdentityId::twisted_iterated:
    case IdentityId::ratio_ts:
      return n;
    case IdentityId::bacher_product:
      return 6 * pow2(e) + 1;
    case IdentityId::partial_sum:
    case IdentityId::partial_sum_closed:
    case IdentityId::pointwise_relations:
      return 3 * pow2(e) + 1;
    case IdentityId::twisted_tail: {
      const std::size_t k = pow2(e);
      return std::max(n + 3 * k, ceil_div(n, k) + 5);
    }
    case IdentityId::stern_difference:
    case IdentityId::twisted_sum: {
      const std::size_t k = pow2(e);
      return std::max(n + 2 * k, ceil_div(n, k) + 4);
    }
    case IdentityId::product_stern_sums:
      return pow2(e) + 1;
  }
  return n;
}

SequenceTables SequenceTables::compute(std::size_t length) {
  SequenceTables tables;
  tables.s_ = stern_range(length);
  tables.t_ = twisted_range(length);
  return tables;
}

const Integer& SequenceTables::s(std::size_t n) const {
  if (n >= s_.size())
    throw std::out_of_range("s(" + std::to_string(n) + ") beyond table size " +
                            std::to_string(s_.size()));
  return s_[n];
}

const Integer& SequenceTables::t(std::size_t n) const {
  if (n >= t_.size())
    throw std::out_of_range("t(" + std::to_string(n) + ") beyond table size " +
                            std::to_string(t_.size()));
  return t_[n];
}

void SequenceTables::set_s(std::size_t n, Integer v) {
  if (n >= s_.size()) throw std::out_of_range("set_s: index beyond table");
  s_[n] = std::move(v);
}

void SequenceTables::set_t(std::size_t n, Integer v) {
  if (n >= t_.size()) throw std::out_of_range("set_t: index beyond table");
  t_[n] = std::move(v);
}

ZSeries prod_B(std::size_t e, std::size_t n) {
  ZSeries p = ZSeries::constant(1, n);
  for (std::size_t i = 0; i < e; ++i) p = p * bacher_factor(i, n);
  return p;
}

ZSeries Catalog::window_s(std::size_t start, std::size_t count, std::size_t n) const {
  std::vector<Integer> c(count);
  for (std::size_t j = 0; j < count; ++j) c[j] = tables_.s(start + j);
  return ZSeries::from_coeffs(std::move(c), n);
}

ZSeries Catalog::window_t(std::size_t start, std::size_t count, std::size_t n) const {
  std::vector<Integer> c(count);
  for (std::size_t j = 0; j < count; ++j) c[j] = tables_.t(start + j);
  return ZSeries::from_coeffs(std::move(c), n);
}

ZSeries Catalog::gen_S(std::size_t n) const { return window_s(0, n, n); }

ZSeries Catalog::gen_T(std::size_t n) const { return window_t(0, n, n); }

// The numerators below and S(z) all vanish at z = 0; divide_exact strips the
// common factor z, so one extra coefficient is built to return order n.
ZSeries Catalog::gen_U(std::size_t n) const {
  const std::size_t m = n + 1;
  return divide_exact(window_t(3, m, m), gen_S(m));
}

ZSeries Catalog::gen_G(std::size_t n) const {
  const std::size_t m = n + 1;
  return divide_exact(window_s(2, m, m) - window_s(1, m, m), gen_S(m));
}

ZSeries Catalog::gen_H(std::size_t n) const {
  const std::size_t m = n + 1;
  return divide_exact(-(window_t(2, m, m) + window_t(1, m, m)), gen_S(m));
}

Report Catalog::verify_functional_s(std::size_t n) const {
  const auto id = IdentityId::stern_functional;
  require_order(id, 0, n);
  const ZSeries lhs = compose_pow(gen_S(ceil_div(n, 2)), 2, n) * bacher_factor(0, n);
  const ZSeries rhs = shift_up(gen_S(n), 1);
  return compare(id, std::nullopt, n, lhs, rhs, n);
}

Report Catalog::verify_functional_t(std::size_t n) const {
  const auto id = IdentityId::twisted_functional;
  require_order(id, 0, n);
  const ZSeries lhs = compose_pow(gen_T(ceil_div(n, 2)), 2, n) * bacher_factor(0, n);
  const ZSeries rhs = -shift_up(gen_T(n) - ZSeries::monomial(2, 1, n), 1);
  return compare(id, std::nullopt, n, lhs, rhs, n);
}

// T(z^{2^e}) P_e = T(z) prod_{i<e}(-z^{2^i})
//                  - 2 sum_{j<e} z^{2^j} P_j prod_{i=j}^{e-1}(-z^{2^i})
Report Catalog::verify_t_iterated(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::twisted_iterated;
  require(e >= 1, "lemma_2_2: e must be at least 1");
  const std::size_t k = pow2(e);
  const ZSeries lhs = compose_pow(gen_T(ceil_div(n, k)), k, n) * prod_B(e, n);

  ZSeries rhs = gen_T(n) * neg_monomial_product(0, e, n);
  ZSeries p = ZSeries::constant(1, n);
  for (std::size_t j = 0; j < e; ++j) {
    const ZSeries term = ZSeries::monomial(2, pow2(j), n) * p * neg_monomial_product(j, e, n);
    rhs -= term;
    p = p * bacher_factor(j, n);
  }
  return compare(id, e, n, lhs, rhs, n);
}

Report Catalog::verify_bacher_product(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::bacher_product;
  require(e >= 1, "thm_2_3: e must be at least 1");
  require_order(id, e, n);
  const std::size_t k = pow2(e);
  const ZSeries lhs =
      shift_up((ZSeries::constant(1, n) + ZSeries::monomial(1, k, n)) * prod_B(e, n), 1);
  const ZSeries rhs = scale(window_t(3 * k, 3 * k + 1, n), sign_pow(e));
  return compare(id, e, n, lhs, rhs, n);
}

// sum_{m<=3*2^e} t(m) z^m
//   = z - z^2 + sum_{k<e} (-1)^k z^{3*2^k+1} (z^{2^k} + 1) P_k
Report Catalog::verify_partial_sum(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::partial_sum;
  require(e >= 1, "lemma_2_4: e must be at least 1");
  require_order(id, e, n);
  const ZSeries lhs = window_t(0, 3 * pow2(e) + 1, n);

  ZSeries rhs = ZSeries::monomial(1, 1, n) - ZSeries::monomial(1, 2, n);
  for (std::size_t k = 0; k < e; ++k) {
    const std::size_t p = pow2(k);
    const ZSeries term =
        (ZSeries::monomial(1, p, n) + ZSeries::constant(1, n)) * prod_B(k, n);
    rhs += scale(shift_up(term, 3 * p + 1), sign_pow(k));
  }
  return compare(id, e, n, lhs, rhs, n);
}

// sum_{m<=3*2^e} t(m) z^m
//   = 2z sum_{j<e} (-1)^j P_j - (-1)^e z (z^{2^e} - 1) P_e
Report Catalog::verify_partial_sum_closed(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::partial_sum_closed;
  require(e >= 1, "lemma_2_5: e must be at least 1");
  require_order(id, e, n);
  const ZSeries lhs = window_t(0, 3 * pow2(e) + 1, n);

  const ZSeries first = scale(shift_up(alternating_prod_sum(e, n), 1), 2);
  const ZSeries second =
      shift_up((ZSeries::monomial(1, pow2(e), n) - ZSeries::constant(1, n)) * prod_B(e, n), 1);
  const ZSeries rhs = first - scale(second, sign_pow(e));
  return compare(id, e, n, lhs, rhs, n);
}

// T(z^{2^e}) S(z) = (-1)^e S(z^{2^e}) (T(z) - 2z sum_{j<e} (-1)^j P_j)
Report Catalog::verify_ratio_ts(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::ratio_ts;
  const std::size_t k = pow2(e);
  const std::size_t inner = ceil_div(n, k);
  const ZSeries lhs = compose_pow(gen_T(inner), k, n) * gen_S(n);
  const ZSeries bracket = gen_T(n) - scale(shift_up(alternating_prod_sum(e, n), 1), 2);
  const ZSeries rhs = scale(compose_pow(gen_S(inner), k, n) * bracket, sign_pow(e));
  return compare(id, e, n, lhs, rhs, n);
}

Report Catalog::verify_twisted_tail(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::twisted_tail;
  const std::size_t k = pow2(e);
  const ZSeries lhs = window_t(3 * k, n, n);
  const ZSeries u = compose_pow(gen_U(ceil_div(n, k) + 1), k, n);
  const ZSeries rhs = scale(gen_S(n) * u, sign_pow(e));
  return compare(id, e, n, lhs, rhs, n);
}

Report Catalog::verify_stern_difference(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::stern_difference;
  const std::size_t k = pow2(e);
  const ZSeries lhs = window_s(2 * k, n, n) - window_s(k, n, n);
  const ZSeries rhs = compose_pow(gen_G(ceil_div(n, k) + 1), k, n) * gen_S(n);
  return compare(id, e, n, lhs, rhs, n);
}

Report Catalog::verify_twisted_sum(std::size_t e, std::size_t n) const {
  const auto id = IdentityId::twisted_sum;
  const std::size_t k = pow2(e);
  const ZSeries lhs = scale(window_t(2 * k, n, n) + window_t(k, n, n), sign_pow(e + 1));
  const ZSeries rhs = compose_pow(gen_H(ceil_div(n, k) + 1), k, n) * gen_S(n);
  return compare(id, e, n, lhs, rhs, n);
}

Report Catalog::verify_product_stern_sums(std::size_t k, std::size_t n) const {
  const auto id = IdentityId::product_stern_sums;
  require_order(id, k, n);
  const std::size_t p = pow2(k);
  const ZSeries lhs = shift_up(prod_B(k, n), 1);

  std::vector<Integer> c(n);
  for (std::size_t m = 1; m <= p; ++m) c[m] += tables_.s(m);
  for (std::size_t m = 1; m < p; ++m) c[m + p] += tables_.s(p - m);
  const ZSeries rhs = ZSeries::from_coeffs(std::move(c), n);
  return compare(id, k, n, lhs, rhs, n);
}

// For 1 <= m <= 2^e:
//   (i)   t(2^{e+1}+m) + t(2^e+m) = (-1)^{e+1} s(m)
//   (ii)  t(2^e+m)                = (-1)^e (s(2^e-m) - s(m))
//   (iii) t(2^{e+1}+m)            = (-1)^{e+1} s(2^e-m)
// The first failing point is reported with the index m.
Report Catalog::verify_pointwise_relations(std::size_t e) const {
  const auto id = IdentityId::pointwise_relations;
  require(e >= 1, "lemma_3_2: e must be at least 1");
  const std::size_t p = pow2(e);
  const Integer odd = sign_pow(e + 1);
  const Integer even = sign_pow(e);

  Report r;
  r.id = id;
  r.params = {e, p};
  r.effective_order = p;
  for (std::size_t m = 1; m <= p && !r.mismatch; ++m) {
    const Integer& hi = tables_.t(2 * p + m);
    const Integer& lo = tables_.t(p + m);
    const Integer sum = hi + lo;
    const Integer want_i = odd * tables_.s(m);
    const Integer want_ii = even * (tables_.s(p - m) - tables_.s(m));
    const Integer want_iii = odd * tables_.s(p - m);
    if (sum != want_i)
      r.mismatch = Mismatch{m, sum, want_i};
    else if (lo != want_ii)
      r.mismatch = Mismatch{m, lo, want_ii};
    else if (hi != want_iii)
      r.mismatch = Mismatch{m, hi, want_iii};
  }
  r.status = r.mismatch ? Status::fail : Status::pass;
  return r;
}

Report Catalog::verify(IdentityId id, std::size_t e, std::size_t n) const {
  switch (id) {
    case IdentityId::stern_functional: return verify_functional_s(n);
    case IdentityId::twisted_functional: return verify_functional_t(n);
    case IdentityId::twisted_iterated: return verify_t_iterated(e, n);
    case IdentityId::bacher_product: return verify_bacher_product(e, n);
    case IdentityId::partial_sum: return verify_partial_sum(e, n);
    case IdentityId::partial_sum_closed: return verify_partial_sum_closed(e, n);
    case IdentityId::ratio_ts: return verify_ratio_ts(e, n);
    case IdentityId::twisted_tail: return verify_twisted_tail(e, n);
    case IdentityId::stern_difference: return verify_stern_difference(e, n);
    case IdentityId::twisted_sum: return verify_twisted_sum(e, n);
    case IdentityId::product_stern_sums: return verify_product_stern_sums(e, n);
    case IdentityId::pointwise_relations: return verify_pointwise_relations(e);
  }
  throw std::invalid_argument("unknown identity");
}

Report verify(IdentityId id, std::size_t e, std::size_t n) {
  return Catalog::with_capacity(required_capacity(id, e, n)).verify(id, e, n);
}

}  // namespace diatomic::idcat
