#include "stern/zseries.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "stern/simd/kernels.hpp"

namespace diatomic {

namespace {

using Code = SeriesError::Code;

void require_same_trunc(const ZSeries& a, const ZSeries& b, const char* op) {
  if (a.trunc() != b.trunc())
    throw SeriesError(Code::trunc_mismatch, std::string(op) + ": truncation orders differ (" +
                                                std::to_string(a.trunc()) + " vs " +
                                                std::to_string(b.trunc()) + ")");
}

// Largest |c| over the first len coefficients, or nullopt if one of them
// leaves int32.
std::optional<std::uint64_t> max_abs_i32(std::span<const Integer> c) {
  std::uint64_t best = 0;
  for (const Integer& v : c) {
    if (!mpz_fits_sint_p(v.get_mpz_t())) return std::nullopt;
    const long x = v.get_si();
    best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(x < 0 ? -x : x));
  }
  return best;
}

std::vector<std::int64_t> to_i64(std::span<const Integer> c) {
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_si();
  return out;
}

std::optional<ZSeries> mul_fast(const ZSeries& a, const ZSeries& b) {
  const std::size_t la = a.length();
  const std::size_t lb = b.length();
  const auto ma = max_abs_i32(a.coeffs().first(la));
  const auto mb = max_abs_i32(b.coeffs().first(lb));
  if (!ma || !mb) return std::nullopt;
  // Every output coefficient is a sum of at most min(la, lb) products.
  const unsigned __int128 bound = static_cast<unsigned __int128>(*ma) * *mb * std::min(la, lb);
  if (bound > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    return std::nullopt;

  const std::size_t n = a.trunc();
  const auto xa = to_i64(a.coeffs().first(la));
  const auto xb = to_i64(b.coeffs().first(lb));
  std::vector<std::int64_t> out(std::min(n, la + lb));
  simd::convolve(simd::best_isa(), xa, xb, out);

  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < out.size(); ++i) c[i] = static_cast<long>(out[i]);
  return ZSeries::from_coeffs(std::move(c), n);
}

}  // namespace

ZSeries ZSeries::from_coeffs(std::vector<Integer> c, std::size_t trunc) {
  if (c.size() > trunc)
    throw SeriesError(Code::too_many_coeffs, "from_coeffs: " + std::to_string(c.size()) +
                                                 " coefficients exceed order " +
                                                 std::to_string(trunc));
  c.resize(trunc);
  ZSeries s;
  s.coeffs_ = std::move(c);
  return s;
}

ZSeries ZSeries::constant(const Integer& c, std::size_t trunc) { return monomial(c, 0, trunc); }

ZSeries ZSeries::monomial(const Integer& c, std::size_t k, std::size_t trunc) {
  ZSeries s(trunc);
  if (k < trunc) s.coeffs_[k] = c;
  return s;
}

std::size_t ZSeries::length() const {
  std::size_t n = coeffs_.size();
  while (n > 0 && sgn(coeffs_[n - 1]) == 0) --n;
  return n;
}

ZSeries ZSeries::truncated(std::size_t trunc) const {
  if (trunc > coeffs_.size())
    throw SeriesError(Code::insufficient_trunc, "truncated: cannot raise order " +
                                                    std::to_string(coeffs_.size()) + " to " +
                                                    std::to_string(trunc));
  return from_coeffs({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(trunc)}, trunc);
}

ZSeries& ZSeries::operator+=(const ZSeries& rhs) {
  require_same_trunc(*this, rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

ZSeries& ZSeries::operator-=(const ZSeries& rhs) {
  require_same_trunc(*this, rhs, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

ZSeries add(const ZSeries& a, const ZSeries& b) {
  ZSeries r = a;
  r += b;
  return r;
}

ZSeries sub(const ZSeries& a, const ZSeries& b) {
  ZSeries r = a;
  r -= b;
  return r;
}

ZSeries neg(const ZSeries& a) { return scale(a, -1); }

ZSeries scale(const ZSeries& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (Integer& v : out) v *= c;
  return ZSeries::from_coeffs(std::move(out), a.trunc());
}

ZSeries mul_reference(const ZSeries& a, const ZSeries& b) {
  require_same_trunc(a, b, "mul");
  const std::size_t n = a.trunc();
  const std::size_t la = a.length();
  const std::size_t lb = b.length();
  std::vector<Integer> c(n);
  for (std::size_t i = 0; i < la; ++i) {
    const Integer& x = a[i];
    if (sgn(x) == 0) continue;
    const std::size_t jmax = std::min(lb, n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(c[i + j].get_mpz_t(), x.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return ZSeries::from_coeffs(std::move(c), n);
}

ZSeries mul(const ZSeries& a, const ZSeries& b) {
  require_same_trunc(a, b, "mul");
  if (auto fast = mul_fast(a, b)) return std::move(*fast);
  return mul_reference(a, b);
}

ZSeries compose_pow(const ZSeries& a, std::size_t k, std::size_t out_trunc) {
  if (k == 0) throw std::invalid_argument("compose_pow: exponent must be at least 1");
  const std::size_t needed = (out_trunc + k - 1) / k;
  if (a.trunc() < needed)
    throw SeriesError(Code::insufficient_trunc,
                      "compose_pow: input order " + std::to_string(a.trunc()) +
                          " too small for output order " + std::to_string(out_trunc) +
                          " at step " + std::to_string(k));
  std::vector<Integer> c(out_trunc);
  for (std::size_t j = 0; j < needed; ++j) c[j * k] = a[j];
  return ZSeries::from_coeffs(std::move(c), out_trunc);
}

ZSeries shift_up(const ZSeries& a, std::size_t k) {
  const std::size_t n = a.trunc();
  std::vector<Integer> c(n);
  for (std::size_t i = k; i < n; ++i) c[i] = a[i - k];
  return ZSeries::from_coeffs(std::move(c), n);
}

ZSeries shift_down(const ZSeries& a, std::size_t k) {
  if (k > a.trunc())
    throw SeriesError(Code::insufficient_trunc, "shift_down: shift " + std::to_string(k) +
                                                    " exceeds order " +
                                                    std::to_string(a.trunc()));
  for (std::size_t i = 0; i < k; ++i)
    if (sgn(a[i]) != 0)
      throw SeriesError(Code::not_divisible, "shift_down: coefficient of z^" + std::to_string(i) +
                                                 " is nonzero");
  const auto c = a.coeffs().subspan(k);
  return ZSeries::from_coeffs({c.begin(), c.end()}, a.trunc() - k);
}

std::size_t valuation(const ZSeries& a) {
  for (std::size_t i = 0; i < a.trunc(); ++i)
    if (sgn(a[i]) != 0) return i;
  return a.trunc();
}

ZSeries divide_exact(const ZSeries& a, const ZSeries& b) {
  const std::size_t v = valuation(b);
  if (v == b.trunc()) throw SeriesError(Code::zero_divisor, "divide_exact: divisor is zero");
  if (abs(b[v]) != 1)
    throw SeriesError(Code::non_unit_lead,
                      "divide_exact: leading coefficient " + to_string(b[v]) + " is not a unit");
  if (valuation(a) < v)
    throw SeriesError(Code::valuation_too_low,
                      "divide_exact: dividend has lower valuation than divisor");
  if (b.trunc() < a.trunc())
    throw SeriesError(Code::trunc_mismatch, "divide_exact: divisor order below dividend order");

  const std::size_t n = a.trunc() - v;
  const auto num = a.coeffs().subspan(v, n);
  const auto den = b.coeffs().subspan(v, n);
  const Integer& lead = den[0];

  std::vector<Integer> q(n);
  Integer acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc = num[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Integer& d = den[k - i];
      if (sgn(d) == 0 || sgn(q[i]) == 0) continue;
      mpz_submul(acc.get_mpz_t(), q[i].get_mpz_t(), d.get_mpz_t());
    }
    // lead is +-1, so division is multiplication by lead.
    q[k] = sgn(lead) > 0 ? acc : Integer(-acc);
  }
  return ZSeries::from_coeffs(std::move(q), n);
}

std::optional<Mismatch> eq_upto(const ZSeries& a, const ZSeries& b, std::size_t n) {
  if (n > a.trunc() || n > b.trunc())
    throw SeriesError(Code::order_too_large, "eq_upto: order " + std::to_string(n) +
                                                 " exceeds an operand's truncation");
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return Mismatch{i, a[i], b[i]};
  return std::nullopt;
}

}  // namespace diatomic
