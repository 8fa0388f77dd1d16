#include "stern/seqcore.hpp"

#include <stdexcept>

namespace diatomic {

namespace {

void require_natural(const Integer& n, const char* what) {
  if (sgn(n) < 0) throw std::domain_error(std::string(what) + ": negative argument");
}

// Folds the row vector (x, y) through M(b_{m-1}), ..., M(b_1) and closes with
// the column (1, b_0). (x, y) M(b) = (x + b y, (1 - b) x + y), so each digit
// costs a single in-place addition.
Integer fold_digits(const BitString& bits, Integer x, Integer y) {
  const std::size_t m = bits.size() - 1;
  for (std::size_t i = m - 1; i >= 1; --i) {
    if (bits[i] != 0)
      x += y;
    else
      y += x;
  }
  if (bits[0] != 0) x += y;
  return x;
}

}  // namespace

BitString BitString::of(const Integer& n) {
  require_natural(n, "BitString::of");
  BitString out;
  if (sgn(n) == 0) return out;
  const std::size_t len = mpz_sizeinbase(n.get_mpz_t(), 2);
  out.bits_.resize(len);
  for (std::size_t i = 0; i < len; ++i)
    out.bits_[i] = static_cast<std::uint8_t>(mpz_tstbit(n.get_mpz_t(), i));
  return out;
}

Integer BitString::value() const {
  Integer v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] != 0) mpz_setbit(v.get_mpz_t(), i);
  return v;
}

std::vector<Integer> stern_range(std::size_t limit) {
  std::vector<Integer> s(limit);
  if (limit > 1) s[1] = 1;
  for (std::size_t n = 2; n < limit; ++n) {
    const std::size_t h = n / 2;
    s[n] = (n % 2 == 0) ? s[h] : Integer(s[h] + s[h + 1]);
  }
  return s;
}

std::vector<Integer> twisted_range(std::size_t limit) {
  std::vector<Integer> t(limit);
  if (limit > 1) t[1] = 1;
  for (std::size_t n = 2; n < limit; ++n) {
    const std::size_t h = n / 2;
    t[n] = (n % 2 == 0) ? Integer(-t[h]) : Integer(-t[h] - t[h + 1]);
  }
  return t;
}

BitString bits_of(const Integer& n) { return BitString::of(n); }

Mat2 transfer_matrix(unsigned b) {
  if (b > 1) throw std::invalid_argument("transfer_matrix: digit must be 0 or 1");
  return {1, 1 - static_cast<int>(b), static_cast<int>(b), 1};
}

Integer stern(const Integer& n) {
  require_natural(n, "stern");
  if (n <= 1) return n;
  return fold_digits(BitString::of(n), 1, 1);
}

Integer twisted(const Integer& n) {
  require_natural(n, "twisted");
  if (n <= 1) return n;
  const BitString bits = BitString::of(n);
  Integer v = fold_digits(bits, 1, -1);
  if ((bits.size() - 1) % 2 != 0) v = -v;
  return v;
}

std::pair<Integer, Integer> stern_pair(const Integer& n) {
  require_natural(n, "stern_pair");
  if (sgn(n) == 0) throw std::domain_error("stern_pair: n must be at least 1");
  const BitString bits = BitString::of(n);
  // (s(a), s(a+1)) for a = the leading digit alone, i.e. a = 1.
  Integer lo = 1;
  Integer hi = 1;
  for (std::size_t i = bits.size() - 1; i-- > 0;) {
    // a -> 2a + x:  s(2a+x) = s(a) + x s(a+1),  s(2a+x+1) = (1-x) s(a) + s(a+1).
    if (bits[i] != 0)
      lo += hi;
    else
      hi += lo;
  }
  return {std::move(lo), std::move(hi)};
}

Rational rational_at(const Integer& n) {
  require_natural(n, "rational_at");
  if (sgn(n) == 0) throw std::domain_error("rational_at: n must be at least 1");
  auto [sn, sn1] = stern_pair(n);
  return {std::move(sn1), std::move(sn)};
}

}  // namespace diatomic
