#pragma once

// Truncated formal power series over the integers.
//
// A ZSeries of truncation order N stores exactly the coefficients of
// z^0 ... z^{N-1}. Every operation states the order of its result; nothing
// above the truncation is ever fabricated.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stern/bigint.hpp"

namespace diatomic {

class SeriesError : public std::invalid_argument {
 public:
  enum class Code {
    too_many_coeffs,
    trunc_mismatch,
    insufficient_trunc,
    not_divisible,
    zero_divisor,
    non_unit_lead,
    valuation_too_low,
    order_too_large,
  };

  SeriesError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class ZSeries {
 public:
  ZSeries() = default;
  /// The zero series of order trunc.
  explicit ZSeries(std::size_t trunc) : coeffs_(trunc) {}

  /// Pads c with zeros up to trunc; rejects c longer than trunc.
  static ZSeries from_coeffs(std::vector<Integer> c, std::size_t trunc);
  static ZSeries constant(const Integer& c, std::size_t trunc);
  /// c * z^k, which is zero when k >= trunc.
  static ZSeries monomial(const Integer& c, std::size_t k, std::size_t trunc);

  std::size_t trunc() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// Index of the highest nonzero coefficient plus one (0 for the zero series).
  std::size_t length() const;

  /// The same series viewed at a lower order.
  ZSeries truncated(std::size_t trunc) const;

  ZSeries& operator+=(const ZSeries& rhs);
  ZSeries& operator-=(const ZSeries& rhs);

  friend bool operator==(const ZSeries&, const ZSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

ZSeries add(const ZSeries& a, const ZSeries& b);
ZSeries sub(const ZSeries& a, const ZSeries& b);
ZSeries neg(const ZSeries& a);
ZSeries scale(const ZSeries& a, const Integer& c);

/// Cauchy product truncated at the common order. Uses the exact int64 SIMD
/// convolution when the coefficient bounds rule out overflow, and big-integer
/// schoolbook otherwise.
ZSeries mul(const ZSeries& a, const ZSeries& b);

/// Big-integer schoolbook product, never taking the fast path.
ZSeries mul_reference(const ZSeries& a, const ZSeries& b);

/// A(z^k) at order out_trunc. Requires k >= 1 and a.trunc() >= ceil(out_trunc / k).
ZSeries compose_pow(const ZSeries& a, std::size_t k, std::size_t out_trunc);

/// z^k A(z) at the same order; the top k coefficients fall off.
ZSeries shift_up(const ZSeries& a, std::size_t k);

/// A(z) / z^k at order trunc - k. Throws not_divisible if any of the low k
/// coefficients is nonzero.
ZSeries shift_down(const ZSeries& a, std::size_t k);

/// Index of the first nonzero coefficient, or trunc() for the zero series.
std::size_t valuation(const ZSeries& a);

/// Q with Q * B = A, at order a.trunc() - valuation(b). B's lowest nonzero
/// coefficient must be +1 or -1 so the quotient stays integral.
ZSeries divide_exact(const ZSeries& a, const ZSeries& b);

struct Mismatch {
  std::size_t index;
  Integer lhs;
  Integer rhs;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Compares coefficients 0 .. n-1. Returns the first differing index, or
/// nullopt when equal. Requires n <= min(a.trunc(), b.trunc()).
std::optional<Mismatch> eq_upto(const ZSeries& a, const ZSeries& b, std::size_t n);

inline ZSeries operator+(const ZSeries& a, const ZSeries& b) { return add(a, b); }
inline ZSeries operator-(const ZSeries& a, const ZSeries& b) { return sub(a, b); }
inline ZSeries operator-(const ZSeries& a) { return neg(a); }
inline ZSeries operator*(const ZSeries& a, const ZSeries& b) { return mul(a, b); }

}  // namespace diatomic
