#pragma once

// Stern's diatomic sequence s(n) and the twisted Stern sequence t(n).
//
//   s(0) = 0, s(1) = 1, s(2n) = s(n),  s(2n+1) = s(n) + s(n+1)
//   t(0) = 0, t(1) = 1, t(2n) = -t(n), t(2n+1) = -t(n) - t(n+1)
//
// Three independent evaluation routes are provided: the recurrence over a
// prefix range, a descent over the binary digits carrying (s(a), s(a+1)), and
// a product of 2x2 digit matrices.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stern/bigint.hpp"

namespace diatomic {

/// Binary expansion, least significant bit first. Zero is the empty string;
/// otherwise the last bit is 1.
class BitString {
 public:
  BitString() = default;
  static BitString of(const Integer& n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  unsigned operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// Reconstructs sum_i b_i 2^i.
  Integer value() const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  Integer a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  Integer det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

/// Reduced positive fraction num/den.
struct Rational {
  Integer num;
  Integer den;

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
};

/// s(0), ..., s(limit-1) by the defining recurrence.
std::vector<Integer> stern_range(std::size_t limit);

/// t(0), ..., t(limit-1) by the defining recurrence.
std::vector<Integer> twisted_range(std::size_t limit);

BitString bits_of(const Integer& n);

/// The digit matrix [[1, 1-b], [b, 1]]. Throws std::invalid_argument unless b is 0 or 1.
Mat2 transfer_matrix(unsigned b);

/// s(n) via the digit-matrix product:
///   s(n) = [1 1] M(b_{m-1}) ... M(b_1) [1 b_0]^T   for n >= 2,
/// folded as row-vector products, one big-integer addition per digit.
Integer stern(const Integer& n);

/// t(n) = (-1)^m [1 -1] M(b_{m-1}) ... M(b_1) [1 b_0]^T for n >= 2.
/// The leftmost factor carries the highest digit; reversing the order is wrong for t.
Integer twisted(const Integer& n);

/// (s(n), s(n+1)) by descending the binary digits with
/// s(2a+x) = s(a) + x s(a+1). Throws std::domain_error for n = 0.
std::pair<Integer, Integer> stern_pair(const Integer& n);

/// s(n+1)/s(n). Throws std::domain_error for n = 0.
Rational rational_at(const Integer& n);

}  // namespace diatomic
