#pragma once

// Exact int64 kernels behind the ZSeries multiplication fast path.
//
// Every kernel has a scalar reference implementation and optional AVX2 / NEON
// variants. All variants must produce bit-identical results; the caller is
// responsible for keeping inputs in the documented ranges so that no int64
// accumulator overflows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace diatomic::simd {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

/// True when the variant is compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// The widest available ISA, detected once at first use.
Isa best_isa();

/// acc[i] += a * x[i] for i < acc.size(). Requires x.size() >= acc.size(),
/// a and every x[i] within int32 range.
void axpy(Isa isa, std::span<std::int64_t> acc, std::span<const std::int64_t> x, std::int64_t a);

/// Truncated Cauchy product: out[j] = sum_{i<=j} a[i] * b[j-i] for j < out.size().
/// Coefficients of a and b must lie in int32 range and the caller guarantees
/// that no partial sum leaves int64. out is overwritten.
void convolve(Isa isa, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);

namespace detail {
void axpy_scalar(std::int64_t* acc, const std::int64_t* x, std::size_t n, std::int64_t a);
#if defined(STERN_HAVE_AVX2)
void axpy_avx2(std::int64_t* acc, const std::int64_t* x, std::size_t n, std::int64_t a);
#endif
#if defined(STERN_HAVE_NEON)
void axpy_neon(std::int64_t* acc, const std::int64_t* x, std::size_t n, std::int64_t a);
#endif
}  // namespace detail

}  // namespace diatomic::simd
