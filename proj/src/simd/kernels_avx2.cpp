#include "stern/simd/kernels.hpp"

#include <immintrin.h>

namespace diatomic::simd::detail {

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, which is exact because both factors are in int32 range.
void axpy_avx2(std::int64_t* acc, const std::int64_t* x, std::size_t n, std::int64_t a) {
  const __m256i va = _mm256_set1_epi64x(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i + 4));
    __m256i c0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i c1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i + 4));
    c0 = _mm256_add_epi64(c0, _mm256_mul_epi32(va, x0));
    c1 = _mm256_add_epi64(c1, _mm256_mul_epi32(va, x1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), c0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i + 4), c1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i c0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    c0 = _mm256_add_epi64(c0, _mm256_mul_epi32(va, x0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), c0);
  }
  for (; i < n; ++i) acc[i] += a * x[i];
}

}  // namespace diatomic::simd::detail
