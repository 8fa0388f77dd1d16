#include "stern/simd/kernels.hpp"

#include <arm_neon.h>

namespace diatomic::simd::detail {

void axpy_neon(std::int64_t* acc, const std::int64_t* x, std::size_t n, std::int64_t a) {
  const int32x2_t va = vdup_n_s32(static_cast<std::int32_t>(a));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // Narrowing is exact: x[i] is in int32 range by contract.
    const int32x2_t vx = vmovn_s64(vld1q_s64(x + i));
    vst1q_s64(acc + i, vmlal_s32(vld1q_s64(acc + i), vx, va));
  }
  for (; i < n; ++i) acc[i] += a * x[i];
}

}  // namespace diatomic::simd::detail
