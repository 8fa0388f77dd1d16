#include "stern/simd/kernels.hpp"

namespace diatomic::simd::detail {

void axpy_scalar(std::int64_t* acc, const std::int64_t* x, std::size_t n, std::int64_t a) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += a * x[i];
}

}  // namespace diatomic::simd::detail
