#include <algorithm>
#include <stdexcept>
#include <string>

#include "stern/simd/kernels.hpp"

namespace diatomic::simd {

namespace {

using AxpyFn = void (*)(std::int64_t*, const std::int64_t*, std::size_t, std::int64_t);

AxpyFn axpy_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return detail::axpy_scalar;
    case Isa::avx2:
#if defined(STERN_HAVE_AVX2)
      if (isa_available(Isa::avx2)) return detail::axpy_avx2;
#endif
      break;
    case Isa::neon:
#if defined(STERN_HAVE_NEON)
      return detail::axpy_neon;
#endif
      break;
  }
  throw std::invalid_argument("SIMD variant not available: " + std::string(to_string(isa)));
}

Isa detect() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(STERN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::neon:
#if defined(STERN_HAVE_NEON)
      return true;  // mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa isa = detect();
  return isa;
}

void axpy(Isa isa, std::span<std::int64_t> acc, std::span<const std::int64_t> x, std::int64_t a) {
  if (x.size() < acc.size()) throw std::invalid_argument("axpy: source shorter than accumulator");
  axpy_for(isa)(acc.data(), x.data(), acc.size(), a);
}

void convolve(Isa isa, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
  const AxpyFn kernel = axpy_for(isa);
  std::fill(out.begin(), out.end(), 0);
  const std::size_t n = out.size();
  const std::size_t la = std::min(a.size(), n);
  for (std::size_t i = 0; i < la; ++i) {
    if (a[i] == 0) continue;
    // out[i + j] += a[i] * b[j] for i + j < n.
    const std::size_t len = std::min(b.size(), n - i);
    kernel(out.data() + i, b.data(), len, a[i]);
  }
}

}  // namespace diatomic::simd
