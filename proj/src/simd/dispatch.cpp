#include <atomic>

#include "slowent/simd.hpp"

namespace slowent::simd {

namespace {

std::atomic<bool> g_force_scalar{false};

Isa detect() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#elif defined(__ARM_NEON) || defined(__aarch64__)
  return Isa::neon;
#endif
  return Isa::scalar;
}

const Isa g_detected = detect();

}  // namespace

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    case Isa::scalar: return "scalar";
  }
  return "scalar";
}

Isa active_isa() { return g_force_scalar.load(std::memory_order_relaxed) ? Isa::scalar : g_detected; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

#if defined(__x86_64__) || defined(__i386__)
#define SLOWENT_DISPATCH(fn, ...) \
  return active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#elif defined(__ARM_NEON) || defined(__aarch64__)
#define SLOWENT_DISPATCH(fn, ...) \
  return active_isa() == Isa::neon ? neon::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#else
#define SLOWENT_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n) {
  SLOWENT_DISPATCH(poly_eval, coeffs, ncoef, xs, out, n);
}

double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n) {
  SLOWENT_DISPATCH(poly_max_abs, coeffs, ncoef, xs, n);
}

std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  SLOWENT_DISPATCH(mismatches_u16, a, b, n);
}

std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit) {
  SLOWENT_DISPATCH(mismatches_u16_bounded, a, b, n, limit);
}

}  // namespace slowent::simd
