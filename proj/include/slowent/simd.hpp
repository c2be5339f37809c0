#pragma once

// Hot loops with a scalar reference and AVX2 / NEON variants chosen at run
// time. Variants are bit-identical to the scalar code: Horner steps use a
// separate multiply and add (no fused multiply-add) in every variant.

#include <cstddef>
#include <cstdint>
#include <string>

namespace slowent::simd {

enum class Isa { scalar, avx2, neon };
std::string to_string(Isa isa);

/// Best variant the CPU supports (after any force_scalar override).
Isa active_isa();
/// Pins dispatch to the scalar reference; used by equivalence tests and --no-simd.
void force_scalar(bool on);

/// out[i] = p(xs[i]) with p given by coefficients, lowest degree first.
void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n);
/// max_i |p(xs[i])|; 0 for n == 0.
double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n);
/// Number of positions where a and b differ.
std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
/// Same count, but may stop early once it exceeds `limit` (returns some value > limit).
std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit);

namespace scalar {
void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n);
double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n);
std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n);
double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n);
std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit);
}  // namespace avx2
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
namespace neon {
void poly_eval(const double* coeffs, std::size_t ncoef, const double* xs, double* out, std::size_t n);
double poly_max_abs(const double* coeffs, std::size_t ncoef, const double* xs, std::size_t n);
std::size_t mismatches_u16(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
std::size_t mismatches_u16_bounded(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::size_t limit);
}  // namespace neon
#endif

}  // namespace slowent::simd
