#include "cyw/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace cyw::kernels {

namespace {

bool detect_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Isa>& isa_slot() {
  static std::atomic<Isa> slot{detect_avx2() ? Isa::kAvx2 : Isa::kScalar};
  return slot;
}

}  // namespace

bool avx2_available() {
  static const bool available = detect_avx2();
  return available;
}

Isa active_isa() { return isa_slot().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_available()) return;
  isa_slot().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool form_fits(const int64_t* coeffs, std::size_t l, int64_t max_abs_coord) {
  constexpr int64_t kCoeffLimit = int64_t{1} << 31;
  constexpr __int128 kSumLimit = __int128{1} << 62;
  __int128 total = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const int64_t c = coeffs[i] < 0 ? -coeffs[i] : coeffs[i];
    if (coeffs[i] <= -kCoeffLimit || c >= kCoeffLimit) return false;
    total += static_cast<__int128>(c) * max_abs_coord;
  }
  return total < kSumLimit;
}

void form_values(const int32_t* coords, std::size_t stride, std::size_t n, std::size_t l,
                 const int64_t* coeffs, int64_t* out) {
  if (active_isa() == Isa::kAvx2)
    avx2::form_values(coords, stride, n, l, coeffs, out);
  else
    scalar::form_values(coords, stride, n, l, coeffs, out);
}

SignScan scan_signs(const int64_t* values, std::size_t n) {
  return active_isa() == Isa::kAvx2 ? avx2::scan_signs(values, n) : scalar::scan_signs(values, n);
}

std::size_t mark_equal(const int32_t* axis, std::size_t n, int32_t value, uint8_t* out) {
  return active_isa() == Isa::kAvx2 ? avx2::mark_equal(axis, n, value, out)
                                    : scalar::mark_equal(axis, n, value, out);
}

}  // namespace cyw::kernels
