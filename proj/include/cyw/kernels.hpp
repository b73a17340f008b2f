#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Data-parallel inner loops over point sets stored axis-major
// (coords[i * stride + k] is coordinate i of point k). Each kernel has a
// scalar reference and an AVX2 variant; the variant is chosen once at startup
// from the CPU features and can be overridden for testing.
namespace cyw::kernels {

enum class Isa { kScalar, kAvx2 };

Isa active_isa();
bool avx2_available();
// Pins the dispatch to an ISA. Requesting kAvx2 on a CPU without it is ignored.
void force_isa(Isa isa);
std::string_view isa_name(Isa isa);

// True when form_values() is exact for these inputs: every |coeff| < 2^31 and
// the sum of |coeff| * max_abs_coord over all axes stays below 2^62.
bool form_fits(const int64_t* coeffs, std::size_t l, int64_t max_abs_coord);

// out[k] = sum_i coeffs[i] * coords[i * stride + k] for k < n.
void form_values(const int32_t* coords, std::size_t stride, std::size_t n, std::size_t l,
                 const int64_t* coeffs, int64_t* out);

struct SignScan {
  std::size_t positive = 0;
  std::size_t negative = 0;
  int64_t max_value = 0;     // valid when n > 0
  std::size_t argmax = 0;    // first index attaining max_value
  int64_t min_value = 0;
  std::size_t argmin = 0;
};

SignScan scan_signs(const int64_t* values, std::size_t n);

// out[k] = (axis[k] == value); returns the number of matches.
std::size_t mark_equal(const int32_t* axis, std::size_t n, int32_t value, uint8_t* out);

namespace scalar {
void form_values(const int32_t* coords, std::size_t stride, std::size_t n, std::size_t l,
                 const int64_t* coeffs, int64_t* out);
SignScan scan_signs(const int64_t* values, std::size_t n);
std::size_t mark_equal(const int32_t* axis, std::size_t n, int32_t value, uint8_t* out);
}  // namespace scalar

namespace avx2 {
void form_values(const int32_t* coords, std::size_t stride, std::size_t n, std::size_t l,
                 const int64_t* coeffs, int64_t* out);
SignScan scan_signs(const int64_t* values, std::size_t n);
std::size_t mark_equal(const int32_t* axis, std::size_t n, int32_t value, uint8_t* out);
}  // namespace avx2

}  // namespace cyw::kernels
