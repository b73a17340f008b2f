#include "cyw/kernels.hpp"

namespace cyw::kernels::scalar {

void form_values(const int32_t* coords, std::size_t stride, std::size_t n, std::size_t l,
                 const int64_t* coeffs, int64_t* out) {
  for (std::size_t k = 0; k < n; ++k) out[k] = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const int64_t c = coeffs[i];
    if (c == 0) continue;
    const int32_t* axis = coords + i * stride;
    for (std::size_t k = 0; k < n; ++k) out[k] += c * axis[k];
  }
}

SignScan scan_signs(const int64_t* values, std::size_t n) {
  SignScan s;
  if (n == 0) return s;
  s.max_value = s.min_value = values[0];
  for (std::size_t k = 0; k < n; ++k) {
    const int64_t v = values[k];
    s.positive += v > 0;
    s.negative += v < 0;
    if (v > s.max_value) {
      s.max_value = v;
      s.argmax = k;
    }
    if (v < s.min_value) {
      s.min_value = v;
      s.argmin = k;
    }
  }
  return s;
}

std::size_t mark_equal(const int32_t* axis, std::size_t n, int32_t value, uint8_t* out) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = axis[k] == value;
    count += out[k];
  }
  return count;
}

}  // namespace cyw::kernels::scalar
