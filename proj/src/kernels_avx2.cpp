#include "cyw/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define CYW_HAVE_X86 1
#include <immintrin.h>
#endif

namespace cyw::kernels::avx2 {

#if CYW_HAVE_X86

__attribute__((target("avx2"))) void form_values(const int32_t* coords, std::size_t stride,
                                                 std::size_t n, std::size_t l,
                                                 const int64_t* coeffs, int64_t* out) {
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t i = 0; i < l; ++i) {
      if (coeffs[i] == 0) continue;
      const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(coords + i * stride + k));
      // mul_epi32 multiplies the sign-extended low 32 bits of each lane.
      const __m256i c = _mm256_set1_epi64x(coeffs[i]);
      acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_cvtepi32_epi64(x), c));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), acc);
  }
  if (k < n) {
    for (std::size_t j = k; j < n; ++j) out[j] = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const int32_t* axis = coords + i * stride;
      for (std::size_t j = k; j < n; ++j) out[j] += coeffs[i] * axis[j];
    }
  }
}

__attribute__((target("avx2"))) SignScan scan_signs(const int64_t* values, std::size_t n) {
  if (n < 8) return scalar::scan_signs(values, n);
  const __m256i zero = _mm256_setzero_si256();
  __m256i pos = zero, neg = zero;
  __m256i vmax = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values));
  __m256i vmin = vmax;
  __m256i imax = _mm256_setr_epi64x(0, 1, 2, 3);
  __m256i imin = imax;
  __m256i idx = imax;
  const __m256i step = _mm256_set1_epi64x(4);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + k));
    pos = _mm256_sub_epi64(pos, _mm256_cmpgt_epi64(v, zero));
    neg = _mm256_sub_epi64(neg, _mm256_cmpgt_epi64(zero, v));
    const __m256i gt = _mm256_cmpgt_epi64(v, vmax);
    vmax = _mm256_blendv_epi8(vmax, v, gt);
    imax = _mm256_blendv_epi8(imax, idx, gt);
    const __m256i lt = _mm256_cmpgt_epi64(vmin, v);
    vmin = _mm256_blendv_epi8(vmin, v, lt);
    imin = _mm256_blendv_epi8(imin, idx, lt);
    idx = _mm256_add_epi64(idx, step);
  }
  alignas(32) int64_t p[4], q[4], mx[4], ix[4], mn[4], in[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(p), pos);
  _mm256_store_si256(reinterpret_cast<__m256i*>(q), neg);
  _mm256_store_si256(reinterpret_cast<__m256i*>(mx), vmax);
  _mm256_store_si256(reinterpret_cast<__m256i*>(ix), imax);
  _mm256_store_si256(reinterpret_cast<__m256i*>(mn), vmin);
  _mm256_store_si256(reinterpret_cast<__m256i*>(in), imin);
  SignScan s;
  s.max_value = mx[0];
  s.argmax = static_cast<std::size_t>(ix[0]);
  s.min_value = mn[0];
  s.argmin = static_cast<std::size_t>(in[0]);
  for (int j = 0; j < 4; ++j) {
    s.positive += static_cast<std::size_t>(p[j]);
    s.negative += static_cast<std::size_t>(q[j]);
    const auto xi = static_cast<std::size_t>(ix[j]);
    if (mx[j] > s.max_value || (mx[j] == s.max_value && xi < s.argmax)) {
      s.max_value = mx[j];
      s.argmax = xi;
    }
    const auto ni = static_cast<std::size_t>(in[j]);
    if (mn[j] < s.min_value || (mn[j] == s.min_value && ni < s.argmin)) {
      s.min_value = mn[j];
      s.argmin = ni;
    }
  }
  for (; k < n; ++k) {
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

__attribute__((target("avx2"))) std::size_t mark_equal(const int32_t* axis, std::size_t n,
                                                       int32_t value, uint8_t* out) {
  const __m256i target = _mm256_set1_epi32(value);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(axis + k));
    const auto mask = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, target))));
    for (int j = 0; j < 8; ++j) out[k + j] = static_cast<uint8_t>(mask >> j & 1u);
    count += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  for (; k < n; ++k) {
    out[k] = axis[k] == value;
    count += out[k];
  }
  return count;
}

#else

void form_values(const int32_t* coords, std::size_t stride, std::size_t n, std::size_t l,
                 const int64_t* coeffs, int64_t* out) {
  scalar::form_values(coords, stride, n, l, coeffs, out);
}
SignScan scan_signs(const int64_t* values, std::size_t n) { return scalar::scan_signs(values, n); }
std::size_t mark_equal(const int32_t* axis, std::size_t n, int32_t value, uint8_t* out) {
  return scalar::mark_equal(axis, n, value, out);
}

#endif

}  // namespace cyw::kernels::avx2
