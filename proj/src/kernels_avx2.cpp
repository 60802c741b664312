// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cmath>

#include "geneo/kernels.hpp"

namespace geneo::kernels {
namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

double sup_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_max_pd(acc, abs_pd(d));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

double sup_abs_diff_gather_avx2(const double* a, const double* b, const PointIndex* idx, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    const __m256d g = _mm256_i32gather_pd(b, vi, 8);
    acc = _mm256_max_pd(acc, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(a + i), g)));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[idx[i]]));
  return m;
}

void max_abs_diff_accumulate_avx2(double* acc, const double* v, double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = abs_pd(_mm256_sub_pd(_mm256_loadu_pd(v + i), vs));
    _mm256_storeu_pd(acc + i, _mm256_max_pd(_mm256_loadu_pd(acc + i), d));
  }
  for (; i < n; ++i) acc[i] = std::fmax(acc[i], std::fabs(v[i] - s));
}

void min_accumulate_avx2(double* acc, const double* row, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_min_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(row + i)));
  }
  for (; i < n; ++i) acc[i] = std::fmin(acc[i], row[i]);
}

}  // namespace

const KernelSet& avx2_set() {
  static const KernelSet set{"avx2", sup_abs_diff_avx2, sup_abs_diff_gather_avx2, max_abs_diff_accumulate_avx2,
                             min_accumulate_avx2};
  return set;
}

}  // namespace geneo::kernels
