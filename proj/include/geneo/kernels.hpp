#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace geneo {

using PointIndex = std::uint32_t;

namespace kernels {

/// One implementation of the sup-norm inner loops. All entries are exact
/// (max, min, abs and a single subtraction), so every implementation returns
/// bit-identical results for finite inputs.
struct KernelSet {
  const char* name;
  /// max_i |a[i] - b[i]|
  double (*sup_abs_diff)(const double* a, const double* b, std::size_t n);
  /// max_i |a[i] - b[idx[i]]|
  double (*sup_abs_diff_gather)(const double* a, const double* b, const PointIndex* idx, std::size_t n);
  /// acc[i] = max(acc[i], |v[i] - s|)
  void (*max_abs_diff_accumulate)(double* acc, const double* v, double s, std::size_t n);
  /// acc[i] = min(acc[i], row[i])
  void (*min_accumulate)(double* acc, const double* row, std::size_t n);
};

const KernelSet& scalar();
/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelSet* avx2();
/// Best available set. GENEO_KERNELS=scalar in the environment forces the
/// reference kernels.
const KernelSet& active();

inline double sup_abs_diff(std::span<const double> a, std::span<const double> b) {
  return active().sup_abs_diff(a.data(), b.data(), a.size());
}

inline double sup_abs_diff_gather(std::span<const double> a, std::span<const double> b,
                                  std::span<const PointIndex> idx) {
  return active().sup_abs_diff_gather(a.data(), b.data(), idx.data(), idx.size());
}

inline void max_abs_diff_accumulate(std::span<double> acc, std::span<const double> v, double s) {
  active().max_abs_diff_accumulate(acc.data(), v.data(), s, acc.size());
}

inline void min_accumulate(std::span<double> acc, std::span<const double> row) {
  active().min_accumulate(acc.data(), row.data(), acc.size());
}

}  // namespace kernels
}  // namespace geneo
