#include <cmath>

#include "geneo/kernels.hpp"

namespace geneo::kernels {
namespace {

double sup_abs_diff_ref(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

double sup_abs_diff_gather_ref(const double* a, const double* b, const PointIndex* idx, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i] - b[idx[i]]));
  return m;
}

void max_abs_diff_accumulate_ref(double* acc, const double* v, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::fmax(acc[i], std::fabs(v[i] - s));
}

void min_accumulate_ref(double* acc, const double* row, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = std::fmin(acc[i], row[i]);
}

}  // namespace

const KernelSet& scalar() {
  static const KernelSet set{"scalar", sup_abs_diff_ref, sup_abs_diff_gather_ref, max_abs_diff_accumulate_ref,
                             min_accumulate_ref};
  return set;
}

}  // namespace geneo::kernels
