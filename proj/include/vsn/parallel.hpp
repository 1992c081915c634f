#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vsn {

// Execution policy for the data-parallel kernels (Monte-Carlo replications,
// surface cells, brute-force grids). Serial is the reference implementation;
// OpenMP must produce bit-identical results because every index writes its
// own slot and reductions run in a fixed order afterwards.
enum class Exec { Serial, OpenMp };

template <typename Fn>
void for_each_index(Exec policy, std::int64_t count, Fn&& fn) {
  if (policy == Exec::Serial) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) fn(i);
}

// Pairwise summation over a fixed index order: order-independent of how the
// values were produced and accurate to ~eps*log2(n).
inline double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 16) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace vsn
