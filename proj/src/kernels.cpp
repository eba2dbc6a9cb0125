#include "skewdual/kernels.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "skewdual/basis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewdual::kernels {
namespace {

// Weight of the combination whose base-q digits (least significant first)
// are the row coefficients.
std::size_t combination_weight(const Mat& g, std::uint64_t index, std::vector<Felt>& word) {
  const Field& f = g.field();
  const std::uint64_t q = f.q();
  std::fill(word.begin(), word.end(), Felt{0});
  for (std::size_t i = 0; i < g.rows() && index != 0; ++i, index /= q) {
    const Felt c{static_cast<std::uint32_t>(index % q)};
    if (c.value == 0) continue;
    const auto row = g.row(i);
    for (std::size_t j = 0; j < word.size(); ++j) word[j] = f.add(word[j], f.mul(c, row[j]));
  }
  std::size_t w = 0;
  for (Felt x : word) w += x.value != 0;
  return w;
}

std::uint64_t combination_count(const Mat& g) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) total *= g.field().q();
  return total;
}

}  // namespace

std::size_t min_weight_serial(const Mat& g) {
  const std::uint64_t total = combination_count(g);
  std::vector<Felt> word(g.cols());
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t idx = 1; idx < total; ++idx) best = std::min(best, combination_weight(g, idx, word));
  return best;
}

std::size_t min_weight_parallel(const Mat& g) {
  const std::int64_t total = static_cast<std::int64_t>(combination_count(g));
  std::size_t best = std::numeric_limits<std::size_t>::max();
#pragma omp parallel reduction(min : best)
  {
    std::vector<Felt> word(g.cols());
#pragma omp for schedule(static)
    for (std::int64_t idx = 1; idx < total; ++idx) {
      best = std::min(best, combination_weight(g, static_cast<std::uint64_t>(idx), word));
    }
  }
  return best;
}

std::optional<Felt> first_self_dual_normal_serial(const Field& field, unsigned d) {
  for (std::uint32_t v = 1; v < field.q(); ++v) {
    if (is_self_dual_normal(field, d, Felt{v})) return Felt{v};
  }
  return std::nullopt;
}

std::optional<Felt> first_self_dual_normal_parallel(const Field& field, unsigned d) {
  const std::int64_t q = field.q();
  std::int64_t best = q;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t v = 1; v < q; ++v) {
    if (v < best && is_self_dual_normal(field, d, Felt{static_cast<std::uint32_t>(v)})) best = v;
  }
  if (best == q) return std::nullopt;
  return Felt{static_cast<std::uint32_t>(best)};
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace skewdual::kernels
