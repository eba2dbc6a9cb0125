#pragma once

// Exhaustive search kernels. Each has an OpenMP version (used by the library)
// and a serial reference kept for tests and benchmarks; both return the same
// value for every input.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "skewdual/gf.hpp"
#include "skewdual/linalg.hpp"

namespace skewdual::kernels {

/// Minimum Hamming weight over nonzero combinations of the rows of g, which
/// must be linearly independent. Enumerates all q^rows - 1 combinations.
std::size_t min_weight_serial(const Mat& g);
std::size_t min_weight_parallel(const Mat& g);

/// Least alpha whose conjugates over GF(p^d) form a self-dual basis.
std::optional<Felt> first_self_dual_normal_serial(const Field& field, unsigned d);
std::optional<Felt> first_self_dual_normal_parallel(const Field& field, unsigned d);

/// Number of threads OpenMP would use (1 without OpenMP).
int max_threads();

}  // namespace skewdual::kernels
