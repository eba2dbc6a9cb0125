#pragma once

// Matrices over the principal ideal domain GF(q)[z]: Hermite and Smith normal
// forms, left kernels, and module equality.
//
// Hermite convention (rows): the first nonzero entry of each nonzero row is a
// monic pivot, pivots move strictly right going down, entries above a pivot
// have smaller degree than it, and zero rows sit at the bottom. Two matrices
// generate the same row module iff their nonzero Hermite rows coincide.

#include <cstddef>
#include <string>
#include <vector>

#include "skewdual/linalg.hpp"
#include "skewdual/poly.hpp"

namespace skewdual {

class PolyMat {
 public:
  PolyMat(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Poly(field)) {}

  static PolyMat identity(const Field& field, std::size_t n);
  /// Constant (z-degree 0) embedding.
  static PolyMat from_mat(const Mat& m);
  /// Entries given as ascending coefficient lists of integer encodings.
  static PolyMat from_values(const Field& field,
                             const std::vector<std::vector<std::vector<std::uint32_t>>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool row_is_zero(std::size_t i) const;
  /// Coefficient matrix of z^k.
  Mat coefficient(std::size_t k) const;
  /// Largest entry degree, -inf for the zero matrix.
  Degree degree() const;
  std::vector<std::vector<std::vector<std::uint32_t>>> values() const;

  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

PolyMat operator*(const PolyMat& a, const PolyMat& b);
PolyMat operator+(const PolyMat& a, const PolyMat& b);
PolyMat transpose(const PolyMat& a);
/// z^k * a.
PolyMat shift(const PolyMat& a, std::size_t k);
PolyMat select_rows(const PolyMat& a, std::size_t first, std::size_t count);
PolyMat vstack(const PolyMat& top, const PolyMat& bottom);
/// Row vector times matrix.
std::vector<Poly> row_times(const std::vector<Poly>& v, const PolyMat& m);

struct HermiteResult {
  PolyMat h;  // same shape as the input
  PolyMat u;  // unimodular, u * input = h
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

HermiteResult poly_hnf(const PolyMat& m);
/// Nonzero Hermite rows: the canonical generator matrix of the row module.
PolyMat hermite_basis(const PolyMat& m);
bool same_row_module(const PolyMat& a, const PolyMat& b);
/// Whether every row of b lies in the row module of a.
bool row_module_contains(const PolyMat& a, const PolyMat& b);

/// Nonzero invariant factors d_1 | d_2 | ..., each monic.
std::vector<Poly> poly_snf(const PolyMat& m);
/// Row module is a direct summand of GF(q)[z]^cols: all invariant factors are units.
bool is_direct_summand(const PolyMat& m);

/// Basis of {w : w * m = 0} in Hermite form.
PolyMat poly_left_kernel(const PolyMat& m);

/// Determinant by fraction-free elimination.
Poly determinant(const PolyMat& m);
/// Square matrix invertible over GF(q)[z].
bool is_unimodular(const PolyMat& m);

std::string to_string(const PolyMat& m);

}  // namespace skewdual
