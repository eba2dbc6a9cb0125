#pragma once

// Dense exact linear algebra over GF(q).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewdual/gf.hpp"

namespace skewdual {

class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Felt{0}) {}

  static Mat identity(const Field& field, std::size_t n);
  /// Entries given by their integer encodings; rows must share a length.
  static Mat from_values(const Field& field, const std::vector<std::vector<std::uint32_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Felt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Felt operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Felt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Felt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const;
  std::vector<std::vector<std::uint32_t>> values() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Felt> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat scaled(const Mat& a, Felt c);
/// Applies x -> x^(p^s) to every entry.
Mat frobenius(const Mat& a, unsigned s);
Mat vstack(const Mat& top, const Mat& bottom);
/// Block matrix (a_ij * b).
Mat kron(const Mat& a, const Mat& b);
/// Row vector times matrix.
std::vector<Felt> row_times(std::span<const Felt> v, const Mat& m);

struct RrefResult {
  Mat reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row echelon form.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Rows form a basis of {w : m * w^T = 0}; so w * m^T = 0 for each row w.
Mat nullspace(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
Felt determinant(const Mat& m);
/// Nonzero rows of the RREF: a canonical basis of the row space.
Mat row_space(const Mat& m);
bool same_row_space(const Mat& a, const Mat& b);
/// Whether v lies in the row space of m.
bool in_row_space(const Mat& m, std::span<const Felt> v);

std::string to_string(const Mat& m);

}  // namespace skewdual
