#include "skewdual/linalg.hpp"

#include <sstream>

namespace skewdual {
namespace {

void check_same_shape(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "matrix shapes differ");
  require(a.field() == b.field(), ErrorKind::MixedRings, "matrices over different fields");
}

}  // namespace

Mat Mat::identity(const Field& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Mat Mat::from_values(const Field& field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.element(rows[i][j]);
  }
  return m;
}

bool Mat::is_zero() const {
  for (const Felt& x : data_) {
    if (x.value != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> Mat::values() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).value;
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  require(a.field() == b.field(), ErrorKind::MixedRings, "matrices over different fields");
  const Field& f = a.field();
  Mat c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Felt x = a(i, k);
      if (x.value == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same_shape(a, b);
  Mat c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  }
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same_shape(a, b);
  Mat c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Mat scaled(const Mat& a, Felt c) {
  Mat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().mul(c, a(i, j));
  }
  return out;
}

Mat frobenius(const Mat& a, unsigned s) {
  Mat out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().frobenius(s, a(i, j));
  }
  return out;
}

Mat vstack(const Mat& top, const Mat& bottom) {
  require(top.cols() == bottom.cols(), ErrorKind::DimensionMismatch, "vstack column mismatch");
  Mat out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  require(a.field() == b.field(), ErrorKind::MixedRings, "matrices over different fields");
  const Field& f = a.field();
  Mat out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Felt x = a(i, j);
      if (x.value == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
        }
      }
    }
  }
  return out;
}

std::vector<Felt> row_times(std::span<const Felt> v, const Mat& m) {
  require(v.size() == m.rows(), ErrorKind::DimensionMismatch, "vector length mismatch");
  const Field& f = m.field();
  std::vector<Felt> out(m.cols(), Felt{0});
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].value == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[k], m(k, j)));
  }
  return out;
}

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t sel = row;
    while (sel < r.rows() && r(sel, col).value == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(row, j));
    }
    const Felt inv = f.inv(r(row, col));
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) = f.mul(inv, r(row, j));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row) continue;
      const Felt c = r(i, col);
      if (c.value == 0) continue;
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) = f.sub(r(i, j), f.mul(c, r(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& m) {
  const Field& f = m.field();
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  Mat basis(f, m.cols() - rr.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = f.one();
    for (std::size_t r = 0; r < rr.rank; ++r) basis(out, rr.pivots[r]) = f.neg(rr.reduced(r, free));
    ++out;
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& m) {
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  }
  return inv;
}

Felt determinant(const Mat& m) {
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const Field& f = m.field();
  Mat r = m;
  Felt det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && r(sel, col).value == 0) ++sel;
    if (sel == n) return f.zero();
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(sel, j), r(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, r(col, col));
    const Felt inv = f.inv(r(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const Felt c = f.mul(r(i, col), inv);
      if (c.value == 0) continue;
      for (std::size_t j = col; j < n; ++j) r(i, j) = f.sub(r(i, j), f.mul(c, r(col, j)));
    }
  }
  return det;
}

Mat row_space(const Mat& m) {
  const RrefResult rr = rref(m);
  Mat out(m.field(), rr.rank, m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rr.reduced(i, j);
  }
  return out;
}

bool same_row_space(const Mat& a, const Mat& b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch, "codes of different lengths");
  return row_space(a) == row_space(b);
}

bool in_row_space(const Mat& m, std::span<const Felt> v) {
  require(v.size() == m.cols(), ErrorKind::DimensionMismatch, "vector length mismatch");
  Mat extra(m.field(), 1, m.cols());
  for (std::size_t j = 0; j < v.size(); ++j) extra(0, j) = v[j];
  return rank(vstack(m, extra)) == rank(m);
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).value;
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace skewdual
