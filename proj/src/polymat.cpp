#include "skewdual/polymat.hpp"

#include <optional>
#include <sstream>

namespace skewdual {
namespace {

void swap_rows(PolyMat& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(PolyMat& a, std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, k));
}

// row_dst -= q * row_src
void row_submul(PolyMat& a, std::size_t dst, std::size_t src, const Poly& q) {
  if (q.is_zero()) return;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (!a(src, j).is_zero()) a(dst, j) = a(dst, j) - q * a(src, j);
  }
}

void col_submul(PolyMat& a, std::size_t dst, std::size_t src, const Poly& q) {
  if (q.is_zero()) return;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a(i, src).is_zero()) a(i, dst) = a(i, dst) - a(i, src) * q;
  }
}

void row_scale(PolyMat& a, std::size_t i, Felt c) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j).scaled(c);
}

// Row Hermite reduction in place, pivoting only within the first pivot_cols
// columns; row operations act on full rows so trailing columns record the
// transform when they start as an identity block.
std::vector<std::size_t> hermite_in_place(PolyMat& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < a.rows(); ++i) {
        if (a(i, col).is_zero()) continue;
        if (!best || a(i, col).degree() < a(*best, col).degree()) best = i;
      }
      if (!best) break;
      swap_rows(a, *best, row);
      bool cleared = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col).is_zero()) continue;
        const Poly q = divmod(a(i, col), a(row, col)).first;
        row_submul(a, i, row, q);
        if (!a(i, col).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    if (row >= a.rows() || a(row, col).is_zero()) continue;
    row_scale(a, row, a.field().inv(a(row, col).lead()));
    for (std::size_t i = 0; i < row; ++i) {
      if (a(i, col).is_zero()) continue;
      const Poly q = divmod(a(i, col), a(row, col)).first;
      row_submul(a, i, row, q);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

PolyMat PolyMat::identity(const Field& field, std::size_t n) {
  PolyMat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(field);
  return m;
}

PolyMat PolyMat::from_mat(const Mat& a) {
  PolyMat m(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Poly::constant(a.field(), a(i, j));
  }
  return m;
}

PolyMat PolyMat::from_values(const Field& field,
                             const std::vector<std::vector<std::vector<std::uint32_t>>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMat m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Felt> c;
      for (std::uint32_t v : rows[i][j]) c.push_back(field.element(v));
      m(i, j) = Poly(field, std::move(c));
    }
  }
  return m;
}

bool PolyMat::is_zero() const {
  for (const Poly& p : data_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool PolyMat::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

Mat PolyMat::coefficient(std::size_t k) const {
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).coeff(k);
  }
  return out;
}

Degree PolyMat::degree() const {
  Degree d = Degree::neg_inf();
  for (const Poly& p : data_) d = std::max(d, p.degree());
  return d;
}

std::vector<std::vector<std::vector<std::uint32_t>>> PolyMat::values() const {
  std::vector<std::vector<std::vector<std::uint32_t>>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::vector<std::uint32_t> c;
      for (Felt x : (*this)(i, j).coeffs()) c.push_back(x.value);
      out[i].push_back(std::move(c));
    }
  }
  return out;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  PolyMat c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) = c(i, j) + a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "matrix shapes differ");
  PolyMat c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

PolyMat transpose(const PolyMat& a) {
  PolyMat t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

PolyMat shift(const PolyMat& a, std::size_t k) {
  const Poly zk = Poly::monomial(a.field(), a.field().one(), k);
  PolyMat out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * zk;
  }
  return out;
}

PolyMat select_rows(const PolyMat& a, std::size_t first, std::size_t count) {
  PolyMat out(a.field(), count, a.cols());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(first + i, j);
  }
  return out;
}

PolyMat vstack(const PolyMat& top, const PolyMat& bottom) {
  require(top.cols() == bottom.cols(), ErrorKind::DimensionMismatch, "vstack column mismatch");
  PolyMat out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

std::vector<Poly> row_times(const std::vector<Poly>& v, const PolyMat& m) {
  require(v.size() == m.rows(), ErrorKind::DimensionMismatch, "vector length mismatch");
  std::vector<Poly> out(m.cols(), Poly(m.field()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[k] * m(k, j);
  }
  return out;
}

HermiteResult poly_hnf(const PolyMat& m) {
  const Field& f = m.field();
  PolyMat aug(f, m.rows(), m.cols() + m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = Poly::one(f);
  }
  std::vector<std::size_t> pivots = hermite_in_place(aug, m.cols());
  PolyMat h(f, m.rows(), m.cols());
  PolyMat u(f, m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = aug(i, j);
    for (std::size_t j = 0; j < m.rows(); ++j) u(i, j) = aug(i, m.cols() + j);
  }
  const std::size_t rank = pivots.size();
  return {std::move(h), std::move(u), rank, std::move(pivots)};
}

PolyMat hermite_basis(const PolyMat& m) {
  PolyMat a = m;
  const std::size_t rank = hermite_in_place(a, a.cols()).size();
  return select_rows(a, 0, rank);
}

bool same_row_module(const PolyMat& a, const PolyMat& b) {
  require(a.cols() == b.cols(), ErrorKind::DimensionMismatch, "modules of different rank");
  return hermite_basis(a) == hermite_basis(b);
}

bool row_module_contains(const PolyMat& a, const PolyMat& b) {
  return same_row_module(a, vstack(a, b));
}

std::vector<Poly> poly_snf(const PolyMat& m) {
  PolyMat a = m;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Poly> factors;
  for (std::size_t t = 0; t < n; ++t) {
    // Move a minimal-degree entry of the trailing block to (t, t).
    auto place_min = [&](bool whole_block) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (a(i, j).is_zero()) continue;
          if (!best || a(i, j).degree() < a(best->first, best->second).degree()) best = {{i, j}};
        }
      }
      if (!best) return false;
      swap_rows(a, best->first, t);
      swap_cols(a, best->second, t);
      return true;
    };
    if (!place_min(true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t).is_zero()) continue;
        row_submul(a, i, t, divmod(a(i, t), a(t, t)).first);
        if (!a(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j).is_zero()) continue;
        col_submul(a, j, t, divmod(a(t, j), a(t, t)).first);
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        place_min(false);
        continue;
      }
      // Pivot must divide every remaining entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (!divmod(a(i, j), a(t, t)).second.is_zero()) {
            for (std::size_t c = 0; c < a.cols(); ++c) a(t, c) = a(t, c) + a(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    factors.push_back(a(t, t).monic());
  }
  return factors;
}

bool is_direct_summand(const PolyMat& m) {
  for (const Poly& d : poly_snf(m)) {
    if (!d.is_unit()) return false;
  }
  return true;
}

PolyMat poly_left_kernel(const PolyMat& m) {
  const HermiteResult hr = poly_hnf(m);
  const std::size_t nullity = m.rows() - hr.rank;
  if (nullity == 0) return PolyMat(m.field(), 0, m.rows());
  return hermite_basis(select_rows(hr.u, hr.rank, nullity));
}

Poly determinant(const PolyMat& m) {
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Poly::one(f);
  PolyMat a = m;
  Poly prev = Poly::one(f);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t sel = k + 1;
      while (sel < n && a(sel, k).is_zero()) ++sel;
      if (sel == n) return Poly(f);
      swap_rows(a, sel, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divmod(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev).first;
      }
      a(i, k) = Poly(f);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

bool is_unimodular(const PolyMat& m) {
  return m.rows() == m.cols() && determinant(m).is_unit();
}

std::string to_string(const PolyMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace skewdual
