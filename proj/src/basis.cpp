#include "skewdual/basis.hpp"

#include "skewdual/kernels.hpp"

namespace skewdual {
namespace {

void check_divisor(const Field& field, unsigned d) {
  require(d >= 1 && field.m() % d == 0, ErrorKind::NonDivisorDegree,
          std::to_string(d) + " does not divide " + std::to_string(field.m()));
}

bool gram_is_identity(const Mat& g) {
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j).value != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

}  // namespace

Mat trace_gram(const Field& field, unsigned d, std::span<const Felt> elements) {
  check_divisor(field, d);
  Mat g(field, elements.size(), elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      g(i, j) = g(j, i) = field.trace(d, field.mul(elements[i], elements[j]));
    }
  }
  return g;
}

SubfieldBasis make_subfield_basis(const Field& field, unsigned d, std::vector<Felt> elements) {
  check_divisor(field, d);
  const unsigned t = field.m() / d;
  require(elements.size() == t, ErrorKind::DimensionMismatch,
          "a basis over GF(p^" + std::to_string(d) + ") needs " + std::to_string(t) + " elements");
  for (Felt e : elements) require(field.contains(e), ErrorKind::InvalidArgument, "element out of range");
  const Mat gram = trace_gram(field, d, elements);
  const auto gram_inv = inverse(gram);
  require(gram_inv.has_value(), ErrorKind::NotABasis, "elements are linearly dependent");

  std::vector<Felt> dual(t, Felt{0});
  for (unsigned j = 0; j < t; ++j) {
    for (unsigned k = 0; k < t; ++k) {
      dual[j] = field.add(dual[j], field.mul((*gram_inv)(j, k), elements[k]));
    }
  }
  const bool normal = elements == conjugates(field, d, elements.front());
  return SubfieldBasis{field, d, std::move(elements), std::move(dual), normal, gram_is_identity(gram)};
}

SubfieldBasis make_normal_basis(const Field& field, unsigned d, Felt alpha) {
  return make_subfield_basis(field, d, conjugates(field, d, alpha));
}

SubfieldBasis dual_basis(const SubfieldBasis& basis) {
  return make_subfield_basis(basis.field, basis.d, basis.dual);
}

std::vector<Felt> conjugates(const Field& field, unsigned d, Felt alpha) {
  check_divisor(field, d);
  std::vector<Felt> out;
  for (unsigned i = 0; i < field.m() / d; ++i) out.push_back(field.frobenius(d * i, alpha));
  return out;
}

std::vector<Felt> conjugates(const Field& field, FieldAut sigma, Felt alpha) {
  std::vector<Felt> out;
  Felt x = alpha;
  for (unsigned i = 0; i < aut_order(field, sigma); ++i) {
    out.push_back(x);
    x = field.apply(sigma, x);
  }
  return out;
}

bool normal_basis_check(const Field& field, unsigned d, Felt alpha) {
  const std::vector<Felt> c = conjugates(field, d, alpha);
  return determinant(trace_gram(field, d, c)).value != 0;
}

bool normal_basis_check(const Field& field, FieldAut sigma, Felt alpha) {
  const std::vector<Felt> c = conjugates(field, sigma, alpha);
  return determinant(trace_gram(field, fixed_degree(field, sigma), c)).value != 0;
}

bool is_self_dual_normal(const Field& field, unsigned d, Felt alpha) {
  return gram_is_identity(trace_gram(field, d, conjugates(field, d, alpha)));
}

std::optional<Felt> find_self_dual_normal(const Field& field, unsigned d) {
  check_divisor(field, d);
  return kernels::first_self_dual_normal_parallel(field, d);
}

std::vector<Felt> basis_coordinates(const SubfieldBasis& basis, Felt x) {
  std::vector<Felt> c(basis.dual.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = basis.field.trace(basis.d, basis.field.mul(basis.dual[i], x));
  }
  return c;
}

Felt basis_combine(const SubfieldBasis& basis, std::span<const Felt> coords) {
  require(coords.size() == basis.elements.size(), ErrorKind::DimensionMismatch,
          "coordinate vector length mismatch");
  Felt acc{0};
  for (std::size_t i = 0; i < coords.size(); ++i) {
    acc = basis.field.add(acc, basis.field.mul(coords[i], basis.elements[i]));
  }
  return acc;
}

}  // namespace skewdual
