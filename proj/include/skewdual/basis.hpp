#pragma once

// Bases of GF(p^m) over a subfield GF(p^d): trace duals, normal and self-dual
// normal bases, and trace coordinates.

#include <optional>
#include <span>
#include <vector>

#include "skewdual/gf.hpp"
#include "skewdual/linalg.hpp"

namespace skewdual {

struct SubfieldBasis {
  Field field;
  unsigned d = 1;
  std::vector<Felt> elements;
  std::vector<Felt> dual;  // trace dual, Tr(elements[i] * dual[j]) = [i == j]
  bool normal = false;
  bool self_dual = false;
};

/// Validates t = m / d elements as a basis (nonsingular trace Gram matrix).
/// Throws NonDivisorDegree, DimensionMismatch or NotABasis.
SubfieldBasis make_subfield_basis(const Field& field, unsigned d, std::vector<Felt> elements);
/// The basis {alpha, alpha^(p^d), ...}.
SubfieldBasis make_normal_basis(const Field& field, unsigned d, Felt alpha);

/// (Tr_d(a_i a_j)).
Mat trace_gram(const Field& field, unsigned d, std::span<const Felt> elements);
SubfieldBasis dual_basis(const SubfieldBasis& basis);

/// alpha^(p^(d i)) for i < m / d.
std::vector<Felt> conjugates(const Field& field, unsigned d, Felt alpha);
/// The sigma-orbit alpha, sigma(alpha), ..., sigma^(ord - 1)(alpha).
std::vector<Felt> conjugates(const Field& field, FieldAut sigma, Felt alpha);

bool normal_basis_check(const Field& field, unsigned d, Felt alpha);
/// Normality of the sigma-orbit over the fixed field of sigma.
bool normal_basis_check(const Field& field, FieldAut sigma, Felt alpha);
bool is_self_dual_normal(const Field& field, unsigned d, Felt alpha);
/// Least alpha generating a self-dual normal basis, if any.
std::optional<Felt> find_self_dual_normal(const Field& field, unsigned d);

/// c_i = Tr(dual_i * x), so x = sum c_i elements_i.
std::vector<Felt> basis_coordinates(const SubfieldBasis& basis, Felt x);
Felt basis_combine(const SubfieldBasis& basis, std::span<const Felt> coords);

}  // namespace skewdual
