#pragma once

// Ore polynomials over GF(q) with a Frobenius automorphism sigma and zero
// derivation, in either multiplication convention:
//
//   Left:  coefficients on the left,  x a = sigma(a) x.
//   Right: coefficients on the right, a z = z sigma(a).
//
// Conventions never convert implicitly; use convert_convention().

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "skewdual/gf.hpp"
#include "skewdual/poly.hpp"

namespace skewdual {

enum class Convention { Left, Right };

class SkewPoly {
 public:
  SkewPoly(Field field, FieldAut sigma, Convention convention, std::vector<Felt> coeffs = {});

  const Field& field() const { return field_; }
  FieldAut sigma() const { return sigma_; }
  Convention convention() const { return convention_; }
  const std::vector<Felt>& coeffs() const { return coeffs_; }
  Felt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Felt{0}; }
  Degree degree() const { return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.empty(); }
  Felt lead() const { return coeffs_.empty() ? Felt{0} : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

  /// Same field, automorphism and convention.
  bool same_ring(const SkewPoly& other) const;
  SkewPoly zero_like() const { return SkewPoly(field_, sigma_, convention_); }
  SkewPoly constant_like(Felt c) const { return SkewPoly(field_, sigma_, convention_, {c}); }
  /// c x^k (Left) or z^k c (Right).
  SkewPoly monomial_like(Felt c, std::size_t k) const;

  SkewPoly operator+(const SkewPoly& other) const;
  SkewPoly operator-(const SkewPoly& other) const;
  SkewPoly operator-() const;
  SkewPoly operator*(const SkewPoly& other) const;

  /// Coefficient-wise sigma^k; a ring automorphism fixing the variable.
  SkewPoly apply_sigma(std::int64_t k) const;

  std::string to_string() const;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.same_ring(b) && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  Field field_;
  FieldAut sigma_;
  Convention convention_;
  std::vector<Felt> coeffs_;
};

/// x - a in the given ring.
SkewPoly linear_factor(const Field& field, FieldAut sigma, Convention convention, Felt a);
/// x^n - u.
SkewPoly binomial(const Field& field, FieldAut sigma, Convention convention, std::size_t n, Felt u);

enum class Side {
  Right,  // f = q * g + r
  Left,   // f = g * q + r
};

struct SkewDivision {
  SkewPoly quot;
  SkewPoly rem;
};

SkewDivision sp_divide(Side side, const SkewPoly& f, const SkewPoly& g);

enum class GcdKind { Gcrd, Gcld, Lclm, Lcrm };

/// Monic generator of Lf + Lg (gcrd), Lf ∩ Lg (lclm), fL + gL (gcld) or
/// fL ∩ gL (lcrm), via the extended Euclidean algorithm on the matching side.
SkewPoly sp_gcd_lcm(GcdKind kind, const SkewPoly& f, const SkewPoly& g);

inline SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) { return sp_gcd_lcm(GcdKind::Gcrd, f, g); }
inline SkewPoly gcld(const SkewPoly& f, const SkewPoly& g) { return sp_gcd_lcm(GcdKind::Gcld, f, g); }
inline SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) { return sp_gcd_lcm(GcdKind::Lclm, f, g); }
inline SkewPoly lcrm(const SkewPoly& f, const SkewPoly& g) { return sp_gcd_lcm(GcdKind::Lcrm, f, g); }

/// Left-to-right fold of pairwise lclm / lcrm. The list must be nonempty.
SkewPoly lclm(std::span<const SkewPoly> factors);
SkewPoly lcrm(std::span<const SkewPoly> factors);

/// u * f with u chosen so the result is monic (generator of the same left ideal).
SkewPoly monic_left(const SkewPoly& f);
/// f * u, monic (same right ideal).
SkewPoly monic_right(const SkewPoly& f);

/// N_i(a) = a sigma(a) ... sigma^(i-1)(a); N_0 = 1.
Felt sp_norm(const Field& field, FieldAut sigma, Felt a, std::size_t i);

/// Remainder of the right division of f by x - a (Left convention only).
Felt sp_right_eval(const SkewPoly& f, Felt a);
/// sum_i f_i N_i(a) (Left convention only).
Felt sp_right_eval_norms(const SkewPoly& f, Felt a);

/// The same ring element written in the other convention: the automorphism
/// becomes sigma^-1 and coefficient i is twisted by sigma^-i.
SkewPoly convert_convention(const SkewPoly& f);

/// Commutative view of a polynomial with trivial automorphism.
Poly to_commutative(const SkewPoly& f);

}  // namespace skewdual
