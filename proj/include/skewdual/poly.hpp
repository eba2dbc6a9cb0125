#pragma once

// Commutative univariate polynomials over GF(q). These are the scalars of the
// base ring GF(q)[z] used by convolutional codes, and they double as the
// plain-polynomial oracle for skew polynomials with trivial automorphism.

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "skewdual/gf.hpp"

namespace skewdual {

/// Polynomial degree with -infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree(std::size_t d) : d_(static_cast<long long>(d)) {}  // NOLINT(runtime/explicit)
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return d_ == kNegInf; }
  std::size_t value() const {
    require(!is_neg_inf(), ErrorKind::ZeroInput, "degree of the zero polynomial");
    return static_cast<std::size_t>(d_);
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(static_cast<std::size_t>(a.d_ + b.d_));
  }
  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;

 private:
  static constexpr long long kNegInf = std::numeric_limits<long long>::min();
  constexpr Degree() : d_(kNegInf) {}
  long long d_;
};

class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Felt> coeffs);

  static Poly constant(const Field& field, Felt c) { return Poly(field, {c}); }
  static Poly monomial(const Field& field, Felt c, std::size_t k);
  static Poly one(const Field& field) { return constant(field, field.one()); }

  const Field& field() const { return field_; }
  const std::vector<Felt>& coeffs() const { return coeffs_; }
  Felt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Felt{0}; }
  Degree degree() const { return coeffs_.empty() ? Degree::neg_inf() : Degree(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero constant.
  bool is_unit() const { return coeffs_.size() == 1; }
  Felt lead() const { return coeffs_.empty() ? Felt{0} : coeffs_.back(); }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(Felt c) const;
  Poly monic() const;
  Felt eval(Felt x) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
  }

  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Felt> coeffs_;
};

/// Euclidean division a = quot * b + rem with deg rem < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly g;  // monic gcd
  Poly s;
  Poly t;  // s * a + t * b = g
};
Bezout xgcd(const Poly& a, const Poly& b);

}  // namespace skewdual
