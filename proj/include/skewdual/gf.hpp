#pragma once

// Exact arithmetic in GF(p^m) for desk-scale fields (q <= 2^16).
//
// An element is stored as the integer sum c_i p^i, where (c_0, ..., c_{m-1})
// are its coordinates in the polynomial basis {1, x, ..., x^{m-1}} of
// GF(p)[x] / (modulus). Multiplication goes through log/antilog tables built
// once per field from a primitive element.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewdual/error.hpp"

namespace skewdual {

struct Felt {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const Felt&, const Felt&) = default;
};

/// The Frobenius power x -> x^(p^s). Reduced modulo m whenever it meets a field.
struct FieldAut {
  unsigned s = 0;

  friend constexpr bool operator==(const FieldAut&, const FieldAut&) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class Field {
 public:
  /// Builds GF(p^m). Without a modulus the monic irreducible of degree m with
  /// the smallest integer encoding is used.
  static Field create(unsigned p, unsigned m,
                      std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned p() const { return impl_->p; }
  unsigned m() const { return impl_->m; }
  std::uint32_t q() const { return impl_->q; }
  /// Base-p digits of the modulus, ascending degree, length m + 1.
  const std::vector<unsigned>& modulus() const { return impl_->modulus; }
  Felt primitive() const { return impl_->primitive; }

  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  /// Validated conversion from the integer encoding.
  Felt element(std::uint64_t value) const;
  bool contains(Felt x) const { return x.value < impl_->q; }

  Felt add(Felt x, Felt y) const;
  Felt sub(Felt x, Felt y) const;
  Felt neg(Felt x) const;
  Felt mul(Felt x, Felt y) const {
    if (x.value == 0 || y.value == 0) return Felt{0};
    const auto& t = *impl_;
    std::uint32_t e = t.log[x.value] + t.log[y.value];
    if (e >= t.q - 1) e -= t.q - 1;
    return Felt{t.exp[e]};
  }
  Felt inv(Felt x) const;
  Felt div(Felt x, Felt y) const { return mul(x, inv(y)); }
  /// x^e for any integer exponent; negative exponents require x != 0.
  Felt pow(Felt x, std::int64_t e) const;

  /// x^(p^s).
  Felt frobenius(unsigned s, Felt x) const;
  Felt apply(FieldAut sigma, Felt x) const { return frobenius(sigma.s, x); }

  /// Tr and N of GF(p^m) over its subfield GF(p^d).
  Felt trace(unsigned d, Felt x) const;
  Felt norm(unsigned d, Felt x) const;
  bool in_subfield(unsigned d, Felt x) const;

  std::vector<unsigned> digits(Felt x) const;
  Felt from_digits(std::span<const unsigned> digits) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ || (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
  }

 private:
  struct Tables {
    unsigned p = 0;
    unsigned m = 0;
    std::uint32_t q = 0;
    std::vector<unsigned> modulus;
    Felt primitive;
    std::vector<std::uint32_t> exp;  // length q - 1
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> p_pow_mod;  // p^s mod (q - 1), s < m
    std::vector<std::uint16_t> add_table;  // q * q, only for small q
  };

  explicit Field(std::shared_ptr<const Tables> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Tables> impl_;
};

bool is_prime(std::uint64_t n);

/// Monic irreducibility over GF(p); digits are ascending, leading digit last.
bool is_irreducible_mod_p(unsigned p, std::span<const unsigned> digits);

/// Smallest-encoding monic irreducible of degree m over GF(p).
std::vector<unsigned> default_modulus(unsigned p, unsigned m);

// FieldAut helpers. All reduce s modulo the extension degree.
unsigned aut_order(const Field& field, FieldAut sigma);
/// Degree over GF(p) of the subfield fixed by sigma.
unsigned fixed_degree(const Field& field, FieldAut sigma);
FieldAut aut_inverse(const Field& field, FieldAut sigma);
FieldAut aut_power(const Field& field, FieldAut sigma, std::int64_t k);
bool aut_is_identity(const Field& field, FieldAut sigma);
/// sigma^k(x) for any integer k.
Felt aut_apply(const Field& field, FieldAut sigma, std::int64_t k, Felt x);

/// N_sigma(x) = x sigma(x) ... sigma^(ord-1)(x), the norm to the fixed field of sigma.
Felt aut_norm(const Field& field, FieldAut sigma, Felt x);

/// Returns the least nonzero nu with sigma(nu) / nu = mu. Throws NormNotOne if
/// the sigma-norm of mu is not 1.
Felt hilbert90(const Field& field, FieldAut sigma, Felt mu);
/// Hilbert 90 for the generator x -> x^(p^d) of GF(p^m) / GF(p^d).
Felt hilbert90(const Field& field, unsigned d, Felt mu);

}  // namespace skewdual
