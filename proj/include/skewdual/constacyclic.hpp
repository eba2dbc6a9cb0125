#pragma once

// Skew constacyclic codes: left ideals of R = L[x; sigma] / <x^n - u> with
// sigma^n = id and sigma(u) = u, and their duals through the companion ring
// Rhat = L[x; sigma] / <x^n - u^-1>.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "skewdual/framework.hpp"
#include "skewdual/skewpoly.hpp"

namespace skewdual {

class ConstaRing;

struct ConstaElt {
  std::vector<Felt> coeffs;  // exactly n entries
  friend bool operator==(const ConstaElt&, const ConstaElt&) = default;
};

class ConstaRing {
 public:
  using Element = ConstaElt;
  using Scalar = Felt;
  using Matrix = Mat;

  /// Throws OrderMismatch if sigma^n != id, NotFixedUnit if u = 0 or sigma(u) != u.
  static ConstaRing create(const Field& field, FieldAut sigma, std::size_t n, Felt u);

  const Field& field() const { return field_; }
  FieldAut sigma() const { return sigma_; }
  std::size_t n() const { return n_; }
  Felt u() const { return u_; }

  /// The ring with u replaced by u^-1.
  ConstaRing hat() const;
  bool same_ring(const ConstaRing& other) const;

  /// Residue class of an arbitrary Left-convention polynomial.
  ConstaElt reduce(const SkewPoly& f) const;
  /// Residue class of a coefficient list of any length.
  ConstaElt element(std::vector<Felt> coeffs) const;
  SkewPoly lift(const ConstaElt& f) const;
  SkewPoly modulus() const;

  // Hamming-extension interface (v = coefficient vector).
  std::size_t rank() const { return n_; }
  ConstaElt one() const;
  ConstaElt zero() const { return ConstaElt{std::vector<Felt>(n_, Felt{0})}; }
  ConstaElt multiply(const ConstaElt& f, const ConstaElt& g) const;
  ConstaElt add(const ConstaElt& f, const ConstaElt& g) const;
  ConstaElt sub(const ConstaElt& f, const ConstaElt& g) const;
  std::vector<Felt> coords(const ConstaElt& f) const { return f.coeffs; }
  ConstaElt from_coords(std::span<const Felt> w) const;
  bool equal(const ConstaElt& f, const ConstaElt& g) const { return f == g; }
  ConstaElt random(std::mt19937_64& rng) const;
  std::string describe(const ConstaElt& f) const;
  Felt scalar_zero() const { return Felt{0}; }
  Felt scalar_one() const { return field_.one(); }
  Mat zero_matrix(std::size_t rows, std::size_t cols) const { return Mat(field_, rows, cols); }

 private:
  ConstaRing(Field field, FieldAut sigma, std::size_t n, Felt u)
      : field_(std::move(field)), sigma_(sigma), n_(n), u_(u) {}
  void check_operands(const ConstaElt& f, const ConstaElt& g) const;

  Field field_;
  FieldAut sigma_;
  std::size_t n_;
  Felt u_;
};

/// Twisted circulant: (i, j) = sigma^i(a_{j-i}) for j >= i, u sigma^i(a_{n+j-i}) otherwise.
Mat mrep_consta(const ConstaRing& ring, const ConstaElt& f);

/// The anti-isomorphism R -> Rhat, sum a_i x^i -> sum sigma^-i(a_i) x^-i.
ConstaElt theta(const ConstaRing& ring, const ConstaElt& f);

/// Coefficient-wise sigma.
ConstaElt apply_sigma(const ConstaRing& ring, const ConstaElt& f, std::int64_t k = 1);

LinearCode<Mat> code_from_gen(const ConstaRing& ring, const ConstaElt& f);

struct ConstaDual {
  SkewPoly h;  // x^n - u = f h
  DualCode<Mat> codes;
  bool dimensions_add_up;  // dim C + dim C-perp = n
};

/// Dual of v(Rf) for a monic left divisor f of x^n - u (Left convention,
/// degree <= n). Throws NotMonic, NotALeftDivisor.
ConstaDual consta_dual(const ConstaRing& ring, const SkewPoly& f);

/// All monic f with f h = x^n - u for some h, by exhaustive scan.
std::vector<SkewPoly> monic_left_divisors(const ConstaRing& ring);

/// Units u with sigma(u) = u, i.e. the nonzero elements of the fixed field.
std::vector<Felt> admissible_units(const Field& field, FieldAut sigma);

}  // namespace skewdual
