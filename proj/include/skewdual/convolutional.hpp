#pragma once

// Left ideal convolutional codes. The word ambient is A = M_n(K) with
// K = GF(q^t) over F = GF(q), q = p^d, coordinatized over F by the basis
// alpha_k E_ij (rows of the matrix concatenated, then the K/F basis D).
// Codes are left ideals of R = A[z; sigma] (right convention, a z = z sigma(a))
// with sigma(a) = U tau^h(a) U^-1 and tau the q-Frobenius.

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewdual/basis.hpp"
#include "skewdual/framework.hpp"
#include "skewdual/polymat.hpp"

namespace skewdual {

class WordAmbient {
 public:
  /// K = GF(p^(d t)). Without an explicit basis D the least self-dual normal
  /// basis of K/F is used, or the least normal basis if none exists.
  static WordAmbient create(unsigned p, unsigned d, unsigned t, std::size_t n,
                            std::optional<std::vector<Felt>> basis = std::nullopt);

  const Field& F() const { return tables_->F; }
  const Field& K() const { return tables_->K; }
  unsigned t() const { return tables_->t; }
  std::size_t n() const { return tables_->n; }
  const SubfieldBasis& D() const { return tables_->D; }
  /// t n^2.
  std::size_t rank() const { return tables_->t * tables_->n * tables_->n; }
  bool self_dual_normal() const { return D().normal && D().self_dual; }

  Felt embed(Felt x) const { return Felt{tables_->embed[x.value]}; }
  /// Inverse of embed on the subfield; throws InvalidArgument elsewhere.
  Felt restrict(Felt y) const;

  /// D-coordinates of an element of K, as elements of F.
  std::vector<Felt> coords_K(Felt y) const;
  Felt from_coords_K(std::span<const Felt> c) const;

  /// v : M_n(K) -> F^(t n^2).
  std::vector<Felt> coord(const Mat& a) const;
  Mat coord_inv(std::span<const Felt> v) const;

  /// The basis element alpha_k E_ij with index (i n + j) t + k.
  Mat basis_element(std::size_t index) const;

  Mat zero_matrix() const { return Mat(K(), n(), n()); }
  Mat random_matrix(std::mt19937_64& rng) const;
  Mat random_regular(std::mt19937_64& rng) const;

 private:
  struct Tables {
    Field F;
    Field K;
    unsigned t;
    std::size_t n;
    SubfieldBasis D;
    std::vector<std::uint32_t> embed;     // F -> K
    std::vector<std::int64_t> restrict;  // K -> F or -1
  };
  explicit WordAmbient(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
  std::shared_ptr<const Tables> tables_;
};

/// sigma(a) = U tau^h(a) U^-1.
struct MatAut {
  Mat U;
  unsigned h = 0;
  Mat U_inv;
};

/// Validates U (SingularU) and h < t.
MatAut make_mat_aut(const WordAmbient& w, Mat U, unsigned h);
Mat apply_aut(const WordAmbient& w, const MatAut& sigma, const Mat& a);
Mat apply_aut_inverse(const WordAmbient& w, const MatAut& sigma, const Mat& a);
/// sigma^k for any integer k.
Mat apply_aut_power(const WordAmbient& w, const MatAut& sigma, std::int64_t k, const Mat& a);
/// tau^h on every entry.
Mat tau_power(const WordAmbient& w, const Mat& a, std::int64_t h);

/// sigma-hat = theta sigma^-1 theta (theta = transpose), as (tau^(t-h)(U^T), (t - h) mod t).
MatAut sigma_hat(const WordAmbient& w, const MatAut& sigma);

/// f = sum z^k coeffs[k].
struct OrePoly {
  std::vector<Mat> coeffs;
};

/// R = A[z; sigma] as a Hamming extension of F[z] of rank t n^2.
class OreRing {
 public:
  using Element = OrePoly;
  using Scalar = Poly;
  using Matrix = PolyMat;

  OreRing(WordAmbient ambient, MatAut sigma, std::size_t random_degree = 3);

  const WordAmbient& ambient() const { return ambient_; }
  const MatAut& sigma() const { return sigma_; }

  OrePoly constant(const Mat& a) const;
  OrePoly z_power(std::size_t k) const;
  OrePoly normalize(OrePoly f) const;
  OrePoly add(const OrePoly& f, const OrePoly& g) const;
  OrePoly sub(const OrePoly& f, const OrePoly& g) const;

  std::size_t rank() const { return ambient_.rank(); }
  OrePoly one() const;
  OrePoly zero() const { return OrePoly{}; }
  OrePoly multiply(const OrePoly& f, const OrePoly& g) const;
  std::vector<Poly> coords(const OrePoly& f) const;
  OrePoly from_coords(std::span<const Poly> w) const;
  bool equal(const OrePoly& f, const OrePoly& g) const;
  OrePoly random(std::mt19937_64& rng) const;
  std::string describe(const OrePoly& f) const;
  Poly scalar_zero() const { return Poly(ambient_.F()); }
  Poly scalar_one() const { return Poly::one(ambient_.F()); }
  PolyMat zero_matrix(std::size_t rows, std::size_t cols) const { return PolyMat(ambient_.F(), rows, cols); }

 private:
  WordAmbient ambient_;
  MatAut sigma_;
  std::size_t random_degree_;
};

/// The companion ring A[z; sigma-hat].
OreRing hat_ring(const OreRing& ring);

/// Theta(sum z^k a_k) = sum z^k (sigma^-k(a_k))^T, landing in hat_ring(ring).
OrePoly theta_conv(const OreRing& ring, const OrePoly& f);

/// Regular representation of gamma in D-coordinates: row i = coords(alpha_i gamma).
Mat little_m(const WordAmbient& w, Felt gamma);
/// Replaces every entry of a matrix over K by its t x t block little_m.
Mat m_expand(const WordAmbient& w, const Mat& m);

/// Matrix of an F-linear map of A in the basis alpha_k E_ij, rows = images.
template <class Map>
Mat linear_map_matrix(const WordAmbient& w, Map&& map) {
  const std::size_t m = w.rank();
  Mat out(w.F(), m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<Felt> row = w.coord(map(w.basis_element(i)));
    for (std::size_t j = 0; j < m; ++j) out(i, j) = row[j];
  }
  return out;
}

/// M_a = m(I kron a), the matrix of x -> x a.
Mat m_a(const WordAmbient& w, const Mat& a);
/// P_h: (k, (k + h) mod t) = 1.
Mat p_h(const Field& field, unsigned t, unsigned h);

struct RepMatrices {
  Mat m_sigma_u;  // m(U^T kron U^-1)
  Mat m_tau_h;    // I_(n^2) kron P_h
  Mat m_sigma;    // M_tau_h M_sigma_u
  /// Each closed form agrees with the matrix of its defining map.
  bool matches_definition;
};

/// Closed forms need a normal D for M_tau_h; otherwise matches_definition reports the gap.
RepMatrices rep_matrices(const WordAmbient& w, const MatAut& sigma);

/// M_R(f) = sum_k z^k M_sigma^k M_{f_k}.
PolyMat m_r_poly(const OreRing& ring, const OrePoly& f);

struct LiccDual {
  DualCode<PolyMat> codes;
  bool transposition;   // M_Rhat(Theta(x)) = M_R(x)^T for x = f, h
  bool direct_summand;  // C is a direct summand of F[z]^m
};

/// Throws BasisNotSelfDualNormal, BadCertificate (f h != 0).
LiccDual licc_dual(const OreRing& ring, const OrePoly& f, const OrePoly& h);
/// Idempotent e with certificate (e, 1 - e). Throws BadCertificate if e^2 != e.
LiccDual licc_dual_idem(const OreRing& ring, const Mat& e);

/// P E_00 P^-1 for a random regular P.
Mat random_conjugated_idempotent(const WordAmbient& w, std::mt19937_64& rng);

}  // namespace skewdual
