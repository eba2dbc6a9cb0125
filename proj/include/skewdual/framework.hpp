#pragma once

// Ring-agnostic code machinery. A Hamming extension is a ring R that is a free
// module of rank m over a commutative base C (a field GF(q) or GF(q)[z]) with
// a coordinate isomorphism v : R -> C^m. Left ideals Rf become codes v(Rf),
// and the matrix M_R(f) with rows v(b_i f) turns right multiplication by f into
// a matrix product: v(g f) = v(g) M_R(f).

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "skewdual/linalg.hpp"
#include "skewdual/polymat.hpp"

namespace skewdual {

template <class E>
concept HammingExtension = requires(const E& e, const typename E::Element& f,
                                    std::span<const typename E::Scalar> w, std::mt19937_64& rng) {
  typename E::Element;
  typename E::Scalar;
  typename E::Matrix;
  { e.rank() } -> std::convertible_to<std::size_t>;
  { e.one() } -> std::same_as<typename E::Element>;
  { e.zero() } -> std::same_as<typename E::Element>;
  { e.multiply(f, f) } -> std::same_as<typename E::Element>;
  { e.coords(f) } -> std::same_as<std::vector<typename E::Scalar>>;
  { e.from_coords(w) } -> std::same_as<typename E::Element>;
  { e.equal(f, f) } -> std::same_as<bool>;
  { e.random(rng) } -> std::same_as<typename E::Element>;
  { e.describe(f) } -> std::same_as<std::string>;
  { e.scalar_zero() } -> std::same_as<typename E::Scalar>;
  { e.scalar_one() } -> std::same_as<typename E::Scalar>;
  { e.zero_matrix(std::size_t{}, std::size_t{}) } -> std::same_as<typename E::Matrix>;
};

// Base-ring dispatch. Mat is over a field, PolyMat over GF(q)[z].

/// Basis of {w : w * m = 0}.
inline Mat left_kernel(const Mat& m) { return nullspace(transpose(m)); }
inline PolyMat left_kernel(const PolyMat& m) { return poly_left_kernel(m); }
/// Canonical generator matrix of the row space / row module.
inline Mat canonical_form(const Mat& m) { return row_space(m); }
inline PolyMat canonical_form(const PolyMat& m) { return hermite_basis(m); }

template <class Matrix>
class LinearCode {
 public:
  explicit LinearCode(Matrix generator)
      : generator_(std::move(generator)), canonical_(canonical_form(generator_)) {}

  const Matrix& generator() const { return generator_; }
  const Matrix& canonical() const { return canonical_; }
  std::size_t length() const { return generator_.cols(); }
  /// Dimension over a field, rank of the free module over GF(q)[z].
  std::size_t dimension() const { return canonical_.rows(); }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.length() == b.length() && a.canonical_ == b.canonical_;
  }

 private:
  Matrix generator_;
  Matrix canonical_;
};

/// C-perp = {w : w * G^T = 0}.
template <class Matrix>
LinearCode<Matrix> kernel_dual(const LinearCode<Matrix>& code) {
  return LinearCode<Matrix>(left_kernel(transpose(code.generator())));
}

template <HammingExtension E>
std::vector<typename E::Scalar> unit_vector(const E& ext, std::size_t i) {
  std::vector<typename E::Scalar> w(ext.rank(), ext.scalar_zero());
  w[i] = ext.scalar_one();
  return w;
}

/// M_R(f): row i is v(b_i f) with b_i = v^-1(e_i).
template <HammingExtension E>
typename E::Matrix mrep(const E& ext, const typename E::Element& f) {
  const std::size_t m = ext.rank();
  typename E::Matrix out = ext.zero_matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto e = unit_vector(ext, i);
    const auto row = ext.coords(ext.multiply(ext.from_coords(e), f));
    for (std::size_t j = 0; j < m; ++j) out(i, j) = row[j];
  }
  return out;
}

struct CheckFailure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;
  bool passed() const { return failures.empty(); }
  void record(std::string input, std::string lhs, std::string rhs) {
    if (failures.size() < kMaxRecorded) failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
    else ++dropped;
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) record(f.input, f.lhs, f.rhs);
    dropped += other.dropped;
  }
  std::size_t dropped = 0;
  static constexpr std::size_t kMaxRecorded = 8;
};

/// Verifies M_Rhat(theta(f)) = M_R(f)^T and theta(f g) = theta(g) theta(f) on
/// `samples` random elements drawn from `rng`.
template <HammingExtension E, HammingExtension EHat, class Theta>
CheckReport check_transposition(const E& ext, const EHat& hat, Theta&& theta, std::size_t samples,
                                std::mt19937_64& rng) {
  CheckReport report;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto f = ext.random(rng);
    const auto g = ext.random(rng);
    const auto lhs = mrep(hat, theta(f));
    const auto rhs = transpose(mrep(ext, f));
    ++report.checked;
    if (!(lhs == rhs)) report.record(ext.describe(f), to_string(lhs), to_string(rhs));
    const auto tfg = theta(ext.multiply(f, g));
    const auto tgtf = hat.multiply(theta(g), theta(f));
    ++report.checked;
    if (!hat.equal(tfg, tgtf)) {
      report.record(ext.describe(f) + " * " + ext.describe(g), hat.describe(tfg), hat.describe(tgtf));
    }
  }
  return report;
}

template <class Matrix>
struct DualCode {
  LinearCode<Matrix> code;
  /// Rows of M_R(h)^T.
  LinearCode<Matrix> dual;
  /// Rows of M_Rhat(theta(h)); equal to `dual` when theta is a transposition.
  LinearCode<Matrix> dual_via_theta;
  /// Left kernel of M_R(f)^T, the definition of the dual.
  LinearCode<Matrix> dual_by_kernel;

  bool kernel_match() const { return dual == dual_by_kernel; }
  bool theta_match() const { return dual == dual_via_theta; }
};

/// Dual of v(Rf) from an annihilator certificate h with hR = r.ann(Rf).
/// Throws AnnihilatorCertificateInvalid when f h != 0.
template <HammingExtension E, HammingExtension EHat, class Theta>
DualCode<typename E::Matrix> dual_code(const E& ext, const EHat& hat, const typename E::Element& f,
                                       const typename E::Element& h, Theta&& theta) {
  require(ext.equal(ext.multiply(f, h), ext.zero()), ErrorKind::AnnihilatorCertificateInvalid,
          "f * h is not zero");
  using Matrix = typename E::Matrix;
  LinearCode<Matrix> code(mrep(ext, f));
  LinearCode<Matrix> dual(transpose(mrep(ext, h)));
  LinearCode<Matrix> via_theta(mrep(hat, theta(h)));
  LinearCode<Matrix> by_kernel = kernel_dual(code);
  return {std::move(code), std::move(dual), std::move(via_theta), std::move(by_kernel)};
}

/// C-perp-perp = C. Over GF(q)[z] this needs C to be a direct summand.
inline bool biduality_check(const LinearCode<Mat>& code) {
  return kernel_dual(kernel_dual(code)) == code;
}

inline bool biduality_check(const LinearCode<PolyMat>& code) {
  require(is_direct_summand(code.generator()), ErrorKind::NotDirectSummand,
          "code is not a direct summand; biduality is not guaranteed");
  return kernel_dual(kernel_dual(code)) == code;
}

template <class Element, class Matrix>
struct Annihilator {
  std::vector<Element> generators;
  LinearCode<Matrix> code;  // v of the annihilator
};

/// l.ann(hR) = {g : g h = 0}, from the left kernel of M_R(h).
template <HammingExtension E>
Annihilator<typename E::Element, typename E::Matrix> left_annihilator(const E& ext,
                                                                      const typename E::Element& h) {
  using Matrix = typename E::Matrix;
  const Matrix k = left_kernel(mrep(ext, h));
  std::vector<typename E::Element> gens;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    std::vector<typename E::Scalar> row(k.cols(), ext.scalar_zero());
    for (std::size_t j = 0; j < k.cols(); ++j) row[j] = k(i, j);
    gens.push_back(ext.from_coords(row));
  }
  return {std::move(gens), LinearCode<Matrix>(k)};
}

}  // namespace skewdual
