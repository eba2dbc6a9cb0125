#pragma once

// Skew Reed-Solomon codes in L[x; sigma] / <x^n - 1>, n = order of sigma.
//
// A code is fixed by beta and a designed distance delta: its generator is
// g = lclm(x - beta, x - sigma(beta), ..., x - sigma^(delta-2)(beta)). For the
// usual construction beta = sigma(alpha) / alpha with alpha generating a normal
// basis over the fixed field.

#include <cstddef>
#include <optional>
#include <vector>

#include "skewdual/constacyclic.hpp"
#include "skewdual/skewpoly.hpp"

namespace skewdual {

struct SkewRSCode {
  Field field;
  FieldAut sigma;
  std::size_t n;
  std::optional<Felt> alpha;
  Felt beta;
  std::size_t delta;
  SkewPoly g;
  std::size_t k;  // n - delta + 1
  Felt gamma;     // x^n - 1 = (x - gamma) lclm(x - sigma^i(beta), 1 <= i < n)

  ConstaRing ring() const;
  LinearCode<Mat> code() const;
};

/// lclm(x - sigma^first(b), ..., x - sigma^(first + count - 1)(b)); 1 when count = 0.
SkewPoly conjugate_lclm(const Field& field, FieldAut sigma, Felt b, std::int64_t first, std::size_t count);
/// lcrm of the same factors.
SkewPoly conjugate_lcrm(const Field& field, FieldAut sigma, Felt b, std::int64_t first, std::size_t count);

/// Whether x^n - 1 = lclm(x - sigma^i(beta), i < n) for beta = sigma(alpha) / alpha.
/// Throws NotNormal if alpha does not generate a normal basis.
bool full_decomposition_check(const Field& field, FieldAut sigma, Felt alpha);

/// Throws NotNormal, BadDelta.
SkewRSCode rs_create(const Field& field, FieldAut sigma, Felt alpha, std::size_t delta);
/// Code from beta directly; beta must satisfy the full decomposition (NotNormal otherwise).
SkewRSCode rs_from_beta(const Field& field, FieldAut sigma, Felt beta, std::size_t delta);

Felt companion_gamma(const Field& field, FieldAut sigma, Felt beta);

/// The dual code: generator lclm(x - sigma^delta(gamma)^-1, ..., x - sigma^n(gamma)^-1),
/// designed distance n - delta + 2.
SkewRSCode rs_dual(const SkewRSCode& code);

/// lcrm(x - gamma, ..., x - sigma^k(gamma)) * lclm(x - sigma^(k+1)(beta), ..., x - sigma^(n-1)(beta)) = x^n - 1.
bool rightleft_check(const SkewRSCode& code, std::size_t k);

/// Exhaustive minimum distance. Throws ZeroCode, CodeTooLarge (q^dim > 2^20).
std::size_t min_distance(const LinearCode<Mat>& code);
/// Serial reference of the same enumeration.
std::size_t min_distance_serial(const LinearCode<Mat>& code);

struct EvalParams {
  Felt mu;
  Felt nu;
  std::vector<Felt> points;       // sigma^j(mu)
  std::vector<Felt> multipliers;  // sigma^j(nu)
  std::size_t k;
};

/// mu is the root datum of the dual generator, nu = hilbert90(mu).
EvalParams eval_params(const SkewRSCode& code);

/// k x n matrix with (i, j) = multipliers[j] N_i(points[j]).
Mat sge_matrix(const Field& field, FieldAut sigma, std::span<const Felt> points,
               std::span<const Felt> multipliers, std::size_t k);
Mat sge_matrix(const SkewRSCode& code, const EvalParams& params);

}  // namespace skewdual
