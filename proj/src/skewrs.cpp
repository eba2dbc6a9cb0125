#include "skewdual/skewrs.hpp"

#include "skewdual/basis.hpp"
#include "skewdual/kernels.hpp"

namespace skewdual {
namespace {

std::vector<SkewPoly> conjugate_factors(const Field& field, FieldAut sigma, Felt b, std::int64_t first,
                                        std::size_t count) {
  std::vector<SkewPoly> factors;
  for (std::size_t i = 0; i < count; ++i) {
    const Felt root = aut_apply(field, sigma, first + static_cast<std::int64_t>(i), b);
    factors.push_back(linear_factor(field, sigma, Convention::Left, root));
  }
  return factors;
}

SkewPoly x_n_minus_1(const Field& field, FieldAut sigma, std::size_t n) {
  return binomial(field, sigma, Convention::Left, n, field.one());
}

void check_normal(const Field& field, FieldAut sigma, Felt alpha) {
  require(alpha.value != 0 && normal_basis_check(field, sigma, alpha), ErrorKind::NotNormal,
          std::to_string(alpha.value) + " does not generate a normal basis");
}

Felt beta_of(const Field& field, FieldAut sigma, Felt alpha) {
  return field.div(field.apply(sigma, alpha), alpha);
}

}  // namespace

ConstaRing SkewRSCode::ring() const { return ConstaRing::create(field, sigma, n, field.one()); }

LinearCode<Mat> SkewRSCode::code() const {
  const ConstaRing r = ring();
  return code_from_gen(r, r.reduce(g));
}

SkewPoly conjugate_lclm(const Field& field, FieldAut sigma, Felt b, std::int64_t first, std::size_t count) {
  if (count == 0) return SkewPoly(field, sigma, Convention::Left, {field.one()});
  return lclm(conjugate_factors(field, sigma, b, first, count));
}

SkewPoly conjugate_lcrm(const Field& field, FieldAut sigma, Felt b, std::int64_t first, std::size_t count) {
  if (count == 0) return SkewPoly(field, sigma, Convention::Left, {field.one()});
  return lcrm(conjugate_factors(field, sigma, b, first, count));
}

bool full_decomposition_check(const Field& field, FieldAut sigma, Felt alpha) {
  check_normal(field, sigma, alpha);
  const std::size_t n = aut_order(field, sigma);
  return conjugate_lclm(field, sigma, beta_of(field, sigma, alpha), 0, n) == x_n_minus_1(field, sigma, n);
}

Felt companion_gamma(const Field& field, FieldAut sigma, Felt beta) {
  const std::size_t n = aut_order(field, sigma);
  const SkewPoly tail = conjugate_lclm(field, sigma, beta, 1, n - 1);
  const SkewDivision qr = sp_divide(Side::Right, x_n_minus_1(field, sigma, n), tail);
  require(qr.rem.is_zero() && qr.quot.degree() == Degree(1), ErrorKind::NotNormal,
          "x^n - 1 is not (x - gamma) times the conjugate lclm");
  return field.neg(qr.quot.coeff(0));
}

SkewRSCode rs_from_beta(const Field& field, FieldAut sigma, Felt beta, std::size_t delta) {
  const FieldAut s{sigma.s % field.m()};
  const std::size_t n = aut_order(field, s);
  require(delta >= 2 && delta <= n, ErrorKind::BadDelta,
          "designed distance must lie in [2, " + std::to_string(n) + "]");
  require(beta.value != 0, ErrorKind::NotNormal, "beta must be nonzero");
  require(conjugate_lclm(field, s, beta, 0, n) == x_n_minus_1(field, s, n), ErrorKind::NotNormal,
          "conjugates of beta do not decompose x^n - 1");
  SkewPoly g = conjugate_lclm(field, s, beta, 0, delta - 1);
  const Felt gamma = companion_gamma(field, s, beta);
  return SkewRSCode{field, s, n, std::nullopt, beta, delta, std::move(g), n - delta + 1, gamma};
}

SkewRSCode rs_create(const Field& field, FieldAut sigma, Felt alpha, std::size_t delta) {
  const FieldAut s{sigma.s % field.m()};
  check_normal(field, s, alpha);
  SkewRSCode code = rs_from_beta(field, s, beta_of(field, s, alpha), delta);
  code.alpha = alpha;
  return code;
}

SkewRSCode rs_dual(const SkewRSCode& code) {
  const Field& L = code.field;
  const Felt beta_dual =
      L.inv(aut_apply(L, code.sigma, static_cast<std::int64_t>(code.delta), code.gamma));
  return rs_from_beta(L, code.sigma, beta_dual, code.n - code.delta + 2);
}

bool rightleft_check(const SkewRSCode& code, std::size_t k) {
  require(k < code.n, ErrorKind::InvalidArgument, "k must be below n");
  const SkewPoly left = conjugate_lcrm(code.field, code.sigma, code.gamma, 0, k + 1);
  const SkewPoly right =
      conjugate_lclm(code.field, code.sigma, code.beta, static_cast<std::int64_t>(k) + 1, code.n - 1 - k);
  return left * right == x_n_minus_1(code.field, code.sigma, code.n);
}

namespace {

void check_enumerable(const LinearCode<Mat>& code) {
  const std::size_t dim = code.dimension();
  require(dim >= 1, ErrorKind::ZeroCode, "minimum distance of the zero code");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= code.canonical().field().q();
    require(total <= (1u << 20), ErrorKind::CodeTooLarge, "more than 2^20 codewords");
  }
}

}  // namespace

std::size_t min_distance(const LinearCode<Mat>& code) {
  check_enumerable(code);
  return kernels::min_weight_parallel(code.canonical());
}

std::size_t min_distance_serial(const LinearCode<Mat>& code) {
  check_enumerable(code);
  return kernels::min_weight_serial(code.canonical());
}

EvalParams eval_params(const SkewRSCode& code) {
  const Field& L = code.field;
  const Felt mu = rs_dual(code).beta;
  const Felt nu = hilbert90(L, code.sigma, mu);
  EvalParams params{mu, nu, {}, {}, code.k};
  for (std::size_t j = 0; j < code.n; ++j) {
    params.points.push_back(aut_apply(L, code.sigma, static_cast<std::int64_t>(j), mu));
    params.multipliers.push_back(aut_apply(L, code.sigma, static_cast<std::int64_t>(j), nu));
  }
  return params;
}

Mat sge_matrix(const Field& field, FieldAut sigma, std::span<const Felt> points,
               std::span<const Felt> multipliers, std::size_t k) {
  require(points.size() == multipliers.size(), ErrorKind::DimensionMismatch,
          "points and multipliers differ in length");
  for (Felt v : multipliers) require(v.value != 0, ErrorKind::InvalidArgument, "zero multiplier");
  Mat m(field, k, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      m(i, j) = field.mul(multipliers[j], sp_norm(field, sigma, points[j], i));
    }
  }
  return m;
}

Mat sge_matrix(const SkewRSCode& code, const EvalParams& params) {
  return sge_matrix(code.field, code.sigma, params.points, params.multipliers, params.k);
}

}  // namespace skewdual
