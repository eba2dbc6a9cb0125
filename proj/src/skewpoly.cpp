#include "skewdual/skewpoly.hpp"

#include <sstream>

namespace skewdual {
namespace {

void check_ring(const SkewPoly& f, const SkewPoly& g) {
  require(f.same_ring(g), ErrorKind::MixedRings, "skew polynomials from different rings");
}

Felt sigma_pow(const SkewPoly& f, std::int64_t k, Felt x) {
  return aut_apply(f.field(), f.sigma(), k, x);
}

// Coefficient of (monomial a at degree i) * (monomial b at degree j).
Felt monomial_product(const SkewPoly& ring, Felt a, std::size_t i, Felt b, std::size_t j) {
  const Field& f = ring.field();
  if (ring.convention() == Convention::Left) {
    return f.mul(a, sigma_pow(ring, static_cast<std::int64_t>(i), b));
  }
  return f.mul(sigma_pow(ring, static_cast<std::int64_t>(j), a), b);
}

// a with monomial_product(a, i, b, j) = target; b != 0.
Felt solve_left_factor(const SkewPoly& ring, Felt target, std::size_t i, Felt b, std::size_t j) {
  const Field& f = ring.field();
  if (ring.convention() == Convention::Left) {
    return f.div(target, sigma_pow(ring, static_cast<std::int64_t>(i), b));
  }
  return sigma_pow(ring, -static_cast<std::int64_t>(j), f.div(target, b));
}

// b with monomial_product(a, i, b, j) = target; a != 0.
Felt solve_right_factor(const SkewPoly& ring, Felt a, std::size_t i, std::size_t j, Felt target) {
  const Field& f = ring.field();
  if (ring.convention() == Convention::Left) {
    return sigma_pow(ring, -static_cast<std::int64_t>(i), f.div(target, a));
  }
  return f.div(target, sigma_pow(ring, static_cast<std::int64_t>(j), a));
}

}  // namespace

SkewPoly::SkewPoly(Field field, FieldAut sigma, Convention convention, std::vector<Felt> coeffs)
    : field_(std::move(field)),
      sigma_{sigma.s % field_.m()},
      convention_(convention),
      coeffs_(std::move(coeffs)) {
  for (Felt c : coeffs_) require(field_.contains(c), ErrorKind::InvalidArgument, "coefficient out of range");
  trim();
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

bool SkewPoly::same_ring(const SkewPoly& other) const {
  return convention_ == other.convention_ && sigma_ == other.sigma_ && field_ == other.field_;
}

SkewPoly SkewPoly::monomial_like(Felt c, std::size_t k) const {
  std::vector<Felt> coeffs(k + 1, Felt{0});
  coeffs[k] = c;
  return SkewPoly(field_, sigma_, convention_, std::move(coeffs));
}

SkewPoly SkewPoly::operator+(const SkewPoly& other) const {
  check_ring(*this, other);
  std::vector<Felt> out(std::max(coeffs_.size(), other.coeffs_.size()), Felt{0});
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), other.coeff(i));
  return SkewPoly(field_, sigma_, convention_, std::move(out));
}

SkewPoly SkewPoly::operator-(const SkewPoly& other) const {
  check_ring(*this, other);
  std::vector<Felt> out(std::max(coeffs_.size(), other.coeffs_.size()), Felt{0});
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), other.coeff(i));
  return SkewPoly(field_, sigma_, convention_, std::move(out));
}

SkewPoly SkewPoly::operator-() const {
  std::vector<Felt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.neg(coeffs_[i]);
  return SkewPoly(field_, sigma_, convention_, std::move(out));
}

SkewPoly SkewPoly::operator*(const SkewPoly& other) const {
  check_ring(*this, other);
  if (is_zero() || other.is_zero()) return zero_like();
  std::vector<Felt> out(coeffs_.size() + other.coeffs_.size() - 1, Felt{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].value == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (other.coeffs_[j].value == 0) continue;
      out[i + j] = field_.add(out[i + j], monomial_product(*this, coeffs_[i], i, other.coeffs_[j], j));
    }
  }
  return SkewPoly(field_, sigma_, convention_, std::move(out));
}

SkewPoly SkewPoly::apply_sigma(std::int64_t k) const {
  std::vector<Felt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = aut_apply(field_, sigma_, k, coeffs_[i]);
  return SkewPoly(field_, sigma_, convention_, std::move(out));
}

std::string SkewPoly::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].value;
  return os.str();
}

SkewPoly linear_factor(const Field& field, FieldAut sigma, Convention convention, Felt a) {
  return SkewPoly(field, sigma, convention, {field.neg(a), field.one()});
}

SkewPoly binomial(const Field& field, FieldAut sigma, Convention convention, std::size_t n, Felt u) {
  std::vector<Felt> coeffs(n + 1, Felt{0});
  coeffs[0] = field.neg(u);
  coeffs[n] = field.add(coeffs[n], field.one());
  return SkewPoly(field, sigma, convention, std::move(coeffs));
}

SkewDivision sp_divide(Side side, const SkewPoly& f, const SkewPoly& g) {
  check_ring(f, g);
  require(!g.is_zero(), ErrorKind::DivisionByZero, "skew division by zero");
  const std::size_t dg = g.degree().value();
  SkewPoly quot = f.zero_like();
  SkewPoly rem = f;
  while (!rem.is_zero() && rem.degree().value() >= dg) {
    const std::size_t dr = rem.degree().value();
    const std::size_t k = dr - dg;
    SkewPoly term = f.zero_like();
    if (side == Side::Right) {
      term = f.monomial_like(solve_left_factor(f, rem.lead(), k, g.lead(), dg), k);
      rem = rem - term * g;
    } else {
      term = f.monomial_like(solve_right_factor(f, g.lead(), dg, k, rem.lead()), k);
      rem = rem - g * term;
    }
    quot = quot + term;
  }
  return {std::move(quot), std::move(rem)};
}

SkewPoly monic_left(const SkewPoly& f) {
  if (f.is_zero()) return f;
  const std::size_t d = f.degree().value();
  return f.constant_like(solve_left_factor(f, f.field().one(), 0, f.lead(), d)) * f;
}

SkewPoly monic_right(const SkewPoly& f) {
  if (f.is_zero()) return f;
  const std::size_t d = f.degree().value();
  return f * f.constant_like(solve_right_factor(f, f.lead(), d, 0, f.field().one()));
}

SkewPoly sp_gcd_lcm(GcdKind kind, const SkewPoly& f, const SkewPoly& g) {
  check_ring(f, g);
  const bool is_lcm = kind == GcdKind::Lclm || kind == GcdKind::Lcrm;
  if (is_lcm) {
    require(!f.is_zero() && !g.is_zero(), ErrorKind::ZeroInput, "lcm of a zero polynomial");
  } else {
    require(!f.is_zero() || !g.is_zero(), ErrorKind::ZeroInput, "gcd of two zero polynomials");
  }
  // Right-side Euclid (remainders r = s f + t g) serves gcrd / lclm; the
  // left-side mirror (r = f s + g t) serves gcld / lcrm.
  const Side side = (kind == GcdKind::Gcrd || kind == GcdKind::Lclm) ? Side::Right : Side::Left;
  SkewPoly r0 = f, r1 = g;
  SkewPoly s0 = f.constant_like(f.field().one()), s1 = f.zero_like();
  while (!r1.is_zero()) {
    SkewDivision qr = sp_divide(side, r0, r1);
    SkewPoly s_next = side == Side::Right ? s0 - qr.quot * s1 : s0 - s1 * qr.quot;
    r0 = std::exchange(r1, std::move(qr.rem));
    s0 = std::exchange(s1, std::move(s_next));
  }
  switch (kind) {
    case GcdKind::Gcrd: return monic_left(r0);
    case GcdKind::Gcld: return monic_right(r0);
    case GcdKind::Lclm: return monic_left(s1 * f);
    case GcdKind::Lcrm: return monic_right(f * s1);
  }
  return r0;
}

SkewPoly lclm(std::span<const SkewPoly> factors) {
  require(!factors.empty(), ErrorKind::ZeroInput, "lclm of an empty list");
  SkewPoly acc = monic_left(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) acc = lclm(acc, factors[i]);
  return acc;
}

SkewPoly lcrm(std::span<const SkewPoly> factors) {
  require(!factors.empty(), ErrorKind::ZeroInput, "lcrm of an empty list");
  SkewPoly acc = monic_right(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) acc = lcrm(acc, factors[i]);
  return acc;
}

Felt sp_norm(const Field& field, FieldAut sigma, Felt a, std::size_t i) {
  Felt acc = field.one();
  Felt conj = a;
  for (std::size_t k = 0; k < i; ++k) {
    acc = field.mul(acc, conj);
    conj = field.apply(sigma, conj);
  }
  return acc;
}

Felt sp_right_eval(const SkewPoly& f, Felt a) {
  require(f.convention() == Convention::Left, ErrorKind::WrongConvention,
          "right evaluation is defined for the left convention");
  const SkewDivision qr =
      sp_divide(Side::Right, f, linear_factor(f.field(), f.sigma(), f.convention(), a));
  return qr.rem.coeff(0);
}

Felt sp_right_eval_norms(const SkewPoly& f, Felt a) {
  require(f.convention() == Convention::Left, ErrorKind::WrongConvention,
          "right evaluation is defined for the left convention");
  const Field& field = f.field();
  Felt acc{0};
  Felt norm = field.one();
  Felt conj = a;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    acc = field.add(acc, field.mul(f.coeffs()[i], norm));
    norm = field.mul(norm, conj);
    conj = field.apply(f.sigma(), conj);
  }
  return acc;
}

SkewPoly convert_convention(const SkewPoly& f) {
  std::vector<Felt> out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = aut_apply(f.field(), f.sigma(), -static_cast<std::int64_t>(i), f.coeffs()[i]);
  }
  const Convention other = f.convention() == Convention::Left ? Convention::Right : Convention::Left;
  return SkewPoly(f.field(), aut_inverse(f.field(), f.sigma()), other, std::move(out));
}

Poly to_commutative(const SkewPoly& f) {
  require(aut_is_identity(f.field(), f.sigma()), ErrorKind::InvalidArgument,
          "commutative view needs the identity automorphism");
  return Poly(f.field(), f.coeffs());
}

}  // namespace skewdual
