#include "skewdual/constacyclic.hpp"

#include <sstream>

namespace skewdual {

ConstaRing ConstaRing::create(const Field& field, FieldAut sigma, std::size_t n, Felt u) {
  require(n >= 1, ErrorKind::InvalidArgument, "length must be positive");
  require(field.contains(u), ErrorKind::InvalidArgument, "u out of range");
  const FieldAut s{sigma.s % field.m()};
  require(n % aut_order(field, s) == 0, ErrorKind::OrderMismatch,
          "sigma^" + std::to_string(n) + " is not the identity");
  require(u.value != 0 && field.apply(s, u) == u, ErrorKind::NotFixedUnit,
          "u = " + std::to_string(u.value) + " is not a sigma-fixed unit");
  return ConstaRing(field, s, n, u);
}

ConstaRing ConstaRing::hat() const { return ConstaRing(field_, sigma_, n_, field_.inv(u_)); }

bool ConstaRing::same_ring(const ConstaRing& other) const {
  return n_ == other.n_ && u_ == other.u_ && sigma_ == other.sigma_ && field_ == other.field_;
}

void ConstaRing::check_operands(const ConstaElt& f, const ConstaElt& g) const {
  require(f.coeffs.size() == n_ && g.coeffs.size() == n_, ErrorKind::MixedRings,
          "element does not belong to this ring");
}

ConstaElt ConstaRing::element(std::vector<Felt> coeffs) const {
  for (Felt c : coeffs) require(field_.contains(c), ErrorKind::InvalidArgument, "coefficient out of range");
  // c x^(n + j) = c x^j u since u is sigma-fixed.
  for (std::size_t d = coeffs.size(); d-- > n_;) {
    const Felt c = coeffs[d];
    if (c.value != 0) coeffs[d - n_] = field_.add(coeffs[d - n_], field_.mul(c, u_));
  }
  coeffs.resize(n_, Felt{0});
  return ConstaElt{std::move(coeffs)};
}

ConstaElt ConstaRing::reduce(const SkewPoly& f) const {
  require(f.convention() == Convention::Left, ErrorKind::WrongConvention,
          "constacyclic rings use the left convention");
  require(f.field() == field_ && f.sigma() == sigma_, ErrorKind::MixedRings,
          "polynomial from a different skew ring");
  return element(f.coeffs());
}

SkewPoly ConstaRing::lift(const ConstaElt& f) const {
  return SkewPoly(field_, sigma_, Convention::Left, f.coeffs);
}

SkewPoly ConstaRing::modulus() const { return binomial(field_, sigma_, Convention::Left, n_, u_); }

ConstaElt ConstaRing::one() const {
  ConstaElt e = zero();
  e.coeffs[0] = field_.one();
  return e;
}

ConstaElt ConstaRing::multiply(const ConstaElt& f, const ConstaElt& g) const {
  check_operands(f, g);
  return reduce(lift(f) * lift(g));
}

ConstaElt ConstaRing::add(const ConstaElt& f, const ConstaElt& g) const {
  check_operands(f, g);
  ConstaElt out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = field_.add(f.coeffs[i], g.coeffs[i]);
  return out;
}

ConstaElt ConstaRing::sub(const ConstaElt& f, const ConstaElt& g) const {
  check_operands(f, g);
  ConstaElt out = zero();
  for (std::size_t i = 0; i < n_; ++i) out.coeffs[i] = field_.sub(f.coeffs[i], g.coeffs[i]);
  return out;
}

ConstaElt ConstaRing::from_coords(std::span<const Felt> w) const {
  require(w.size() == n_, ErrorKind::DimensionMismatch, "coordinate vector length mismatch");
  return ConstaElt{std::vector<Felt>(w.begin(), w.end())};
}

ConstaElt ConstaRing::random(std::mt19937_64& rng) const {
  ConstaElt out = zero();
  for (Felt& c : out.coeffs) c = Felt{static_cast<std::uint32_t>(rng() % field_.q())};
  return out;
}

std::string ConstaRing::describe(const ConstaElt& f) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) os << (i ? "," : "") << f.coeffs[i].value;
  return os.str();
}

Mat mrep_consta(const ConstaRing& ring, const ConstaElt& f) {
  const Field& L = ring.field();
  const std::size_t n = ring.n();
  Mat m(L, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto si = static_cast<std::int64_t>(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        m(i, j) = aut_apply(L, ring.sigma(), si, f.coeffs[j - i]);
      } else {
        m(i, j) = L.mul(ring.u(), aut_apply(L, ring.sigma(), si, f.coeffs[n + j - i]));
      }
    }
  }
  return m;
}

ConstaElt theta(const ConstaRing& ring, const ConstaElt& f) {
  const Field& L = ring.field();
  const std::size_t n = ring.n();
  ConstaElt out = ring.zero();
  out.coeffs[0] = f.coeffs[0];
  for (std::size_t j = 1; j < n; ++j) {
    out.coeffs[j] = L.mul(ring.u(), aut_apply(L, ring.sigma(), static_cast<std::int64_t>(j), f.coeffs[n - j]));
  }
  return out;
}

ConstaElt apply_sigma(const ConstaRing& ring, const ConstaElt& f, std::int64_t k) {
  ConstaElt out = f;
  for (Felt& c : out.coeffs) c = aut_apply(ring.field(), ring.sigma(), k, c);
  return out;
}

LinearCode<Mat> code_from_gen(const ConstaRing& ring, const ConstaElt& f) {
  return LinearCode<Mat>(mrep_consta(ring, f));
}

ConstaDual consta_dual(const ConstaRing& ring, const SkewPoly& f) {
  require(f.is_monic(), ErrorKind::NotMonic, "generator must be monic");
  require(f.degree().value() <= ring.n(), ErrorKind::NotALeftDivisor, "generator degree exceeds n");
  SkewDivision qr = sp_divide(Side::Left, ring.modulus(), f);
  require(qr.rem.is_zero(), ErrorKind::NotALeftDivisor, "f does not left-divide x^n - u");
  const ConstaRing hat = ring.hat();
  const ConstaElt fr = ring.reduce(f);
  const ConstaElt hr = ring.reduce(qr.quot);
  DualCode<Mat> codes =
      dual_code(ring, hat, fr, hr, [&ring](const ConstaElt& a) { return theta(ring, a); });
  const bool dims = codes.code.dimension() + codes.dual.dimension() == ring.n();
  return {std::move(qr.quot), std::move(codes), dims};
}

std::vector<SkewPoly> monic_left_divisors(const ConstaRing& ring) {
  const Field& L = ring.field();
  const SkewPoly modulus = ring.modulus();
  std::vector<SkewPoly> out;
  for (std::size_t deg = 0; deg <= ring.n(); ++deg) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < deg; ++i) total *= L.q();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Felt> coeffs(deg + 1);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < deg; ++i, rest /= L.q()) {
        coeffs[i] = Felt{static_cast<std::uint32_t>(rest % L.q())};
      }
      coeffs[deg] = L.one();
      SkewPoly f(L, ring.sigma(), Convention::Left, std::move(coeffs));
      if (sp_divide(Side::Left, modulus, f).rem.is_zero()) out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<Felt> admissible_units(const Field& field, FieldAut sigma) {
  std::vector<Felt> out;
  for (std::uint32_t v = 1; v < field.q(); ++v) {
    if (field.apply(sigma, Felt{v}) == Felt{v}) out.push_back(Felt{v});
  }
  return out;
}

}  // namespace skewdual
