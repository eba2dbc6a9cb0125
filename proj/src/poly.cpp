#include "skewdual/poly.hpp"

#include <sstream>

namespace skewdual {

Poly::Poly(Field field, std::vector<Felt> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::monomial(const Field& field, Felt c, std::size_t k) {
  std::vector<Felt> coeffs(k + 1, Felt{0});
  coeffs[k] = c;
  return Poly(field, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& other) const {
  std::vector<Felt> out(std::max(coeffs_.size(), other.coeffs_.size()), Felt{0});
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), other.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& other) const {
  std::vector<Felt> out(std::max(coeffs_.size(), other.coeffs_.size()), Felt{0});
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), other.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Felt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.neg(coeffs_[i]);
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& other) const {
  if (is_zero() || other.is_zero()) return Poly(field_);
  std::vector<Felt> out(coeffs_.size() + other.coeffs_.size() - 1, Felt{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].value == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Felt c) const {
  std::vector<Felt> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(c, coeffs_[i]);
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Felt Poly::eval(Felt x) const {
  Felt acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

std::string Poly::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].value;
  os << "]";
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require(!b.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  const std::size_t db = b.degree().value();
  const Felt lead_inv = f.inv(b.lead());
  std::vector<Felt> rem = a.coeffs();
  std::vector<Felt> quot(rem.size() - db, Felt{0});
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].value == 0) continue;
    const Felt c = f.mul(rem[k], lead_inv);
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = f.sub(rem[k - db + i], f.mul(c, b.coeff(i)));
    }
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1(f);
  Poly t0(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Felt c = f.inv(r0.lead());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

}  // namespace skewdual
