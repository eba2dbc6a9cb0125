#include "skewdual/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace skewdual {
namespace {

using Digits = std::vector<unsigned>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and a != 0 mod p
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return static_cast<unsigned>((t % static_cast<std::int64_t>(p) + p) % p);
}

// Remainder of a modulo b over GF(p); b nonzero.
Digits poly_mod(Digits a, const Digits& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const unsigned c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

Digits to_digits(std::uint64_t v, unsigned p, std::size_t len) {
  Digits d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<unsigned>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t from_digit_vec(const Digits& d, unsigned p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Product of two field elements by schoolbook multiplication and reduction;
// used only while building the log tables.
std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y, unsigned p, unsigned m,
                       const Digits& modulus) {
  const Digits a = to_digits(x, p, m), b = to_digits(y, p, m);
  Digits prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  Digits r = poly_mod(prod, modulus, p);
  r.resize(m, 0);
  return static_cast<std::uint32_t>(from_digit_vec(r, p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(unsigned p, std::span<const unsigned> digits) {
  Digits f(digits.begin(), digits.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  // Exhaustive search for a monic factor of degree 1 .. deg / 2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g = to_digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned m) {
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  for (std::uint64_t low = 0; low < pm; ++low) {
    Digits f = to_digits(low, p, m);
    f.push_back(1);
    if (is_irreducible_mod_p(p, f)) return f;
  }
  throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

Field Field::create(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
  require(is_prime(p), ErrorKind::CompositeCharacteristic,
          std::to_string(p) + " is not prime");
  require(m >= 1, ErrorKind::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    require(q <= kMaxFieldOrder, ErrorKind::FieldTooLarge,
            "q = " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  if (modulus) {
    const auto& mod = *modulus;
    require(mod.size() == m + 1, ErrorKind::InvalidArgument,
            "modulus must have m + 1 digits");
    require(std::all_of(mod.begin(), mod.end(), [p](unsigned c) { return c < p; }),
            ErrorKind::InvalidArgument, "modulus digits must be < p");
    require(mod.back() == 1, ErrorKind::InvalidArgument, "modulus must be monic");
    require(is_irreducible_mod_p(p, mod), ErrorKind::ReducibleModulus,
            "modulus is reducible over GF(" + std::to_string(p) + ")");
    t->modulus = mod;
  } else {
    t->modulus = default_modulus(p, m);
  }

  // Find the least primitive element and build exp/log tables from it.
  const std::uint32_t order = t->q - 1;
  t->exp.assign(std::max<std::uint32_t>(order, 1), 1);
  t->log.assign(t->q, 0);
  if (t->q == 2) {
    t->primitive = Felt{1};
  } else {
    for (std::uint32_t g = 2; g < t->q; ++g) {
      std::uint32_t x = 1;
      std::uint32_t k = 0;
      bool primitive = true;
      do {
        t->exp[k] = x;
        x = slow_mul(x, g, p, m, t->modulus);
        ++k;
        if (x == 1 && k < order) {
          primitive = false;
          break;
        }
      } while (k < order);
      if (primitive && x == 1) {
        t->primitive = Felt{g};
        break;
      }
    }
  }
  for (std::uint32_t k = 0; k < order; ++k) t->log[t->exp[k]] = k;

  t->p_pow_mod.resize(m);
  std::uint64_t pp = 1;
  for (unsigned s = 0; s < m; ++s) {
    t->p_pow_mod[s] = order == 0 ? 0 : static_cast<std::uint32_t>(pp % order);
    pp *= p;
  }

  if (p != 2 && t->q <= 256) {
    t->add_table.resize(static_cast<std::size_t>(t->q) * t->q);
    for (std::uint32_t x = 0; x < t->q; ++x) {
      const Digits a = to_digits(x, p, m);
      for (std::uint32_t y = 0; y < t->q; ++y) {
        const Digits b = to_digits(y, p, m);
        Digits c(m);
        for (unsigned i = 0; i < m; ++i) c[i] = (a[i] + b[i]) % p;
        t->add_table[static_cast<std::size_t>(x) * t->q + y] =
            static_cast<std::uint16_t>(from_digit_vec(c, p));
      }
    }
  }
  return Field(std::move(t));
}

Felt Field::element(std::uint64_t value) const {
  require(value < q(), ErrorKind::InvalidArgument,
          "element " + std::to_string(value) + " out of range for q = " + std::to_string(q()));
  return Felt{static_cast<std::uint32_t>(value)};
}

Felt Field::add(Felt x, Felt y) const {
  const auto& t = *impl_;
  if (t.p == 2) return Felt{x.value ^ y.value};
  if (!t.add_table.empty()) return Felt{t.add_table[static_cast<std::size_t>(x.value) * t.q + y.value]};
  std::uint32_t a = x.value, b = y.value, r = 0, place = 1;
  for (unsigned i = 0; i < t.m; ++i) {
    r += ((a % t.p + b % t.p) % t.p) * place;
    a /= t.p;
    b /= t.p;
    place *= t.p;
  }
  return Felt{r};
}

Felt Field::neg(Felt x) const {
  const auto& t = *impl_;
  if (t.p == 2) return x;
  std::uint32_t a = x.value, r = 0, place = 1;
  for (unsigned i = 0; i < t.m; ++i) {
    r += ((t.p - a % t.p) % t.p) * place;
    a /= t.p;
    place *= t.p;
  }
  return Felt{r};
}

Felt Field::sub(Felt x, Felt y) const { return add(x, neg(y)); }

Felt Field::inv(Felt x) const {
  require(x.value != 0, ErrorKind::DivisionByZero, "inverse of zero");
  const auto& t = *impl_;
  const std::uint32_t l = t.log[x.value];
  return Felt{t.exp[l == 0 ? 0 : t.q - 1 - l]};
}

Felt Field::pow(Felt x, std::int64_t e) const {
  if (x.value == 0) {
    require(e >= 0, ErrorKind::DivisionByZero, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  const auto& t = *impl_;
  const std::int64_t order = t.q - 1;
  std::int64_t k = (static_cast<std::int64_t>(t.log[x.value]) * (((e % order) + order) % order)) % order;
  return Felt{t.exp[static_cast<std::size_t>(k)]};
}

Felt Field::frobenius(unsigned s, Felt x) const {
  if (x.value == 0) return x;
  const auto& t = *impl_;
  const std::uint64_t k =
      static_cast<std::uint64_t>(t.log[x.value]) * t.p_pow_mod[s % t.m] % (t.q - 1);
  return Felt{t.exp[k]};
}

Felt Field::trace(unsigned d, Felt x) const {
  require(d >= 1 && m() % d == 0, ErrorKind::NonDivisorDegree,
          std::to_string(d) + " does not divide " + std::to_string(m()));
  Felt acc = zero();
  for (unsigned i = 0; i < m() / d; ++i) acc = add(acc, frobenius(d * i, x));
  return acc;
}

Felt Field::norm(unsigned d, Felt x) const {
  require(d >= 1 && m() % d == 0, ErrorKind::NonDivisorDegree,
          std::to_string(d) + " does not divide " + std::to_string(m()));
  Felt acc = one();
  for (unsigned i = 0; i < m() / d; ++i) acc = mul(acc, frobenius(d * i, x));
  return acc;
}

bool Field::in_subfield(unsigned d, Felt x) const { return frobenius(d, x) == x; }

std::vector<unsigned> Field::digits(Felt x) const { return to_digits(x.value, p(), m()); }

Felt Field::from_digits(std::span<const unsigned> digits) const {
  require(digits.size() <= m(), ErrorKind::InvalidArgument, "too many digits");
  Digits d(digits.begin(), digits.end());
  for (unsigned c : d) require(c < p(), ErrorKind::InvalidArgument, "digit out of range");
  return Felt{static_cast<std::uint32_t>(from_digit_vec(d, p()))};
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p() << "^" << m() << ") mod ";
  for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
  return os.str();
}

unsigned aut_order(const Field& field, FieldAut sigma) {
  return field.m() / fixed_degree(field, sigma);
}

unsigned fixed_degree(const Field& field, FieldAut sigma) {
  return std::gcd(field.m(), sigma.s % field.m());
}

FieldAut aut_inverse(const Field& field, FieldAut sigma) {
  const unsigned m = field.m();
  return FieldAut{(m - sigma.s % m) % m};
}

FieldAut aut_power(const Field& field, FieldAut sigma, std::int64_t k) {
  const std::int64_t m = field.m();
  const std::int64_t s = (static_cast<std::int64_t>(sigma.s % field.m()) * (k % m)) % m;
  return FieldAut{static_cast<unsigned>((s + m) % m)};
}

bool aut_is_identity(const Field& field, FieldAut sigma) { return sigma.s % field.m() == 0; }

Felt aut_apply(const Field& field, FieldAut sigma, std::int64_t k, Felt x) {
  return field.apply(aut_power(field, sigma, k), x);
}

Felt aut_norm(const Field& field, FieldAut sigma, Felt x) {
  Felt acc = field.one();
  Felt conj = x;
  for (unsigned i = 0; i < aut_order(field, sigma); ++i) {
    acc = field.mul(acc, conj);
    conj = field.apply(sigma, conj);
  }
  return acc;
}

Felt hilbert90(const Field& field, FieldAut sigma, Felt mu) {
  require(mu.value != 0 && aut_norm(field, sigma, mu) == field.one(), ErrorKind::NormNotOne,
          "element " + std::to_string(mu.value) + " has norm != 1");
  for (std::uint32_t v = 1; v < field.q(); ++v) {
    const Felt nu{v};
    if (field.apply(sigma, nu) == field.mul(mu, nu)) return nu;
  }
  throw Error(ErrorKind::NormNotOne, "no solution found");
}

Felt hilbert90(const Field& field, unsigned d, Felt mu) {
  require(d >= 1 && field.m() % d == 0, ErrorKind::NonDivisorDegree,
          std::to_string(d) + " does not divide " + std::to_string(field.m()));
  return hilbert90(field, FieldAut{d}, mu);
}

}  // namespace skewdual
