#include "skewdual/convolutional.hpp"

#include <algorithm>
#include <sstream>

namespace skewdual {
namespace {

Felt eval_prime_poly(const Field& K, std::span<const unsigned> digits, Felt x) {
  Felt acc{0};
  for (std::size_t i = digits.size(); i-- > 0;) acc = K.add(K.mul(acc, x), Felt{digits[i]});
  return acc;
}

Felt random_element(const Field& f, std::mt19937_64& rng) {
  return Felt{static_cast<std::uint32_t>(rng() % f.q())};
}

}  // namespace

WordAmbient WordAmbient::create(unsigned p, unsigned d, unsigned t, std::size_t n,
                                std::optional<std::vector<Felt>> basis) {
  require(t >= 1 && n >= 1, ErrorKind::InvalidArgument, "t and n must be positive");
  Field F = Field::create(p, d);
  Field K = Field::create(p, d * t);

  // F embeds by sending its generator to the least root of F's modulus in K.
  Felt root{0};
  bool found = false;
  for (std::uint32_t v = 0; v < K.q() && !found; ++v) {
    if (eval_prime_poly(K, F.modulus(), Felt{v}).value == 0) {
      root = Felt{v};
      found = true;
    }
  }
  require(found, ErrorKind::InvalidArgument, "modulus of F has no root in K");
  std::vector<std::uint32_t> embed(F.q());
  std::vector<std::int64_t> restrict(K.q(), -1);
  for (std::uint32_t x = 0; x < F.q(); ++x) {
    const std::vector<unsigned> digits = F.digits(Felt{x});
    const Felt y = eval_prime_poly(K, digits, root);
    embed[x] = y.value;
    restrict[y.value] = x;
  }

  SubfieldBasis D = [&] {
    if (basis) return make_subfield_basis(K, d, *basis);
    if (auto alpha = find_self_dual_normal(K, d)) return make_normal_basis(K, d, *alpha);
    for (std::uint32_t v = 1; v < K.q(); ++v) {
      if (normal_basis_check(K, d, Felt{v})) return make_normal_basis(K, d, Felt{v});
    }
    throw Error(ErrorKind::NotABasis, "no normal basis found");
  }();

  auto tables = std::make_shared<Tables>(
      Tables{std::move(F), std::move(K), t, n, std::move(D), std::move(embed), std::move(restrict)});
  return WordAmbient(std::move(tables));
}

Felt WordAmbient::restrict(Felt y) const {
  const std::int64_t x = tables_->restrict.at(y.value);
  require(x >= 0, ErrorKind::InvalidArgument, std::to_string(y.value) + " is not in the subfield");
  return Felt{static_cast<std::uint32_t>(x)};
}

std::vector<Felt> WordAmbient::coords_K(Felt y) const {
  std::vector<Felt> c = basis_coordinates(D(), y);
  for (Felt& x : c) x = restrict(x);
  return c;
}

Felt WordAmbient::from_coords_K(std::span<const Felt> c) const {
  std::vector<Felt> lifted(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) lifted[i] = embed(c[i]);
  return basis_combine(D(), lifted);
}

std::vector<Felt> WordAmbient::coord(const Mat& a) const {
  require(a.rows() == n() && a.cols() == n(), ErrorKind::DimensionMismatch, "word must be n x n");
  std::vector<Felt> v;
  v.reserve(rank());
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      const std::vector<Felt> c = coords_K(a(i, j));
      v.insert(v.end(), c.begin(), c.end());
    }
  }
  return v;
}

Mat WordAmbient::coord_inv(std::span<const Felt> v) const {
  require(v.size() == rank(), ErrorKind::DimensionMismatch, "coordinate vector length mismatch");
  Mat a = zero_matrix();
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) a(i, j) = from_coords_K(v.subspan((i * n() + j) * t(), t()));
  }
  return a;
}

Mat WordAmbient::basis_element(std::size_t index) const {
  require(index < rank(), ErrorKind::InvalidArgument, "basis index out of range");
  Mat a = zero_matrix();
  const std::size_t cell = index / t();
  a(cell / n(), cell % n()) = D().elements[index % t()];
  return a;
}

Mat WordAmbient::random_matrix(std::mt19937_64& rng) const {
  Mat a = zero_matrix();
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) a(i, j) = random_element(K(), rng);
  }
  return a;
}

Mat WordAmbient::random_regular(std::mt19937_64& rng) const {
  for (;;) {
    Mat a = random_matrix(rng);
    if (determinant(a).value != 0) return a;
  }
}

MatAut make_mat_aut(const WordAmbient& w, Mat U, unsigned h) {
  require(U.rows() == w.n() && U.cols() == w.n() && U.field() == w.K(), ErrorKind::DimensionMismatch,
          "U must be an n x n matrix over K");
  require(h < w.t(), ErrorKind::InvalidArgument, "h must lie in [0, t)");
  std::optional<Mat> inv = inverse(U);
  require(inv.has_value(), ErrorKind::SingularU, "U is singular");
  return MatAut{std::move(U), h, std::move(*inv)};
}

Mat tau_power(const WordAmbient& w, const Mat& a, std::int64_t h) {
  const std::int64_t t = w.t();
  const std::int64_t r = ((h % t) + t) % t;
  return frobenius(a, static_cast<unsigned>(r) * w.F().m());
}

Mat apply_aut(const WordAmbient& w, const MatAut& sigma, const Mat& a) {
  return sigma.U * tau_power(w, a, sigma.h) * sigma.U_inv;
}

Mat apply_aut_inverse(const WordAmbient& w, const MatAut& sigma, const Mat& a) {
  return tau_power(w, sigma.U_inv * a * sigma.U, -static_cast<std::int64_t>(sigma.h));
}

Mat apply_aut_power(const WordAmbient& w, const MatAut& sigma, std::int64_t k, const Mat& a) {
  Mat out = a;
  for (std::int64_t i = 0; i < k; ++i) out = apply_aut(w, sigma, out);
  for (std::int64_t i = 0; i > k; --i) out = apply_aut_inverse(w, sigma, out);
  return out;
}

MatAut sigma_hat(const WordAmbient& w, const MatAut& sigma) {
  const unsigned t = w.t();
  return make_mat_aut(w, tau_power(w, transpose(sigma.U), static_cast<std::int64_t>(t - sigma.h)),
                      (t - sigma.h) % t);
}

OreRing::OreRing(WordAmbient ambient, MatAut sigma, std::size_t random_degree)
    : ambient_(std::move(ambient)), sigma_(std::move(sigma)), random_degree_(random_degree) {}

OreRing hat_ring(const OreRing& ring) {
  return OreRing(ring.ambient(), sigma_hat(ring.ambient(), ring.sigma()));
}

OrePoly OreRing::normalize(OrePoly f) const {
  while (!f.coeffs.empty() && f.coeffs.back().is_zero()) f.coeffs.pop_back();
  return f;
}

OrePoly OreRing::constant(const Mat& a) const { return normalize(OrePoly{{a}}); }

OrePoly OreRing::z_power(std::size_t k) const {
  OrePoly f{std::vector<Mat>(k + 1, ambient_.zero_matrix())};
  f.coeffs[k] = Mat::identity(ambient_.K(), ambient_.n());
  return f;
}

OrePoly OreRing::one() const { return z_power(0); }

OrePoly OreRing::add(const OrePoly& f, const OrePoly& g) const {
  OrePoly out{std::vector<Mat>(std::max(f.coeffs.size(), g.coeffs.size()), ambient_.zero_matrix())};
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) out.coeffs[k] = out.coeffs[k] + f.coeffs[k];
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) out.coeffs[k] = out.coeffs[k] + g.coeffs[k];
  return normalize(std::move(out));
}

OrePoly OreRing::sub(const OrePoly& f, const OrePoly& g) const {
  OrePoly out{std::vector<Mat>(std::max(f.coeffs.size(), g.coeffs.size()), ambient_.zero_matrix())};
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) out.coeffs[k] = out.coeffs[k] + f.coeffs[k];
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) out.coeffs[k] = out.coeffs[k] - g.coeffs[k];
  return normalize(std::move(out));
}

OrePoly OreRing::multiply(const OrePoly& f, const OrePoly& g) const {
  if (f.coeffs.empty() || g.coeffs.empty()) return zero();
  // (z^i a)(z^j b) = z^(i+j) sigma^j(a) b
  OrePoly out{std::vector<Mat>(f.coeffs.size() + g.coeffs.size() - 1, ambient_.zero_matrix())};
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    Mat twisted = f.coeffs[i];
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
      if (j > 0) twisted = apply_aut(ambient_, sigma_, twisted);
      out.coeffs[i + j] = out.coeffs[i + j] + twisted * g.coeffs[j];
    }
  }
  return normalize(std::move(out));
}

std::vector<Poly> OreRing::coords(const OrePoly& f) const {
  const std::size_t m = rank();
  std::vector<std::vector<Felt>> columns(m, std::vector<Felt>(f.coeffs.size()));
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    const std::vector<Felt> v = ambient_.coord(f.coeffs[k]);
    for (std::size_t i = 0; i < m; ++i) columns[i][k] = v[i];
  }
  std::vector<Poly> out;
  out.reserve(m);
  for (auto& c : columns) out.emplace_back(ambient_.F(), std::move(c));
  return out;
}

OrePoly OreRing::from_coords(std::span<const Poly> w) const {
  require(w.size() == rank(), ErrorKind::DimensionMismatch, "coordinate vector length mismatch");
  std::size_t len = 0;
  for (const Poly& p : w) len = std::max(len, p.coeffs().size());
  OrePoly out;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Felt> v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i].coeff(k);
    out.coeffs.push_back(ambient_.coord_inv(v));
  }
  return normalize(std::move(out));
}

bool OreRing::equal(const OrePoly& f, const OrePoly& g) const {
  const OrePoly a = normalize(f);
  const OrePoly b = normalize(g);
  return a.coeffs == b.coeffs;
}

OrePoly OreRing::random(std::mt19937_64& rng) const {
  const std::size_t deg = rng() % (random_degree_ + 1);
  OrePoly f;
  for (std::size_t k = 0; k <= deg; ++k) f.coeffs.push_back(ambient_.random_matrix(rng));
  return normalize(std::move(f));
}

std::string OreRing::describe(const OrePoly& f) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) os << (k ? "," : "") << to_string(f.coeffs[k]);
  os << "]";
  return os.str();
}

OrePoly theta_conv(const OreRing& ring, const OrePoly& f) {
  OrePoly out;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    out.coeffs.push_back(
        transpose(apply_aut_power(ring.ambient(), ring.sigma(), -static_cast<std::int64_t>(k), f.coeffs[k])));
  }
  return ring.normalize(std::move(out));
}

Mat little_m(const WordAmbient& w, Felt gamma) {
  const unsigned t = w.t();
  Mat out(w.F(), t, t);
  for (unsigned i = 0; i < t; ++i) {
    const std::vector<Felt> c = w.coords_K(w.K().mul(w.D().elements[i], gamma));
    for (unsigned j = 0; j < t; ++j) out(i, j) = c[j];
  }
  return out;
}

Mat m_expand(const WordAmbient& w, const Mat& m) {
  const unsigned t = w.t();
  Mat out(w.F(), m.rows() * t, m.cols() * t);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).value == 0) continue;
      const Mat block = little_m(w, m(i, j));
      for (unsigned a = 0; a < t; ++a) {
        for (unsigned b = 0; b < t; ++b) out(i * t + a, j * t + b) = block(a, b);
      }
    }
  }
  return out;
}

Mat m_a(const WordAmbient& w, const Mat& a) {
  return m_expand(w, kron(Mat::identity(w.K(), w.n()), a));
}

Mat p_h(const Field& field, unsigned t, unsigned h) {
  Mat p(field, t, t);
  for (unsigned k = 0; k < t; ++k) p(k, (k + h) % t) = field.one();
  return p;
}

RepMatrices rep_matrices(const WordAmbient& w, const MatAut& sigma) {
  const std::size_t n2 = w.n() * w.n();
  Mat m_sigma_u = m_expand(w, kron(transpose(sigma.U), sigma.U_inv));
  Mat m_tau_h = kron(Mat::identity(w.F(), n2), p_h(w.F(), w.t(), sigma.h));
  Mat m_sigma = m_tau_h * m_sigma_u;

  const Mat def_u = linear_map_matrix(w, [&](const Mat& b) { return sigma.U * b * sigma.U_inv; });
  const Mat def_tau = linear_map_matrix(w, [&](const Mat& b) { return tau_power(w, b, sigma.h); });
  const Mat def_sigma = linear_map_matrix(w, [&](const Mat& b) { return apply_aut(w, sigma, b); });
  const bool ok = m_sigma_u == def_u && m_tau_h == def_tau && m_sigma == def_sigma;
  return {std::move(m_sigma_u), std::move(m_tau_h), std::move(m_sigma), ok};
}

PolyMat m_r_poly(const OreRing& ring, const OrePoly& f) {
  const WordAmbient& w = ring.ambient();
  const std::size_t m = w.rank();
  const Mat m_sigma = w.D().normal
                          ? rep_matrices(w, ring.sigma()).m_sigma
                          : linear_map_matrix(w, [&](const Mat& b) { return apply_aut(w, ring.sigma(), b); });
  std::vector<std::vector<std::vector<Felt>>> entries(m, std::vector<std::vector<Felt>>(m));
  Mat power = Mat::identity(w.F(), m);
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (k > 0) power = power * m_sigma;
    const Mat term = power * m_a(w, f.coeffs[k]);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) entries[i][j].push_back(term(i, j));
    }
  }
  PolyMat out(w.F(), m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out(i, j) = Poly(w.F(), std::move(entries[i][j]));
  }
  return out;
}

LiccDual licc_dual(const OreRing& ring, const OrePoly& f, const OrePoly& h) {
  require(ring.ambient().self_dual_normal(), ErrorKind::BasisNotSelfDualNormal,
          "the K/F basis must be self-dual and normal");
  require(ring.equal(ring.multiply(f, h), ring.zero()), ErrorKind::BadCertificate, "f * h is not zero");
  const OreRing hat = hat_ring(ring);
  auto theta = [&ring](const OrePoly& x) { return theta_conv(ring, x); };
  DualCode<PolyMat> codes = dual_code(ring, hat, f, h, theta);
  const PolyMat mf = mrep(ring, f);
  const bool transposition = codes.theta_match() && mrep(hat, theta(f)) == transpose(mf) &&
                             mrep(hat, theta(h)) == transpose(mrep(ring, h));
  const bool summand = is_direct_summand(mf);
  return {std::move(codes), transposition, summand};
}

LiccDual licc_dual_idem(const OreRing& ring, const Mat& e) {
  const WordAmbient& w = ring.ambient();
  require(e.rows() == w.n() && e.cols() == w.n() && e.field() == w.K(), ErrorKind::DimensionMismatch,
          "idempotent must be an n x n matrix over K");
  require(e * e == e, ErrorKind::BadCertificate, "matrix is not idempotent");
  const Mat complement = Mat::identity(w.K(), w.n()) - e;
  return licc_dual(ring, ring.constant(e), ring.constant(complement));
}

Mat random_conjugated_idempotent(const WordAmbient& w, std::mt19937_64& rng) {
  const Mat p = w.random_regular(rng);
  Mat e00 = w.zero_matrix();
  e00(0, 0) = w.K().one();
  return p * e00 * *inverse(p);
}

}  // namespace skewdual
