#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "skewdual/convolutional.hpp"

using namespace skewdual;

namespace {

const WordAmbient& gf4_ambient() {
  static const WordAmbient w = WordAmbient::create(2, 1, 2, 2);
  return w;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

Mat k_mat(const WordAmbient& w, std::vector<std::vector<std::uint32_t>> rows) {
  return Mat::from_values(w.K(), rows);
}

}  // namespace

static_assert(HammingExtension<OreRing>);

TEST(WordAmbient, DefaultBasisIsSelfDualNormal) {
  const WordAmbient& w = gf4_ambient();
  EXPECT_EQ(w.D().elements, (std::vector<Felt>{Felt{2}, Felt{3}}));
  EXPECT_TRUE(w.self_dual_normal());
  EXPECT_EQ(w.rank(), 8u);
}

TEST(WordAmbient, Coordinates) {
  const WordAmbient& w = gf4_ambient();
  const std::vector<Felt> z = w.coord(w.zero_matrix());
  EXPECT_TRUE(std::all_of(z.begin(), z.end(), [](Felt x) { return x.value == 0; }));
  Mat e = w.zero_matrix();
  e(0, 0) = w.D().elements[0];
  std::vector<Felt> e0(8, Felt{0});
  e0[0] = Felt{1};
  EXPECT_EQ(w.coord(e), e0);
  const WordAmbient w1 = WordAmbient::create(2, 1, 2, 1);
  for (std::uint32_t v = 0; v < 4; ++v) {
    const Mat a = k_mat(w1, {{v}});
    EXPECT_EQ(w1.coord_inv(w1.coord(a)), a);
  }
  std::mt19937_64 rng(2);
  for (int it = 0; it < 50; ++it) {
    const Mat a = w.random_matrix(rng);
    EXPECT_EQ(w.coord_inv(w.coord(a)), a);
  }
}

TEST(LittleM, Examples) {
  const WordAmbient& w = gf4_ambient();
  EXPECT_EQ(little_m(w, Felt{1}), Mat::identity(w.F(), 2));
  EXPECT_EQ(little_m(w, Felt{2}), Mat::from_values(w.F(), {{0, 1}, {1, 1}}));
  const WordAmbient w8 = WordAmbient::create(2, 1, 3, 1);
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      EXPECT_EQ(little_m(w8, w8.K().mul(Felt{a}, Felt{b})), little_m(w8, Felt{a}) * little_m(w8, Felt{b}));
    }
  }
}

TEST(RepMatrices, Examples) {
  const WordAmbient& w = gf4_ambient();
  EXPECT_EQ(m_a(w, Mat::identity(w.K(), 2)), Mat::identity(w.F(), 8));
  const RepMatrices id = rep_matrices(w, make_mat_aut(w, Mat::identity(w.K(), 2), 0));
  EXPECT_EQ(id.m_sigma, Mat::identity(w.F(), 8));
  EXPECT_TRUE(id.matches_definition);
  EXPECT_EQ(p_h(w.F(), 2, 1), Mat::from_values(w.F(), {{0, 1}, {1, 0}}));
  const WordAmbient w1 = WordAmbient::create(2, 1, 2, 1);
  const RepMatrices tau = rep_matrices(w1, make_mat_aut(w1, Mat::identity(w1.K(), 1), 1));
  EXPECT_EQ(tau.m_sigma, Mat::from_values(w1.F(), {{0, 1}, {1, 0}}));
  EXPECT_TRUE(tau.matches_definition);
  EXPECT_EQ(kind_of([&] { make_mat_aut(w, w.zero_matrix(), 0); }), ErrorKind::SingularU);
}

TEST(RepMatrices, Identities) {
  std::mt19937_64 rng(13);
  const WordAmbient& w = gf4_ambient();
  for (int it = 0; it < 10; ++it) {
    const MatAut s = make_mat_aut(w, w.random_regular(rng), static_cast<unsigned>(rng() % 2));
    const RepMatrices rm = rep_matrices(w, s);
    EXPECT_TRUE(rm.matches_definition);
    const Mat a = w.random_matrix(rng);
    EXPECT_EQ(m_a(w, a) * rm.m_sigma, rm.m_sigma * m_a(w, apply_aut(w, s, a)));
    EXPECT_EQ(transpose(m_a(w, a)), m_a(w, transpose(a)));
    EXPECT_EQ(rep_matrices(w, sigma_hat(w, s)).m_sigma, transpose(rm.m_sigma));
    // sigma_hat = theta sigma^-1 theta pointwise.
    EXPECT_EQ(apply_aut(w, sigma_hat(w, s), a), transpose(apply_aut_inverse(w, s, transpose(a))));
  }
  for (unsigned h = 0; h < 3; ++h) {
    const Mat p = p_h(w.F(), 3, h);
    EXPECT_EQ(*inverse(p), p_h(w.F(), 3, (3 - h) % 3));
    EXPECT_EQ(*inverse(p), transpose(p));
  }
}

TEST(ConvTheta, Examples) {
  std::mt19937_64 rng(17);
  const WordAmbient& w = gf4_ambient();
  const OreRing r(w, make_mat_aut(w, w.random_regular(rng), 1));
  EXPECT_TRUE(r.equal(theta_conv(r, r.z_power(1)), r.z_power(1)));
  const Mat a = w.random_matrix(rng);
  EXPECT_TRUE(r.equal(theta_conv(r, r.constant(a)), r.constant(transpose(a))));
  const OreRing hat = hat_ring(r);
  for (int it = 0; it < 50; ++it) {
    const OrePoly f = r.random(rng), g = r.random(rng);
    EXPECT_TRUE(hat.equal(theta_conv(r, r.multiply(f, g)), hat.multiply(theta_conv(r, g), theta_conv(r, f))));
  }
}

TEST(MrPoly, ExamplesAndDefinition) {
  std::mt19937_64 rng(19);
  const WordAmbient& w = gf4_ambient();
  const MatAut s = make_mat_aut(w, w.random_regular(rng), 1);
  const OreRing r(w, s);
  EXPECT_EQ(m_r_poly(r, r.one()), PolyMat::identity(w.F(), 8));
  const Mat a = w.random_matrix(rng);
  EXPECT_EQ(m_r_poly(r, r.constant(a)), PolyMat::from_mat(m_a(w, a)));
  EXPECT_EQ(m_r_poly(r, r.z_power(1)), shift(PolyMat::from_mat(rep_matrices(w, s).m_sigma), 1));
  for (int it = 0; it < 20; ++it) {
    const OrePoly f = r.random(rng);
    EXPECT_EQ(m_r_poly(r, f), mrep(r, f));
  }
}

TEST(ConvTransposition, RandomAutomorphism) {
  std::mt19937_64 rng(23);
  const WordAmbient& w = gf4_ambient();
  const OreRing r(w, make_mat_aut(w, w.random_regular(rng), 1));
  const OreRing hat = hat_ring(r);
  const CheckReport ok = check_transposition(r, hat, [&](const OrePoly& f) { return theta_conv(r, f); }, 200, rng);
  EXPECT_TRUE(ok.passed());
  // Drop the sigma^-k twist.
  auto bad = [&](const OrePoly& f) {
    OrePoly out;
    for (const Mat& c : f.coeffs) out.coeffs.push_back(transpose(c));
    return hat.normalize(out);
  };
  EXPECT_FALSE(check_transposition(r, hat, bad, 200, rng).passed());
}

TEST(LiccDual, Idempotents) {
  const WordAmbient& w = gf4_ambient();
  const OreRing r(w, make_mat_aut(w, Mat::identity(w.K(), 2), 1));
  const LiccDual zero = licc_dual_idem(r, w.zero_matrix());
  EXPECT_EQ(zero.codes.code.dimension(), 0u);
  EXPECT_EQ(zero.codes.dual.dimension(), 8u);
  const LiccDual full = licc_dual_idem(r, Mat::identity(w.K(), 2));
  EXPECT_EQ(full.codes.code.dimension(), 8u);
  EXPECT_EQ(full.codes.dual.dimension(), 0u);
  Mat e00 = w.zero_matrix();
  e00(0, 0) = Felt{1};
  const LiccDual d = licc_dual_idem(r, e00);
  EXPECT_TRUE(d.codes.kernel_match());
  EXPECT_TRUE(d.transposition);
  EXPECT_TRUE(d.direct_summand);
  EXPECT_EQ(d.codes.code.dimension() + d.codes.dual.dimension(), 8u);
  EXPECT_TRUE(biduality_check(d.codes.code));
  std::mt19937_64 rng(29);
  for (int it = 0; it < 3; ++it) {
    const LiccDual c = licc_dual_idem(r, random_conjugated_idempotent(w, rng));
    EXPECT_TRUE(c.codes.kernel_match());
    EXPECT_TRUE(c.transposition);
    EXPECT_TRUE(c.direct_summand);
  }
}

TEST(LiccDual, Errors) {
  const WordAmbient& w = gf4_ambient();
  const OreRing r(w, make_mat_aut(w, Mat::identity(w.K(), 2), 1));
  EXPECT_EQ(kind_of([&] { licc_dual_idem(r, k_mat(w, {{1, 1}, {0, 0}}) + k_mat(w, {{0, 0}, {0, 2}})); }),
            ErrorKind::BadCertificate);
  EXPECT_EQ(kind_of([&] { licc_dual(r, r.one(), r.one()); }), ErrorKind::BadCertificate);
  // The polynomial basis {1, a} of GF(4) is not normal.
  const WordAmbient poly_basis = WordAmbient::create(2, 1, 2, 2, std::vector<Felt>{Felt{1}, Felt{2}});
  EXPECT_FALSE(poly_basis.self_dual_normal());
  const OreRing rp(poly_basis, make_mat_aut(poly_basis, Mat::identity(poly_basis.K(), 2), 0));
  EXPECT_EQ(kind_of([&] { licc_dual(rp, rp.one(), rp.zero()); }), ErrorKind::BasisNotSelfDualNormal);
}
