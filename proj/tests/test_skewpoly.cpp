#include <gtest/gtest.h>

#include <random>

#include "skewdual/skewpoly.hpp"

using namespace skewdual;

namespace {

const Field& gf4() {
  static const Field f = Field::create(2, 2);
  return f;
}
const Field& gf8() {
  static const Field f = Field::create(2, 3);
  return f;
}

SkewPoly sp(const Field& f, FieldAut s, Convention c, std::vector<std::uint32_t> v) {
  std::vector<Felt> coeffs;
  for (auto x : v) coeffs.push_back(Felt{x});
  return SkewPoly(f, s, c, std::move(coeffs));
}

SkewPoly random_sp(const Field& f, FieldAut s, Convention c, std::size_t max_len, std::mt19937_64& rng) {
  std::vector<Felt> coeffs(rng() % (max_len + 1));
  for (Felt& x : coeffs) x = Felt{static_cast<std::uint32_t>(rng() % f.q())};
  return SkewPoly(f, s, c, std::move(coeffs));
}

}  // namespace

TEST(SkewPoly, LeftMultiplicationExamples) {
  const FieldAut frob{1};
  const SkewPoly x = sp(gf4(), frob, Convention::Left, {0, 1});
  const SkewPoly a = sp(gf4(), frob, Convention::Left, {2});
  EXPECT_EQ(x * a, sp(gf4(), frob, Convention::Left, {0, 3}));
  EXPECT_EQ(a * x, sp(gf4(), frob, Convention::Left, {0, 2}));
  const SkewPoly x1 = sp(gf4(), frob, Convention::Left, {1, 1});
  EXPECT_EQ(x1 * x1, sp(gf4(), frob, Convention::Left, {1, 0, 1}));
  EXPECT_EQ(x1 * x1.constant_like(Felt{1}), x1);
}

TEST(SkewPoly, RightConventionRule) {
  // a z = z sigma(a)
  const FieldAut frob{1};
  const SkewPoly z = sp(gf4(), frob, Convention::Right, {0, 1});
  const SkewPoly a = sp(gf4(), frob, Convention::Right, {2});
  EXPECT_EQ(a * z, sp(gf4(), frob, Convention::Right, {0, 3}));
  EXPECT_EQ(z * a, sp(gf4(), frob, Convention::Right, {0, 2}));
}

TEST(SkewPoly, MixedRingsRejected) {
  const SkewPoly l = sp(gf4(), FieldAut{1}, Convention::Left, {1});
  const SkewPoly r = sp(gf4(), FieldAut{1}, Convention::Right, {1});
  const SkewPoly other = sp(gf4(), FieldAut{0}, Convention::Left, {1});
  for (const SkewPoly* g : {&r, &other}) {
    try {
      (void)(l * *g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MixedRings);
    }
  }
}

TEST(SkewPoly, DivisionExamples) {
  const FieldAut frob{1};
  const SkewPoly f = sp(gf4(), frob, Convention::Left, {1, 0, 1});
  const SkewPoly g = sp(gf4(), frob, Convention::Left, {1, 1});
  const SkewDivision d = sp_divide(Side::Right, f, g);
  EXPECT_EQ(d.quot, g);
  EXPECT_TRUE(d.rem.is_zero());
  const SkewDivision self = sp_divide(Side::Right, g, g);
  EXPECT_EQ(self.quot, g.constant_like(Felt{1}));
  EXPECT_TRUE(self.rem.is_zero());
  const SkewDivision small = sp_divide(Side::Right, g, f);
  EXPECT_TRUE(small.quot.is_zero());
  EXPECT_EQ(small.rem, g);
  try {
    sp_divide(Side::Left, f, f.zero_like());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(SkewPoly, DivisionRoundTrips) {
  std::mt19937_64 rng(41);
  const Field f9 = Field::create(3, 2);
  for (Convention c : {Convention::Left, Convention::Right}) {
    for (int it = 0; it < 500; ++it) {
      const SkewPoly f = random_sp(gf8(), FieldAut{1}, c, 8, rng);
      SkewPoly g = random_sp(gf8(), FieldAut{1}, c, 5, rng);
      if (g.is_zero()) g = g.constant_like(Felt{3});
      const SkewDivision r = sp_divide(Side::Right, f, g);
      EXPECT_EQ(r.quot * g + r.rem, f);
      EXPECT_LT(r.rem.degree(), g.degree());
      const SkewDivision l = sp_divide(Side::Left, f, g);
      EXPECT_EQ(g * l.quot + l.rem, f);
      EXPECT_LT(l.rem.degree(), g.degree());
      const SkewPoly h = random_sp(f9, FieldAut{1}, c, 6, rng);
      if (!h.is_zero()) {
        const SkewPoly k = random_sp(f9, FieldAut{1}, c, 6, rng);
        const SkewDivision d = sp_divide(Side::Left, k, h);
        EXPECT_EQ(h * d.quot + d.rem, k);
      }
    }
  }
}

TEST(SkewPoly, GcdLcmExamples) {
  const FieldAut frob{1};
  const SkewPoly xa = linear_factor(gf4(), frob, Convention::Left, Felt{2});
  EXPECT_EQ(lclm(xa, xa), xa);
  EXPECT_EQ(gcrd(xa, xa.constant_like(Felt{1})), xa.constant_like(Felt{1}));
  const SkewPoly f = linear_factor(gf8(), frob, Convention::Left, Felt{2});
  const SkewPoly g = linear_factor(gf8(), frob, Convention::Left, Felt{4});
  const SkewPoly l = lclm(f, g);
  EXPECT_EQ(l.degree(), Degree(2));
  EXPECT_TRUE(l.is_monic());
  EXPECT_TRUE(sp_divide(Side::Right, l, f).rem.is_zero());
  EXPECT_TRUE(sp_divide(Side::Right, l, g).rem.is_zero());
  try {
    lclm(f, f.zero_like());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInput);
  }
}

TEST(SkewPoly, GcdLcmIdentities) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 300; ++it) {
    SkewPoly f = random_sp(gf8(), FieldAut{1}, Convention::Left, 5, rng);
    SkewPoly g = random_sp(gf8(), FieldAut{1}, Convention::Left, 5, rng);
    if (f.is_zero() || g.is_zero()) continue;
    const SkewPoly d = gcrd(f, g), l = lclm(f, g);
    EXPECT_TRUE(sp_divide(Side::Right, f, d).rem.is_zero());
    EXPECT_TRUE(sp_divide(Side::Right, g, d).rem.is_zero());
    EXPECT_TRUE(sp_divide(Side::Right, l, f).rem.is_zero());
    EXPECT_TRUE(sp_divide(Side::Right, l, g).rem.is_zero());
    EXPECT_EQ(d.degree() + l.degree(), f.degree() + g.degree());
    const SkewPoly dl = gcld(f, g), lr = lcrm(f, g);
    EXPECT_TRUE(sp_divide(Side::Left, f, dl).rem.is_zero());
    EXPECT_TRUE(sp_divide(Side::Left, lr, g).rem.is_zero());
    EXPECT_EQ(dl.degree() + lr.degree(), f.degree() + g.degree());
  }
}

TEST(SkewPoly, NormsAndRightEvaluation) {
  const FieldAut frob{1};
  const Felt b{2};
  EXPECT_EQ(sp_norm(gf8(), frob, b, 0), Felt{1});
  EXPECT_EQ(sp_norm(gf8(), frob, b, 1), b);
  EXPECT_EQ(sp_norm(gf8(), frob, b, 3), Felt{1});
  EXPECT_EQ(sp_right_eval(linear_factor(gf8(), frob, Convention::Left, b), b), Felt{0});
  EXPECT_EQ(sp_right_eval(sp(gf8(), frob, Convention::Left, {0, 0, 1}), b), Felt{3});
  EXPECT_EQ(sp_right_eval(sp(gf8(), frob, Convention::Left, {5}), b), Felt{5});
  try {
    sp_right_eval(sp(gf8(), frob, Convention::Right, {0, 1}), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongConvention);
  }
}

TEST(SkewPoly, RightEvaluationFormulasAgree) {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 400; ++it) {
    const SkewPoly f = random_sp(gf8(), FieldAut{1}, Convention::Left, 7, rng);
    for (std::uint32_t a = 0; a < 8; ++a) ASSERT_EQ(sp_right_eval(f, Felt{a}), sp_right_eval_norms(f, Felt{a}));
  }
}

TEST(SkewPoly, ConventionConversionIsARingIsomorphism) {
  std::mt19937_64 rng(53);
  const Field f16 = Field::create(2, 4);
  for (int it = 0; it < 200; ++it) {
    const SkewPoly f = random_sp(f16, FieldAut{1}, Convention::Left, 5, rng);
    const SkewPoly g = random_sp(f16, FieldAut{1}, Convention::Left, 5, rng);
    const SkewPoly cf = convert_convention(f);
    EXPECT_EQ(cf.convention(), Convention::Right);
    EXPECT_EQ(convert_convention(f * g), cf * convert_convention(g));
    EXPECT_EQ(convert_convention(cf), f);
  }
}

TEST(SkewPoly, IdentityAutomorphismMatchesCommutative) {
  std::mt19937_64 rng(59);
  const Field f = Field::create(3, 2);
  for (int it = 0; it < 200; ++it) {
    const SkewPoly a = random_sp(f, FieldAut{0}, Convention::Left, 6, rng);
    const SkewPoly b = random_sp(f, FieldAut{0}, Convention::Left, 6, rng);
    EXPECT_EQ(to_commutative(a * b), to_commutative(a) * to_commutative(b));
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(to_commutative(gcrd(a, b)), gcd(to_commutative(a), to_commutative(b)));
  }
}
