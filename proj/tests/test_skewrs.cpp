#include <gtest/gtest.h>

#include "skewdual/basis.hpp"
#include "skewdual/skewrs.hpp"

using namespace skewdual;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvalidArgument;
}

SkewPoly x_minus_one(const Field& f, FieldAut s, std::size_t n) {
  return binomial(f, s, Convention::Left, n, f.one());
}

}  // namespace

TEST(FullDecomposition, Examples) {
  const Field f8 = Field::create(2, 3);
  EXPECT_TRUE(full_decomposition_check(f8, FieldAut{1}, Felt{3}));
  EXPECT_TRUE(full_decomposition_check(Field::create(2, 2), FieldAut{1}, Felt{2}));
  EXPECT_EQ(kind_of([&] { full_decomposition_check(f8, FieldAut{1}, Felt{2}); }), ErrorKind::NotNormal);
}

TEST(FullDecomposition, EveryNormalElement) {
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}}) {
    const Field f = Field::create(p, m);
    std::size_t normal = 0;
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      if (!normal_basis_check(f, FieldAut{1}, Felt{a})) continue;
      ++normal;
      EXPECT_TRUE(full_decomposition_check(f, FieldAut{1}, Felt{a})) << a;
    }
    EXPECT_GT(normal, 0u);
  }
}

TEST(SkewRS, CreateExamples) {
  const Field f8 = Field::create(2, 3);
  const SkewRSCode c = rs_create(f8, FieldAut{1}, Felt{3}, 3);
  EXPECT_EQ(c.g.degree(), Degree(2));
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.beta, f8.div(f8.frobenius(1, Felt{3}), Felt{3}));
  const SkewRSCode c2 = rs_create(f8, FieldAut{1}, Felt{3}, 2);
  EXPECT_EQ(c2.g, linear_factor(f8, FieldAut{1}, Convention::Left, c2.beta));
  EXPECT_EQ(c2.k, 2u);
  EXPECT_EQ(kind_of([&] { rs_create(f8, FieldAut{1}, Felt{3}, 1); }), ErrorKind::BadDelta);
  EXPECT_EQ(kind_of([&] { rs_create(f8, FieldAut{1}, Felt{3}, 4); }), ErrorKind::BadDelta);
  EXPECT_EQ(kind_of([&] { rs_create(f8, FieldAut{1}, Felt{2}, 2); }), ErrorKind::NotNormal);
}

TEST(SkewRS, CompanionGammaRoundTrip) {
  for (auto [m, a] : {std::pair{2u, 2u}, {3u, 3u}}) {
    const Field f = Field::create(2, m);
    const SkewRSCode c = rs_create(f, FieldAut{1}, Felt{a}, 2);
    const SkewPoly n = conjugate_lclm(f, FieldAut{1}, c.beta, 1, m - 1);
    EXPECT_EQ(linear_factor(f, FieldAut{1}, Convention::Left, c.gamma) * n, x_minus_one(f, FieldAut{1}, m));
  }
}

TEST(SkewRS, DualExamples) {
  const Field f8 = Field::create(2, 3);
  const SkewRSCode c = rs_create(f8, FieldAut{1}, Felt{3}, 3);
  const SkewRSCode d = rs_dual(c);
  EXPECT_EQ(d.code().dimension(), 2u);
  EXPECT_EQ(d.code(), kernel_dual(c.code()));
  EXPECT_EQ(rs_dual(d).code(), c.code());
  const SkewRSCode c4 = rs_create(Field::create(2, 2), FieldAut{1}, Felt{2}, 2);
  EXPECT_EQ(rs_dual(c4).code().dimension(), 1u);
  EXPECT_EQ(rs_dual(c4).code(), kernel_dual(c4.code()));
}

TEST(SkewRS, RightLeftAllK) {
  const Field f8 = Field::create(2, 3);
  const SkewRSCode c = rs_create(f8, FieldAut{1}, Felt{3}, 2);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(rightleft_check(c, k)) << k;
}

TEST(MinDistance, Examples) {
  const Field f8 = Field::create(2, 3);
  EXPECT_EQ(min_distance(rs_create(f8, FieldAut{1}, Felt{3}, 3).code()), 3u);
  const Field f4 = Field::create(2, 2);
  EXPECT_EQ(min_distance(LinearCode<Mat>(Mat::identity(f4, 2))), 1u);
  EXPECT_EQ(min_distance(LinearCode<Mat>(Mat::from_values(f4, {{1, 1}}))), 2u);
  EXPECT_EQ(kind_of([&] { min_distance(LinearCode<Mat>(Mat(f4, 1, 2))); }), ErrorKind::ZeroCode);
  const Field f16 = Field::create(2, 4);
  EXPECT_EQ(kind_of([&] { min_distance(LinearCode<Mat>(Mat::identity(f16, 6))); }), ErrorKind::CodeTooLarge);
}

TEST(SkewRS, MdsOnGf16) {
  const Field f = Field::create(2, 4);
  std::uint32_t alpha = 0;
  for (std::uint32_t a = 1; a < 16 && !alpha; ++a) {
    if (normal_basis_check(f, FieldAut{1}, Felt{a})) alpha = a;
  }
  ASSERT_NE(alpha, 0u);
  for (std::size_t delta = 2; delta <= 4; ++delta) {
    const SkewRSCode c = rs_create(f, FieldAut{1}, Felt{alpha}, delta);
    EXPECT_EQ(min_distance(c.code()), delta);
    EXPECT_EQ(min_distance(rs_dual(c).code()), c.k + 1);
  }
}

TEST(SkewRS, EvaluationForm) {
  const Field f8 = Field::create(2, 3);
  const SkewRSCode c = rs_create(f8, FieldAut{1}, Felt{3}, 3);
  const EvalParams e = eval_params(c);
  EXPECT_EQ(f8.div(f8.frobenius(1, e.nu), e.nu), e.mu);
  const Mat g = sge_matrix(c, e);
  EXPECT_EQ(g.rows(), 1u);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g(0, j), e.multipliers[j]);
  EXPECT_EQ(LinearCode<Mat>(g), c.code());
  const Mat full = sge_matrix(f8, FieldAut{1}, e.points, e.multipliers, 3);
  EXPECT_EQ(rank(full), 3u);
}

TEST(SkewRS, DualRootRelation) {
  // Theta(h) generates the same ideal as lclm(x - sigma^i(sigma(gamma)^-1)), delta - 1 <= i < n.
  const Field f = Field::create(2, 4);
  for (std::uint32_t a = 1; a < 16; ++a) {
    if (!normal_basis_check(f, FieldAut{1}, Felt{a})) continue;
    for (std::size_t delta = 2; delta <= 4; ++delta) {
      const SkewRSCode c = rs_create(f, FieldAut{1}, Felt{a}, delta);
      const ConstaRing r = c.ring();
      const SkewPoly h = sp_divide(Side::Left, r.modulus(), c.g).quot;
      const ConstaElt th = theta(r, r.reduce(h));
      const Felt gp = f.inv(f.frobenius(1, c.gamma));
      const SkewPoly l = conjugate_lclm(f, FieldAut{1}, gp, static_cast<std::int64_t>(delta) - 1, c.k);
      EXPECT_EQ(LinearCode<Mat>(mrep(r.hat(), th)), LinearCode<Mat>(mrep(r.hat(), r.hat().reduce(l))));
    }
  }
}
