#include <gtest/gtest.h>

#include <random>

#include "skewdual/linalg.hpp"

using namespace skewdual;

TEST(Rref, IdentityAndZero) {
  const Field f = Field::create(2, 1);
  const RrefResult id = rref(Mat::identity(f, 3));
  EXPECT_EQ(id.reduced, Mat::identity(f, 3));
  EXPECT_EQ(id.rank, 3u);
  const RrefResult z = rref(Mat(f, 2, 3));
  EXPECT_TRUE(z.reduced.is_zero());
  EXPECT_EQ(z.rank, 0u);
  const Mat ones = Mat::from_values(f, {{1, 1}});
  EXPECT_EQ(rref(ones).reduced, ones);
}

TEST(Nullspace, Examples) {
  const Field f = Field::create(2, 1);
  EXPECT_EQ(nullspace(Mat::from_values(f, {{1, 1}})), Mat::from_values(f, {{1, 1}}));
  EXPECT_EQ(nullspace(Mat::identity(f, 3)).rows(), 0u);
  const Mat n = nullspace(Mat(f, 1, 3));
  EXPECT_EQ(n.rows(), 3u);
  EXPECT_EQ(rank(n), 3u);
}

TEST(Nullspace, RandomProperties) {
  std::mt19937_64 rng(11);
  const Field f = Field::create(3, 2);
  for (int it = 0; it < 200; ++it) {
    Mat m(f, 1 + rng() % 4, 1 + rng() % 5);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Felt{static_cast<std::uint32_t>(rng() % 9)};
    }
    const Mat n = nullspace(m);
    if (n.rows()) EXPECT_TRUE((n * transpose(m)).is_zero());
    EXPECT_EQ(rank(n) + rank(m), m.cols());
    EXPECT_EQ(rref(rref(m).reduced).reduced, rref(m).reduced);
    for (std::size_t i = 0; i < m.rows(); ++i) EXPECT_TRUE(in_row_space(row_space(m), m.row(i)));
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(5);
  const Field f = Field::create(2, 3);
  int found = 0;
  for (int it = 0; it < 100; ++it) {
    Mat m(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = Felt{static_cast<std::uint32_t>(rng() % 8)};
    }
    const auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), determinant(m).value != 0);
    if (inv) {
      ++found;
      EXPECT_EQ(m * *inv, Mat::identity(f, 3));
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Kron, MixedProductAndExamples) {
  const Field f = Field::create(2, 2);
  const Mat n = Mat::from_values(f, {{1, 2}, {3, 0}});
  EXPECT_EQ(kron(Mat::identity(f, 1), n), n);
  const Mat d = Mat::from_values(f, {{1, 0}, {0, 0}});
  EXPECT_EQ(kron(d, Mat::identity(f, 2)), Mat::from_values(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  std::mt19937_64 rng(3);
  auto rnd = [&](std::size_t r, std::size_t c) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Felt{static_cast<std::uint32_t>(rng() % 4)};
    }
    return m;
  };
  for (int it = 0; it < 20; ++it) {
    const Mat a = rnd(2, 3), a2 = rnd(3, 2), b = rnd(2, 2), b2 = rnd(2, 3);
    EXPECT_EQ(kron(a, b) * kron(a2, b2), kron(a * a2, b * b2));
  }
}
