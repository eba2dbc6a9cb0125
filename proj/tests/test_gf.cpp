#include <gtest/gtest.h>

#include "skewdual/basis.hpp"

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

// Direct polynomial-basis multiplication, independent of the log tables.
std::uint32_t schoolbook_mul(const Field& f, std::uint32_t x, std::uint32_t y) {
  const unsigned p = f.p(), m = f.m();
  std::vector<unsigned> a = f.digits(Felt{x}), b = f.digits(Felt{y});
  std::vector<unsigned> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const auto& mod = f.modulus();
  for (unsigned d = 2 * m - 1; d >= m; --d) {
    const unsigned c = prod[d];
    if (c == 0) continue;
    for (unsigned k = 0; k <= m; ++k) prod[d - m + k] = (prod[d - m + k] + p * p - c * mod[k] % p) % p;
  }
  prod.resize(m);
  return f.from_digits(prod).value;
}

}  // namespace

TEST(Field, DefaultModuli) {
  EXPECT_EQ(Field::create(2, 2).modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(Field::create(2, 3).modulus(), (std::vector<unsigned>{1, 1, 0, 1}));
  EXPECT_EQ(Field::create(2, 4).modulus(), (std::vector<unsigned>{1, 1, 0, 0, 1}));
  EXPECT_EQ(Field::create(3, 2).modulus(), (std::vector<unsigned>{1, 0, 1}));
}

TEST(Field, Errors) {
  EXPECT_EQ(kind_of([] { Field::create(4, 1); }), ErrorKind::CompositeCharacteristic);
  EXPECT_EQ(kind_of([] { Field::create(2, 2, std::vector<unsigned>{1, 0, 1}); }), ErrorKind::ReducibleModulus);
  EXPECT_EQ(kind_of([] { Field::create(2, 17); }), ErrorKind::FieldTooLarge);
  const Field f = Field::create(2, 2);
  EXPECT_EQ(kind_of([&] { f.inv(Felt{0}); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(kind_of([&] { f.trace(3, Felt{1}); }), ErrorKind::NonDivisorDegree);
}

TEST(Field, Gf4Arithmetic) {
  const Field f = Field::create(2, 2);
  EXPECT_EQ(f.mul(Felt{2}, Felt{2}).value, 3u);
  EXPECT_EQ(f.add(Felt{2}, Felt{3}).value, 1u);
  EXPECT_EQ(f.inv(Felt{2}).value, 3u);
  EXPECT_EQ(f.frobenius(1, Felt{2}).value, 3u);
  EXPECT_EQ(f.frobenius(2, Felt{2}).value, 2u);
  EXPECT_EQ(f.frobenius(0, Felt{3}).value, 3u);
  EXPECT_EQ(f.trace(1, Felt{2}).value, 1u);
  EXPECT_EQ(f.trace(1, Felt{0}).value, 0u);
}

TEST(Field, MultiplicationMatchesSchoolbook) {
  for (auto [p, m] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 3u}}) {
    const Field f = Field::create(p, m);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      for (std::uint32_t y = 0; y < f.q(); ++y) ASSERT_EQ(f.mul(Felt{x}, Felt{y}).value, schoolbook_mul(f, x, y));
    }
  }
}

TEST(Field, NormOfGf8IsOne) {
  const Field f = Field::create(2, 3);
  for (std::uint32_t v = 1; v < 8; ++v) EXPECT_EQ(f.norm(1, Felt{v}).value, 1u);
}

TEST(Field, PowAndNegativeExponents) {
  const Field f = Field::create(3, 2);
  for (std::uint32_t v = 1; v < f.q(); ++v) {
    EXPECT_EQ(f.mul(f.pow(Felt{v}, -3), f.pow(Felt{v}, 3)), f.one());
    EXPECT_EQ(f.pow(Felt{v}, 8), f.one());
  }
}

TEST(Automorphism, OrderAndFixedField) {
  const Field f = Field::create(2, 4);
  EXPECT_EQ(aut_order(f, FieldAut{1}), 4u);
  EXPECT_EQ(aut_order(f, FieldAut{2}), 2u);
  EXPECT_EQ(fixed_degree(f, FieldAut{2}), 2u);
  for (std::uint32_t v = 0; v < 16; ++v) {
    EXPECT_EQ(aut_apply(f, FieldAut{1}, -1, f.frobenius(1, Felt{v})), Felt{v});
  }
}

TEST(Basis, DualOfSelfDualNormalGf4) {
  const Field f = Field::create(2, 2);
  const SubfieldBasis b = make_subfield_basis(f, 1, {Felt{2}, Felt{3}});
  EXPECT_TRUE(b.normal);
  EXPECT_TRUE(b.self_dual);
  EXPECT_EQ(dual_basis(b).elements, b.elements);
}

TEST(Basis, PrimeFieldOverItself) {
  const Field f = Field::create(5, 1);
  EXPECT_EQ(dual_basis(make_subfield_basis(f, 1, {Felt{1}})).elements, std::vector<Felt>{Felt{1}});
}

TEST(Basis, DependentElementsRejected) {
  const Field f = Field::create(2, 2);
  EXPECT_EQ(kind_of([&] { make_subfield_basis(f, 1, {Felt{2}, Felt{2}}); }), ErrorKind::NotABasis);
}

TEST(Basis, NormalAndSelfDualSearch) {
  const Field f8 = Field::create(2, 3);
  EXPECT_FALSE(normal_basis_check(f8, 1, Felt{2}));
  EXPECT_TRUE(normal_basis_check(f8, 1, Felt{3}));
  EXPECT_EQ(find_self_dual_normal(f8, 1), Felt{3});
  EXPECT_EQ(find_self_dual_normal(Field::create(2, 2), 1), Felt{2});
}

TEST(Basis, DualRelationAndCoordinates) {
  const Field f = Field::create(3, 2);
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    if (!normal_basis_check(f, 1, Felt{a})) continue;
    const SubfieldBasis b = make_normal_basis(f, 1, Felt{a});
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(f.trace(1, f.mul(b.elements[i], b.dual[j])).value, i == j ? 1u : 0u);
      }
    }
    EXPECT_EQ(dual_basis(dual_basis(b)).elements, b.elements);
    for (std::uint32_t x = 0; x < f.q(); ++x) EXPECT_EQ(basis_combine(b, basis_coordinates(b, Felt{x})), Felt{x});
  }
}

TEST(Hilbert90, Examples) {
  const Field f8 = Field::create(2, 3);
  EXPECT_EQ(hilbert90(f8, 1, Felt{1}), Felt{1});
  EXPECT_EQ(hilbert90(f8, 1, Felt{3}), Felt{3});
  const Field f9 = Field::create(3, 2);
  for (std::uint32_t v = 1; v < 9; ++v) {
    if (f9.norm(1, Felt{v}) != f9.one()) {
      EXPECT_EQ(kind_of([&] { hilbert90(f9, 1, Felt{v}); }), ErrorKind::NormNotOne);
    } else {
      const Felt nu = hilbert90(f9, 1, Felt{v});
      EXPECT_EQ(f9.div(f9.frobenius(1, nu), nu), Felt{v});
    }
  }
}
