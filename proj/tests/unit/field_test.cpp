#include <gtest/gtest.h>

#include "generators.hpp"
#include "netcurve/errors.hpp"
#include "netcurve/field.hpp"
#include "oracles.hpp"

using namespace netcurve;
using namespace netcurve::testing;

namespace {

using Poly = std::vector<std::uint32_t>;

TEST(FindIrreducible, QuadraticOverF2) { EXPECT_EQ(find_irreducible(2, 2), (Poly{1, 1, 1})); }

TEST(FindIrreducible, LinearIsX) { EXPECT_EQ(find_irreducible(2, 1), (Poly{0, 1})); }

TEST(FindIrreducible, QuadraticOverF3MatchesScan) {
  EXPECT_EQ(find_irreducible(3, 2), brute_irreducible(3, 2));
  EXPECT_EQ(find_irreducible(3, 2), (Poly{1, 0, 1}));
}

TEST(FindIrreducible, AgreesWithTrialProducts) {
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {3u, 4u}, {5u, 3u}}) {
    SCOPED_TRACE(std::to_string(p) + "^" + std::to_string(k));
    const Poly f = find_irreducible(p, k);
    EXPECT_EQ(f, brute_irreducible(p, k));
    EXPECT_TRUE(is_irreducible(p, f));
    for (std::uint32_t a = 0; a < p; ++a) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * a + f[i]) % p;
      EXPECT_NE(v, 0u) << "root " << a;
    }
  }
}

TEST(FindIrreducible, RejectsBadInput) {
  EXPECT_THROW(find_irreducible(4, 2), ConfigError);
  EXPECT_THROW(find_irreducible(2, 0), ConfigError);
}

TEST(IsIrreducible, KnownReducible) {
  EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));  // (x+1)^2
  EXPECT_FALSE(is_irreducible(3, {2, 0, 1}));  // x^2 - 1
  EXPECT_TRUE(is_irreducible(2, {1, 1, 0, 1}));
}

TEST(FieldConstruction, Validation) {
  EXPECT_THROW(Field(FieldSpec{6, 1, {}}), ConfigError);
  EXPECT_THROW(Field(FieldSpec{2, 2, {1, 0, 1}}), ConfigError);
  EXPECT_THROW(Field(FieldSpec{2, 2, {1, 1}}), ConfigError);
  EXPECT_THROW(Field::of_order(6), ConfigError);
  EXPECT_THROW(Field::of_order(1u << 17), ConfigError);
  EXPECT_EQ(Field::of_order(9).order(), 9u);
  EXPECT_EQ(Field::of_order(9).characteristic(), 3u);
  EXPECT_EQ(Field::of_order(8).degree(), 3u);
}

TEST(FieldArith, SpecExamples) {
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(f5.mul(3, 4), 2u);
  const Field f4(FieldSpec{2, 2, {1, 1, 1}});
  EXPECT_EQ(f4.mul(2, 2), 3u);
  EXPECT_EQ(Field::of_order(7).inv(3), 5u);
  EXPECT_EQ(f4.inv(2), 3u);
  for (std::uint32_t q : acceptance_orders()) {
    const Field f = Field::of_order(q);
    EXPECT_EQ(f.inv(1), 1u);
    for (Raw a = 0; a < q; ++a) EXPECT_EQ(f.add(a, f.neg(a)), 0u);
  }
}

TEST(FieldArith, InverseOfZeroIsDomainError) {
  EXPECT_THROW(Field::of_order(4).inv(0), DomainError);
  EXPECT_THROW(Field::of_order(4).div(1, 0), DomainError);
}

TEST(FieldArith, EnumerateElements) {
  auto values = [](const Field& f) {
    std::vector<Raw> out;
    for (const auto& e : f.elements()) out.push_back(e.value());
    return out;
  };
  EXPECT_EQ(values(Field::of_order(2)), (std::vector<Raw>{0, 1}));
  EXPECT_EQ(values(Field::of_order(4)), (std::vector<Raw>{0, 1, 2, 3}));
  EXPECT_EQ(values(Field::of_order(5)), (std::vector<Raw>{0, 1, 2, 3, 4}));
}

TEST(FieldElementOps, CrossFieldRejected) {
  const Field a = Field::of_order(5);
  const Field b = Field::of_order(7);
  EXPECT_THROW(a.element(1) + b.element(1), FieldMismatch);
  EXPECT_THROW(a.element(1) * b.element(1), FieldMismatch);
  EXPECT_THROW(a.element(1) == b.element(1), FieldMismatch);
  EXPECT_EQ(a.element(2) * a.element(3), a.one());
  EXPECT_EQ(-a.element(2), a.element(3));
  EXPECT_EQ(a.element(2).inv(), a.element(3));
  EXPECT_THROW(a.element(9), ConfigError);
}

TEST(FieldElementOps, EqualSpecsInteroperate) {
  const Field a = Field::of_order(8);
  const Field b = Field::of_order(8);
  EXPECT_EQ(a, b);
  EXPECT_EQ((a.element(3) + b.element(5)).value(), a.add(3, 5));
}

// Residue-polynomial encoding means addition is digitwise mod p.
TEST(FieldArith, AdditionIsDigitwise) {
  for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    const std::uint32_t p = f.characteristic();
    for (Raw a = 0; a < q; ++a) {
      for (Raw b = 0; b < q; ++b) {
        Raw expect = 0, scale = 1;
        for (Raw x = a, y = b; x || y; x /= p, y /= p, scale *= p) expect += ((x % p + y % p) % p) * scale;
        ASSERT_EQ(f.add(a, b), expect);
      }
    }
  }
}

TEST(FieldProperties, AxiomsOnRandomTriples) {
  Rng rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 27u, 49u, 256u, 65536u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 1000; ++i) {
      const Raw a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.sub(f.add(a, b), b), a);
    }
  }
}

TEST(FieldProperties, InversesAndFrobenius) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 121u, 243u}) {
    const Field f = Field::of_order(q);
    for (Raw a = 0; a < q; ++a) {
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      ASSERT_EQ(f.pow(a, q), a);
    }
  }
}

TEST(FieldProperties, FromIntegerReducesModP) {
  const Field f = Field::of_order(9);
  EXPECT_EQ(f.from_integer(0), 0u);
  EXPECT_EQ(f.from_integer(4), 1u);
  EXPECT_EQ(f.from_integer(3), 0u);
}

}  // namespace
