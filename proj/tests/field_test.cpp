#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "rcards/errors.hpp"
#include "rcards/field.hpp"

namespace rcards {
namespace {

using Coeffs = std::vector<std::uint32_t>;

const std::vector<std::uint64_t> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

TEST(Field, ModulusOfGf4IsXSquaredPlusXPlusOne) {
  const auto f = make_field(4);
  EXPECT_EQ(f.characteristic(), 2u);
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(f.modulus(), (Coeffs{1, 1, 1}));
}

TEST(Field, PrimeFieldHasLinearModulusX) {
  const auto f = make_field(5);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.order(), 5u);
  EXPECT_EQ(f.modulus(), (Coeffs{0, 1}));
}

TEST(Field, ModulusOfGf8MatchesFirstRootlessCubic) {
  const auto f = make_field(8);
  EXPECT_EQ(f.modulus(), (Coeffs{1, 1, 0, 1}));
  EXPECT_EQ(f.modulus(), oracle::first_rootless_monic(2, 3));
}

TEST(Field, ModulusAgreesWithRootSearchForLowDegrees) {
  for (std::uint64_t q : {4, 8, 9, 25, 27, 49, 125}) {
    const auto f = make_field(q);
    EXPECT_EQ(f.modulus(), oracle::first_rootless_monic(f.characteristic(), f.degree())) << "q=" << q;
  }
}

TEST(Field, RejectsNonPrimePowers) {
  for (std::uint64_t q : {0, 1, 6, 10, 12, 36, 100}) EXPECT_THROW(make_field(q), NotPrimePower) << q;
}

TEST(Field, RejectsOrdersAboveCap) {
  EXPECT_THROW(make_field(std::uint64_t{1} << 21), SizeGuard);
  EXPECT_NO_THROW(make_field(std::uint64_t{1} << 20));
}

TEST(Field, DecomposePrimePower) {
  auto pp = decompose_prime_power(243);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->prime, 3u);
  EXPECT_EQ(pp->exponent, 5u);
  EXPECT_FALSE(decompose_prime_power(1));
  EXPECT_FALSE(decompose_prime_power(18));
  EXPECT_TRUE(is_prime_power(2));
  EXPECT_TRUE(is_prime_power(1'000'003));
}

TEST(Field, Gf4AlphaSquaredIsAlphaPlusOne) {
  const auto f = make_field(4);
  const auto alpha = f.element(2);
  EXPECT_EQ(alpha * alpha, f.element(3));
  EXPECT_EQ((alpha * alpha).coeffs(), (Coeffs{1, 1}));
  EXPECT_EQ(alpha * (alpha * alpha), f.one());
}

TEST(Field, Gf4MultiplicationTableMatchesPolynomialReduction) {
  const auto f = make_field(4);
  const oracle::PolyField ref{2, 2, {1, 1, 1}};
  for (std::uint32_t x = 0; x < 4; ++x)
    for (std::uint32_t y = 0; y < 4; ++y) {
      EXPECT_EQ(f.mul(x, y), ref.mul(x, y)) << x << "*" << y;
      EXPECT_EQ(f.add(x, y), ref.add(x, y)) << x << "+" << y;
    }
}

TEST(Field, ArithmeticMatchesPolynomialOracle) {
  for (std::uint64_t q : kSmallOrders) {
    const auto f = make_field(q);
    const oracle::PolyField ref{f.characteristic(), f.degree(), f.modulus()};
    for (std::uint32_t x = 0; x < q; ++x)
      for (std::uint32_t y = 0; y < q; ++y) {
        ASSERT_EQ(f.mul(x, y), ref.mul(x, y)) << "q=" << q;
        ASSERT_EQ(f.add(x, y), ref.add(x, y)) << "q=" << q;
      }
  }
}

TEST(Field, AdditiveIdentity) {
  const auto f = make_field(9);
  for (const auto& x : f.elements()) EXPECT_EQ(x + f.zero(), x);
}

TEST(Field, InverseOfZeroThrows) {
  const auto f = make_field(4);
  EXPECT_THROW(f.zero().inverse(), DivisionByZero);
  EXPECT_THROW(f.one() / f.zero(), DivisionByZero);
  EXPECT_THROW(f.inv(0), DivisionByZero);
}

TEST(Field, MixedFieldsThrow) {
  const auto f4 = make_field(4);
  const auto f5 = make_field(5);
  EXPECT_THROW(f4.one() + f5.one(), FieldMismatch);
  EXPECT_THROW(f4.one() * f5.one(), FieldMismatch);
  EXPECT_THROW(f4.one() - f5.one(), FieldMismatch);
  EXPECT_THROW(f4.one() / f5.one(), FieldMismatch);
}

TEST(Field, ElementIndexOutOfRangeThrows) {
  const auto f = make_field(4);
  EXPECT_THROW(f.element(4), IndexOutOfRange);
}

TEST(Field, ElementsInDigitOrder) {
  const auto f2 = make_field(2);
  ASSERT_EQ(f2.elements().size(), 2u);
  EXPECT_EQ(f2.elements()[0], f2.zero());
  EXPECT_EQ(f2.elements()[1], f2.one());

  const auto f4 = make_field(4);
  const auto e = f4.elements();
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0].coeffs(), (Coeffs{0, 0}));
  EXPECT_EQ(e[1].coeffs(), (Coeffs{1, 0}));
  EXPECT_EQ(e[2].coeffs(), (Coeffs{0, 1}));
  EXPECT_EQ(e[3].coeffs(), (Coeffs{1, 1}));
  EXPECT_EQ(e[2] * e[2], e[3]);

  const auto f9 = make_field(9);
  std::set<Coeffs> seen;
  for (const auto& x : f9.elements()) seen.insert(x.coeffs());
  EXPECT_EQ(seen.size(), 9u);
}

TEST(Field, CoeffsRoundTrip) {
  const auto f = make_field(27);
  for (std::uint32_t x = 0; x < 27; ++x) {
    const auto c = f.coeffs(x);
    ASSERT_EQ(c.size(), 3u);
    for (auto digit : c) EXPECT_LT(digit, 3u);
    EXPECT_EQ(f.index_of(c), x);
    EXPECT_EQ(f.from_coeffs(c).index(), x);
  }
}

TEST(Field, AxiomsHoldExhaustively) {
  for (std::uint64_t q : kSmallOrders) {
    const auto f = make_field(q);
    const auto e = f.elements();
    for (const auto& x : e) {
      ASSERT_EQ(x + (-x), f.zero());
      ASSERT_EQ(x * f.one(), x);
      if (!x.is_zero()) {
        ASSERT_EQ(x * x.inverse(), f.one()) << "q=" << q;
      }
      for (const auto& y : e) {
        ASSERT_EQ(x + y, y + x);
        ASSERT_EQ(x * y, y * x);
        ASSERT_EQ((x - y) + y, x);
        if (!y.is_zero()) {
          ASSERT_EQ((x / y) * y, x);
        }
        for (const auto& z : e) {
          ASSERT_EQ((x + y) + z, x + (y + z));
          ASSERT_EQ((x * y) * z, x * (y * z));
          ASSERT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}

TEST(Field, SumOfAllElementsVanishes) {
  for (std::uint64_t q : kSmallOrders) {
    if (q == 2) continue;
    const auto f = make_field(q);
    auto sum = f.zero();
    for (const auto& x : f.elements()) sum = sum + x;
    EXPECT_EQ(sum, f.zero()) << "q=" << q;
  }
}

TEST(Field, ConstructionIsDeterministic) {
  for (std::uint64_t q : kSmallOrders) {
    const auto f = make_field(q);
    const auto g = make_field(q);
    EXPECT_EQ(f.modulus(), g.modulus());
    EXPECT_EQ(f, g);
    EXPECT_EQ(f.one() + g.one(), g.one() + f.one());
  }
}

}  // namespace
}  // namespace rcards
