#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permsign/classnum.hpp"

using namespace permsign;

TEST(Discriminant, Validation) {
  EXPECT_NO_THROW(Discriminant(-3));
  EXPECT_NO_THROW(Discriminant(-4));
  EXPECT_THROW(Discriminant(-5), std::invalid_argument);
  EXPECT_THROW(Discriminant(-2), std::invalid_argument);
  EXPECT_THROW(Discriminant(0), std::invalid_argument);
  EXPECT_THROW(Discriminant(5), std::invalid_argument);
}

TEST(Discriminant, Fundamental) {
  EXPECT_TRUE(Discriminant(-3).is_fundamental());
  EXPECT_TRUE(Discriminant(-4).is_fundamental());
  EXPECT_TRUE(Discriminant(-52).is_fundamental());
  EXPECT_TRUE(Discriminant(-8).is_fundamental());
  EXPECT_FALSE(Discriminant(-12).is_fundamental());  // 4 * -3
  EXPECT_FALSE(Discriminant(-16).is_fundamental());
  EXPECT_FALSE(Discriminant(-27).is_fundamental());
  EXPECT_FALSE(Discriminant(-36).is_fundamental());  // 4 * -9
}

TEST(ReducedForms, Examples) {
  EXPECT_EQ(reduced_forms(Discriminant(-4)), (std::vector<QuadraticForm>{{1, 0, 1}}));
  EXPECT_EQ(reduced_forms(Discriminant(-3)), (std::vector<QuadraticForm>{{1, 1, 1}}));
  EXPECT_EQ(reduced_forms(Discriminant(-52)),
            (std::vector<QuadraticForm>{{1, 0, 13}, {2, 2, 7}}));
}

TEST(ClassNumber, Examples) {
  EXPECT_EQ(class_number(Discriminant(-52)), 2u);
  EXPECT_EQ(class_number(Discriminant(-68)), 4u);
  EXPECT_EQ(class_number(Discriminant(-7)), 1u);
  EXPECT_EQ(class_number(Discriminant(-20)), 2u);
  EXPECT_EQ(class_number(Discriminant(-23)), 3u);
}

TEST(ClassNumberDirichlet, Examples) {
  EXPECT_EQ(class_number_dirichlet(Discriminant(-52)), 2u);
  EXPECT_EQ(class_number_dirichlet(Discriminant(-7)), 1u);
  EXPECT_EQ(class_number_dirichlet(Discriminant(-68)), 4u);
  EXPECT_THROW(class_number_dirichlet(Discriminant(-12)), std::invalid_argument);
  EXPECT_THROW(class_number_dirichlet(Discriminant(-4)), std::invalid_argument);
  EXPECT_THROW(class_number_dirichlet(Discriminant(-3)), std::invalid_argument);
}

TEST(ClassNumber, FormsAgreeWithDirichletDownTo10000) {
  int checked = 0;
  for (std::int64_t D = -7; D >= -10000; --D) {
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    const Discriminant d(D);
    if (!d.is_fundamental()) continue;
    ASSERT_EQ(class_number(d), class_number_dirichlet(d)) << D;
    ++checked;
  }
  EXPECT_GT(checked, 3000);
}

TEST(ClassNumber, AgreesWithBruteForceEnumeration) {
  // Includes non-fundamental discriminants (primitive forms only).
  for (std::int64_t D = -3; D >= -600; --D) {
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    ASSERT_EQ(class_number(Discriminant(D)), oracle::class_number(D)) << D;
  }
}

TEST(ReducedForms, EveryFormSatisfiesInvariants) {
  for (std::int64_t D = -3; D >= -5000; --D) {
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    for (const auto& f : reduced_forms(Discriminant(D))) {
      ASSERT_EQ(f.discriminant(), D);
      ASSERT_TRUE(f.is_reduced());
      ASSERT_TRUE(f.is_primitive());
    }
  }
}

TEST(Kronecker, MatchesJacobiOnOddAndKnownValuesAtTwo) {
  EXPECT_EQ(kronecker(-52, 2), 0);
  EXPECT_EQ(kronecker(-7, 2), 1);   // -7 = 1 mod 8
  EXPECT_EQ(kronecker(-3, 2), -1);  // -3 = 5 mod 8
  EXPECT_EQ(kronecker(-7, 4), 1);
  for (std::uint64_t n = 1; n < 200; n += 2) EXPECT_EQ(kronecker(-23, n), jacobi(-23, n));
}

TEST(ClassNumberForPrime, Examples) {
  const auto a = class_number_for_prime(OddPrime(13));
  EXPECT_EQ(a.discriminant.value(), -52);
  EXPECT_EQ(a.class_number, 2u);
  const auto b = class_number_for_prime(OddPrime(7));
  EXPECT_EQ(b.discriminant.value(), -7);
  EXPECT_EQ(b.class_number, 1u);
  const auto c = class_number_for_prime(OddPrime(17));
  EXPECT_EQ(c.discriminant.value(), -68);
  EXPECT_EQ(c.class_number, 4u);
}

TEST(ClassNumberForPrime, ResidueClassesMod4UpTo2000) {
  for (std::uint64_t pv : oracle::primes_in(3, 2000)) {
    const std::uint64_t h = class_number_for_prime(OddPrime(pv)).class_number;
    if (pv % 8 == 1) {
      EXPECT_EQ(h % 4, 0u) << pv;
    } else if (pv % 8 == 5) {
      EXPECT_EQ(h % 4, 2u) << pv;
    } else if (pv > 3) {
      EXPECT_EQ(h % 2, 1u) << pv;
    }
  }
}
