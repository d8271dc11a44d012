#include <gtest/gtest.h>

#include <numeric>

#include "qbarnes/characters.hpp"
#include "test_support.hpp"

namespace qbarnes {
namespace {

TEST(Characters, Examples) {
  const auto trivial = DirichletCharacter::trivial(7);
  for (long x = 1; x < 7; ++x) EXPECT_EQ(trivial.rational_value(x), 1);
  EXPECT_EQ(trivial.rational_value(14), 0);
  const auto chi4 = DirichletCharacter::quadratic(4);
  EXPECT_EQ(chi4.rational_value(1), 1);
  EXPECT_EQ(chi4.rational_value(3), -1);
  EXPECT_EQ(chi4.rational_value(2), 0);
  EXPECT_EQ(chi4.rational_value(-1), -1);
  const auto chi3 = DirichletCharacter::quadratic(3);
  EXPECT_EQ(chi3.rational_value(2), -1);
  EXPECT_THROW(DirichletCharacter::quadratic(5), PreconditionError);
}

TEST(Characters, ParseLabel) {
  EXPECT_EQ(parse_character_label("trivial:1").modulus(), 1);
  EXPECT_EQ(parse_character_label("quadratic:4").rational_value(3), -1);
  EXPECT_THROW(parse_character_label("quadratic"), PreconditionError);
  EXPECT_THROW(parse_character_label("cubic:7"), PreconditionError);
  EXPECT_THROW(parse_character_label("trivial:x"), PreconditionError);
  EXPECT_THROW(parse_character_label("trivial:0"), PreconditionError);
}

TEST(Characters, Validation) {
  EXPECT_THROW(DirichletCharacter::from_values(4, {1, 1, 0, -1}), PreconditionError);   // nonzero at 0
  EXPECT_THROW(DirichletCharacter::from_values(4, {0, -1, 0, -1}), PreconditionError);  // chi(1) != 1
  EXPECT_THROW(DirichletCharacter::from_values(5, {0, 1, -1, 1, 1}), PreconditionError);  // not multiplicative
  EXPECT_THROW(DirichletCharacter::from_values(4, {0, 1, 0, 2}), PreconditionError);
  // Order 4 needs an embedding prime with 4 | p - 1.
  EXPECT_THROW(DirichletCharacter::from_generator(5, 4, 2, 1), PreconditionError);
  EXPECT_THROW(DirichletCharacter::from_generator(5, 4, 2, 1, 7), PreconditionError);
  EXPECT_NO_THROW(DirichletCharacter::from_generator(5, 4, 2, 1, 13));
  EXPECT_THROW(DirichletCharacter::from_generator(8, 2, 3, 1), PreconditionError);  // (Z/8)^* is not cyclic
  EXPECT_THROW(DirichletCharacter::from_generator(5, 4, 4, 1, 5), PreconditionError);  // 4 has order 2
}

TEST(Characters, TeichmullerMatchesLift) {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const PadicContext ctx(p, 6);
    const auto omega = DirichletCharacter::teichmuller(p);
    for (long x = 1; x < 3 * p; ++x) {
      if (x % p == 0) {
        EXPECT_TRUE(omega.padic_value(x, ctx).is_zero());
        continue;
      }
      const PadicNumber w = omega.padic_value(x, ctx);
      EXPECT_TRUE(difference_valuation(w, teichmuller(x, ctx)).capped) << "p=" << p << " x=" << x;
    }
  }
}

TEST(Characters, GeneratorFormMatchesTeichmuller) {
  // 2 is the least primitive root mod 5.
  const auto from_gen = DirichletCharacter::from_generator(5, 4, 2, 1, 5);
  const auto omega = DirichletCharacter::teichmuller(5);
  for (long x = 0; x < 5; ++x) EXPECT_EQ(from_gen.exponent(x), omega.exponent(x));
}

TEST(Characters, RootOfUnity) {
  for (long p : {3L, 5L, 7L, 13L}) {
    const PadicContext ctx(p, 5);
    for (long m = 1; m <= p - 1; ++m) {
      if ((p - 1) % m) {
        EXPECT_THROW(root_of_unity(m, ctx), PreconditionError);
        continue;
      }
      const PadicNumber z = root_of_unity(m, ctx);
      EXPECT_TRUE(difference_valuation(padic_pow(z, m), PadicNumber::one(ctx)).capped);
      for (long j = 1; j < m; ++j)
        EXPECT_FALSE(difference_valuation(padic_pow(z, j), PadicNumber::one(ctx)).capped);
    }
    if (p > 2) EXPECT_TRUE(difference_valuation(root_of_unity(2, ctx), to_padic(-1, ctx)).capped);
  }
}

TEST(Characters, MultiplicativityProperty) {
  testing::RationalSampler s(21);
  const PadicContext ctx(13, 4);
  const std::vector<DirichletCharacter> chars = {
      DirichletCharacter::quadratic(4), DirichletCharacter::quadratic(3), DirichletCharacter::teichmuller(13),
      DirichletCharacter::from_generator(13, 6, 2, 1, 13),
      DirichletCharacter::teichmuller(13) * DirichletCharacter::quadratic(4),
      DirichletCharacter::teichmuller(13).power(5)};
  for (const auto& chi : chars) {
    for (int i = 0; i < 200; ++i) {
      const long x = s.integer(-500, 500), y = s.integer(-500, 500);
      const PadicNumber lhs = chi.padic_value(x * y, ctx);
      const PadicNumber rhs = chi.padic_value(x, ctx) * chi.padic_value(y, ctx);
      if (lhs.is_zero() || rhs.is_zero()) {
        EXPECT_EQ(lhs.is_zero(), rhs.is_zero());
      } else {
        EXPECT_TRUE(difference_valuation(lhs, rhs).capped) << chi.to_string() << " x=" << x << " y=" << y;
      }
    }
  }
}

TEST(Characters, ProductAndPower) {
  const auto omega = DirichletCharacter::teichmuller(5);
  const auto chi = DirichletCharacter::quadratic(4);
  const auto prod = chi * omega.power(3);
  EXPECT_EQ(prod.modulus(), 20);
  EXPECT_EQ(prod.order(), 4);
  const PadicContext ctx(5, 5);
  for (long x = 0; x < 20; ++x) {
    const PadicNumber expected = to_padic(chi.rational_value(x), ctx) * padic_pow(omega.padic_value(x, ctx), 3);
    const PadicNumber got = prod.padic_value(x, ctx);
    if (expected.is_zero()) {
      EXPECT_TRUE(got.is_zero());
    } else {
      EXPECT_TRUE(difference_valuation(got, expected).capped) << x;
    }
  }
  EXPECT_EQ(omega.power(4).exponent(3), 0);
  EXPECT_THROW(omega.padic_value(2, PadicContext(7, 3)), PreconditionError);
  EXPECT_THROW(omega * DirichletCharacter::teichmuller(7), PreconditionError);
}

TEST(CharacterSum, RationalAndPadic) {
  CharacterSum s(2);
  s.add(0, 3);
  s.add(1, BigRational(1, 2));
  EXPECT_EQ(s.to_rational(), BigRational(5, 2));
  EXPECT_EQ(s.rotated(1).to_rational(), BigRational(-5, 2));
  EXPECT_EQ((s - s).to_rational(), 0);
  EXPECT_TRUE((s - s).valuation_bound(PadicContext(5, 3)).valuation.is_infinite());

  const PadicContext ctx(5, 6);
  CharacterSum t(4, 5);
  t.add(1, 2);
  t.add(3, BigRational(5, 3));
  const PadicNumber z = root_of_unity(4, ctx);
  const PadicNumber expected = to_padic(2, ctx) * z + to_padic(BigRational(5, 3), ctx) * padic_pow(z, 3);
  EXPECT_TRUE(difference_valuation(t.to_padic(ctx), expected).capped);
  // Mixing orders lifts to the lcm.
  const CharacterSum mixed = t + s;
  EXPECT_EQ(mixed.order(), 4);
  EXPECT_TRUE(difference_valuation(mixed.to_padic(ctx), expected + to_padic(BigRational(5, 2), ctx)).capped);
  EXPECT_THROW(t.to_rational(), PreconditionError);
  EXPECT_THROW(t.to_padic(PadicContext(13, 3)), PreconditionError);
}

TEST(CharacterSum, ValuationBoundSeesCancellation) {
  // zeta_4^2 = -1, so z^0 + z^2 vanishes.
  CharacterSum t(4, 5);
  t.add(0, 7);
  t.add(2, 7);
  const auto bound = t.valuation_bound(PadicContext(5, 4));
  EXPECT_TRUE(bound.capped);
  EXPECT_EQ(bound.valuation, 4);
}

}  // namespace
}  // namespace qbarnes
