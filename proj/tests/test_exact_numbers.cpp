#include <gtest/gtest.h>

#include "qbarnes/padic.hpp"
#include "qbarnes/rational.hpp"
#include "test_support.hpp"

namespace qbarnes {
namespace {

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(BigRational(9, 2), 3), 2);
  EXPECT_EQ(valuation(BigRational(1), 5), 0);
  EXPECT_TRUE(valuation(BigRational(0), 7).is_infinite());
  EXPECT_EQ(valuation(BigRational(5, 50), 5), -1);
}

TEST(Valuation, UltrametricAndMultiplicative) {
  testing::RationalSampler s(11);
  for (int i = 0; i < 500; ++i) {
    const BigRational a = s.rational(60);
    const BigRational b = s.rational(60);
    if (a == 0 || b == 0) continue;
    for (long p : {3L, 5L, 7L}) {
      const Valuation va = valuation(a, p), vb = valuation(b, p);
      EXPECT_EQ(valuation(BigRational(a * b), p).value(), va.value() + vb.value());
      const Valuation vs = valuation(BigRational(a + b), p);
      EXPECT_GE(vs, std::min(va, vb));
      if (va != vb) EXPECT_EQ(vs, std::min(va, vb));
    }
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_EQ(to_string(BigRational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(parse_rational("x"), PreconditionError);
  EXPECT_THROW(parse_rational("1/"), PreconditionError);
}

TEST(PadicContext, RejectsTwoAndComposites) {
  EXPECT_THROW(PadicContext(2, 4), PreconditionError);
  EXPECT_THROW(PadicContext(9, 4), PreconditionError);
  EXPECT_THROW(PadicContext(5, 0), PreconditionError);
  EXPECT_NO_THROW(PadicContext(7, 3));
}

TEST(ToPadic, Examples) {
  const PadicContext ctx(3, 2);
  // Oracle: the inverse of 2 modulo 9 by exhaustive search.
  long inverse = 0;
  for (long t = 1; t < 9; ++t) {
    if (2 * t % 9 == 1) inverse = t;
  }
  const PadicNumber half = to_padic(BigRational(1, 2), ctx);
  EXPECT_EQ(half.valuation(), 0);
  EXPECT_EQ(half.unit(), inverse);
  EXPECT_EQ(half.unit(), 5);

  const PadicNumber three = to_padic(3, ctx);
  EXPECT_EQ(three.valuation(), 1);
  EXPECT_EQ(three.unit(), 1);
  EXPECT_TRUE(to_padic(0, ctx).is_zero());
}

TEST(PadicArithmetic, Examples) {
  const PadicContext ctx5(5, 4);
  const PadicNumber five = to_padic(1, ctx5) + to_padic(4, ctx5);
  EXPECT_EQ(five.valuation(), 1);
  EXPECT_EQ(five.unit(), 1);
  EXPECT_EQ(five.relative_precision(), 3);  // one digit lost to the carry

  const PadicContext ctx(5, 2);
  const PadicNumber a = PadicNumber::from_unit(ctx, 0, 7, 2);
  const PadicNumber b = PadicNumber::from_unit(ctx, 1, 2, 2);
  const PadicNumber prod = a * b;
  EXPECT_EQ(prod.valuation(), 1);
  EXPECT_EQ(prod.unit(), 14);

  const PadicContext ctx3(3, 5);
  const PadicNumber x = to_padic(BigRational(-18, 7), ctx3);
  const PadicNumber one = x / x;
  EXPECT_EQ(one.valuation(), 0);
  EXPECT_EQ(one.unit(), 1);
}

TEST(PadicArithmetic, DivisionByZeroAndPrecisionExhaustion) {
  const PadicContext ctx(5, 3);
  const PadicNumber x = to_padic(BigRational(2, 3), ctx);
  EXPECT_THROW(x / PadicNumber::zero(ctx), PreconditionError);
  EXPECT_THROW(x - x, PrecisionExhausted);
  // 1 and 1 + 5^3 agree to every tracked digit.
  EXPECT_THROW(to_padic(126, ctx) - to_padic(1, ctx), PrecisionExhausted);
  const auto bound = difference_valuation(to_padic(126, ctx), to_padic(1, ctx));
  EXPECT_TRUE(bound.capped);
  EXPECT_EQ(bound.valuation, 3);
}

TEST(PadicArithmetic, PrecisionNarrowsUnderCancellation) {
  const PadicContext ctx(3, 6);
  const PadicNumber a = to_padic(BigRational(1, 2), ctx);
  const PadicNumber b = to_padic(BigRational(1, 2) + 27, ctx);
  const PadicNumber d = b - a;
  EXPECT_EQ(d.valuation(), 3);
  EXPECT_EQ(d.relative_precision(), 3);
  EXPECT_EQ(d.unit(), 1);
}

TEST(PadicArithmetic, ToPadicIsRingHomomorphism) {
  testing::RationalSampler s(23);
  for (long p : {3L, 5L, 7L}) {
    const PadicContext ctx(p, 6);
    for (int i = 0; i < 200; ++i) {
      const BigRational x = s.rational(40);
      const BigRational y = s.rational(40);
      const PadicNumber px = to_padic(x, ctx), py = to_padic(y, ctx);
      const BigRational sum = x + y;
      const BigRational prod = x * y;
      if (sum != 0) {
        // The p-adic sum may carry fewer digits; compare at the joint precision.
        try {
          const PadicNumber ps = px + py;
          EXPECT_GE(difference_valuation(ps, to_padic(sum, ctx)).valuation, ps.absolute_precision());
        } catch (const PrecisionExhausted&) {
          EXPECT_GE(valuation(sum, p), std::min(px.absolute_precision(), py.absolute_precision()));
        }
      }
      const PadicNumber pp = px * py;
      EXPECT_TRUE(difference_valuation(pp, to_padic(prod, ctx)).capped || prod == 0);
    }
  }
}

TEST(Teichmuller, Examples) {
  const PadicContext ctx(5, 2);
  EXPECT_EQ(teichmuller(1, ctx).unit(), 1);
  // Oracle: the unique t mod 25 with t = 2 mod 5 and t^4 = 1 mod 25.
  long oracle = -1;
  for (long t = 0; t < 25; ++t) {
    if (t % 5 == 2 && (t * t % 25) * (t * t % 25) % 25 == 1) oracle = t;
  }
  EXPECT_EQ(teichmuller(2, ctx).unit(), oracle);
  EXPECT_EQ(teichmuller(2, ctx).unit(), 7);
  EXPECT_EQ(teichmuller(4, ctx).unit(), 24);
  EXPECT_THROW(teichmuller(10, ctx), PreconditionError);
}

TEST(Teichmuller, Multiplicative) {
  for (long p : {3L, 5L, 7L, 11L}) {
    const PadicContext ctx(p, 5);
    for (long x = 1; x < 3 * p; ++x) {
      for (long y = 1; y < 3 * p; ++y) {
        if (x % p == 0 || y % p == 0) continue;
        const PadicNumber lhs = teichmuller(x * y, ctx);
        const PadicNumber rhs = teichmuller(x, ctx) * teichmuller(y, ctx);
        EXPECT_TRUE(difference_valuation(lhs, rhs).capped);
        EXPECT_TRUE(difference_valuation(padic_pow(lhs, p - 1), PadicNumber::one(ctx)).capped);
      }
    }
  }
}

TEST(PadicLogExp, Examples) {
  const PadicContext ctx5(5, 4);
  EXPECT_TRUE(padic_log(PadicNumber::one(ctx5)).is_zero());
  EXPECT_EQ(padic_exp(PadicNumber::zero(ctx5)).unit(), 1);

  const PadicNumber one_plus_p = to_padic(6, ctx5);
  const PadicNumber log6 = padic_log(one_plus_p);
  EXPECT_EQ(log6.valuation(), 1);
  EXPECT_TRUE(difference_valuation(padic_exp(log6), one_plus_p).capped);

  const PadicContext ctx7(7, 3);
  const PadicNumber seven = to_padic(7, ctx7);
  EXPECT_TRUE(difference_valuation(padic_log(padic_exp(seven)), seven).capped);
}

TEST(PadicLogExp, LogMatchesRationalPartialSums) {
  // Oracle: truncated series evaluated in exact rational arithmetic, far past
  // the point where the tail vanishes modulo p^M.
  for (long p : {3L, 5L}) {
    const PadicContext ctx(p, 5);
    for (long c : {1L, 2L, -1L}) {
      const BigRational y(c * p);
      BigRational series = 0;
      for (long n = 1; n <= 40; ++n) {
        BigRational term = pow(y, n) / BigRational(n);
        series += n % 2 == 1 ? term : BigRational(-term);
      }
      const PadicNumber lg = padic_log(to_padic(1 + y, ctx));
      EXPECT_TRUE(difference_valuation(lg, to_padic(series, ctx)).capped);
    }
  }
}

TEST(PadicLogExp, HomomorphismProperties) {
  testing::RationalSampler s(5);
  for (long p : {3L, 5L, 7L}) {
    const PadicContext ctx(p, 6);
    for (int i = 0; i < 60; ++i) {
      const BigRational a = BigRational(p) * s.rational(20);
      const BigRational b = BigRational(p) * s.rational(20);
      if (a == 0 || b == 0 || a + b == 0) continue;
      if (valuation(a, p) < 1 || valuation(b, p) < 1) continue;
      const PadicNumber pa = to_padic(a, ctx), pb = to_padic(b, ctx);
      const auto lhs = padic_exp(pa) * padic_exp(pb);
      const auto rhs = padic_exp(pa + pb);
      EXPECT_GE(difference_valuation(lhs, rhs).valuation, 6);

      const PadicNumber x = to_padic(1 + a, ctx), y = to_padic(1 + b, ctx);
      const auto lxy = padic_log(x * y);
      const auto sum = padic_log(x) + padic_log(y);
      EXPECT_GE(difference_valuation(lxy, sum).valuation, 6);
    }
  }
}

TEST(PadicPow, Examples) {
  const PadicContext ctx(5, 3);
  const PadicNumber x = to_padic(6, ctx);
  EXPECT_EQ(padic_pow(x, 0L).unit(), 1);
  EXPECT_TRUE(padic_pow(x, PadicNumber::zero(ctx)).unit() == 1);
  const PadicNumber by_squaring = padic_pow(x, 5L);
  const PadicNumber by_product = x * x * x * x * x;
  const PadicNumber by_exp_log = padic_pow(x, to_padic(5, ctx));
  EXPECT_TRUE(difference_valuation(by_squaring, by_product).capped);
  EXPECT_TRUE(difference_valuation(by_squaring, by_exp_log).capped);

  const PadicContext ctx3(3, 4);
  // (1+p)^(p^n) = 1 mod p^(n+1) by the binomial theorem, p = 3, n = 2.
  const PadicNumber power = padic_pow(to_padic(4, ctx3), 9L);
  EXPECT_GE(difference_valuation(power, PadicNumber::one(ctx3)).valuation, 3);
  EXPECT_EQ(padic_pow(to_padic(BigRational(3, 2), ctx3), -2L).valuation(), -2);
}

TEST(PadicPow, IntegerAndExpLogRoutesAgree) {
  for (long p : {3L, 5L, 7L}) {
    const PadicContext ctx(p, 5);
    for (long base = 1; base < 4 * p; base += p) {
      if (base == 1) continue;
      for (long s = -6; s <= 12; ++s) {
        const PadicNumber x = to_padic(base, ctx);
        const auto a = padic_pow(x, s);
        const auto b = padic_pow(x, to_padic(s, ctx));
        EXPECT_GE(difference_valuation(a, b).valuation, 5) << p << " " << base << " " << s;
      }
    }
  }
  const PadicContext ctx(5, 3);
  EXPECT_THROW(padic_pow(to_padic(2, ctx), to_padic(3, ctx)), PreconditionError);
  EXPECT_THROW(padic_pow(to_padic(6, ctx), to_padic(BigRational(1, 5), ctx)), PreconditionError);
  EXPECT_THROW(padic_exp(to_padic(2, ctx)), PreconditionError);
  EXPECT_THROW(padic_log(to_padic(5, ctx)), PreconditionError);
}

}  // namespace
}  // namespace qbarnes
