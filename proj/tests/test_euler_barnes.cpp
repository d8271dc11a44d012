#include <gtest/gtest.h>

#include <algorithm>

#include "qbarnes/euler_barnes.hpp"
#include "qbarnes/series.hpp"
#include "test_support.hpp"

namespace qbarnes {
namespace {

TEST(HClosed, Examples) {
  const BarnesParams p({1}, 3, QBase(2));
  EXPECT_EQ(h_closed(0, 0, p), 1);
  EXPECT_EQ(h_closed(1, 0, p), BigRational(-3, 5));

  testing::RationalSampler s(1);
  for (int i = 0; i < 50; ++i) {
    const BigRational u = s.generic(), q = s.generic();
    if (q * u == 1) continue;
    const BarnesParams params({1}, u, QBase(q));
    EXPECT_EQ(h_closed(1, 0, params), u / (1 - q * u));
    const BarnesParams multi(s.parameters(3), u, QBase(q));
    try {
      EXPECT_EQ(h_closed(0, s.integer(-3, 3), multi), 1);
    } catch (const PoleError&) {
    }
  }
}

TEST(HClosed, SymmetricInParameters) {
  testing::RationalSampler s(2);
  for (int i = 0; i < 20; ++i) {
    auto a = s.parameters(3);
    const BigRational u = s.generic(), q = s.generic();
    std::sort(a.begin(), a.end());
    try {
      const BigRational ref = h_closed(5, 2, BarnesParams(a, u, QBase(q)));
      while (std::next_permutation(a.begin(), a.end()))
        EXPECT_EQ(h_closed(5, 2, BarnesParams(a, u, QBase(q))), ref);
    } catch (const PoleError&) {
    }
  }
}

TEST(HClosed, Errors) {
  // 1 - q u = 0 at l = 1.
  try {
    h_closed(2, 0, BarnesParams({1}, BigRational(1, 2), QBase(2)));
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("l = 1, j = 1"), std::string::npos);
  }
  EXPECT_THROW(h_closed(2, 0, BarnesParams({1}, 3, QBase(1))), PreconditionError);
  EXPECT_THROW(h_closed(2, FractionalArg(1, 2), BarnesParams({1}, 3, QBase(2, 3))), PreconditionError);
  EXPECT_THROW(BarnesParams({1, 0}, 3, QBase(2)), PreconditionError);
  EXPECT_THROW(BarnesParams({1}, 1, QBase(2)), PreconditionError);
  EXPECT_THROW(BarnesParams({}, 3, QBase(2)), PreconditionError);
}

TEST(HClosed, FractionalArgumentMatchesRootBase) {
  // H_n(m/f, u, q^f) with q^f as a QBase equals the same number with q' = q^f
  // and an integer argument whenever f | m.
  testing::RationalSampler s(21);
  for (int i = 0; i < 20; ++i) {
    const BigRational u = s.generic(), q = s.generic();
    const long f = s.integer(2, 3);
    const long m = f * s.integer(-2, 2);
    const std::vector<long> a = s.parameters(2);
    try {
      EXPECT_EQ(h_closed(4, FractionalArg(m, f), BarnesParams(a, u, QBase(q, f))),
                h_closed(4, m / f, BarnesParams(a, u, QBase(pow(q, f)))));
    } catch (const PoleError&) {
    }
  }
}

TEST(HAddition, MatchesClosedForm) {
  testing::RationalSampler s(3);
  int checked = 0;
  while (checked < 15) {
    const BarnesParams params(s.parameters(static_cast<std::size_t>(s.integer(1, 3))), s.generic(),
                              QBase(s.generic()));
    try {
      for (unsigned n = 0; n <= 8; ++n) {
        EXPECT_EQ(h_addition(n, 0, params), h_closed(n, 0, params));
        for (long w = -2; w <= 5; ++w) EXPECT_EQ(h_addition(n, w, params), h_closed(n, w, params));
      }
      EXPECT_EQ(h_addition(0, 4, params), 1);
      ++checked;
    } catch (const PoleError&) {
    }
  }
}

TEST(HCarlitz, Examples) {
  const BigRational u(7, 3), q(-2, 5);
  EXPECT_EQ(h_carlitz(0, u, q), 1);
  EXPECT_EQ(h_carlitz(1, u, q), 1 / (u - q));
  // Recurrence at k = 2: q^2 H_2 + 2 q H_1 + 1 = u H_2.
  const BigRational h1 = 1 / (u - q);
  EXPECT_EQ(h_carlitz(2, u, q), (2 * q * h1 + 1) / (u - q * q));
  EXPECT_THROW(h_carlitz(2, BigRational(4), BigRational(2)), PoleError);
}

TEST(HCarlitz, BridgeToClosedForm) {
  testing::RationalSampler s(4);
  int checked = 0;
  while (checked < 10) {
    const BigRational u = s.generic(), q = s.generic();
    try {
      const BarnesParams params({1}, u, QBase(q));
      const auto carlitz = h_carlitz_sequence(10, 1 / u, q);
      for (unsigned k = 0; k <= 10; ++k) EXPECT_EQ(h_closed(k, 0, params), carlitz[k]);
      ++checked;
    } catch (const PoleError&) {
    }
  }
}

TEST(HRationalInQ, FirstOrderClosedForm) {
  const BigRational u(5, 2);
  const RationalFunctionQ f = h_rational_in_q(1, 0, {1}, u);
  // u/(1 - q u) = -1/(q - 1/u) with monic denominator.
  EXPECT_EQ(f.numerator(), Polynomial::constant(-1));
  EXPECT_EQ(f.denominator(), Polynomial({-1 / u, 1}));
  const RationalFunctionQ zero = h_rational_in_q(0, 3, {1, -2}, u);
  EXPECT_EQ(zero.numerator(), Polynomial::constant(1));
  EXPECT_EQ(zero.denominator(), Polynomial::constant(1));
}

TEST(HRationalInQ, EvaluationMatchesClosedForm) {
  testing::RationalSampler s(5);
  for (int i = 0; i < 8; ++i) {
    const BigRational u = s.generic();
    const std::size_t r = static_cast<std::size_t>(s.integer(1, 2));
    const auto a = s.parameters(r);
    const long w = s.integer(-2, 3);
    for (unsigned n = 0; n <= 6; ++n) {
      const RationalFunctionQ f = h_rational_in_q(n, w, a, u);
      EXPECT_EQ(f.denominator().leading(), 1);
      EXPECT_EQ(gcd(f.numerator(), f.denominator()).degree(), 0);
      for (int t = 0; t < 3; ++t) {
        const BigRational q = s.generic();
        try {
          EXPECT_EQ(f.evaluate(q), h_closed(n, w, BarnesParams(a, u, QBase(q))));
        } catch (const PoleError&) {
        }
      }
    }
  }
}

TEST(LimitQTo1, MatchesClassicalAtInverseU) {
  const BigRational u(-7, 3);
  EXPECT_EQ(limit_q_to_1(1, 0, {1}, u), u / (1 - u));
  EXPECT_EQ(classical_gf_coefficients(0, 1 / u, {1}, 1)[1], u / (1 - u));
  EXPECT_EQ(limit_q_to_1(0, 2, {1, 3}, u), 1);

  testing::RationalSampler s(6);
  for (int i = 0; i < 5; ++i) {
    const BigRational v = s.generic();
    const auto a = s.parameters(static_cast<std::size_t>(s.integer(1, 2)));
    const long w = s.integer(-2, 3);
    const auto classical = classical_gf_coefficients(w, 1 / v, a, 10);
    for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(limit_q_to_1(n, w, a, v), classical[n]) << n;
  }
}

TEST(Distribution, Examples) {
  testing::RationalSampler s(7);
  for (int i = 0; i < 10; ++i) {
    const BigRational u = s.generic(), q = s.generic();
    if (q * u == 1 || q * q * u * u == 1) continue;
    const BarnesParams params({1}, u, QBase(q));
    EXPECT_EQ(distribution_residual(0, 0, 2, params), 0);
    EXPECT_EQ(h_closed(1, 0, params) / (u - 1), u / ((u - 1) * (1 - q * u)));
    EXPECT_EQ(distribution_residual(1, 0, 2, params), 0);
  }
}

TEST(Distribution, RandomResidualsVanish) {
  testing::RationalSampler s(8);
  int checked = 0;
  while (checked < 10) {
    const BarnesParams params(s.parameters(static_cast<std::size_t>(s.integer(1, 2))), s.generic(),
                              QBase(s.generic()));
    try {
      for (long f : {1L, 2L, 3L}) {
        for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(distribution_residual(n, s.integer(-1, 2), f, params), 0);
      }
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_THROW(distribution_residual(1, 0, 2, BarnesParams({1}, -1, QBase(3))), PoleError);
  EXPECT_THROW(distribution_residual(1, 0, 2, BarnesParams({1}, 3, QBase(3, 2))), PreconditionError);
}

}  // namespace
}  // namespace qbarnes
