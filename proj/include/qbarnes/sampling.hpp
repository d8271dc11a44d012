#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qbarnes/rational.hpp"

namespace qbarnes {

/// Seeded small-height rationals and parameter vectors.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  BigRational rational(long height = 9) {
    return make_rational(integer(-height, height), integer(1, height));
  }

  /// Excludes 0, 1 and -1.
  BigRational generic(long height = 9) {
    while (true) {
      BigRational x = rational(height);
      if (x != 0 && x != 1 && x != -1) return x;
    }
  }

  std::vector<long> parameters(std::size_t r) {
    static constexpr long kChoices[] = {-2, -1, 1, 2, 3};
    std::vector<long> a(r);
    for (auto& x : a) x = kChoices[rng_() % 5];
    return a;
  }

  /// p^e times a p-adic unit of small height.
  BigRational padic_u(long p, long e) {
    while (true) {
      const BigRational x = generic();
      if (valuation(x, p) == 0) return x * pow(BigRational(p), e);
    }
  }

  /// 1 + p t with nu_p(t) >= 0, so q = 1 (mod p) and q is not 0 or +-1.
  BigRational padic_q(long p) {
    while (true) {
      const BigRational t = rational();
      const BigRational q = 1 + p * t;
      if (t != 0 && valuation(t, p) >= 0 && q != 0 && q != -1) return q;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qbarnes
