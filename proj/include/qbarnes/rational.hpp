#pragma once

// Exact scalars: arbitrary-precision integers and rationals backed by GMP,
// plus p-adic valuations of rationals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "qbarnes/errors.hpp"

namespace qbarnes {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// p-adic valuation: an integer or +infinity (the valuation of zero).
class Valuation {
 public:
  constexpr explicit Valuation(long value) : value_(value), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw Error("valuation of zero is infinite");
    return value_;
  }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a,
                                                    const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Valuation& a, long b) {
    return !a.infinite_ && a.value_ == b;
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, long b) {
    if (a.infinite_) return std::strong_ordering::greater;
    return a.value_ <=> b;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("denominator", "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num/den" or "num". Whitespace is not accepted.
inline BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw PreconditionError("rational", "malformed value '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw PreconditionError("rational", "malformed value '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw PreconditionError("rational", "malformed value '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

/// Canonical "num/den" form; integers are printed without a denominator.
inline std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

/// x^e for any integer e; 0^e with e < 0 is rejected.
inline BigRational pow(const BigRational& base, long exponent) {
  if (exponent == 0) return BigRational(1);
  if (base == 0) {
    if (exponent < 0) throw PreconditionError("base", "zero raised to a negative power");
    return BigRational(0);
  }
  const unsigned long e = exponent < 0 ? 0UL - static_cast<unsigned long>(exponent)
                                       : static_cast<unsigned long>(exponent);
  BigRational out(pow(base.get_num(), e), pow(base.get_den(), e));
  if (exponent < 0) out = 1 / out;
  out.canonicalize();
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// Exponent of p in a nonzero integer.
inline long valuation(const BigInt& x, const BigInt& p) {
  if (x == 0) throw Error("valuation of zero integer");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

/// nu_p(x) = nu_p(numerator) - nu_p(denominator); +infinity for x = 0.
inline Valuation valuation(const BigRational& x, long p) {
  if (x == 0) return Valuation::infinity();
  const BigInt prime(p);
  return Valuation(valuation(x.get_num(), prime) - valuation(x.get_den(), prime));
}

/// Multiplication of exponents that must stay representable as `long`.
inline long checked_mul(long a, long b) {
  long out;
  if (__builtin_mul_overflow(a, b, &out)) throw PreconditionError("exponent", "exponent overflow");
  return out;
}

inline long checked_add(long a, long b) {
  long out;
  if (__builtin_add_overflow(a, b, &out)) throw PreconditionError("exponent", "exponent overflow");
  return out;
}

/// Deterministic trial-division primality test.
inline bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

inline long ipow(long base, int exponent) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace qbarnes
