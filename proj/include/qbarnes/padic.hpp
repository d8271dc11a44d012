#pragma once

// Truncated p-adic numbers over Q_p for odd primes.
//
// A nonzero value is p^valuation * unit where the unit is known modulo
// p^relative_precision. Precision is tracked per value: sums that cancel
// leading digits narrow it, and a result with no surviving digit raises
// PrecisionExhausted instead of being reported as zero. The exact zero is a
// separate sentinel.

#include <algorithm>
#include <optional>
#include <string>

#include "qbarnes/errors.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

class PadicContext {
 public:
  PadicContext(long p, int precision) : p_(p), precision_(precision) {
    if (p == 2) throw PreconditionError("p", "p = 2 is not supported");
    if (!is_prime(p)) throw PreconditionError("p", std::to_string(p) + " is not prime");
    if (precision < 1) throw PreconditionError("precision", "precision must be at least 1");
    modulus_ = power(precision);
  }

  long prime() const { return p_; }
  int precision() const { return precision_; }
  /// p^precision.
  const BigInt& modulus() const { return modulus_; }

  BigInt power(long e) const {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(e));
    return out;
  }

  friend bool operator==(const PadicContext& a, const PadicContext& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_;
  }

 private:
  long p_;
  int precision_;
  BigInt modulus_;
};

namespace detail {

inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline BigInt inverse_mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error("element is not invertible modulo " + m.get_str());
  return r;
}

inline BigInt powm(const BigInt& base, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Strips the p-part of x (nonzero) and returns it.
inline long remove_prime(BigInt& x, long p) {
  const BigInt prime(p);
  return static_cast<long>(mpz_remove(x.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace detail

class PadicNumber {
 public:
  static PadicNumber zero(const PadicContext& ctx) { return PadicNumber(ctx); }
  static PadicNumber one(const PadicContext& ctx) {
    return PadicNumber(ctx, 0, BigInt(1), ctx.precision());
  }

  /// p^valuation * unit with the unit known modulo p^relative_precision.
  static PadicNumber from_unit(const PadicContext& ctx, long valuation, const BigInt& unit,
                               int relative_precision) {
    if (relative_precision < 1)
      throw PrecisionExhausted("no significant p-adic digits remain");
    relative_precision = std::min(relative_precision, ctx.precision());
    BigInt u = detail::mod(unit, ctx.power(relative_precision));
    if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(ctx.prime())))
      throw PreconditionError("unit", "unit part is divisible by p");
    return PadicNumber(ctx, valuation, std::move(u), relative_precision);
  }

  /// The value p^shift * residue, where residue is known modulo
  /// p^(absolute_precision - shift).
  static PadicNumber from_residue(const PadicContext& ctx, const BigInt& residue, long shift,
                                  long absolute_precision) {
    const long digits = absolute_precision - shift;
    if (digits < 1) throw PrecisionExhausted("no significant p-adic digits remain");
    BigInt r = detail::mod(residue, ctx.power(digits));
    if (r == 0) {
      throw PrecisionExhausted("value is indistinguishable from zero modulo p^" +
                               std::to_string(absolute_precision));
    }
    const long e = detail::remove_prime(r, ctx.prime());
    const long rel = std::min<long>(digits - e, ctx.precision());
    return from_unit(ctx, shift + e, r, static_cast<int>(rel));
  }

  const PadicContext& context() const { return ctx_; }
  bool is_zero() const { return zero_; }
  Valuation valuation() const { return zero_ ? Valuation::infinity() : Valuation(valuation_); }
  /// Unit part in [1, p^relative_precision); zero for the zero sentinel.
  const BigInt& unit() const { return unit_; }
  int relative_precision() const { return zero_ ? ctx_.precision() : rel_; }
  /// valuation + relative precision; infinite for the exact zero.
  Valuation absolute_precision() const {
    return zero_ ? Valuation::infinity() : Valuation(valuation_ + rel_);
  }

  /// Residue of p^(-shift) * value modulo p^digits. Requires the value to be
  /// known that far and valuation >= shift.
  BigInt scaled_residue(long shift, long digits) const {
    if (zero_) return BigInt(0);
    if (valuation_ < shift) throw Error("scaled_residue: valuation below shift");
    if (valuation_ + rel_ < shift + digits) throw Error("scaled_residue: insufficient precision");
    return detail::mod(ctx_.power(valuation_ - shift) * unit_, ctx_.power(digits));
  }

  PadicNumber operator-() const {
    if (zero_) return *this;
    return PadicNumber(ctx_, valuation_, detail::mod(-unit_, ctx_.power(rel_)), rel_);
  }

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    check_same(a, b);
    if (a.zero_) return b;
    if (b.zero_) return a;
    const long v0 = std::min(a.valuation_, b.valuation_);
    const long abs = std::min(a.valuation_ + a.rel_, b.valuation_ + b.rel_);
    const long digits = abs - v0;
    const BigInt sum = a.scaled_residue(v0, digits) + b.scaled_residue(v0, digits);
    return from_residue(a.ctx_, sum, v0, abs);
  }
  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    check_same(a, b);
    if (a.zero_ || b.zero_) return zero(a.ctx_);
    const int rel = std::min(a.rel_, b.rel_);
    return PadicNumber(a.ctx_, checked_add(a.valuation_, b.valuation_),
                       detail::mod(a.unit_ * b.unit_, a.ctx_.power(rel)), rel);
  }

  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    check_same(a, b);
    if (b.zero_) throw PreconditionError("divisor", "division by zero");
    if (a.zero_) return a;
    const int rel = std::min(a.rel_, b.rel_);
    const BigInt m = a.ctx_.power(rel);
    return PadicNumber(a.ctx_, a.valuation_ - b.valuation_,
                       detail::mod(a.unit_ * detail::inverse_mod(b.unit_, m), m), rel);
  }

  std::string to_string() const {
    if (zero_) return "0";
    return std::to_string(ctx_.prime()) + "^" + std::to_string(valuation_) + "*" +
           unit_.get_str() + " + O(" + std::to_string(ctx_.prime()) + "^" +
           std::to_string(valuation_ + rel_) + ")";
  }

 private:
  explicit PadicNumber(const PadicContext& ctx) : ctx_(ctx), zero_(true) {}
  PadicNumber(const PadicContext& ctx, long valuation, BigInt unit, int rel)
      : ctx_(ctx), zero_(false), valuation_(valuation), unit_(std::move(unit)), rel_(rel) {}

  static void check_same(const PadicNumber& a, const PadicNumber& b) {
    if (!(a.ctx_ == b.ctx_)) throw PreconditionError("context", "p-adic contexts differ");
  }

  PadicContext ctx_;
  bool zero_;
  long valuation_ = 0;
  BigInt unit_ = 0;
  int rel_ = 0;
};

/// Image of a rational in Q_p at the context precision.
inline PadicNumber to_padic(const BigRational& x, const PadicContext& ctx) {
  if (x == 0) return PadicNumber::zero(ctx);
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  const long v = detail::remove_prime(num, ctx.prime()) - detail::remove_prime(den, ctx.prime());
  const BigInt& m = ctx.modulus();
  return PadicNumber::from_unit(ctx, v, detail::mod(num * detail::inverse_mod(den, m), m),
                                ctx.precision());
}

inline PadicNumber to_padic(long x, const PadicContext& ctx) {
  return to_padic(BigRational(x), ctx);
}

/// Lower bound on nu_p(a - b). `capped` means the difference vanished at the
/// joint precision, so only `valuation` >= joint precision is known.
struct CongruenceBound {
  Valuation valuation;
  bool capped;
};

inline CongruenceBound difference_valuation(const PadicNumber& a, const PadicNumber& b) {
  if (!(a.context() == b.context())) throw PreconditionError("context", "p-adic contexts differ");
  if (a.is_zero() && b.is_zero()) return {Valuation::infinity(), false};
  if (a.is_zero()) return {b.valuation(), false};
  if (b.is_zero()) return {a.valuation(), false};
  const long v0 = std::min(a.valuation().value(), b.valuation().value());
  const long abs = std::min(a.absolute_precision().value(), b.absolute_precision().value());
  const long digits = abs - v0;
  BigInt diff = detail::mod(a.scaled_residue(v0, digits) - b.scaled_residue(v0, digits),
                            a.context().power(digits));
  if (diff == 0) return {Valuation(abs), true};
  return {Valuation(v0 + detail::remove_prime(diff, a.context().prime())), false};
}

/// True when a and b are known to agree modulo p^n.
inline bool congruent(const PadicNumber& a, const PadicNumber& b, long n) {
  return difference_valuation(a, b).valuation >= n;
}

namespace detail {

/// floor(log_p n) for n >= 1.
inline long floor_log(long n, long p) {
  long e = 0;
  while (n >= p) {
    n /= p;
    ++e;
  }
  return e;
}

inline void require_principal_unit(const PadicNumber& x, const char* name) {
  if (x.is_zero() || x.valuation() != 0 ||
      !mpz_congruent_ui_p(x.unit().get_mpz_t(), 1, static_cast<unsigned long>(x.context().prime())))
    throw PreconditionError(name, "argument must be congruent to 1 mod p");
}

}  // namespace detail

/// Sum_{n>=1} (-1)^(n+1) (x-1)^n / n for x = 1 (mod p).
///
/// With v = nu_p(x-1), the n-th term has valuation >= n*v - floor(log_p n),
/// which is nondecreasing in n; the series stops at the first n where that
/// bound reaches the output precision. log is an isometry on 1 + pZ_p, so the
/// result carries the absolute precision of x.
inline PadicNumber padic_log(const PadicNumber& x) {
  detail::require_principal_unit(x, "log");
  const PadicContext& ctx = x.context();
  const long p = ctx.prime();
  BigInt y = x.unit() - 1;
  if (y == 0) return PadicNumber::zero(ctx);
  const long digits = x.relative_precision();
  const long v = detail::remove_prime(y, p);
  const BigInt m = ctx.power(digits);

  BigInt sum = 0;
  BigInt y_power = 1;
  for (long n = 1; checked_mul(n, v) - detail::floor_log(n, p) < digits; ++n) {
    y_power = detail::mod(y_power * y, m);
    BigInt n_unit(n);
    const long n_val = detail::remove_prime(n_unit, p);
    const long term_val = n * v - n_val;
    if (term_val >= digits) continue;
    BigInt term = ctx.power(term_val) * y_power * detail::inverse_mod(n_unit, m);
    if (n % 2 == 0) term = -term;
    sum += term;
  }
  return PadicNumber::from_residue(ctx, sum, 0, digits);
}

/// Sum_{n>=0} x^n / n! for nu_p(x) >= 1, odd p.
///
/// nu_p(n!) <= (n-1)/(p-1), so term n has valuation >= n*v - floor((n-1)/(p-1)),
/// nondecreasing in n; truncation uses that bound.
inline PadicNumber padic_exp(const PadicNumber& x) {
  const PadicContext& ctx = x.context();
  if (x.is_zero()) return PadicNumber::one(ctx);
  const long v = x.valuation().value();
  if (v < 1) throw PreconditionError("exp", "argument must have positive valuation");
  const long p = ctx.prime();
  const long digits = std::min<long>(ctx.precision(), x.absolute_precision().value());
  const BigInt m = ctx.power(digits);

  BigInt sum = 1;
  BigInt unit_power = 1;     // unit(x)^n
  BigInt fact_unit = 1;      // p-free part of n!
  long fact_val = 0;         // nu_p(n!)
  for (long n = 1; checked_mul(n, v) - (n - 1) / (p - 1) < digits; ++n) {
    unit_power = detail::mod(unit_power * x.unit(), m);
    BigInt n_unit(n);
    fact_val += detail::remove_prime(n_unit, p);
    fact_unit = detail::mod(fact_unit * n_unit, m);
    const long term_val = n * v - fact_val;
    if (term_val >= digits) continue;
    sum += ctx.power(term_val) * unit_power * detail::inverse_mod(fact_unit, m);
  }
  return PadicNumber::from_residue(ctx, sum, 0, digits);
}

/// x^s for an integer exponent by repeated squaring (negative s inverts).
inline PadicNumber padic_pow(const PadicNumber& x, long s) {
  const PadicContext& ctx = x.context();
  if (s == 0) return PadicNumber::one(ctx);
  if (x.is_zero()) {
    if (s < 0) throw PreconditionError("base", "zero raised to a negative power");
    return x;
  }
  const BigInt m = ctx.power(x.relative_precision());
  BigInt unit = detail::powm(x.unit(), BigInt(s < 0 ? -s : s), m);
  if (s < 0) unit = detail::inverse_mod(unit, m);
  return PadicNumber::from_unit(ctx, checked_mul(x.valuation().value(), s), unit,
                                x.relative_precision());
}

/// x^s = exp(s log x) for x = 1 (mod p) and nu_p(s) >= 0.
inline PadicNumber padic_pow(const PadicNumber& x, const PadicNumber& s) {
  detail::require_principal_unit(x, "base");
  if (!(s.context() == x.context())) throw PreconditionError("context", "p-adic contexts differ");
  if (s.is_zero()) return PadicNumber::one(x.context());
  if (s.valuation() < 0) throw PreconditionError("exponent", "exponent must be a p-adic integer");
  const PadicNumber log_x = padic_log(x);
  if (log_x.is_zero()) return PadicNumber::one(x.context());
  return padic_exp(s * log_x);
}

/// Teichmuller representative omega(x) = x^(p^M) mod p^M: the (p-1)-st root of
/// unity congruent to x mod p.
inline PadicNumber teichmuller(const BigInt& x, const PadicContext& ctx) {
  const long p = ctx.prime();
  if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)))
    throw PreconditionError("x", "Teichmuller lift requires a p-adic unit");
  const BigInt& m = ctx.modulus();
  const BigInt omega = detail::powm(detail::mod(x, m), m, m);
  if (detail::powm(omega, BigInt(p - 1), m) != 1 ||
      !mpz_congruent_p(omega.get_mpz_t(), x.get_mpz_t(), BigInt(p).get_mpz_t()))
    throw Error("Teichmuller lift failed its root-of-unity check");
  return PadicNumber::from_unit(ctx, 0, omega, ctx.precision());
}

inline PadicNumber teichmuller(long x, const PadicContext& ctx) {
  return teichmuller(BigInt(x), ctx);
}

/// Sums p-adic values of valuation >= floor at absolute precision floor + M.
class PadicAccumulator {
 public:
  explicit PadicAccumulator(const PadicContext& ctx, long floor = 0)
      : ctx_(ctx), floor_(floor), limit_(floor + ctx.precision()) {}

  void add(const PadicNumber& x) {
    if (x.is_zero()) return;
    if (x.valuation() < floor_) throw Error("accumulator term below valuation floor");
    limit_ = std::min(limit_, x.absolute_precision().value());
    if (x.valuation() >= limit_) return;
    sum_ += x.scaled_residue(floor_, limit_ - floor_);
    sum_ = detail::mod(sum_, ctx_.power(limit_ - floor_));
  }

  void add(const BigRational& x) { add(to_padic(x, ctx_)); }

  PadicNumber result() const { return PadicNumber::from_residue(ctx_, sum_, floor_, limit_); }

  CongruenceBound valuation_bound() const {
    BigInt r = detail::mod(sum_, ctx_.power(limit_ - floor_));
    if (r == 0) return {Valuation(limit_), true};
    return {Valuation(floor_ + detail::remove_prime(r, ctx_.prime())), false};
  }

 private:
  PadicContext ctx_;
  long floor_;
  long limit_;
  BigInt sum_ = 0;
};

}  // namespace qbarnes
