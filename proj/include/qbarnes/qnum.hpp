#pragma once

// q-brackets [x:q] = (1 - q^x)/(1 - q).
//
// Derived parameters such as q^f, q^d and q^(f p^N) are carried as a shared
// root raised to an integer exponent, and fractional arguments m/f are only
// accepted against a base whose exponent f divides. Every q-power that
// arises is then an integer power of the root, so all values stay rational.

#include <string>

#include "qbarnes/errors.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// The working parameter q = root^exponent.
class QBase {
 public:
  QBase(BigRational root, long exponent = 1) : root_(std::move(root)), exponent_(exponent) {
    if (exponent_ < 1) throw PreconditionError("q", "QBase exponent must be positive");
  }

  const BigRational& root() const { return root_; }
  long exponent() const { return exponent_; }
  BigRational value() const { return pow(root_, exponent_); }
  /// The classical limit q = 1 is only represented by root 1.
  bool is_classical_limit() const { return root_ == 1; }

  /// q^k as a base sharing this root.
  QBase raised(long k) const { return QBase(root_, checked_mul(exponent_, k)); }

  /// q^k = root^(exponent * k).
  BigRational power(long k) const { return pow(root_, checked_mul(exponent_, k)); }

 private:
  BigRational root_;
  long exponent_;
};

/// numerator / denominator, with the denominator dividing the exponent of the
/// QBase it is used against.
struct FractionalArg {
  long numerator = 0;
  long denominator = 1;

  FractionalArg() = default;
  FractionalArg(long num, long den = 1) : numerator(num), denominator(den) {
    if (den < 1) throw PreconditionError("w", "fractional argument denominator must be positive");
  }

  /// Exponent of the root in q^(scale * this) for q = base.
  long root_exponent(const QBase& base, long scale = 1) const {
    if (base.exponent() % denominator != 0) {
      throw PreconditionError("w", "exponent alignment: denominator " + std::to_string(denominator) +
                                       " does not divide q exponent " +
                                       std::to_string(base.exponent()));
    }
    return checked_mul(checked_mul(numerator, base.exponent() / denominator), scale);
  }

  BigRational as_rational() const { return make_rational(numerator, denominator); }
};

/// [x:q]; q = 1 returns the limit x.
inline BigRational qbracket(long x, const BigRational& q) {
  if (q == 1) return BigRational(x);
  if (q == 0 && x < 0) throw PreconditionError("q", "q = 0 with a negative argument");
  return (1 - pow(q, x)) / (1 - q);
}

/// [x:z], the normalizer [p^N : z] of the distribution mu_z.
inline BigRational qbracket_z(long x, const BigRational& z) { return qbracket(x, z); }

/// [x : base] for a fractional argument aligned with the base exponent.
inline BigRational qbracket_base(const FractionalArg& x, const QBase& base) {
  const long e = x.root_exponent(base);
  if (base.is_classical_limit()) return x.as_rational();
  const BigRational q = base.value();
  if (q == 1) throw PreconditionError("q", "q^exponent = 1 away from the classical limit");
  if (base.root() == 0 && e < 0) throw PreconditionError("q", "q = 0 with a negative argument");
  return (1 - pow(base.root(), e)) / (1 - q);
}

}  // namespace qbarnes
