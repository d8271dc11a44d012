#pragma once

// Truncated formal power series over the rationals and the generating
// functions built from them.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qbarnes/barnes_params.hpp"
#include "qbarnes/errors.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// Coefficients of t^0..t^order. Binary operations truncate to the smaller order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
  explicit TruncatedSeries(std::vector<BigRational> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw PreconditionError("series", "a series needs at least one coefficient");
  }

  static TruncatedSeries constant(const BigRational& value, std::size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = value;
    return s;
  }

  /// e^(c t) = sum c^n t^n / n!.
  static TruncatedSeries exp_scalar(const BigRational& c, std::size_t order) {
    TruncatedSeries s(order);
    BigRational term = 1;
    for (std::size_t n = 0; n <= order; ++n) {
      if (n > 0) term = term * c / static_cast<unsigned long>(n);
      s.c_[n] = term;
    }
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const BigRational& operator[](std::size_t n) const { return c_.at(n); }
  const std::vector<BigRational>& coefficients() const { return c_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.c_[n] = a.c_[n] + b.c_[n];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) out.c_[n] = a.c_[n] - b.c_[n];
    return out;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) {
      BigRational acc = 0;
      for (std::size_t i = 0; i <= n; ++i) {
        if (a.c_[i] != 0 && b.c_[n - i] != 0) acc += a.c_[i] * b.c_[n - i];
      }
      out.c_[n] = acc;
    }
    return out;
  }

  friend TruncatedSeries operator*(const BigRational& s, const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) out.c_[n] = s * a.c_[n];
    return out;
  }

  /// 1/a; requires a nonzero constant term.
  TruncatedSeries reciprocal() const {
    if (c_[0] == 0) throw PreconditionError("series", "reciprocal of a series with zero constant term");
    TruncatedSeries out(order());
    const BigRational inv0 = 1 / c_[0];
    out.c_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
      BigRational acc = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (c_[i] != 0) acc += c_[i] * out.c_[n - i];
      }
      out.c_[n] = -acc * inv0;
    }
    return out;
  }

  /// n! times the coefficient of t^n: the exponential-generating-function reading.
  std::vector<BigRational> egf_values() const {
    std::vector<BigRational> out(c_.size());
    BigInt fact = 1;
    for (std::size_t n = 0; n < c_.size(); ++n) {
      if (n > 0) fact *= static_cast<unsigned long>(n);
      out[n] = c_[n] * fact;
    }
    return out;
  }

 private:
  std::vector<BigRational> c_;
};

/// Classical Euler-Barnes polynomials H_n^(r)(w, v | a) for n = 0..n_max, read
/// off (1-v)^r e^(wt) / prod_j (e^(a_j t) - v).
inline std::vector<BigRational> classical_gf_coefficients(const BigRational& w, const BigRational& v,
                                                          const std::vector<long>& a,
                                                          std::size_t n_max) {
  if (v == 1) throw PreconditionError("v", "v = 1 makes every factor e^(a t) - v vanish at t = 0");
  if (a.empty()) throw PreconditionError("a", "at least one parameter a_j is required");
  TruncatedSeries denominator = TruncatedSeries::constant(1, n_max);
  for (long aj : a) {
    if (aj == 0) throw PreconditionError("a", "parameters a_j must be nonzero");
    denominator = denominator *
                  (TruncatedSeries::exp_scalar(aj, n_max) - TruncatedSeries::constant(v, n_max));
  }
  const BigRational scale = pow(1 - v, static_cast<long>(a.size()));
  const TruncatedSeries gf =
      scale * (TruncatedSeries::exp_scalar(w, n_max) * denominator.reciprocal());
  return gf.egf_values();
}

/// H_n^(r)(x, u, q | a) for n = 0..n_max from the generating function
///
///   e^(t/(1-q)) (1-u)^r sum_{j<=j_max} prod_l 1/(1 - q^(j a_l) u) (1/(q-1))^j q^(jx) t^j/j!.
///
/// The j-sum carries t^j, so j_max = n_max already determines every returned
/// coefficient exactly. With x absent the numbers H_n^(r)(u, q | a) are produced.
inline std::vector<BigRational> q_gf_coefficients(const BarnesParams& params, std::optional<long> x,
                                                  std::size_t n_max, std::size_t j_max) {
  if (j_max < n_max) throw PreconditionError("j_max", "j_max must be at least n_max");
  const QBase& q = params.q();
  const BigRational q_value = q.value();
  if (q_value == 1) throw PreconditionError("q", "q = 1 has no generating function of this form");
  const BigRational shift = 1 / (1 - q_value);
  const BigRational ratio = 1 / (q_value - 1);

  std::vector<BigRational> c(n_max + 1);
  BigRational ratio_power = 1;
  BigInt fact = 1;
  for (std::size_t j = 0; j <= j_max; ++j) {
    if (j > 0) {
      ratio_power *= ratio;
      fact *= static_cast<unsigned long>(j);
    }
    BigRational term = ratio_power / fact;
    for (long al : params.a()) {
      const BigRational factor = 1 - q.power(checked_mul(static_cast<long>(j), al)) * params.u();
      if (factor == 0) {
        throw PoleError("pole: 1 - q^(j a_l) u = 0 at j = " + std::to_string(j) +
                        ", a_l = " + std::to_string(al));
      }
      term /= factor;
    }
    if (x && *x != 0) term *= q.power(checked_mul(static_cast<long>(j), *x));
    if (j <= n_max) c[j] = term;
  }
  const TruncatedSeries inner(std::move(c));
  const BigRational scale = pow(1 - params.u(), static_cast<long>(params.r()));
  return (scale * (TruncatedSeries::exp_scalar(shift, n_max) * inner)).egf_values();
}

}  // namespace qbarnes
