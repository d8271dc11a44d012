#pragma once

// q-analogue of the Euler-Barnes numbers and polynomials
//
//   H_n^(r)(w, u, q | a) = (1-u)^r / (1-q)^n
//                          * sum_{l=0}^n C(n,l) (-1)^l q^(l w) prod_j 1/(1 - q^(l a_j) u),
//
// together with the addition formula, Carlitz's recurrence, the
// distribution relation and the exact q -> 1 limit.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbarnes/barnes_params.hpp"
#include "qbarnes/errors.hpp"
#include "qbarnes/polynomial.hpp"
#include "qbarnes/qnum.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// Calls fn(indices) for every indices in [0, base)^r, lexicographically.
inline void for_each_multi_index(std::size_t r, long base,
                                 const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> idx(r, 0);
  while (true) {
    fn(idx);
    std::size_t pos = 0;
    while (pos < r && ++idx[pos] == base) idx[pos++] = 0;
    if (pos == r) return;
  }
}

/// Closed form of H_n^(r)(w, u, q | a). The argument w may be fractional as
/// long as its denominator divides the exponent of q.
inline BigRational h_closed(unsigned n, const FractionalArg& w, const BarnesParams& params) {
  const QBase& q = params.q();
  const BigRational q_value = q.value();
  if (q.is_classical_limit() || q_value == 1)
    throw PreconditionError("q", "q = 1 has no closed form; use limit_q_to_1");
  const long sign_n = static_cast<long>(n);
  BigRational sum = 0;
  for (long l = 0; l <= sign_n; ++l) {
    BigRational term(binomial(n, static_cast<unsigned long>(l)));
    if (l % 2 == 1) term = -term;
    term *= pow(q.root(), w.root_exponent(q, l));
    for (std::size_t j = 0; j < params.r(); ++j) {
      const BigRational factor = 1 - q.power(checked_mul(l, params.a()[j])) * params.u();
      if (factor == 0) {
        throw PoleError("pole: 1 - q^(l a_j) u = 0 at l = " + std::to_string(l) +
                        ", j = " + std::to_string(j + 1));
      }
      term /= factor;
    }
    sum += term;
  }
  return pow(1 - params.u(), static_cast<long>(params.r())) / pow(1 - q_value, sign_n) * sum;
}

inline BigRational h_closed(unsigned n, long w, const BarnesParams& params) {
  return h_closed(n, FractionalArg(w), params);
}

/// H_n^(r)(w, u, q | a) = sum_k C(n,k) [w:q]^(n-k) q^(wk) H_k^(r)(u, q | a).
inline BigRational h_addition(unsigned n, long w, const BarnesParams& params) {
  const BigRational q = params.q().value();
  const BigRational bracket = qbracket(w, q);
  const BigRational q_w = pow(q, w);
  BigRational sum = 0;
  BigRational q_wk = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) q_wk *= q_w;
    sum += BigRational(binomial(n, k)) * pow(bracket, static_cast<long>(n - k)) * q_wk *
           h_closed(k, 0, params);
  }
  return sum;
}

/// Carlitz's q-Frobenius-Euler numbers H_0..H_k from H_0 = 1 and
/// (qH + 1)^m = u H_m for m >= 1, with H^i read as H_i.
inline std::vector<BigRational> h_carlitz_sequence(unsigned k, const BigRational& u,
                                                   const BigRational& q) {
  std::vector<BigRational> h{BigRational(1)};
  BigRational q_m = 1;
  for (unsigned m = 1; m <= k; ++m) {
    q_m *= q;
    const BigRational pivot = u - q_m;
    if (pivot == 0) throw PoleError("Carlitz recurrence pivot u - q^m vanishes at m = " + std::to_string(m));
    BigRational acc = 0;
    BigRational q_i = 1;
    for (unsigned i = 0; i < m; ++i) {
      acc += BigRational(binomial(m, i)) * q_i * h[i];
      q_i *= q;
    }
    h.push_back(acc / pivot);
  }
  return h;
}

inline BigRational h_carlitz(unsigned k, const BigRational& u, const BigRational& q) {
  return h_carlitz_sequence(k, u, q).back();
}

namespace detail {

// Denominator factor of the symbolic closed form:
//   kind 0: 1 - u q^m,   kind 1: q^m - u   (m > 0).
using FactorKey = std::pair<int, long>;

inline Polynomial factor_polynomial(const FactorKey& key, const BigRational& u) {
  const auto m = static_cast<std::size_t>(key.second);
  return key.first == 0 ? Polynomial::binomial(1, -u, m) : Polynomial::binomial(-u, 1, m);
}

}  // namespace detail

/// The closed form as a reduced rational function of q (q = root, exponent 1).
inline RationalFunctionQ h_rational_in_q(unsigned n, long w, const std::vector<long>& a,
                                         const BigRational& u) {
  if (u == 0 || u == 1) throw PreconditionError("u", "u must differ from 0 and 1");
  if (a.empty()) throw PreconditionError("a", "at least one parameter a_j is required");
  const long r = static_cast<long>(a.size());
  const long sign_n = static_cast<long>(n);

  // Term l is coeff * q^num_shift / (q^den_shift * prod factor^mult).
  struct Term {
    BigRational coeff;
    long num_shift = 0;
    long den_shift = 0;
    std::map<detail::FactorKey, int> mult;
  };
  std::vector<Term> terms;
  std::map<detail::FactorKey, int> common;
  long max_den_shift = 0;
  for (long l = 0; l <= sign_n; ++l) {
    Term t;
    t.coeff = BigRational(binomial(n, static_cast<unsigned long>(l)));
    if (l % 2 == 1) t.coeff = -t.coeff;
    const long lw = checked_mul(l, w);
    if (lw >= 0) t.num_shift += lw; else t.den_shift -= lw;
    for (long aj : a) {
      if (aj == 0) throw PreconditionError("a", "parameters a_j must be nonzero");
      const long m = checked_mul(l, aj);
      if (m == 0) {
        t.coeff /= 1 - u;
      } else if (m > 0) {
        ++t.mult[{0, m}];
      } else {
        // 1/(1 - u q^-k) = q^k / (q^k - u)
        t.num_shift += -m;
        ++t.mult[{1, -m}];
      }
    }
    for (const auto& [key, k] : t.mult) common[key] = std::max(common[key], k);
    max_den_shift = std::max(max_den_shift, t.den_shift);
    terms.push_back(std::move(t));
  }

  Polynomial numerator;
  for (const Term& t : terms) {
    Polynomial part = Polynomial::monomial(t.coeff, static_cast<std::size_t>(t.num_shift + max_den_shift - t.den_shift));
    for (const auto& [key, k] : common) {
      const auto it = t.mult.find(key);
      const int missing = k - (it == t.mult.end() ? 0 : it->second);
      const Polynomial factor = detail::factor_polynomial(key, u);
      for (int i = 0; i < missing; ++i) part = part * factor;
    }
    numerator = numerator + part;
  }
  Polynomial denominator = Polynomial::monomial(1, static_cast<std::size_t>(max_den_shift));
  for (const auto& [key, k] : common) {
    const Polynomial factor = detail::factor_polynomial(key, u);
    for (int i = 0; i < k; ++i) denominator = denominator * factor;
  }
  std::vector<BigRational> one_minus_q(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    one_minus_q[i] = BigRational(binomial(n, i));
    if (i % 2 == 1) one_minus_q[i] = -one_minus_q[i];
  }
  denominator = Polynomial(std::move(one_minus_q)) * denominator;
  numerator = pow(1 - u, r) * numerator;

  long abs_a = 0;
  for (long aj : a) abs_a += aj < 0 ? -aj : aj;
  const long bound = sign_n * (sign_n + 1) / 2 * abs_a + sign_n * (w < 0 ? -w : w) + sign_n;
  if (denominator.degree() > bound)
    throw Error("h_rational_in_q: denominator degree exceeds its bound");
  return RationalFunctionQ::reduced(std::move(numerator), std::move(denominator));
}

/// lim_{q->1} H_n^(r)(w, u, q | a), by evaluating the reduced rational function at q = 1.
inline BigRational limit_q_to_1(unsigned n, long w, const std::vector<long>& a,
                                const BigRational& u) {
  const RationalFunctionQ f = h_rational_in_q(n, w, a, u);
  if (f.denominator().evaluate(1) == 0)
    throw Error("residual pole at q = 1 after reduction");
  return f.evaluate(1);
}

/// LHS - RHS of the distribution relation, for f in N:
///
///   H_n(w,u,q|a) / (u-1)^r
///     = [f:q]^n sum_{i in [0,f)^r} u^(sum i) / (u^f - 1)^r H_n((w + sum a_j i_j)/f, u^f, q^f | a).
///
/// The inner numbers use q^f as a QBase over the same root, so the fractional
/// argument collapses to integer powers of q.
inline BigRational distribution_residual(unsigned n, long w, long f, const BarnesParams& params) {
  if (f < 1) throw PreconditionError("f", "f must be a positive integer");
  if (params.q().exponent() != 1)
    throw PreconditionError("q", "distribution relation expects q with exponent 1");
  const BigRational& u = params.u();
  const long r = static_cast<long>(params.r());
  const BigRational u_f = pow(u, f);
  if (u_f == 1) throw PoleError("pole: u^f = 1");
  const BigRational lhs = h_closed(n, w, params) / pow(u - 1, r);

  const BarnesParams inner = params.with(u_f, params.q().raised(f));
  BigRational sum = 0;
  for_each_multi_index(params.r(), f, [&](const std::vector<long>& idx) {
    long shift = w;
    long u_exp = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      shift = checked_add(shift, checked_mul(params.a()[j], idx[j]));
      u_exp += idx[j];
    }
    sum += pow(u, u_exp) * h_closed(n, FractionalArg(shift, f), inner);
  });
  const BigRational rhs = pow(qbracket(f, params.q().value()), static_cast<long>(n)) * sum /
                          pow(u_f - 1, r);
  return lhs - rhs;
}

}  // namespace qbarnes
