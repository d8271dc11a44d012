#pragma once

// The distribution mu_u(x + m Z_p) = u^x / [m : u], its level-N Riemann sums,
// and the measure
//
//   E^(k)(x + f p^N Z_p) = [f p^N : q]^k u^x / (1 - u^(f p^N))
//                          * H_k^(1)(a_1 x / (f p^N), u^(f p^N), q^(f p^N) | a_1).
//
// All values are exact rationals; convergence in N is reported as the exact
// p-adic valuation of the error.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qbarnes/barnes_params.hpp"
#include "qbarnes/errors.hpp"
#include "qbarnes/euler_barnes.hpp"
#include "qbarnes/qnum.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// Cap on evaluation points per Riemann sum.
struct Budget {
  std::size_t max_points = 250000;

  void check(long points, const std::string& what) const {
    if (points < 0 || static_cast<std::size_t>(points) > max_points) {
      throw BudgetExceeded(what + " needs " + std::to_string(points) + " points, budget is " +
                           std::to_string(max_points));
    }
  }
};

/// u with nu_p(u) != 0. For rational u this is equivalent to |1 - u^f|_p >= 1
/// for every f >= 1: nu_p(u) > 0 makes 1 - u^f a unit, nu_p(u) < 0 gives
/// nu_p(1 - u^f) = f nu_p(u) < 0, and a unit u has 1 - u^(p-1) = 0 mod p.
class AdmissibleU {
 public:
  AdmissibleU(BigRational u, long p) : u_(std::move(u)), p_(p) {
    if (!is_prime(p) || p == 2) throw PreconditionError("p", "p must be an odd prime");
    const Valuation v = valuation(u_, p);
    if (v.is_infinite() || v == 0) {
      throw PreconditionError("AdmissibleU", "u = " + to_string(u_) + " has nu_" + std::to_string(p) +
                                                 "(u) = " + v.to_string() +
                                                 "; |1 - u^f|_p >= 1 requires a nonzero finite valuation");
    }
    certificate_ = v.value();
  }

  const BigRational& value() const { return u_; }
  long prime() const { return p_; }
  /// nu_p(u).
  long certificate() const { return certificate_; }

 private:
  BigRational u_;
  long p_;
  long certificate_ = 0;
};

/// The cell x + d f p^N Z_p (d = f = 1 when unused).
struct MeasureCell {
  long x = 0;
  long f = 1;
  long N = 0;
  long d = 1;

  long modulus(long p) const {
    if (f < 1 || d < 1 || N < 0) throw PreconditionError("cell", "cell modulus components must be positive");
    return checked_mul(checked_mul(d, f), ipow(p, static_cast<int>(N)));
  }

  void validate(long p) const {
    const long m = modulus(p);
    if (x < 0 || x >= m) {
      throw PreconditionError("cell", "representative " + std::to_string(x) + " outside [0, " +
                                          std::to_string(m) + ")");
    }
  }
};

inline BigRational mu_value(const MeasureCell& cell, const AdmissibleU& u) {
  cell.validate(u.prime());
  const long m = cell.modulus(u.prime());
  const BigRational norm = qbracket_z(m, u.value());
  if (norm == 0) throw PoleError("pole: u^modulus = 1");
  return pow(u.value(), cell.x) / norm;
}

/// Level-N Riemann sum (1/[d p^N : u]) sum_{x < d p^N} integrand(x) u^x.
inline BigRational riemann_integral(const std::function<BigRational(long)>& integrand,
                                    const AdmissibleU& u, long d, long N, const Budget& budget = {}) {
  const long m = MeasureCell{0, 1, N, d}.modulus(u.prime());
  budget.check(m, "riemann_integral");
  BigRational sum = 0;
  BigRational u_power = 1;
  for (long x = 0; x < m; ++x) {
    const BigRational value = integrand(x);
    if (value != 0) sum += value * u_power;
    u_power *= u.value();
  }
  return sum / qbracket_z(m, u.value());
}

/// Level-N r-fold Riemann sum of [w + sum_j a_j x_j : q]^n d mu_u(x_1)...d mu_u(x_r).
inline BigRational multi_riemann_integral(unsigned n, long w, const BarnesParams& params, long p,
                                          long N, const Budget& budget = {}) {
  const AdmissibleU u(params.u(), p);
  const long level = ipow(p, static_cast<int>(N));
  long points = 1;
  for (std::size_t j = 0; j < params.r(); ++j) points = checked_mul(points, level);
  budget.check(points, "multi_riemann_integral");

  const BigRational q = params.q().value();
  long lo = w, hi = w;
  for (long aj : params.a()) {
    (aj < 0 ? lo : hi) += checked_mul(aj, level - 1);
  }
  std::vector<BigRational> bracket_power(static_cast<std::size_t>(hi - lo + 1));
  for (long y = lo; y <= hi; ++y) {
    bracket_power[static_cast<std::size_t>(y - lo)] = pow(qbracket(y, q), static_cast<long>(n));
  }
  const long r = static_cast<long>(params.r());
  std::vector<BigRational> u_power(static_cast<std::size_t>(r * (level - 1) + 1));
  u_power[0] = 1;
  for (std::size_t s = 1; s < u_power.size(); ++s) u_power[s] = u_power[s - 1] * u.value();

  BigRational sum = 0;
  for_each_multi_index(params.r(), level, [&](const std::vector<long>& idx) {
    long y = w;
    long s = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      y += params.a()[j] * idx[j];
      s += idx[j];
    }
    const BigRational& value = bracket_power[static_cast<std::size_t>(y - lo)];
    if (value != 0) sum += value * u_power[static_cast<std::size_t>(s)];
  });
  return sum * pow(1 / qbracket_z(level, u.value()), r);
}

namespace detail {

inline void require_padic_q(const BigRational& q, long p) {
  if (valuation(BigRational(q - 1), p) < 1)
    throw PreconditionError("q", "requires nu_p(q - 1) >= 1");
}

}  // namespace detail

/// E^(k) on the cell x + f p^N Z_p.
inline BigRational measure_E_value(const MeasureCell& cell, unsigned k, const AdmissibleU& u,
                                   const BigRational& q, long a1) {
  const long p = u.prime();
  if (cell.d != 1) throw PreconditionError("cell", "E^(k) cells use the modulus f p^N");
  cell.validate(p);
  const long m = cell.modulus(p);
  const BigRational u_m = pow(u.value(), m);
  if (u_m == 1) throw PoleError("pole: u^(f p^N) = 1");
  const BarnesParams inner({a1}, u_m, QBase(q, m));
  return pow(qbracket(m, q), static_cast<long>(k)) * pow(u.value(), cell.x) / (1 - u_m) *
         h_closed(k, FractionalArg(checked_mul(a1, cell.x), m), inner);
}

/// The same value through the expansion
///   sum_i C(k,i) u^x/(1 - u^m) [a_1 x:q]^(k-i) [m:q]^i q^(a_1 x i) H_i^(1)(u^m, q^m | a_1),  m = f p^N.
inline BigRational measure_E_expansion(const MeasureCell& cell, unsigned k, const AdmissibleU& u,
                                       const BigRational& q, long a1) {
  const long p = u.prime();
  cell.validate(p);
  const long m = cell.modulus(p);
  const BigRational u_m = pow(u.value(), m);
  const BarnesParams inner({a1}, u_m, QBase(q, m));
  const BigRational lead = pow(u.value(), cell.x) / (1 - u_m);
  const BigRational bracket = qbracket(checked_mul(a1, cell.x), q);
  const BigRational bracket_m = qbracket(m, q);
  const BigRational q_ax = pow(q, checked_mul(a1, cell.x));
  BigRational sum = 0;
  for (unsigned i = 0; i <= k; ++i) {
    sum += BigRational(binomial(k, i)) * lead * pow(bracket, static_cast<long>(k - i)) *
           pow(bracket_m * q_ax, static_cast<long>(i)) * h_closed(i, 0, inner);
  }
  return sum;
}

/// sum_{i<p} E(x + i f p^N + f p^(N+1) Z_p) - E(x + f p^N Z_p); exactly zero.
inline BigRational measure_additivity_residual(long x, long f, long N, unsigned k, const AdmissibleU& u,
                                               const BigRational& q, long a1) {
  const long p = u.prime();
  const MeasureCell parent{x, f, N, 1};
  parent.validate(p);
  const long step = parent.modulus(p);
  BigRational children = 0;
  for (long i = 0; i < p; ++i) {
    children += measure_E_value(MeasureCell{x + i * step, f, N + 1, 1}, k, u, q, a1);
  }
  return children - measure_E_value(parent, k, u, q, a1);
}

/// nu_p(E^(k)(cell)) >= 0 under nu_p(u) >= 1 and nu_p(q - 1) >= 1.
inline bool measure_bound_check(const MeasureCell& cell, unsigned k, const AdmissibleU& u,
                                const BigRational& q, long a1) {
  if (u.certificate() < 1) throw PreconditionError("u", "the bound needs nu_p(u) >= 1");
  detail::require_padic_q(q, u.prime());
  return valuation(measure_E_value(cell, k, u, q, a1), u.prime()) >= 0;
}

/// nu_p(E^(k)(cell) - [a_1 x:q]^k u^x/(1 - u^m)); the remainder is [m:q] times
/// a p-integral quantity, so this is at least nu_p(m) for m = f p^N.
inline Valuation measure_remainder_valuation(const MeasureCell& cell, unsigned k, const AdmissibleU& u,
                                             const BigRational& q, long a1) {
  const long m = cell.modulus(u.prime());
  const BigRational lead = pow(qbracket(checked_mul(a1, cell.x), q), static_cast<long>(k)) *
                           pow(u.value(), cell.x) / (1 - pow(u.value(), m));
  return valuation(BigRational(measure_E_value(cell, k, u, q, a1) - lead), u.prime());
}

/// Error valuation of the level-N cell sum for the integral of dE^(k) over X,
/// where each cell x + f p^N Z_p contributes its leading term
/// [a_1 x:q]^k u^x/(1 - u^(f p^N)), against (1/(1-u)) H_k^(1)(u, q | a_1).
inline Valuation cell_sum_valuation(unsigned k, const AdmissibleU& u, const BigRational& q, long a1, long N,
                                 long f = 1, const Budget& budget = {}) {
  const long p = u.prime();
  const long m = MeasureCell{0, f, N, 1}.modulus(p);
  budget.check(m, "prop5");
  BigRational sum = 0;
  BigRational u_power = 1;
  for (long x = 0; x < m; ++x) {
    sum += pow(qbracket(checked_mul(a1, x), q), static_cast<long>(k)) * u_power;
    u_power *= u.value();
  }
  sum /= 1 - pow(u.value(), m);
  const BigRational target = h_closed(k, 0, BarnesParams({a1}, u.value(), QBase(q))) / (1 - u.value());
  return valuation(BigRational(sum - target), p);
}

}  // namespace qbarnes
