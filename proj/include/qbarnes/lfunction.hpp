#pragma once

// Twisted numbers H_{k,chi}^(r), the unit projection <x:q> = [x:q]/omega(x),
// and the p-adic L-function
//
//   L_{p,q:a_1}(u | s, chi) = int_{X^*} <a_1 x:q>^(-s) chi(x) d mu_u(x)
//
// with its values at negative integers and the Kummer congruences.

#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qbarnes/barnes_params.hpp"
#include "qbarnes/characters.hpp"
#include "qbarnes/errors.hpp"
#include "qbarnes/euler_barnes.hpp"
#include "qbarnes/integration.hpp"
#include "qbarnes/padic.hpp"
#include "qbarnes/qnum.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// H_{k,chi}^(r)(u, q | a), defined by
///   (1/(1-u))^r H_{k,chi}^(r) = [d:q]^k / (1-u^d)^r
///       * sum_{i in [0,d)^r} u^(sum i) prod_j chi(i_j) H_k^(r)((sum_j a_j i_j)/d, u^d, q^d | a).
inline CharacterSum h_chi(unsigned k, const BarnesParams& params, const DirichletCharacter& chi) {
  const long d = chi.modulus();
  const long r = static_cast<long>(params.r());
  const BigRational& u = params.u();
  const BigRational u_d = pow(u, d);
  if (u_d == 1) throw PoleError("pole: u^d = 1");
  const BarnesParams inner = params.with(u_d, params.q().raised(d));
  const BigRational scale = pow((1 - u) / (1 - u_d), r) *
                            pow(qbracket(d, params.q().value()), static_cast<long>(k));
  CharacterSum sum(chi.order(), chi.prime());
  for_each_multi_index(params.r(), d, [&](const std::vector<long>& idx) {
    long e = 0;
    long shift = 0;
    long u_exp = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto ej = chi.exponent(idx[j]);
      if (!ej) return;
      e += *ej;
      shift = checked_add(shift, checked_mul(params.a()[j], idx[j]));
      u_exp += idx[j];
    }
    sum.add(e, scale * pow(u, u_exp) * h_closed(k, FractionalArg(shift, d), inner));
  });
  return sum;
}

namespace detail {

inline void require_lfunction_domain(const AdmissibleU& u, const BigRational& q, long a1) {
  if (u.certificate() < 1) throw PreconditionError("u", "the L-function needs nu_p(u) >= 1");
  require_padic_q(q, u.prime());
  if (a1 % u.prime() == 0) throw PreconditionError("a1", "a_1 must be a p-adic unit");
}

}  // namespace detail

/// [y:q] in Q_p for nu_p(q - 1) >= 1, known to absolute precision M.
inline PadicNumber qbracket_padic(long y, const BigRational& q, const PadicContext& ctx) {
  const long p = ctx.prime();
  const Valuation t = valuation(BigRational(q - 1), p);
  if (t < 1) throw PreconditionError("q", "requires nu_p(q - 1) >= 1");
  if (t.is_infinite()) return to_padic(y, ctx);
  // 1 - q^y and 1 - q both carry p^t; work modulo p^(M + t) and divide it out.
  const BigInt m = ctx.power(ctx.precision() + t.value());
  const BigInt qm = detail::mod(q.get_num() * detail::inverse_mod(q.get_den(), m), m);
  BigInt power = detail::powm(qm, BigInt(y < 0 ? -y : y), m);
  if (y < 0) power = detail::inverse_mod(power, m);
  BigInt num = detail::mod(1 - power, m);
  BigInt den = detail::mod(1 - qm, m);
  const BigInt pt = ctx.power(t.value());
  num /= pt;
  den /= pt;
  const BigInt& mod_m = ctx.modulus();
  return PadicNumber::from_residue(ctx, detail::mod(num * detail::inverse_mod(den, mod_m), mod_m), 0,
                                   ctx.precision());
}

/// <x:q> = [x:q]/omega(x), a principal unit.
class UnitProjection {
 public:
  UnitProjection(long x, const BigRational& q, const PadicContext& ctx)
      : value_(make(x, q, ctx)) {
    const long p = ctx.prime();
    if (!mpz_congruent_ui_p(value_.unit().get_mpz_t(), 1, static_cast<unsigned long>(p)) || value_.valuation() != 0)
      throw Error("<x:q> is not congruent to 1 mod p");
  }

  const PadicNumber& value() const { return value_; }

 private:
  static PadicNumber make(long x, const BigRational& q, const PadicContext& ctx) {
    if (x % ctx.prime() == 0) throw PreconditionError("x", "<x:q> needs a p-adic unit x");
    return qbracket_padic(x, q, ctx) / teichmuller(x, ctx);
  }

  PadicNumber value_;
};

inline UnitProjection angle_bracket(long x, const BigRational& q, const PadicContext& ctx) {
  return UnitProjection(x, q, ctx);
}

/// An L-function argument: a rational integer or a p-adic integer.
using LArgument = std::variant<long, PadicNumber>;

/// Level-N Riemann sum of the L-function, over 0 <= x < lcm(d, p^N) with p not dividing x.
inline PadicNumber l_riemann(const LArgument& s, const DirichletCharacter& chi, const AdmissibleU& u,
                             const BigRational& q, long a1, const PadicContext& ctx, long N,
                             const Budget& budget = {}) {
  const long p = ctx.prime();
  if (u.prime() != p) throw PreconditionError("p", "u is certified at a different prime");
  detail::require_lfunction_domain(u, q, a1);
  chi.require_context(ctx);
  if (N < 1) throw PreconditionError("N", "level must be at least 1");
  const long m = std::lcm(chi.modulus(), ipow(p, static_cast<int>(N)));
  budget.check(m, "l_riemann");

  std::vector<PadicNumber> zeta_powers{PadicNumber::one(ctx)};
  const PadicNumber zeta = root_of_unity(chi.order(), ctx);
  for (long e = 1; e < chi.order(); ++e) zeta_powers.push_back(zeta_powers.back() * zeta);

  // u^x / [m:u]; nu_p(u) >= 1 makes [m:u] a unit and u^x vanish mod p^M once x nu_p(u) >= M.
  const PadicNumber u_p = to_padic(u.value(), ctx);
  PadicNumber weight = to_padic(BigRational(1 / qbracket_z(m, u.value())), ctx);
  PadicAccumulator acc(ctx);
  for (long x = 0; x < m; ++x, weight = weight * u_p) {
    if (x * u.certificate() >= ctx.precision()) break;
    if (x % p == 0) continue;
    const auto e = chi.exponent(x);
    if (!e) continue;
    const PadicNumber angle = angle_bracket(checked_mul(a1, x), q, ctx).value();
    const PadicNumber power = std::holds_alternative<long>(s)
                                  ? padic_pow(angle, -std::get<long>(s))
                                  : padic_pow(angle, -std::get<PadicNumber>(s));
    acc.add(zeta_powers[static_cast<std::size_t>(*e)] * power * weight);
  }
  return acc.result();
}

/// The twist chi * omega^k used on the left of the interpolation identity.
inline DirichletCharacter twisted(const DirichletCharacter& chi, long k, long p) {
  return chi * DirichletCharacter::teichmuller(p).power(k);
}

/// L_{p,q:a_1}(u | -k, chi omega^k) in closed form:
///   omega(a_1)^(-k) [H_{k,chi}(u,q|a_1) - chi(p) [p:q]^k (1-u)/(1-u^p) H_{k,chi}(u^p,q^p|a_1)].
/// The factor omega(a_1)^(-k) comes from <a_1 x:q>^k omega^k(x) = omega(a_1)^(-k) [a_1 x:q]^k.
inline CharacterSum l_at_negative(unsigned k, const DirichletCharacter& chi, const AdmissibleU& u,
                                  const BigRational& q, long a1) {
  const long p = u.prime();
  detail::require_lfunction_domain(u, q, a1);
  if (chi.prime() && *chi.prime() != p) throw PreconditionError("chi", "character is embedded at another prime");
  if (!chi.is_rational() && (p - 1) % chi.order() != 0)
    throw PreconditionError("chi", "character order does not divide p - 1");
  const BarnesParams params({a1}, u.value(), QBase(q));
  CharacterSum core = h_chi(k, params, chi);
  if (const auto chi_p = chi.exponent(p)) {
    const BigRational u_p = pow(u.value(), p);
    const BigRational factor =
        pow(qbracket(p, q), static_cast<long>(k)) * (1 - u.value()) / (1 - u_p);
    const CharacterSum euler = h_chi(k, BarnesParams({a1}, u_p, QBase(q, p)), chi);
    core = core - factor * euler.rotated(*chi_p);
  }
  // omega(a_1)^(-k) = zeta_(p-1)^e, written over the least order that holds it.
  const long e = detail::floor_mod(-static_cast<long>(k) * detail::discrete_log(a1, detail::primitive_root(p), p),
                                   p - 1);
  if (e == 0) return core;
  const long g = std::gcd(e, p - 1);
  const long root_order = (p - 1) / g;
  const long order = std::lcm(core.order(), root_order);
  return (CharacterSum(order, p) + core).rotated(e / g * (order / root_order));
}

struct KummerResult {
  CongruenceBound bound;
  bool pass;
};

/// L(u | -k, chi omega^k) = L(u | -k', chi omega^k') (mod p^(n+1)) for k = k' mod (p-1)p^n;
/// passes when the difference has valuation >= n.
inline KummerResult kummer_check(unsigned k, unsigned k_prime, long n, const DirichletCharacter& chi,
                                 const AdmissibleU& u, const BigRational& q, long a1, const PadicContext& ctx) {
  const long p = ctx.prime();
  if (u.prime() != p) throw PreconditionError("p", "u is certified at a different prime");
  if (n < 0) throw PreconditionError("n", "n must be non-negative");
  const long period = checked_mul(p - 1, ipow(p, static_cast<int>(n)));
  if ((static_cast<long>(k) - static_cast<long>(k_prime)) % period != 0)
    throw PreconditionError("k", "k and k' must agree modulo (p-1)p^n = " + std::to_string(period));
  if (ctx.precision() < n + 1) throw PreconditionError("precision", "precision must be at least n + 1");
  const CharacterSum diff = l_at_negative(k, chi, u, q, a1) - l_at_negative(k_prime, chi, u, q, a1);
  const CongruenceBound bound = diff.valuation_bound(ctx);
  return {bound, bound.valuation >= n};
}

/// Level-N Riemann sum of chi(x) [a_1 x:q]^k d mu_u(x) over X, exactly.
inline CharacterSum chi_riemann_sum(unsigned k, const DirichletCharacter& chi, const AdmissibleU& u,
                                    const BigRational& q, long a1, long N, const Budget& budget = {}) {
  const long m = MeasureCell{0, 1, N, chi.modulus()}.modulus(u.prime());
  budget.check(m, "chi_riemann_sum");
  const BigRational norm = 1 / qbracket_z(m, u.value());
  CharacterSum sum(chi.order(), chi.prime());
  BigRational u_power = 1;
  for (long x = 0; x < m; ++x, u_power *= u.value()) {
    if (const auto e = chi.exponent(x))
      sum.add(*e, pow(qbracket(checked_mul(a1, x), q), static_cast<long>(k)) * u_power * norm);
  }
  return sum;
}

}  // namespace qbarnes
