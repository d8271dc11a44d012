#pragma once

// Dirichlet characters with values in Q or Q_p.
//
// A character of modulus d stores, for each unit x mod d, an exponent e with
// chi(x) = zeta_m^e for a fixed root order m. Orders m <= 2 are rational
// (zeta_2 = -1). Larger orders need an embedding prime p with m | p - 1, and
// then zeta_m = omega(g)^((p-1)/m) where g is the least primitive root mod p
// and omega is the Teichmuller lift.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qbarnes/errors.hpp"
#include "qbarnes/padic.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

namespace detail {

inline long floor_mod(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

inline long primitive_root(long p) {
  std::vector<long> factors;
  long n = p - 1;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f == 0) factors.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) factors.push_back(n);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long f : factors) {
      if (powm(BigInt(g), BigInt((p - 1) / f), BigInt(p)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2
}

/// Index of x to base g modulo p.
inline long discrete_log(long x, long g, long p) {
  const long target = floor_mod(x, p);
  long acc = 1;
  for (long i = 0; i < p - 1; ++i) {
    if (acc == target) return i;
    acc = acc * g % p;
  }
  throw PreconditionError("x", "no discrete logarithm of " + std::to_string(x) + " mod " + std::to_string(p));
}

inline std::optional<long> merge_primes(std::optional<long> a, std::optional<long> b) {
  if (a && b && *a != *b) throw PreconditionError("chi", "characters embedded at different primes");
  return a ? a : b;
}

}  // namespace detail

/// zeta_m in Q_p under the convention above.
inline PadicNumber root_of_unity(long order, const PadicContext& ctx) {
  const long p = ctx.prime();
  if (order < 1 || (p - 1) % order != 0)
    throw PreconditionError("chi", "root order " + std::to_string(order) + " does not divide p - 1");
  if (order == 1) return PadicNumber::one(ctx);
  return padic_pow(teichmuller(detail::primitive_root(p), ctx), (p - 1) / order);
}

class DirichletCharacter {
 public:
  /// exponents[x] for x in [0, d); empty entries mark non-units.
  static DirichletCharacter from_exponents(long modulus, long order, std::vector<std::optional<long>> exponents,
                                           std::optional<long> prime = std::nullopt) {
    DirichletCharacter chi(modulus, order, std::move(exponents), prime);
    chi.validate();
    return chi;
  }

  /// Rational table with entries in {-1, 0, 1}.
  static DirichletCharacter from_values(long modulus, const std::vector<long>& values) {
    if (static_cast<long>(values.size()) != modulus)
      throw PreconditionError("chi", "value table length must equal the modulus");
    std::vector<std::optional<long>> e(values.size());
    long order = 1;
    for (std::size_t x = 0; x < values.size(); ++x) {
      if (values[x] == 1) {
        e[x] = 0;
      } else if (values[x] == -1) {
        e[x] = 1;
        order = 2;
      } else if (values[x] != 0) {
        throw PreconditionError("chi", "rational character values must lie in {-1, 0, 1}");
      }
    }
    return from_exponents(modulus, order, std::move(e));
  }

  /// chi(generator) = zeta_order^image for a generator of the cyclic group (Z/d)^*.
  static DirichletCharacter from_generator(long modulus, long order, long generator, long image,
                                           std::optional<long> prime = std::nullopt) {
    if (modulus < 1 || order < 1) throw PreconditionError("chi", "modulus and order must be positive");
    std::vector<std::optional<long>> e(static_cast<std::size_t>(modulus));
    long units = 0;
    for (long x = 0; x < modulus; ++x) units += std::gcd(x, modulus) == 1;
    long g = detail::floor_mod(generator, modulus);
    if (std::gcd(g, modulus) != 1) throw PreconditionError("chi", "generator is not a unit");
    long acc = 1 % modulus;
    for (long i = 0; i < units; ++i) {
      if (e[static_cast<std::size_t>(acc)]) throw PreconditionError("chi", "generator does not generate (Z/d)^*");
      e[static_cast<std::size_t>(acc)] = detail::floor_mod(i * image, order);
      acc = acc * g % modulus;
    }
    if (detail::floor_mod(units * image, order) != 0)
      throw PreconditionError("chi", "image order does not divide the group order");
    return from_exponents(modulus, order, std::move(e), prime);
  }

  static DirichletCharacter trivial(long modulus) {
    if (modulus < 1) throw PreconditionError("chi", "modulus must be positive");
    std::vector<std::optional<long>> e(static_cast<std::size_t>(modulus));
    for (long x = 0; x < modulus; ++x)
      if (std::gcd(x, modulus) == 1) e[static_cast<std::size_t>(x)] = 0;
    return from_exponents(modulus, 1, std::move(e));
  }

  /// The quadratic characters mod 3 and mod 4.
  static DirichletCharacter quadratic(long modulus) {
    if (modulus == 3) return from_values(3, {0, 1, -1});
    if (modulus == 4) return from_values(4, {0, 1, 0, -1});
    throw PreconditionError("chi", "built-in quadratic characters exist for d = 3 and d = 4");
  }

  /// omega mod p, of order p - 1: omega(x) = zeta_(p-1)^ind_g(x).
  static DirichletCharacter teichmuller(long p) {
    if (!is_prime(p) || p == 2) throw PreconditionError("p", "p must be an odd prime");
    const long g = detail::primitive_root(p);
    std::vector<std::optional<long>> e(static_cast<std::size_t>(p));
    for (long x = 1; x < p; ++x) e[static_cast<std::size_t>(x)] = detail::discrete_log(x, g, p);
    return from_exponents(p, p - 1, std::move(e), p);
  }

  long modulus() const { return d_; }
  long order() const { return order_; }
  std::optional<long> prime() const { return prime_; }
  bool is_rational() const { return order_ <= 2; }

  std::optional<long> exponent(long x) const { return e_[static_cast<std::size_t>(detail::floor_mod(x, d_))]; }

  BigRational rational_value(long x) const {
    if (!is_rational()) throw PreconditionError("chi", "character is not rational-valued");
    const auto e = exponent(x);
    if (!e) return 0;
    return *e == 0 ? 1 : -1;
  }

  PadicNumber padic_value(long x, const PadicContext& ctx) const {
    require_context(ctx);
    const auto e = exponent(x);
    if (!e) return PadicNumber::zero(ctx);
    return padic_pow(root_of_unity(order_, ctx), *e);
  }

  void require_context(const PadicContext& ctx) const {
    if (prime_ && *prime_ != ctx.prime())
      throw PreconditionError("chi", "character is embedded at p = " + std::to_string(*prime_));
    if (!is_rational() && (ctx.prime() - 1) % order_ != 0)
      throw PreconditionError("chi", "character order does not divide p - 1");
  }

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
    const long d = std::lcm(a.d_, b.d_);
    const long m = std::lcm(a.order_, b.order_);
    std::vector<std::optional<long>> e(static_cast<std::size_t>(d));
    for (long x = 0; x < d; ++x) {
      const auto ea = a.exponent(x), eb = b.exponent(x);
      if (ea && eb) e[static_cast<std::size_t>(x)] = (*ea * (m / a.order_) + *eb * (m / b.order_)) % m;
    }
    return from_exponents(d, m, std::move(e), detail::merge_primes(a.prime_, b.prime_));
  }

  DirichletCharacter power(long k) const {
    std::vector<std::optional<long>> e(e_.size());
    for (std::size_t x = 0; x < e_.size(); ++x)
      if (e_[x]) e[x] = detail::floor_mod(*e_[x] * detail::floor_mod(k, order_), order_);
    return from_exponents(d_, order_, std::move(e), prime_);
  }

  std::string to_string() const {
    std::string out = "chi mod " + std::to_string(d_) + " [";
    for (long x = 0; x < d_; ++x) {
      if (x) out += ", ";
      const auto e = exponent(x);
      out += e ? "z^" + std::to_string(*e) : "0";
    }
    return out + "] with z of order " + std::to_string(order_);
  }

 private:
  DirichletCharacter(long d, long order, std::vector<std::optional<long>> e, std::optional<long> prime)
      : d_(d), order_(order), prime_(prime), e_(std::move(e)) {}

  void validate() {
    if (d_ < 1 || order_ < 1) throw PreconditionError("chi", "modulus and order must be positive");
    if (static_cast<long>(e_.size()) != d_) throw PreconditionError("chi", "table length must equal the modulus");
    if (prime_ && (!is_prime(*prime_) || *prime_ == 2))
      throw PreconditionError("chi", "embedding prime must be an odd prime");
    if (order_ > 2) {
      if (!prime_)
        throw PreconditionError("chi", "order " + std::to_string(order_) + " needs an embedding prime");
      if ((*prime_ - 1) % order_ != 0)
        throw PreconditionError("chi", "order " + std::to_string(order_) + " does not divide p - 1 = " +
                                           std::to_string(*prime_ - 1) + "; values do not embed in Q_p");
    }
    for (long x = 0; x < d_; ++x) {
      auto& e = e_[static_cast<std::size_t>(x)];
      if ((std::gcd(x, d_) == 1) != e.has_value())
        throw PreconditionError("chi", "chi(x) must vanish exactly on non-units (x = " + std::to_string(x) + ")");
      if (e) *e = detail::floor_mod(*e, order_);
    }
    if (*exponent(1) != 0) throw PreconditionError("chi", "chi(1) must be 1");
    const long partner_limit = d_ <= 1000 ? d_ : 64;
    for (long x = 1; x < d_; ++x) {
      const auto ex = exponent(x);
      if (!ex) continue;
      for (long y = 1; y < std::min(partner_limit, d_); ++y) {
        const auto ey = exponent(y);
        if (ey && *exponent(x * y % d_) != (*ex + *ey) % order_)
          throw PreconditionError("chi", "table is not multiplicative at x = " + std::to_string(x) +
                                             ", y = " + std::to_string(y));
      }
    }
  }

  long d_;
  long order_;
  std::optional<long> prime_;
  std::vector<std::optional<long>> e_;
};

/// "trivial:d" or "quadratic:d".
inline DirichletCharacter parse_character_label(const std::string& label) {
  const auto colon = label.find(':');
  if (colon == std::string::npos) throw PreconditionError("chi", "expected kind:d, got '" + label + "'");
  const std::string kind = label.substr(0, colon);
  long d = 0;
  try {
    std::size_t used = 0;
    d = std::stol(label.substr(colon + 1), &used);
    if (used != label.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw PreconditionError("chi", "bad modulus in '" + label + "'");
  }
  if (kind == "trivial") return DirichletCharacter::trivial(d);
  if (kind == "quadratic") return DirichletCharacter::quadratic(d);
  throw PreconditionError("chi", "unknown character kind '" + kind + "'");
}

/// sum_e c_e zeta_m^e with rational c_e; the value ring of twisted sums.
class CharacterSum {
 public:
  explicit CharacterSum(long order = 1, std::optional<long> prime = std::nullopt)
      : order_(order), prime_(prime), c_(static_cast<std::size_t>(order)) {
    if (order < 1) throw PreconditionError("chi", "root order must be positive");
  }

  static CharacterSum of(const BigRational& value) {
    CharacterSum s;
    s.c_[0] = value;
    return s;
  }

  long order() const { return order_; }
  std::optional<long> prime() const { return prime_; }
  const std::vector<BigRational>& coefficients() const { return c_; }

  void add(long exponent, const BigRational& value) { c_[static_cast<std::size_t>(detail::floor_mod(exponent, order_))] += value; }

  bool is_exact_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }

  /// The same element written over zeta_order for a multiple order of order_.
  CharacterSum lifted(long order) const {
    if (order % order_ != 0) throw PreconditionError("chi", "lift order must be a multiple");
    CharacterSum out(order, prime_);
    const long step = order / order_;
    for (long e = 0; e < order_; ++e) out.c_[static_cast<std::size_t>(e * step)] = c_[static_cast<std::size_t>(e)];
    return out;
  }

  /// zeta_order^shift times this.
  CharacterSum rotated(long shift) const {
    CharacterSum out(order_, prime_);
    for (long e = 0; e < order_; ++e) out.add(e + shift, c_[static_cast<std::size_t>(e)]);
    return out;
  }

  friend CharacterSum operator+(const CharacterSum& a, const CharacterSum& b) {
    const long m = std::lcm(a.order_, b.order_);
    CharacterSum out = a.lifted(m);
    out.prime_ = detail::merge_primes(a.prime_, b.prime_);
    const CharacterSum bl = b.lifted(m);
    for (long e = 0; e < m; ++e) out.c_[static_cast<std::size_t>(e)] += bl.c_[static_cast<std::size_t>(e)];
    return out;
  }

  friend CharacterSum operator*(const BigRational& s, const CharacterSum& a) {
    CharacterSum out = a;
    for (auto& c : out.c_) c *= s;
    return out;
  }

  friend CharacterSum operator-(const CharacterSum& a, const CharacterSum& b) { return a + BigRational(-1) * b; }

  bool is_rational() const { return order_ <= 2; }

  BigRational to_rational() const {
    if (!is_rational()) throw PreconditionError("chi", "sum involves roots of unity of order > 2");
    return order_ == 1 ? c_[0] : BigRational(c_[0] - c_[1]);
  }

  PadicNumber to_padic(const PadicContext& ctx) const {
    if (is_rational()) {
      const BigRational v = to_rational();
      return qbarnes::to_padic(v, ctx);
    }
    if (is_exact_zero()) return PadicNumber::zero(ctx);
    return accumulate(ctx).result();
  }

  /// Exact valuation in rational mode; otherwise the accumulator bound.
  CongruenceBound valuation_bound(const PadicContext& ctx) const {
    if (is_rational()) return {valuation(to_rational(), ctx.prime()), false};
    if (is_exact_zero()) return {Valuation::infinity(), false};
    return accumulate(ctx).valuation_bound();
  }

  std::string to_string() const {
    if (is_rational()) return qbarnes::to_string(to_rational());
    std::string out;
    for (long e = 0; e < order_; ++e) {
      const auto& c = c_[static_cast<std::size_t>(e)];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + qbarnes::to_string(c) + ")*z^" + std::to_string(e);
    }
    return (out.empty() ? "0" : out) + " with z of order " + std::to_string(order_);
  }

 private:
  PadicAccumulator accumulate(const PadicContext& ctx) const {
    if (prime_ && *prime_ != ctx.prime()) throw PreconditionError("chi", "sum is embedded at another prime");
    Valuation floor = Valuation::infinity();
    for (const auto& c : c_)
      if (c != 0) floor = std::min(floor, valuation(c, ctx.prime()));
    const PadicNumber zeta = root_of_unity(order_, ctx);
    PadicAccumulator acc(ctx, floor.value());
    PadicNumber power = PadicNumber::one(ctx);
    for (long e = 0; e < order_; ++e) {
      const auto& c = c_[static_cast<std::size_t>(e)];
      if (c != 0) acc.add(qbarnes::to_padic(c, ctx) * power);
      power = power * zeta;
    }
    return acc;
  }

  long order_;
  std::optional<long> prime_;
  std::vector<BigRational> c_;
};

}  // namespace qbarnes
