#pragma once

// Dense univariate polynomials over Q and reduced rational functions.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qbarnes/errors.hpp"
#include "qbarnes/rational.hpp"

namespace qbarnes {

/// Coefficients from degree 0 upward; the zero polynomial has none.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const BigRational& value) { return Polynomial({value}); }
  static Polynomial monomial(const BigRational& coefficient, std::size_t degree) {
    std::vector<BigRational> c(degree + 1);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
  }
  /// c0 + c1 q^k.
  static Polynomial binomial(const BigRational& c0, const BigRational& c1, std::size_t k) {
    std::vector<BigRational> c(k + 1);
    c[0] += c0;
    c[k] += c1;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return c_; }
  BigRational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const BigRational& leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  BigRational evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const BigRational inv = 1 / leading();
    return inv * *this;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + BigRational(-1) * b;
  }

  friend Polynomial operator*(const BigRational& s, const Polynomial& a) {
    if (s == 0) return Polynomial();
    std::vector<BigRational> c(a.c_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) c[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw PreconditionError("divisor", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<BigRational> rem(a.c_);
    std::vector<BigRational> quot(a.c_.size() - b.c_.size() + 1);
    const BigRational inv_lead = 1 / b.leading();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
      const BigRational factor = rem[i + b.degree()] * inv_lead;
      quot[i] = factor;
      if (factor == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] != 0) rem[i + j] -= factor * b.c_[j];
      }
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Divides by (q - root) when root is a zero; returns false otherwise.
  bool divide_by_linear(const BigRational& root) {
    if (is_zero()) return false;
    std::vector<BigRational> quot(c_.size() - 1);
    BigRational carry = 0;
    for (long i = degree(); i >= 1; --i) {
      carry = carry * root + c_[i];
      quot[i - 1] = carry;
    }
    if (carry * root + c_[0] != 0) return false;
    c_ = std::move(quot);
    trim();
    return true;
  }

  /// Multiplicity of the factor q at zero, removed in place.
  std::size_t strip_low_zeros(std::size_t limit) {
    std::size_t k = 0;
    while (k < limit && k < c_.size() && c_[k] == 0) ++k;
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    return k;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + qbarnes::to_string(c_[i]) + ")";
      if (i > 0) out += "*q^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigRational> c_;
};

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Image of c * poly in F_m, where c clears all denominators. Empty when the
/// leading coefficient vanishes modulo m.
inline std::vector<u64> reduce_mod(const Polynomial& f, u64 m) {
  BigInt lcm_den = 1;
  for (const auto& x : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<u64> out(f.coefficients().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& x = f.coefficients()[i];
    BigInt scaled = x.get_num() * (lcm_den / x.get_den());
    out[i] = mpz_fdiv_ui(scaled.get_mpz_t(), m);
  }
  if (!out.empty() && out.back() == 0) out.clear();
  return out;
}

inline void trim_mod(std::vector<u64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Degree of gcd(a, b) over F_m for nonzero a, b.
inline long gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    if (a.size() >= b.size()) {
      const u64 inv = powmod(b.back(), m - 2, m);
      while (a.size() >= b.size() && !a.empty()) {
        const u64 factor = mulmod(a.back(), inv, m);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[shift + j] = (a[shift + j] + m - mulmod(factor, b[j], m)) % m;
        }
        trim_mod(a);
      }
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

inline bool coprime_modular_certificate(const Polynomial& a, const Polynomial& b) {
  BigInt prime = BigInt(1) << 61;
  for (int attempt = 0; attempt < 4; ++attempt) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 m = mpz_get_ui(prime.get_mpz_t());
    const auto am = reduce_mod(a, m);
    const auto bm = reduce_mod(b, m);
    if (am.empty() || bm.empty()) continue;  // leading coefficient lost mod m
    // deg gcd mod m >= deg gcd over Q when leading coefficients survive.
    if (gcd_degree_mod(am, bm, m) == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Monic gcd over Q. A modular image of degree zero certifies coprimality
/// cheaply; otherwise the exact Euclidean algorithm runs.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0 || detail::coprime_modular_certificate(a, b))
    return Polynomial::constant(1);
  while (!b.is_zero()) {
    auto rem = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = rem.monic();
  }
  return a.monic();
}

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFunctionQ {
 public:
  static RationalFunctionQ reduced(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw PreconditionError("denominator", "zero denominator polynomial");
    if (num.is_zero()) return RationalFunctionQ(Polynomial(), Polynomial::constant(1));
    // Cheap common factors first: powers of q and of (q - 1).
    const std::size_t k = num.strip_low_zeros(SIZE_MAX);
    const std::size_t kd = den.strip_low_zeros(k);
    if (kd < k) num = Polynomial::monomial(1, k - kd) * num;
    while (num.degree() > 0 && den.degree() > 0) {
      Polynomial n2 = num, d2 = den;
      if (!n2.divide_by_linear(1) || !d2.divide_by_linear(1)) break;
      num = std::move(n2);
      den = std::move(d2);
    }
    const Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = Polynomial::divmod(num, g).first;
      den = Polynomial::divmod(den, g).first;
    }
    const BigRational inv = 1 / den.leading();
    return RationalFunctionQ(inv * num, inv * den);
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  BigRational evaluate(const BigRational& q) const {
    const BigRational d = den_.evaluate(q);
    if (d == 0) throw PoleError("rational function has a pole at q = " + to_string(q));
    return num_.evaluate(q) / d;
  }

 private:
  RationalFunctionQ(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

}  // namespace qbarnes
