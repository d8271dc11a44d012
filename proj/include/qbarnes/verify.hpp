#pragma once

// Identity-verification suites. Each suite sweeps a configuration, defaults
// to the acceptance sweep, and reports one check per configuration point.
// Exact identities report a residual ("0" on success); p-adic ones report an
// error valuation ("inf" for exact agreement, ">=M" when only the joint
// precision M is known).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbarnes/characters.hpp"
#include "qbarnes/errors.hpp"
#include "qbarnes/euler_barnes.hpp"
#include "qbarnes/integration.hpp"
#include "qbarnes/lfunction.hpp"
#include "qbarnes/padic.hpp"
#include "qbarnes/rational.hpp"
#include "qbarnes/sampling.hpp"
#include "qbarnes/series.hpp"

namespace qbarnes {

struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<std::string> residual;
  std::optional<std::string> error_valuation;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  long resamples = 0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

/// Optional overrides; an unset field keeps the suite's default sweep.
struct VerifyConfig {
  std::optional<long> p;
  std::optional<long> precision;
  std::optional<BigRational> q;
  std::optional<BigRational> u;
  std::optional<std::vector<long>> a;
  std::optional<long> r, n, k, w, f, d, N, x;
  /// A fixed character and the label it is reported under.
  std::optional<std::pair<std::string, DirichletCharacter>> chi;
  std::optional<long> samples;
  std::uint64_t seed = 1;
  Budget budget;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "theorem1-gf", "addition",     "distribution", "carlitz-bridge", "qlimit",
      "riemann-convergence", "measure-additivity", "measure-bound", "prop5", "eq8-bridge",
      "interpolation", "kummer",      "unit-power"};
  return names;
}

namespace detail {

inline std::string join(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

inline std::string join(const std::vector<Valuation>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out;
}

inline std::string render(const CongruenceBound& b) {
  return b.capped ? ">=" + b.valuation.to_string() : b.valuation.to_string();
}

inline std::vector<long> values_or(const std::optional<long>& fixed, std::vector<long> defaults) {
  return fixed ? std::vector<long>{*fixed} : defaults;
}

inline std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

inline std::vector<std::pair<std::string, DirichletCharacter>> characters_or(const VerifyConfig& cfg) {
  if (cfg.chi) return {*cfg.chi};
  return {{"trivial:1", DirichletCharacter::trivial(1)}, {"quadratic:4", DirichletCharacter::quadratic(4)}};
}

/// Residual of the first mismatching index, or "0".
inline std::string first_residual(const std::vector<BigRational>& lhs, const std::vector<BigRational>& rhs) {
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i)
    if (lhs[i] != rhs[i]) return to_string(BigRational(lhs[i] - rhs[i]));
  return "0";
}

inline bool weakly_increasing(const std::vector<Valuation>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

inline bool strictly_increasing(const std::vector<Valuation>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

/// Runs body on (q, u) draws until it completes without a pole. Fixed
/// values from the configuration are never resampled.
class SampleLoop {
 public:
  SampleLoop(const VerifyConfig& cfg, Sampler& sampler, SuiteReport& report)
      : cfg_(cfg), sampler_(sampler), report_(report) {}

  void run(const std::function<std::vector<CheckResult>(const BigRational& q, const BigRational& u)>& body) {
    for (int attempt = 0;; ++attempt) {
      const BigRational q = cfg_.q ? *cfg_.q : sampler_.generic();
      const BigRational u = cfg_.u ? *cfg_.u : sampler_.generic();
      try {
        for (auto& c : body(q, u)) report_.checks.push_back(std::move(c));
        return;
      } catch (const PoleError&) {
        if ((cfg_.q && cfg_.u) || attempt >= 1000) throw;
        ++report_.resamples;
      }
    }
  }

 private:
  const VerifyConfig& cfg_;
  Sampler& sampler_;
  SuiteReport& report_;
};

inline std::vector<long> parameters_for(const VerifyConfig& cfg, Sampler& s, long r) {
  return cfg.a ? *cfg.a : s.parameters(static_cast<std::size_t>(r));
}

inline std::vector<long> r_values(const VerifyConfig& cfg, std::vector<long> defaults) {
  if (cfg.a) return {static_cast<long>(cfg.a->size())};
  return values_or(cfg.r, std::move(defaults));
}

inline long require_positive(long v, const char* name) {
  if (v < 0) throw PreconditionError(name, std::string(name) + " must be non-negative");
  return v;
}

inline PadicContext context_for(const VerifyConfig& cfg, long p, long fallback) {
  return PadicContext(p, static_cast<int>(cfg.precision.value_or(fallback)));
}

inline BigRational padic_u_for(const VerifyConfig& cfg, Sampler& s, long p, long e = 1) {
  return cfg.u ? *cfg.u : s.padic_u(p, e);
}

inline BigRational padic_q_for(const VerifyConfig& cfg, Sampler& s, long p) { return cfg.q ? *cfg.q : s.padic_q(p); }

inline long a1_for(const VerifyConfig& cfg, long fallback = 1) { return cfg.a ? cfg.a->front() : fallback; }

}  // namespace detail

/// Generating-function coefficients against the closed form.
inline SuiteReport verify_gf_closed_form(const VerifyConfig& cfg) {
  SuiteReport report{"theorem1-gf", {}, 0};
  Sampler s(cfg.seed);
  detail::SampleLoop loop(cfg, s, report);
  const long samples = cfg.samples.value_or(30);
  const auto n_max = static_cast<std::size_t>(detail::require_positive(cfg.n.value_or(12), "n"));
  for (long i = 0; i < samples; ++i) {
    for (long r : detail::r_values(cfg, {1, 2, 3})) {
      const auto a = detail::parameters_for(cfg, s, r);
      loop.run([&](const BigRational& q, const BigRational& u) {
        const BarnesParams params(a, u, QBase(q));
        std::vector<CheckResult> out;
        for (long x : detail::values_or(cfg.x, {0, 1, 3})) {
          const auto gf = q_gf_coefficients(params, x, n_max, n_max);
          std::vector<BigRational> closed;
          for (std::size_t n = 0; n <= n_max; ++n) closed.push_back(h_closed(static_cast<unsigned>(n), x, params));
          const std::string residual = detail::first_residual(gf, closed);
          out.push_back({"gf-coefficients=closed-form",
                         {{"q", to_string(q)}, {"u", to_string(u)}, {"a", detail::join(a)},
                          {"x", std::to_string(x)}, {"n_max", std::to_string(n_max)}},
                         residual, std::nullopt, residual == "0"});
        }
        return out;
      });
    }
  }
  return report;
}

inline SuiteReport verify_addition(const VerifyConfig& cfg) {
  SuiteReport report{"addition", {}, 0};
  Sampler s(cfg.seed);
  detail::SampleLoop loop(cfg, s, report);
  const long n_max = detail::require_positive(cfg.n.value_or(8), "n");
  for (long i = 0; i < cfg.samples.value_or(20); ++i) {
    for (long r : detail::r_values(cfg, {1, 2, 3})) {
      const auto a = detail::parameters_for(cfg, s, r);
      loop.run([&](const BigRational& q, const BigRational& u) {
        const BarnesParams params(a, u, QBase(q));
        std::vector<CheckResult> out;
        for (long w : detail::values_or(cfg.w, detail::range(0, 5))) {
          std::vector<BigRational> lhs, rhs;
          for (long n = 0; n <= n_max; ++n) {
            lhs.push_back(h_addition(static_cast<unsigned>(n), w, params));
            rhs.push_back(h_closed(static_cast<unsigned>(n), w, params));
          }
          const std::string residual = detail::first_residual(lhs, rhs);
          out.push_back({"addition-formula",
                         {{"q", to_string(q)}, {"u", to_string(u)}, {"a", detail::join(a)},
                          {"w", std::to_string(w)}, {"n_max", std::to_string(n_max)}},
                         residual, std::nullopt, residual == "0"});
        }
        return out;
      });
    }
  }
  return report;
}

inline SuiteReport verify_distribution(const VerifyConfig& cfg) {
  SuiteReport report{"distribution", {}, 0};
  Sampler s(cfg.seed);
  detail::SampleLoop loop(cfg, s, report);
  const long n_max = detail::require_positive(cfg.n.value_or(8), "n");
  for (long i = 0; i < cfg.samples.value_or(20); ++i) {
    for (long r : detail::r_values(cfg, {1, 2})) {
      const auto a = detail::parameters_for(cfg, s, r);
      loop.run([&](const BigRational& q, const BigRational& u) {
        const BarnesParams params(a, u, QBase(q));
        std::vector<CheckResult> out;
        for (long f : detail::values_or(cfg.f, {2, 3})) {
          for (long w : detail::values_or(cfg.w, {0, 1, 2})) {
            std::string residual = "0";
            for (long n = 0; n <= n_max && residual == "0"; ++n) {
              const BigRational res = distribution_residual(static_cast<unsigned>(n), w, f, params);
              if (res != 0) residual = to_string(res);
            }
            out.push_back({"distribution-relation",
                           {{"q", to_string(q)}, {"u", to_string(u)}, {"a", detail::join(a)},
                            {"f", std::to_string(f)}, {"w", std::to_string(w)}, {"n_max", std::to_string(n_max)}},
                           residual, std::nullopt, residual == "0"});
          }
        }
        return out;
      });
    }
  }
  return report;
}

/// h_closed(k, 0, a = (1), u, q) against Carlitz's numbers at u^(-1).
inline SuiteReport verify_carlitz_bridge(const VerifyConfig& cfg) {
  SuiteReport report{"carlitz-bridge", {}, 0};
  Sampler s(cfg.seed);
  detail::SampleLoop loop(cfg, s, report);
  const long k_max = detail::require_positive(cfg.k.value_or(10), "k");
  for (long i = 0; i < cfg.samples.value_or(10); ++i) {
    loop.run([&](const BigRational& q, const BigRational& u) {
      const BarnesParams params({1}, u, QBase(q));
      const auto carlitz = h_carlitz_sequence(static_cast<unsigned>(k_max), 1 / u, q);
      std::vector<BigRational> closed;
      for (long k = 0; k <= k_max; ++k) closed.push_back(h_closed(static_cast<unsigned>(k), 0, params));
      const std::string residual = detail::first_residual(closed, carlitz);
      return std::vector<CheckResult>{{"closed-form=carlitz(1/u)",
                                       {{"q", to_string(q)}, {"u", to_string(u)}, {"k_max", std::to_string(k_max)}},
                                       residual, std::nullopt, residual == "0"}};
    });
  }
  return report;
}

/// lim_{q->1} h_closed against the classical coefficients at parameter u^(-1).
inline SuiteReport verify_qlimit(const VerifyConfig& cfg) {
  SuiteReport report{"qlimit", {}, 0};
  Sampler s(cfg.seed);
  const long n_max = detail::require_positive(cfg.n.value_or(10), "n");
  for (long i = 0; i < cfg.samples.value_or(10); ++i) {
    for (long r : detail::r_values(cfg, {1, 2})) {
      const auto a = detail::parameters_for(cfg, s, r);
      const long w = cfg.w ? *cfg.w : s.integer(-2, 3);
      const BigRational u = cfg.u ? *cfg.u : s.generic();
      const auto classical = classical_gf_coefficients(w, 1 / u, a, static_cast<std::size_t>(n_max));
      std::vector<BigRational> limits;
      for (long n = 0; n <= n_max; ++n) limits.push_back(limit_q_to_1(static_cast<unsigned>(n), w, a, u));
      const std::string residual = detail::first_residual(limits, classical);
      report.checks.push_back({"q-limit=classical(1/u)",
                               {{"u", to_string(u)}, {"a", detail::join(a)}, {"w", std::to_string(w)},
                                {"n_max", std::to_string(n_max)}},
                               residual, std::nullopt, residual == "0"});
    }
  }
  return report;
}

/// Level-N r-fold Riemann sums against the closed form.
inline SuiteReport verify_riemann_convergence(const VerifyConfig& cfg) {
  SuiteReport report{"riemann-convergence", {}, 0};
  Sampler s(cfg.seed);
  const long N_max = cfg.N.value_or(4);
  const long n_max = detail::require_positive(cfg.n.value_or(3), "n");
  for (long p : detail::values_or(cfg.p, {3, 5, 7})) {
    for (long r : detail::r_values(cfg, {1, 2})) {
      if (r > 1 && !cfg.r && !cfg.a && p != 3) continue;
      const auto a = detail::parameters_for(cfg, s, r);
      for (long e : {1L, -1L}) {
        if (cfg.u && e < 0) break;
        const BigRational u = detail::padic_u_for(cfg, s, p, e);
        const BigRational q = detail::padic_q_for(cfg, s, p);
        const BarnesParams params(a, u, QBase(q));
        const long w = cfg.w.value_or(0);
        for (long n = 1; n <= n_max; ++n) {
          const BigRational closed = h_closed(static_cast<unsigned>(n), w, params);
          std::vector<Valuation> vals;
          for (long N = 1; N <= N_max; ++N) {
            vals.push_back(valuation(
                BigRational(multi_riemann_integral(static_cast<unsigned>(n), w, params, p, N, cfg.budget) - closed), p));
          }
          const bool pass = detail::weakly_increasing(vals) && vals.back() >= N_max - 1;
          report.checks.push_back({"riemann-sum->closed-form",
                                   {{"p", std::to_string(p)}, {"q", to_string(q)}, {"u", to_string(u)},
                                    {"a", detail::join(a)}, {"w", std::to_string(w)}, {"n", std::to_string(n)},
                                    {"valuations_by_N", detail::join(vals)}},
                                   std::nullopt, vals.back().to_string(), pass});
        }
      }
    }
  }
  return report;
}

namespace detail {

struct MeasureSweep {
  long p;
  long e;
  BigRational u;
  BigRational q;
  long a1;
};

inline std::vector<MeasureSweep> measure_sweeps(const VerifyConfig& cfg, Sampler& s) {
  std::vector<MeasureSweep> out;
  for (long p : values_or(cfg.p, {3, 5})) {
    for (long e : {1L, 2L}) {
      if (cfg.u && e > 1) break;
      const BigRational u = padic_u_for(cfg, s, p, e);
      const long nu = AdmissibleU(u, p).certificate();
      out.push_back({p, nu, u, padic_q_for(cfg, s, p), a1_for(cfg, s.parameters(1).front())});
    }
  }
  return out;
}

}  // namespace detail

/// One-step refinement additivity of E^(k), summed over every cell.
inline SuiteReport verify_measure_additivity(const VerifyConfig& cfg) {
  SuiteReport report{"measure-additivity", {}, 0};
  Sampler s(cfg.seed);
  for (const auto& sw : detail::measure_sweeps(cfg, s)) {
    const AdmissibleU u(sw.u, sw.p);
    for (long k : detail::values_or(cfg.k, detail::range(0, 4))) {
      for (long f : detail::values_or(cfg.f, {1, 2})) {
        for (long N : detail::values_or(cfg.N, {0, 1, 2})) {
          const long m = MeasureCell{0, f, N, 1}.modulus(sw.p);
          cfg.budget.check(m * (sw.p + 1), "measure-additivity");
          std::string residual = "0";
          for (long x = 0; x < m && residual == "0"; ++x) {
            const BigRational res =
                measure_additivity_residual(x, f, N, static_cast<unsigned>(k), u, sw.q, sw.a1);
            if (res != 0) residual = to_string(res);
          }
          report.checks.push_back({"measure-additivity",
                                   {{"p", std::to_string(sw.p)}, {"nu_u", std::to_string(sw.e)},
                                    {"u", to_string(sw.u)}, {"q", to_string(sw.q)}, {"a1", std::to_string(sw.a1)},
                                    {"k", std::to_string(k)}, {"f", std::to_string(f)}, {"N", std::to_string(N)},
                                    {"cells", std::to_string(m)}},
                                   residual, std::nullopt, residual == "0"});
        }
      }
    }
  }
  return report;
}

/// nu_p(E^(k)(cell)) >= 0 on every cell; reports the least valuation seen.
inline SuiteReport verify_measure_bound(const VerifyConfig& cfg) {
  SuiteReport report{"measure-bound", {}, 0};
  Sampler s(cfg.seed);
  for (const auto& sw : detail::measure_sweeps(cfg, s)) {
    const AdmissibleU u(sw.u, sw.p);
    for (long k : detail::values_or(cfg.k, detail::range(0, 4))) {
      for (long f : detail::values_or(cfg.f, {1, 2})) {
        for (long N : detail::values_or(cfg.N, {0, 1, 2})) {
          const long m = MeasureCell{0, f, N, 1}.modulus(sw.p);
          cfg.budget.check(m, "measure-bound");
          Valuation least = Valuation::infinity();
          bool pass = true;
          for (long x = 0; x < m; ++x) {
            const MeasureCell cell{x, f, N, 1};
            pass = measure_bound_check(cell, static_cast<unsigned>(k), u, sw.q, sw.a1) && pass;
            least = std::min(least, valuation(measure_E_value(cell, static_cast<unsigned>(k), u, sw.q, sw.a1), sw.p));
          }
          report.checks.push_back({"measure-bound",
                                   {{"p", std::to_string(sw.p)}, {"nu_u", std::to_string(sw.e)},
                                    {"u", to_string(sw.u)}, {"q", to_string(sw.q)}, {"a1", std::to_string(sw.a1)},
                                    {"k", std::to_string(k)}, {"f", std::to_string(f)}, {"N", std::to_string(N)}},
                                   std::nullopt, least.to_string(), pass});
        }
      }
    }
  }
  return report;
}

/// Level-N cell sums of dE^(k) against (1/(1-u)) H_k^(1)(u, q | a_1), and the
/// per-cell remainder E - leading term, which is divisible by [f p^N : q].
inline SuiteReport verify_cell_sums(const VerifyConfig& cfg) {
  SuiteReport report{"prop5", {}, 0};
  Sampler s(cfg.seed);
  const long N_max = cfg.N.value_or(4);
  for (long p : detail::values_or(cfg.p, {3, 5})) {
    const AdmissibleU u(detail::padic_u_for(cfg, s, p), p);
    const BigRational q = detail::padic_q_for(cfg, s, p);
    const long a1 = detail::a1_for(cfg);
    const long f = cfg.f.value_or(1);
    for (long k : detail::values_or(cfg.k, detail::range(0, 2))) {
      std::vector<Valuation> vals;
      for (long N = 1; N <= N_max; ++N)
        vals.push_back(cell_sum_valuation(static_cast<unsigned>(k), u, q, a1, N, f, cfg.budget));
      const bool exact = std::all_of(vals.begin(), vals.end(), [](const Valuation& v) { return v.is_infinite(); });
      const std::vector<std::pair<std::string, std::string>> params = {
          {"p", std::to_string(p)}, {"u", to_string(u.value())}, {"q", to_string(q)}, {"a1", std::to_string(a1)},
          {"f", std::to_string(f)}, {"k", std::to_string(k)}};
      auto with = [&](std::pair<std::string, std::string> extra) {
        auto out = params;
        out.push_back(std::move(extra));
        return out;
      };
      report.checks.push_back({"cell-sum->integral", with({"valuations_by_N", detail::join(vals)}), std::nullopt,
                               vals.back().to_string(), exact || detail::strictly_increasing(vals)});

      std::vector<Valuation> remainders;
      bool remainder_pass = true;
      for (long N = 0; N <= std::min<long>(N_max, 2); ++N) {
        const long m = MeasureCell{0, f, N, 1}.modulus(p);
        Valuation least = Valuation::infinity();
        for (long x = 0; x < m; ++x)
          least = std::min(least, measure_remainder_valuation(MeasureCell{x, f, N, 1}, static_cast<unsigned>(k), u, q, a1));
        remainders.push_back(least);
        remainder_pass = remainder_pass && least >= N + valuation(BigRational(f), p).value();
      }
      report.checks.push_back({"cell-remainder-divisibility", with({"min_valuations_by_N", detail::join(remainders)}),
                               std::nullopt, remainders.back().to_string(), remainder_pass});
    }
  }
  return report;
}

/// Riemann sums of chi(x)[a_1 x:q]^k d mu_u against h_chi.
inline SuiteReport verify_twisted_bridge(const VerifyConfig& cfg) {
  SuiteReport report{"eq8-bridge", {}, 0};
  Sampler s(cfg.seed);
  const long N_max = cfg.N.value_or(3);
  for (long p : detail::values_or(cfg.p, {3, 5})) {
    const PadicContext ctx = detail::context_for(cfg, p, 40);
    const AdmissibleU u(detail::padic_u_for(cfg, s, p), p);
    const BigRational q = detail::padic_q_for(cfg, s, p);
    const long a1 = detail::a1_for(cfg);
    for (const auto& [label, chi] : detail::characters_or(cfg)) {
      for (long k : detail::values_or(cfg.k, detail::range(0, 4))) {
        const CharacterSum closed = h_chi(static_cast<unsigned>(k), BarnesParams({a1}, u.value(), QBase(q)), chi);
        std::vector<Valuation> vals;
        CongruenceBound last{Valuation::infinity(), false};
        for (long N = 1; N <= N_max; ++N) {
          last = (chi_riemann_sum(static_cast<unsigned>(k), chi, u, q, a1, N, cfg.budget) - closed).valuation_bound(ctx);
          vals.push_back(last.valuation);
        }
        const bool pass = detail::weakly_increasing(vals) && vals.back() >= N_max - 1;
        report.checks.push_back({"chi-riemann-sum->h_chi",
                                 {{"p", std::to_string(p)}, {"u", to_string(u.value())}, {"q", to_string(q)},
                                  {"a1", std::to_string(a1)}, {"chi", label}, {"k", std::to_string(k)},
                                  {"valuations_by_N", detail::join(vals)}},
                                 std::nullopt, detail::render(last), pass});
      }
    }
  }
  return report;
}

/// l_riemann(-k, chi omega^k) against the closed form of l_at_negative.
inline SuiteReport verify_interpolation(const VerifyConfig& cfg) {
  SuiteReport report{"interpolation", {}, 0};
  Sampler s(cfg.seed);
  const long N = cfg.N.value_or(3);
  for (long p : detail::values_or(cfg.p, {3, 5})) {
    const PadicContext ctx = detail::context_for(cfg, p, 10);
    const AdmissibleU u(detail::padic_u_for(cfg, s, p), p);
    const BigRational q = detail::padic_q_for(cfg, s, p);
    for (const auto& [label, chi] : detail::characters_or(cfg)) {
      for (long a1 : cfg.a ? std::vector<long>{cfg.a->front()} : std::vector<long>{1, 2}) {
        for (long k : detail::values_or(cfg.k, detail::range(0, 6))) {
          const PadicNumber closed = l_at_negative(static_cast<unsigned>(k), chi, u, q, a1).to_padic(ctx);
          const PadicNumber sum = l_riemann(-k, twisted(chi, k, p), u, q, a1, ctx, N, cfg.budget);
          const CongruenceBound b = difference_valuation(sum, closed);
          const long joint = std::min(sum.absolute_precision(), closed.absolute_precision()).value();
          report.checks.push_back({"l_riemann(-k,chi*omega^k)=l_at_negative",
                                   {{"p", std::to_string(p)}, {"M", std::to_string(ctx.precision())},
                                    {"u", to_string(u.value())}, {"q", to_string(q)}, {"a1", std::to_string(a1)},
                                    {"chi", label}, {"k", std::to_string(k)}, {"N", std::to_string(N)},
                                    {"value", closed.to_string()}},
                                   std::nullopt, detail::render(b), b.valuation >= joint});
        }
      }
    }
  }
  return report;
}

inline SuiteReport verify_kummer(const VerifyConfig& cfg) {
  SuiteReport report{"kummer", {}, 0};
  Sampler s(cfg.seed);
  struct Pairs {
    long p;
    long n;
    std::vector<std::pair<long, long>> ks;
  };
  std::vector<Pairs> table = {{3, 1, {{1, 7}, {2, 8}, {3, 9}}},
                              {3, 2, {{1, 19}, {2, 20}, {4, 22}}},
                              {5, 1, {{1, 21}, {2, 22}, {3, 23}}},
                              {5, 2, {{1, 101}, {2, 102}, {3, 103}}}};
  if (cfg.p && *cfg.p != 3 && *cfg.p != 5) {
    for (long n : {1L, 2L}) {
      const long period = (*cfg.p - 1) * ipow(*cfg.p, static_cast<int>(n));
      table.push_back({*cfg.p, n, {{1, 1 + period}, {2, 2 + period}, {3, 3 + period}}});
    }
  }
  for (auto& row : table) {
    if (cfg.p && row.p != *cfg.p) continue;
    if (cfg.n && row.n != *cfg.n) continue;
    if (cfg.k) {
      const long period = (row.p - 1) * ipow(row.p, static_cast<int>(row.n));
      row.ks = {{*cfg.k, *cfg.k + period}};
    }
    const PadicContext ctx = detail::context_for(cfg, row.p, row.n + 3);
    const AdmissibleU u(detail::padic_u_for(cfg, s, row.p), row.p);
    const BigRational q = detail::padic_q_for(cfg, s, row.p);
    const long a1 = detail::a1_for(cfg);
    for (const auto& [label, chi] : detail::characters_or(cfg)) {
      for (const auto& [k, k_prime] : row.ks) {
        const KummerResult r = kummer_check(static_cast<unsigned>(detail::require_positive(k, "k")),
                                            static_cast<unsigned>(detail::require_positive(k_prime, "k")), row.n, chi,
                                            u, q, a1, ctx);
        report.checks.push_back({"kummer-congruence",
                                 {{"p", std::to_string(row.p)}, {"n", std::to_string(row.n)},
                                  {"M", std::to_string(ctx.precision())}, {"u", to_string(u.value())},
                                  {"q", to_string(q)}, {"a1", std::to_string(a1)}, {"chi", label},
                                  {"k", std::to_string(k)}, {"k_prime", std::to_string(k_prime)}},
                                 std::nullopt, detail::render(r.bound), r.pass});
      }
    }
  }
  return report;
}

/// <a_1 x:q>^(p^n) = 1 (mod p^n) over all units x < p^2, n <= M - 1.
inline SuiteReport verify_unit_power(const VerifyConfig& cfg) {
  SuiteReport report{"unit-power", {}, 0};
  Sampler s(cfg.seed);
  for (long p : detail::values_or(cfg.p, {3, 5, 7})) {
    const PadicContext ctx = detail::context_for(cfg, p, 8);
    const BigRational q = detail::padic_q_for(cfg, s, p);
    const long a1 = detail::a1_for(cfg);
    if (a1 % p == 0) throw PreconditionError("a1", "a_1 must be a p-adic unit");
    const std::vector<long> ns = cfg.n ? std::vector<long>{*cfg.n} : detail::range(1, ctx.precision() - 1);
    for (long n : ns) {
      Valuation least = Valuation::infinity();
      bool capped = false;
      for (long x = 1; x < p * p; ++x) {
        if (x % p == 0) continue;
        const PadicNumber a = angle_bracket(a1 * x, q, ctx).value();
        const CongruenceBound b =
            difference_valuation(padic_pow(a, ipow(p, static_cast<int>(n))), PadicNumber::one(ctx));
        if (b.valuation < least || (b.valuation == least && b.capped)) {
          least = b.valuation;
          capped = b.capped;
        }
      }
      report.checks.push_back({"unit-power-congruence",
                               {{"p", std::to_string(p)}, {"M", std::to_string(ctx.precision())},
                                {"q", to_string(q)}, {"a1", std::to_string(a1)}, {"n", std::to_string(n)}},
                               std::nullopt, detail::render({least, capped}), least >= n});
    }
  }
  return report;
}

inline SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "theorem1-gf") return verify_gf_closed_form(cfg);
  if (name == "addition") return verify_addition(cfg);
  if (name == "distribution") return verify_distribution(cfg);
  if (name == "carlitz-bridge") return verify_carlitz_bridge(cfg);
  if (name == "qlimit") return verify_qlimit(cfg);
  if (name == "riemann-convergence") return verify_riemann_convergence(cfg);
  if (name == "measure-additivity") return verify_measure_additivity(cfg);
  if (name == "measure-bound") return verify_measure_bound(cfg);
  if (name == "prop5") return verify_cell_sums(cfg);
  if (name == "eq8-bridge") return verify_twisted_bridge(cfg);
  if (name == "interpolation") return verify_interpolation(cfg);
  if (name == "kummer") return verify_kummer(cfg);
  if (name == "unit-power") return verify_unit_power(cfg);
  if (name == "all") {
    SuiteReport all{"all", {}, 0};
    for (const auto& suite : suite_names()) {
      SuiteReport r = run_suite(suite, cfg);
      for (auto& c : r.checks) {
        c.name = suite + "/" + c.name;
        all.checks.push_back(std::move(c));
      }
      all.resamples += r.resamples;
    }
    return all;
  }
  throw PreconditionError("suite", "unknown suite '" + name + "'");
}

}  // namespace qbarnes
