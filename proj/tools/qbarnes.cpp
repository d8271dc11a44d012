// qbarnes: compute values and run verification suites.
//
//   qbarnes compute <kind> [options]
//   qbarnes verify <suite> [options]
//
// Exit codes: 0 success, 1 failed check, 2 precondition, 3 pole, 4 budget,
// 5 precision exhausted, 70 internal error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "character_json.hpp"
#include "qbarnes/characters.hpp"
#include "qbarnes/errors.hpp"
#include "qbarnes/euler_barnes.hpp"
#include "qbarnes/integration.hpp"
#include "qbarnes/lfunction.hpp"
#include "qbarnes/padic.hpp"
#include "qbarnes/rational.hpp"
#include "qbarnes/series.hpp"
#include "qbarnes/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qbarnes;

const std::vector<std::string> kComputeKinds = {"hbarnes", "hbarnes-poly", "gf-coeffs", "classical", "carlitz",
                                                "hchi",    "lvalue",       "measure",   "mu"};

/// Raw command-line values; strings stay unparsed until the command runs.
struct RawOptions {
  std::string command;
  std::string target;
  std::optional<long> p, precision, r, n, k, w, f, d, N, x, samples;
  std::optional<std::string> q, u, a, chi;
  std::uint64_t seed = 1;
  std::size_t budget = Budget{}.max_points;
  std::string format = "json";
};

/// Resolved inputs, echoed back in every output.
struct RunConfig {
  RawOptions raw;
  std::optional<BigRational> q, u;
  std::optional<std::vector<long>> a;
  std::optional<std::pair<std::string, DirichletCharacter>> chi;
  ordered_json inputs = ordered_json::object();
};

BigRational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const PreconditionError& e) {
    throw PreconditionError(flag, e.message());
  }
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("a", "malformed integer '" + item + "' in --a");
    }
  }
  if (out.empty()) throw PreconditionError("a", "--a needs at least one integer");
  return out;
}

RunConfig resolve(const RawOptions& raw) {
  RunConfig cfg;
  cfg.raw = raw;
  auto echo = [&](const char* name, const auto& value) {
    if (value) cfg.inputs[name] = *value;
  };
  echo("p", raw.p);
  echo("precision", raw.precision);
  if (raw.q) {
    cfg.q = parse_flag_rational("q", *raw.q);
    cfg.inputs["q"] = to_string(*cfg.q);
  }
  if (raw.u) {
    cfg.u = parse_flag_rational("u", *raw.u);
    cfg.inputs["u"] = to_string(*cfg.u);
  }
  if (raw.a) {
    cfg.a = parse_list(*raw.a);
    cfg.inputs["a"] = *cfg.a;
    if (raw.r && static_cast<std::size_t>(*raw.r) != cfg.a->size())
      throw PreconditionError("r", "--r disagrees with the length of --a");
  }
  echo("r", raw.r);
  echo("n", raw.n);
  echo("k", raw.k);
  echo("w", raw.w);
  echo("f", raw.f);
  echo("d", raw.d);
  echo("level_N", raw.N);
  echo("x", raw.x);
  echo("samples", raw.samples);
  if (raw.chi) {
    cfg.chi.emplace(*raw.chi, cli::character_from_text(*raw.chi, raw.p));
    cfg.inputs["char"] = *raw.chi;
  }
  cfg.inputs["seed"] = raw.seed;
  cfg.inputs["budget"] = raw.budget;
  return cfg;
}

long need(const std::optional<long>& v, const char* name) {
  if (!v) throw PreconditionError(name, std::string("--") + name + " is required");
  return *v;
}

unsigned need_index(const std::optional<long>& v, const char* name, long fallback) {
  const long value = v.value_or(fallback);
  if (value < 0) throw PreconditionError(name, std::string("--") + name + " must be non-negative");
  return static_cast<unsigned>(value);
}

const BigRational& need(const std::optional<BigRational>& v, const char* name) {
  if (!v) throw PreconditionError(name, std::string("--") + name + " is required");
  return *v;
}

PadicContext context(const RunConfig& cfg, long fallback_precision) {
  return PadicContext(need(cfg.raw.p, "p"), static_cast<int>(cfg.raw.precision.value_or(fallback_precision)));
}

std::vector<long> parameters(const RunConfig& cfg) {
  if (cfg.a) return *cfg.a;
  const long r = cfg.raw.r.value_or(1);
  if (r < 1) throw PreconditionError("r", "--r must be positive");
  return std::vector<long>(static_cast<std::size_t>(r), 1);
}

ordered_json padic_json(const PadicNumber& x) {
  const PadicContext& ctx = x.context();
  return {{"p", ctx.prime()},
          {"M", ctx.precision()},
          {"valuation", x.valuation().to_string()},
          {"unit", x.unit().get_str()},
          {"relative_precision", x.relative_precision()}};
}

ordered_json rationals_json(const std::vector<BigRational>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

ordered_json sum_json(const CharacterSum& s, const std::optional<PadicContext>& ctx) {
  ordered_json out;
  if (s.is_rational()) out["value"] = to_string(s.to_rational());
  out["exact"] = s.to_string();
  if (ctx) out["padic"] = padic_json(s.to_padic(*ctx));
  return out;
}

void validate_admissible(const RunConfig& cfg, const std::vector<long>& default_primes) {
  if (!cfg.u) return;
  if (cfg.raw.p) {
    AdmissibleU(*cfg.u, *cfg.raw.p);
    return;
  }
  for (long p : default_primes) AdmissibleU(*cfg.u, p);
}

ordered_json compute(const std::string& kind, const RunConfig& cfg) {
  const auto& raw = cfg.raw;
  ordered_json out{{"kind", kind}, {"inputs", cfg.inputs}};
  const BigRational q = cfg.q.value_or(2);
  const BigRational u = cfg.u.value_or(3);
  out["inputs"]["q"] = to_string(q);
  out["inputs"]["u"] = to_string(u);

  if (kind == "hbarnes") {
    const auto a = parameters(cfg);
    const unsigned n = need_index(raw.n, "n", 0);
    const long w = raw.w.value_or(0);
    out["inputs"]["a"] = a;
    out["value"] = to_string(q == 1 ? limit_q_to_1(n, w, a, u) : h_closed(n, w, BarnesParams(a, u, QBase(q))));
  } else if (kind == "hbarnes-poly") {
    // H_n(w) = sum_k C(n,k) H_k [w:q]^(n-k) q^(wk)
    const auto a = parameters(cfg);
    const unsigned n = need_index(raw.n, "n", 0);
    const BarnesParams params(a, u, QBase(q));
    out["inputs"]["a"] = a;
    ordered_json terms = ordered_json::array();
    for (unsigned k = 0; k <= n; ++k) {
      terms.push_back({{"bracket_power", n - k},
                       {"q_w_power", k},
                       {"coefficient", to_string(BigRational(binomial(n, k)) * h_closed(k, 0, params))}});
    }
    out["terms"] = terms;
    if (raw.w) out["value"] = to_string(h_addition(n, *raw.w, params));
  } else if (kind == "gf-coeffs") {
    const auto a = parameters(cfg);
    const unsigned n = need_index(raw.n, "n", 0);
    out["inputs"]["a"] = a;
    const std::optional<long> x = raw.x ? raw.x : raw.w;
    out["values"] = rationals_json(q_gf_coefficients(BarnesParams(a, u, QBase(q)), x, n, n));
  } else if (kind == "classical") {
    const auto a = parameters(cfg);
    out["inputs"]["a"] = a;
    out["values"] =
        rationals_json(classical_gf_coefficients(BigRational(raw.w.value_or(0)), u, a, need_index(raw.n, "n", 0)));
  } else if (kind == "carlitz") {
    out["values"] = rationals_json(h_carlitz_sequence(need_index(raw.k ? raw.k : raw.n, "k", 0), u, q));
  } else if (kind == "hchi") {
    const auto a = parameters(cfg);
    const auto chi = cfg.chi ? cfg.chi->second : DirichletCharacter::trivial(1);
    out["inputs"]["a"] = a;
    std::optional<PadicContext> ctx;
    if (raw.p) ctx = context(cfg, 10);
    out.update(sum_json(h_chi(need_index(raw.k, "k", 0), BarnesParams(a, u, QBase(q)), chi), ctx));
  } else if (kind == "lvalue") {
    const PadicContext ctx = context(cfg, 10);
    const AdmissibleU adm(u, ctx.prime());
    const auto chi = cfg.chi ? cfg.chi->second : DirichletCharacter::trivial(1);
    const unsigned k = need_index(raw.k, "k", 0);
    const long a1 = cfg.a ? cfg.a->front() : 1;
    out["inputs"]["a1"] = a1;
    out["twist"] = "chi*omega^" + std::to_string(k);
    out.update(sum_json(l_at_negative(k, chi, adm, q, a1), ctx));
    if (raw.N) {
      out["riemann"] = padic_json(l_riemann(-static_cast<long>(k), twisted(chi, k, ctx.prime()), adm, q, a1, ctx,
                                            *raw.N, Budget{raw.budget}));
    }
  } else if (kind == "measure") {
    const long p = need(raw.p, "p");
    const AdmissibleU adm(u, p);
    const long a1 = cfg.a ? cfg.a->front() : 1;
    const MeasureCell cell{raw.x.value_or(0), raw.f.value_or(1), raw.N.value_or(0), 1};
    out["inputs"]["a1"] = a1;
    const BigRational value = measure_E_value(cell, need_index(raw.k, "k", 0), adm, q, a1);
    out["value"] = to_string(value);
    out["valuation"] = valuation(value, p).to_string();
  } else if (kind == "mu") {
    const long p = need(raw.p, "p");
    const MeasureCell cell{raw.x.value_or(0), raw.f.value_or(1), raw.N.value_or(0), raw.d.value_or(1)};
    out["value"] = to_string(mu_value(cell, AdmissibleU(u, p)));
  } else {
    throw PreconditionError("kind", "unknown compute kind '" + kind + "'");
  }
  return out;
}

bool suite_uses_padic_u(const std::string& suite) {
  static const std::vector<std::string> padic = {"riemann-convergence", "measure-additivity", "measure-bound", "prop5",
                                                 "eq8-bridge",          "interpolation",      "kummer",        "all"};
  return std::find(padic.begin(), padic.end(), suite) != padic.end();
}

SuiteReport verify(const std::string& suite, const RunConfig& cfg) {
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw PreconditionError("suite", "unknown suite '" + suite + "'");
  if (suite_uses_padic_u(suite)) validate_admissible(cfg, {3, 5, 7});
  VerifyConfig vc;
  const auto& raw = cfg.raw;
  vc.p = raw.p;
  vc.precision = raw.precision;
  vc.q = cfg.q;
  vc.u = cfg.u;
  vc.a = cfg.a;
  vc.r = raw.r;
  vc.n = raw.n;
  vc.k = raw.k;
  vc.w = raw.w;
  vc.f = raw.f;
  vc.d = raw.d;
  vc.N = raw.N;
  vc.x = raw.x;
  vc.chi = cfg.chi;
  vc.samples = raw.samples;
  vc.seed = raw.seed;
  vc.budget = Budget{raw.budget};
  return run_suite(suite, vc);
}

ordered_json report_json(const SuiteReport& report, const ordered_json& inputs) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    ordered_json j{{"name", c.name}, {"params", params}};
    if (c.residual) j["residual"] = *c.residual;
    if (c.error_valuation) j["error_valuation"] = *c.error_valuation;
    j["pass"] = c.pass;
    checks.push_back(std::move(j));
  }
  return {{"suite", report.suite}, {"inputs", inputs}, {"checks", checks}, {"resamples", report.resamples},
          {"pass", report.pass()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string scalar(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Flattens nested objects and arrays into path,value rows.
void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else if (j.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < j.size(); ++i) joined += (i ? ";" : "") + scalar(j[i]);
    rows.emplace_back(prefix, joined);
  } else {
    rows.emplace_back(prefix, scalar(j));
  }
}

void print_compute_csv(const ordered_json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::cout << "field,value\n";
  for (const auto& [k, v] : rows) std::cout << csv_field(k) << "," << csv_field(v) << "\n";
}

void print_report_csv(const SuiteReport& report) {
  std::cout << "suite,name,params,residual,error_valuation,pass\n";
  for (const auto& c : report.checks) {
    std::string params;
    for (const auto& [k, v] : c.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    std::cout << csv_field(report.suite) << "," << csv_field(c.name) << "," << csv_field(params) << ","
              << csv_field(c.residual.value_or("")) << "," << csv_field(c.error_valuation.value_or("")) << ","
              << (c.pass ? "true" : "false") << "\n";
  }
}

int fail(int code, const char* kind, const std::string& parameter, const std::string& message) {
  ordered_json err{{"error", {{"kind", kind}, {"parameter", parameter}, {"message", message}}}, {"exit_code", code}};
  std::cerr << err.dump(2) << "\n";
  return code;
}

int run(const RawOptions& raw) {
  try {
    const RunConfig cfg = resolve(raw);
    if (raw.command == "compute") {
      const ordered_json out = compute(raw.target, cfg);
      if (raw.format == "csv") {
        print_compute_csv(out);
      } else {
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }
    const SuiteReport report = verify(raw.target, cfg);
    if (raw.format == "csv") {
      print_report_csv(report);
    } else {
      std::cout << report_json(report, cfg.inputs).dump(2) << "\n";
    }
    return report.pass() ? 0 : 1;
  } catch (const PreconditionError& e) {
    return fail(2, "precondition", e.parameter(), e.message());
  } catch (const PoleError& e) {
    return fail(3, "pole", "", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(4, "budget", "budget", e.what());
  } catch (const PrecisionExhausted& e) {
    return fail(5, "precision", "precision", e.what());
  } catch (const std::exception& e) {
    return fail(70, "internal", "", e.what());
  }
}

void add_options(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--p", raw.p, "odd prime");
  cmd.add_option("--precision", raw.precision, "p-adic precision M");
  cmd.add_option("--q", raw.q, "q as num/den");
  cmd.add_option("--u", raw.u, "u as num/den");
  cmd.add_option("--a", raw.a, "parameters a_1,...,a_r");
  cmd.add_option("--r", raw.r, "number of parameters");
  cmd.add_option("--n", raw.n, "index n");
  cmd.add_option("--k", raw.k, "index k");
  cmd.add_option("--w", raw.w, "argument w");
  cmd.add_option("--f", raw.f, "distribution factor f");
  cmd.add_option("--d", raw.d, "cell modulus factor d");
  cmd.add_option("--level-N", raw.N, "level N");
  cmd.add_option("--x", raw.x, "cell representative or polynomial argument");
  cmd.add_option("--char", raw.chi, "trivial:d, quadratic:d or a JSON object");
  cmd.add_option("--seed", raw.seed, "sampling seed");
  cmd.add_option("--samples", raw.samples, "number of sampled (q, u) points");
  cmd.add_option("--budget", raw.budget, "maximum evaluation points per sum");
  cmd.add_option("--format", raw.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-analogue Euler-Barnes numbers, p-adic measures and L-functions"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* compute_cmd = app.add_subcommand("compute", "compute a value");
  compute_cmd->add_option("kind", raw.target, "value kind")->required()->check(CLI::IsMember(kComputeKinds));
  add_options(*compute_cmd, raw);

  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", raw.target, "suite name")->required()->check(CLI::IsMember(suites));
  add_options(*verify_cmd, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "precondition", "arguments", e.what());
  }
  raw.command = compute_cmd->parsed() ? "compute" : "verify";
  return run(raw);
}
