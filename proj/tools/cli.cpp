// Copyright 2026 The ffwiener Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "ffw/errors.hpp"
#include "ffw/montecarlo.hpp"
#include "ffw/polynomial_json.hpp"
#include "ffw/published.hpp"
#include "ffw/series.hpp"
#include "ffw/transform.hpp"
#include "render.hpp"
#include "verify.hpp"

namespace ffw::cli {

namespace {

using P = ScaledCylinderPolynomial;
using nlohmann::json;

enum class Format { kPretty, kJson };

struct McFlags {
  std::optional<std::uint64_t> samples;
  std::optional<std::uint32_t> grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> workers;
  std::optional<std::string> mode;
  std::string config_path;

  void attach(CLI::App* app, const std::string& samples_flag) {
    app->add_option(samples_flag, samples, "Monte Carlo sample count");
    app->add_option("--grid", grid, "grid intervals M for path-pwz sampling");
    app->add_option("--seed", seed, "64-bit seed (default: $FFW_SEED or 0)");
    app->add_option("--workers", workers, "parallel workers");
    app->add_option("--mode", mode, "direct-gaussian | path-pwz");
    app->add_option("--config", config_path, "JSON file with Monte Carlo settings");
  }

  WienerMCConfig resolve(WienerMCConfig cfg) const {
    if (const char* env = std::getenv("FFW_SEED"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long value = std::strtoull(env, &end, 10);
      if (*end != '\0') throw DomainError("FFW_SEED must be an unsigned integer");
      cfg.seed = value;
    }
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw DomainError("cannot open config file '" + config_path + "'");
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::exception& e) {
        throw DomainError("config file '" + config_path + "': " + e.what());
      }
      cfg = mc_config_from_json(doc, cfg);
    }
    if (samples) cfg.samples = *samples;
    if (grid) cfg.grid = *grid;
    if (seed) cfg.seed = *seed;
    if (workers) cfg.workers = *workers;
    if (mode) cfg.mode = parse_sampling_mode(*mode);
    cfg.validate();
    return cfg;
  }
};

void add_format(CLI::App* app, Format& format) {
  app->add_option("--format", format, "pretty | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"pretty", Format::kPretty}, {"json", Format::kJson}}));
}

std::vector<std::uint32_t> resolve_exponents(const std::vector<std::uint32_t>& p,
                                             const std::vector<std::uint32_t>& k) {
  if (!p.empty() && !k.empty()) throw DomainError("give either --p or --k, not both");
  if (p.empty() && k.empty()) throw DomainError("one of --p or --k is required");
  if (!k.empty()) return k;
  std::vector<std::uint32_t> out;
  for (auto x : p) out.push_back(2 * x);
  return out;
}

std::optional<ExactRational> parse_q(const std::string& text) {
  if (text == "q") return std::nullopt;
  const ExactRational q = parse_rational(text);
  if (q == 0) throw DomainError("q must be nonzero");
  return q;
}

std::string rational_text(const ExactRational& x) { return rational_to_string(x); }

// Fixes v to the given values, leaving a polynomial in tau alone.
P evaluate_at(const P& p, const std::vector<ExactRational>& v) {
  if (v.size() != p.dimension()) {
    throw DomainError("--eval-v has " + std::to_string(v.size()) + " values for a functional in " +
                      std::to_string(p.dimension()) + " variables");
  }
  P out(p.dimension());
  for (const auto& [key, c] : p.terms()) {
    ExactRational scale = 1;
    for (std::size_t j = 0; j < v.size(); ++j) {
      for (std::uint32_t e = 0; e < key.v[j]; ++e) scale *= v[j];
    }
    out.add_term({MultiIndex::zeros(p.dimension()), key.tau}, c * GaussianRational(scale));
  }
  return out;
}

std::vector<ExactRational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<ExactRational> out;
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

std::string factor_product(const MultiIndex& k) {
  std::string out;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    std::vector<std::uint32_t> single(k.size(), 0);
    single[j] = k[j];
    out += "[" + render_q_form(t_lambda_poly(MonomialFunctional{MultiIndex(single)})) + "]";
  }
  return out.empty() ? "1" : out;
}

int run_fft(const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& k, bool general,
            const std::string& q_text, Format format, std::ostream& out) {
  const MultiIndex exponents(resolve_exponents(p, k));
  const auto q = parse_q(q_text);
  P tau_form(exponents.size());
  if (!exponents.all_even()) {
    if (!general) {
      throw DomainError("exponents " + to_string(exponents) +
                        " include an odd entry; pass --general for the odd-exponent transform");
    }
    tau_form = general_monomial_transform(exponents);
  } else {
    tau_form = analytic_fft_symbolic(MonomialFunctional{exponents}).poly;
  }
  std::optional<P> at_q;
  if (q) at_q = substitute_tau_iq(tau_form, *q);

  if (format == Format::kJson) {
    json doc{{"command", "fft"},
             {"exponents", std::vector<std::uint32_t>(exponents.begin(), exponents.end())},
             {"tau_form", to_json(tau_form)},
             {"iq_form", render_q_form(tau_form)},
             {"q", q ? json(rational_to_fraction_string(*q)) : json("q")}};
    if (at_q) doc["substituted"] = to_json(*at_q);
    out << doc.dump() << "\n";
    return kExitSuccess;
  }
  out << "tau-form: " << pretty_print(tau_form) << "\n";
  out << "i/q-form: " << pretty_print(tau_form, TauStyle::kSymbolicIq) << "\n";
  if (exponents.all_even()) out << "product:  " << factor_product(exponents) << "\n";
  if (at_q) out << "q = " << rational_text(*q) << ": " << pretty_print(*at_q) << "\n";
  return kExitSuccess;
}

int run_wiener(const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& k,
               const std::optional<std::string>& lambda_text,
               const std::vector<std::string>& eval_v, Format format, std::ostream& out) {
  const MultiIndex exponents(resolve_exponents(p, k));
  P result = t_lambda_poly(MonomialFunctional{exponents});
  std::optional<ExactRational> lambda;
  if (lambda_text) {
    lambda = parse_rational(*lambda_text);
    if (*lambda <= 0) throw DomainError("--lambda must be positive");
    result = substitute_tau(result, GaussianRational(ExactRational(1 / *lambda)));
  }
  if (!eval_v.empty()) result = evaluate_at(result, parse_rationals(eval_v));

  const bool scalar = result.is_tau_free() && result.max_tau_power() == 0 &&
                      std::all_of(result.terms().begin(), result.terms().end(),
                                  [](const auto& t) { return t.first.v.total_degree() == 0; });
  if (format == Format::kJson) {
    json doc{{"command", "wiener"},
             {"exponents", std::vector<std::uint32_t>(exponents.begin(), exponents.end())},
             {"result", to_json(result)}};
    if (lambda) doc["lambda"] = rational_to_fraction_string(*lambda);
    if (scalar) {
      const auto value = result.coefficient({MultiIndex::zeros(result.dimension()), 0});
      doc["value"] = {{"re", rational_to_fraction_string(value.re())},
                      {"im", rational_to_fraction_string(value.im())},
                      {"approx", to_double(value.re())}};
    }
    out << doc.dump() << "\n";
    return kExitSuccess;
  }
  out << pretty_print(result) << "\n";
  return kExitSuccess;
}

int run_series(std::size_t n, const std::string& h0, const std::string& c, std::uint32_t r,
               const std::optional<std::string>& q_text, const std::optional<double>& rho,
               const WienerMCConfig& mc, Format format, std::ostream& out) {
  const SmoothFunctionalSpec spec(n, parse_rational(h0), parse_rational(c));
  const TruncationOrder order(r);
  std::optional<ExactRational> q;
  if (q_text) q = parse_q(*q_text);
  const ExactRational q_used = q.value_or(ExactRational(1));

  const P maclaurin = truncated_maclaurin(spec, order);
  const ExactRational wiener = wiener_integral_truncation(spec, order);
  const FFTResult literal = series_fft_literal(spec, order, q_used);
  const FFTResult full = series_fft_full(spec, order, q_used);
  const P difference = full.poly - literal.poly;
  std::optional<MCEstimate> lr;
  if (rho) {
    lr = l_r_diagnostic(spec, [&](std::span<const double> u) { return spec.evaluate(u); }, order,
                        *rho, mc);
  }

  if (format == Format::kJson) {
    json doc{{"command", "series"},
             {"n", n},
             {"h0", rational_to_fraction_string(spec.h0)},
             {"const", rational_to_fraction_string(spec.derivative_constant)},
             {"r", r},
             {"maclaurin", to_json(maclaurin)},
             {"wiener_integral",
              {{"exact", rational_to_fraction_string(wiener)}, {"approx", to_double(wiener)}}},
             {"fft_literal", {{"tau_form", to_json(literal.poly)}}},
             {"fft_full", {{"tau_form", to_json(full.poly)}}},
             {"difference", to_json(difference)}};
    if (q) {
      doc["q"] = rational_to_fraction_string(*q);
      doc["fft_literal"]["substituted"] = to_json(*literal.substituted);
      doc["fft_full"]["substituted"] = to_json(*full.substituted);
    }
    if (lr) {
      doc["lr_diagnostic"] = to_json(*lr);
      doc["lr_diagnostic"]["rho"] = *rho;
    }
    out << doc.dump() << "\n";
    return kExitSuccess;
  }
  std::ostringstream approx;
  approx.precision(11);
  approx << to_double(wiener);
  out << "h_r(u): " << pretty_print(maclaurin, TauStyle::kTau, "u") << "\n";
  out << "Wiener integral of h_r: " << rational_text(wiener) << " = " << approx.str() << "\n";
  out << "literal FFT: " << pretty_print(literal.poly, TauStyle::kSymbolicIq) << "\n";
  out << "full FFT:  " << pretty_print(full.poly, TauStyle::kSymbolicIq) << "\n";
  if (q) {
    out << "literal FFT at q = " << rational_text(*q) << ": " << pretty_print(*literal.substituted)
        << "\n";
    out << "full FFT at q = " << rational_text(*q) << ":  " << pretty_print(*full.substituted)
        << "\n";
  }
  out << "full - literal: " << pretty_print(difference, TauStyle::kSymbolicIq) << "\n";
  if (lr) {
    out << "L_r diagnostic (rho = " << *rho << ", " << lr->samples << " samples, seed " << lr->seed
        << "): " << lr->mean.real() << " +- " << lr->std_error << "\n";
  }
  return kExitSuccess;
}

int run_verify(const VerifyOptions& options, Format format, std::ostream& out) {
  const VerifyReport report = run_verification(options);
  if (format == Format::kJson) {
    json doc = report.to_json();
    doc["command"] = "verify";
    doc["mc"] = to_json(options.mc);
    out << doc.dump() << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed() ? kExitSuccess : kExitVerificationFailure;
}

int run_table1(Format format, std::ostream& out) {
  json rows = json::array();
  for (const auto& row : published::table1()) {
    const P formula = analytic_fft_symbolic(MonomialFunctional{MultiIndex{2 * row.p}}).poly;
    std::vector<std::string> notes;
    const P diff = row.transform - formula;
    for (const auto& [key, c] : diff.terms()) {
      notes.push_back(render_q_form(P::monomial(key.v, 0, 1)) + " term with 1/q^" +
                      std::to_string(key.tau) + ": printed " +
                      render_q_coefficient(row.transform.coefficient(key), key.tau) +
                      ", formula " + render_q_coefficient(formula.coefficient(key), key.tau));
    }
    const std::string functional = "<a1,x>^" + std::to_string(2 * row.p);
    if (row.printed_functional != functional) {
      notes.push_back("printed functional " + row.printed_functional + ", formula row is for " +
                      functional);
    }
    if (format == Format::kJson) {
      rows.push_back({{"p", row.p},
                      {"functional", functional},
                      {"formula", render_q_form(formula)},
                      {"formula_tau_form", to_json(formula)},
                      {"printed", row.printed_transform},
                      {"matches_printed", notes.empty()},
                      {"errata", notes}});
      continue;
    }
    out << "p=" << row.p << "  F = " << functional << "\n";
    out << "  formula: " << render_q_form(formula) << "\n";
    out << "  printed: " << row.printed_transform << "\n";
    if (notes.empty()) {
      out << "  matches the printed row\n";
    } else {
      for (const auto& note : notes) out << "  erratum: " << note << "\n";
    }
  }
  if (format == Format::kJson) out << json{{"command", "table1"}, {"rows", rows}}.dump() << "\n";
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic Feynman and Wiener integrals of cylinder functionals"};
  app.require_subcommand(1);
  Format format = Format::kPretty;

  std::vector<std::uint32_t> p, k;
  std::string q_text = "q";
  bool general = false;
  auto* fft = app.add_subcommand("fft", "analytic Feynman transform of a monomial functional");
  fft->add_option("--p", p, "half exponents p_j (exponent 2 p_j)")->delimiter(',');
  fft->add_option("--k", k, "raw exponents k_j")->delimiter(',');
  fft->add_option("--q", q_text, "nonzero rational q, or 'q' for symbolic output");
  fft->add_flag("--general", general, "allow odd exponents");
  add_format(fft, format);

  std::optional<std::string> lambda_text;
  std::vector<std::string> eval_v;
  auto* wiener = app.add_subcommand("wiener", "T_lambda transform of a monomial functional");
  wiener->add_option("--p", p, "half exponents p_j")->delimiter(',');
  wiener->add_option("--k", k, "raw exponents k_j (all even)")->delimiter(',');
  wiener->add_option("--lambda", lambda_text, "positive rational lambda (tau = 1/lambda)");
  wiener->add_option("--eval-v", eval_v, "values of <alpha_j,y>")->delimiter(',');
  add_format(wiener, format);

  std::size_t n = 1;
  std::string h0 = "1", c = "1";
  std::uint32_t r = 1;
  std::optional<std::string> series_q;
  std::optional<double> rho;
  McFlags series_mc;
  auto* series = app.add_subcommand("series", "truncated series for h0 + c (e^{u1+...+un} - 1)");
  series->add_option("--n", n, "dimension")->required();
  series->add_option("--h0", h0, "h(0)")->required();
  series->add_option("--const", c, "common value of every partial derivative at 0")->required();
  series->add_option("--r", r, "truncation order")->required();
  series->add_option("--q", series_q, "nonzero rational q");
  series->add_option("--rho", rho, "run the L_r diagnostic at this radius");
  series_mc.attach(series, "--lr-samples");
  add_format(series, format);

  bool strict = false;
  McFlags verify_mc;
  auto* verify = app.add_subcommand("verify", "run the verification report");
  verify_mc.attach(verify, "--mc-samples");
  verify->add_flag("--strict-table1-f4", strict, "treat the printed F4 closed form as authoritative");
  add_format(verify, format);

  auto* table1 = app.add_subcommand("table1", "regenerate the one-dimensional rows F1-F4 from the transform formula");
  add_format(table1, format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (fft->parsed()) return run_fft(p, k, general, q_text, format, out);
    if (wiener->parsed()) return run_wiener(p, k, lambda_text, eval_v, format, out);
    if (series->parsed()) {
      return run_series(n, h0, c, r, series_q, rho, series_mc.resolve({}), format, out);
    }
    if (verify->parsed()) {
      VerifyOptions options;
      options.mc = verify_mc.resolve({});
      options.strict_table1_f4 = strict;
      return run_verify(options, format, out);
    }
    if (table1->parsed()) return run_table1(format, out);
  } catch (const SamplingError& e) {
    err << "error: " << e.what() << " (sample " << e.sample_index() << ")\n";
    return kExitVerificationFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CostGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ffw::cli
