// Copyright 2026 The bfcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "bfcurve/errors.h"
#include "bfcurve/parallel.h"
#include "report_json.h"

namespace bfcurve::cli {

namespace {

using report::Json;

struct RunConfig {
  int m = 0;
  std::string poly_override;
  std::string terms;  // exp:hex,...
  std::string a7;
  std::string b;  // i:hex,...
  bool allow_b0 = false;
  std::string alpha;
  std::string curve_a, curve_b, curve_c, curve_d;
  std::string pairing = "trace";
  int samples = 0;
  int s = 0;
  uint64_t seed = 1;
  unsigned workers = 0;
  std::string format = "json";
  bool stats_only = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Splits "k:hex,k:hex" into pairs; k is decimal.
std::vector<std::pair<uint64_t, uint64_t>> parse_pairs(const std::string& text,
                                                       const char* flag) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw UsageError(std::string(flag) + ": expected k:hex, got '" + item +
                       "'");
    }
    uint64_t k = 0;
    const auto* first = item.data();
    const auto* last = item.data() + colon;
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec != std::errc{} || ptr != last || colon == 0) {
      throw UsageError(std::string(flag) + ": bad index in '" + item + "'");
    }
    out.emplace_back(k, parse_hex(item.substr(colon + 1)));
  }
  return out;
}

Field make_field(const RunConfig& cfg) {
  std::optional<uint64_t> poly;
  if (!cfg.poly_override.empty()) poly = parse_hex(cfg.poly_override);
  return Field(cfg.m, poly);
}

FieldElement elem(const Field& field, const std::string& text,
                  const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return field.element(parse_hex(text));
}

SparsePolynomial sparse_from(const Field& field, const RunConfig& cfg) {
  std::vector<PolyTerm> terms;
  for (const auto& [e, c] : parse_pairs(cfg.terms, "--terms")) {
    terms.push_back({e, field.element(c)});
  }
  return SparsePolynomial(std::move(terms));
}

FamilyPolynomial family_from(const Field& field, const RunConfig& cfg) {
  std::vector<FamilyPolynomial::BTerm> b;
  for (const auto& [i, c] : parse_pairs(cfg.b, "--b")) {
    b.emplace_back(static_cast<int>(i), field.element(c));
  }
  return FamilyPolynomial(field, elem(field, cfg.a7, "--a7"), std::move(b),
                          FamilyOptions{cfg.allow_b0});
}

FieldElement random_nonzero(const Field& field, std::mt19937_64& rng) {
  for (;;) {
    const uint64_t v = rng() & (field.q() - 1);
    if (v != 0) return FieldElement{v};
  }
}

// --a7 selects one polynomial; otherwise --samples random members with
// b_1..b_s all nonzero, drawn from --seed.
std::vector<FamilyPolynomial> families_from(const Field& field,
                                            const RunConfig& cfg) {
  if (!cfg.a7.empty()) return {family_from(field, cfg)};
  if (cfg.samples <= 0) {
    throw UsageError("give --a7 (and optionally --b) or --samples N");
  }
  if (cfg.s < 0 || cfg.s > field.m() - 1) {
    throw UsageError("--s must lie in [0, m-1]");
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<FamilyPolynomial> out;
  for (int k = 0; k < cfg.samples; ++k) {
    const FieldElement a7 = random_nonzero(field, rng);
    std::vector<FamilyPolynomial::BTerm> b;
    for (int i = 1; i <= cfg.s; ++i) b.emplace_back(i, random_nonzero(field, rng));
    out.emplace_back(field, a7, std::move(b));
  }
  return out;
}

bool has_family(const RunConfig& cfg) { return !cfg.a7.empty(); }

void require_odd_m(const RunConfig& cfg, const char* cmd) {
  if (cfg.m % 2 == 0) {
    throw UsageError(std::string(cmd) + " requires odd --m");
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  if (cfg.format == "csv") {
    out << "m,q,poly\n"
        << field.m() << ',' << field.q() << ',' << to_hex(field.reduction())
        << '\n';
  } else {
    emit(out, report::field_json(field));
  }
  return kOk;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  SparsePolynomial g;
  Json poly_json;
  if (has_family(cfg)) {
    const auto fam = family_from(field, cfg);
    g = fam.to_sparse();
    poly_json = report::family_json(fam);
  } else {
    g = sparse_from(field, cfg);
    poly_json = report::sparse_json(g);
  }
  const Pairing pairing =
      cfg.pairing == "dot" ? Pairing::kDot : Pairing::kTrace;
  const auto sp = walsh_transform(field, from_trace_poly(field, g), pairing);
  const auto st = spectrum_stats(sp);
  const int d = g.is_zero() ? 1 : binary_degree(g);
  const auto div = divisibility_check(sp, d);
  if (cfg.format == "csv") {
    out << report::spectrum_csv(sp);
    return kOk;
  }
  Json j;
  j["field"] = field.to_string();
  j["poly"] = to_hex(field.reduction());
  j["G"] = poly_json;
  j["pairing"] = cfg.pairing;
  j["stats"] = report::stats_json(st, div);
  if (!cfg.stats_only) j["spectrum"] = sp.values;
  emit(out, j);
  return kOk;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  const ArtinSchreierQuintic curve{elem(field, cfg.curve_a, "--a"),
                                   elem(field, cfg.curve_b, "--b"),
                                   elem(field, cfg.curve_c, "--c"),
                                   elem(field, cfg.curve_d, "--d")};
  if (curve.a.is_zero()) throw UsageError("--a must be nonzero (genus 2)");
  emit(out, report::curve_report_json(field, curve, analyze(field, curve)));
  return kOk;
}

int cmd_xalpha(const RunConfig& cfg, std::ostream& out) {
  require_odd_m(cfg, "xalpha");
  const Field field = make_field(cfg);
  const auto g = family_from(field, cfg);
  if (!cfg.alpha.empty()) {
    const FieldElement alpha = elem(field, cfg.alpha, "--alpha");
    if (alpha.is_zero()) throw UsageError("--alpha must be nonzero");
    Json j = report::alpha_json(classify_alpha(field, g, alpha));
    j["field"] = field.to_string();
    emit(out, j);
    return kOk;
  }
  const auto rep = survey(field, g, SurveyOptions{cfg.workers, true});
  if (cfg.format == "csv") {
    out << report::alpha_csv_header();
    for (const auto& rec : rep.records) out << report::alpha_csv_row(rec);
  } else {
    Json arr = Json::array();
    for (const auto& rec : rep.records) arr.push_back(report::alpha_json(rec));
    emit(out, arr);
  }
  return kOk;
}

int cmd_survey(const RunConfig& cfg, std::ostream& out) {
  require_odd_m(cfg, "survey");
  const Field field = make_field(cfg);
  const auto gs = families_from(field, cfg);
  bool identity_ok = true;
  Json arr = Json::array();
  if (cfg.format == "csv") out << report::survey_csv_header();
  for (const auto& g : gs) {
    const auto rep = survey(field, g, SurveyOptions{cfg.workers, false});
    identity_ok = identity_ok && rep.l4_identity_holds;
    if (cfg.format == "csv") {
      out << report::survey_csv_row(g, rep);
    } else {
      arr.push_back(report::survey_json(field, g, rep));
    }
  }
  if (cfg.format != "csv") emit(out, gs.size() == 1 ? arr[0] : arr);
  return identity_ok ? kOk : kInvariantViolation;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  require_odd_m(cfg, "bounds");
  const Field field = make_field(cfg);
  const auto gs = families_from(field, cfg);
  Json arr = Json::array();
  for (const auto& g : gs) {
    Json j = report::lower_bound_json(lower_bound_check(field, g));
    j["field"] = field.to_string();
    j["G"] = report::family_json(g);
    arr.push_back(j);
  }
  emit(out, gs.size() == 1 ? arr[0] : arr);
  return kOk;
}

int cmd_apn(const RunConfig& cfg, std::ostream& out) {
  const Field field = make_field(cfg);
  SparsePolynomial g;
  std::optional<int> s;
  if (has_family(cfg)) {
    const auto fam = family_from(field, cfg);
    g = fam.to_sparse();
    s = fam.s();
  } else {
    g = sparse_from(field, cfg);
  }
  emit(out, report::apn_json(field, apn_report(field, g, s, cfg.workers)));
  return kOk;
}

void add_field_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "Extension degree m")->required();
  sub->add_option("--poly", cfg.poly_override,
                  "Reduction polynomial override (hex)");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--workers", cfg.workers,
                  "Worker threads (default: BFCURVE_WORKERS or all cores)");
}

void add_family_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--a7", cfg.a7, "Coefficient of x^7 (hex)");
  sub->add_option("--b", cfg.b, "Terms b_i x^(2^i+1) as i:hex[,i:hex...]");
  sub->add_flag("--allow-b0", cfg.allow_b0,
                "Accept the affine index-0 term b_0 x^2");
}

void add_sampling_opts(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--samples", cfg.samples,
                  "Number of random family members (when --a7 is absent)");
  sub->add_option("--s", cfg.s, "Family parameter s for random members");
  sub->add_option("--seed", cfg.seed, "RNG seed for random members");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Walsh spectra, Artin-Schreier curve counts and APN checks "
               "for Tr(G) over GF(2^m)",
               args.empty() ? "bfcurve" : args[0]};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* field = app.add_subcommand("field", "Print field parameters");
  add_field_opts(field, cfg);

  auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum and stats");
  add_field_opts(spectrum, cfg);
  add_family_opts(spectrum, cfg);
  spectrum->add_option("--terms", cfg.terms,
                       "Sparse polynomial as exp:hex[,exp:hex...]");
  spectrum->add_option("--pairing", cfg.pairing, "Spectrum index pairing")
      ->check(CLI::IsMember({"trace", "dot"}));
  spectrum->add_flag("--stats-only", cfg.stats_only, "Omit the spectrum dump");

  auto* curve = app.add_subcommand(
      "curve", "Point count analysis of y^2+y = ax^5+bx^3+cx+d");
  add_field_opts(curve, cfg);
  curve->add_option("--a", cfg.curve_a, "hex")->required();
  curve->add_option("--b", cfg.curve_b, "hex")->required();
  curve->add_option("--c", cfg.curve_c, "hex")->required();
  curve->add_option("--d", cfg.curve_d, "hex")->required();

  auto* xalpha = app.add_subcommand(
      "xalpha", "Classify one alpha, or sweep all alpha");
  add_field_opts(xalpha, cfg);
  add_family_opts(xalpha, cfg);
  xalpha->add_option("--alpha", cfg.alpha, "Single alpha (hex)");

  auto* surv = app.add_subcommand("survey", "Full X_alpha survey with bounds");
  add_field_opts(surv, cfg);
  add_family_opts(surv, cfg);
  add_sampling_opts(surv, cfg);

  auto* bounds = app.add_subcommand("bounds", "Lower bounds on ||f^||_inf");
  add_field_opts(bounds, cfg);
  add_family_opts(bounds, cfg);
  add_sampling_opts(bounds, cfg);

  auto* apn = app.add_subcommand("apn", "Differential uniformity and CV sum");
  add_field_opts(apn, cfg);
  add_family_opts(apn, cfg);
  apn->add_option("--terms", cfg.terms,
                  "Sparse polynomial as exp:hex[,exp:hex...]");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (field->parsed()) return cmd_field(cfg, out);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out);
    if (curve->parsed()) return cmd_curve(cfg, out);
    if (xalpha->parsed()) return cmd_xalpha(cfg, out);
    if (surv->parsed()) return cmd_survey(cfg, out);
    if (bounds->parsed()) return cmd_bounds(cfg, out);
    if (apn->parsed()) return cmd_apn(cfg, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bfcurve::cli
