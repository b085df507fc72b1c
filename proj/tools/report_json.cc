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

#include "report_json.h"

#include <sstream>

namespace bfcurve::report {

namespace {

Json hex_list(const std::vector<FieldElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_hex(x));
  return out;
}

std::string b_list_text(const FamilyPolynomial& g) {
  std::string out;
  for (const auto& [i, bi] : g.b()) {
    if (!out.empty()) out += ';';
    out += std::to_string(i) + ":" + to_hex(bi);
  }
  return out;
}

}  // namespace

Json field_json(const Field& field) {
  Json j;
  j["field"] = field.to_string();
  j["m"] = field.m();
  j["q"] = field.q();
  j["poly"] = to_hex(field.reduction());
  j["trace_mask"] = to_hex(field.trace_mask());
  return j;
}

Json sparse_json(const SparsePolynomial& g) {
  Json terms = Json::array();
  for (const auto& t : g.terms()) {
    terms.push_back({{"exp", t.exponent}, {"coef", to_hex(t.coef)}});
  }
  return terms;
}

Json family_json(const FamilyPolynomial& g) {
  Json j;
  j["a7"] = to_hex(g.a7());
  Json b = Json::array();
  for (const auto& [i, bi] : g.b()) b.push_back({{"i", i}, {"b", to_hex(bi)}});
  j["b"] = b;
  j["s"] = g.s();
  j["has_linear_term"] = g.has_linear_term();
  return j;
}

Json stats_json(const SpectrumStats& st, const DivisibilityReport& div) {
  Json j;
  j["m"] = st.m;
  j["linf"] = st.linf;
  j["nl"] = st.nl;
  j["l2sq"] = st.l2sq;
  j["l4p4"] = to_decimal(st.l4p4);
  j["divisibility_modulus"] = div.modulus;
  j["divisibility_holds"] = div.holds;
  j["binary_degree"] = div.degree;
  j["all_values_divisible"] = div.all_values_divisible;
  return j;
}

std::string spectrum_csv(const WalshSpectrum& sp) {
  std::ostringstream out;
  out << "v_hex,walsh\n";
  for (uint64_t v = 0; v < sp.values.size(); ++v) {
    out << to_hex(v) << ',' << sp.values[v] << '\n';
  }
  return out.str();
}

Json curve_json(const Field& field, const ArtinSchreierQuintic& curve) {
  Json j;
  j["m"] = field.m();
  j["poly"] = to_hex(field.reduction());
  j["a"] = to_hex(curve.a);
  j["b"] = to_hex(curve.b);
  j["c"] = to_hex(curve.c);
  j["d"] = to_hex(curve.d);
  return j;
}

Json curve_report_json(const Field& field, const ArtinSchreierQuintic& curve,
                       const QuadraticFormReport& rep) {
  Json j = curve_json(field, curve);
  j["w"] = rep.w;
  j["v_equals_w"] = rep.v_equals_w;
  j["count"] = rep.count_direct;
  j["exp_sum"] = rep.exp_sum;
  j["admissible"] = rep.admissible;
  j["q_zero_count"] = rep.q_zero_count;
  j["radical_basis"] = hex_list(rep.radical_basis);
  return j;
}

Json alpha_json(const AlphaRecord& rec) {
  Json j;
  j["alpha"] = to_hex(rec.alpha);
  j["ell"] = to_hex(rec.ell);
  j["tr_ell"] = rec.tr_ell;
  j["x_alpha"] = rec.x_alpha;
  j["class"] = std::string(to_string(rec.klass));
  j["w"] = rec.w;
  j["v"] = rec.v ? Json(to_hex(*rec.v)) : Json(nullptr);
  return j;
}

std::string alpha_csv_header() { return "alpha_hex,tr_ell,x_alpha,class\n"; }

std::string alpha_csv_row(const AlphaRecord& rec) {
  return to_hex(rec.alpha) + "," + std::to_string(rec.tr_ell) + "," +
         std::to_string(rec.x_alpha) + "," + std::string(to_string(rec.klass)) +
         "\n";
}

Json lower_bound_json(const LowerBoundReport& r) {
  Json j;
  j["scope"] = std::string(to_string(r.scope));
  j["linf"] = r.linf;
  j["l4p4"] = to_decimal(r.l4p4);
  j["nonstrict_holds"] = r.nonstrict_holds;
  j["strict_holds"] = r.strict_holds;
  j["l4_vs_linf_holds"] = r.l4_vs_linf_holds;
  j["divisibility_modulus"] = r.divisibility_modulus;
  j["divisibility_holds"] = r.divisibility_holds;
  j["proposition_holds"] =
      r.proposition_holds ? Json(*r.proposition_holds) : Json(nullptr);
  return j;
}

Json survey_json(const Field& field, const FamilyPolynomial& g,
                 const SurveyReport& r) {
  Json j;
  j["field"] = field.to_string();
  j["m"] = r.m;
  j["poly"] = to_hex(field.reduction());
  j["G"] = family_json(g);
  j["s"] = r.s;
  j["n0"] = r.n0;
  j["n2"] = r.n2;
  j["n8"] = r.n8;
  j["sum_x_alpha"] = to_decimal(r.sum_x);
  j["l4p4_curve"] = to_decimal(r.l4p4_curve);
  j["l4p4_fwht"] = to_decimal(r.l4p4_fwht);
  j["l4_identity_holds"] = r.l4_identity_holds;
  j["linf"] = r.linf;
  j["bound_eval_holds"] = r.bound_eval_holds;
  j["bound_n8_holds"] = r.bound_n8_holds;
  j["bound_n2_holds"] = r.bound_n2_holds;
  j["count_bound_reading"] = "|n8 - q/8|, |n2 - q/2|";
  j["lower_bound_holds"] = r.lower_bound_holds;
  j["strict_lower_holds"] = r.strict_lower_holds;
  j["lower_bound"] = lower_bound_json(r.lower);
  return j;
}

std::string survey_csv_header() {
  return "a7_hex,b,n0,n2,n8,l4p4_curve,l4p4_fwht,linf,bound_eval,bound_n8,"
         "bound_n2,lower_bound,strict_lower\n";
}

std::string survey_csv_row(const FamilyPolynomial& g, const SurveyReport& r) {
  std::ostringstream out;
  out << to_hex(g.a7()) << ',' << b_list_text(g) << ',' << r.n0 << ','
      << r.n2 << ',' << r.n8 << ',' << to_decimal(r.l4p4_curve) << ','
      << to_decimal(r.l4p4_fwht) << ',' << r.linf << ',' << r.bound_eval_holds
      << ',' << r.bound_n8_holds << ',' << r.bound_n2_holds << ','
      << r.lower_bound_holds << ',' << r.strict_lower_holds << '\n';
  return out.str();
}

Json apn_json(const Field& field, const ApnReport& r) {
  Json j;
  j["m"] = r.m;
  j["poly"] = to_hex(field.reduction());
  j["delta"] = r.delta;
  j["is_apn"] = r.is_apn;
  j["cv_sum"] = to_decimal(r.cv_sum);
  j["cv_bound"] = to_decimal(r.cv_bound);
  j["cv_equality"] = r.cv_equality;
  Json pred;
  pred["verdict"] = std::string(to_string(r.predicate.verdict));
  pred["reason"] = r.predicate.reason;
  pred["advisory"] =
      r.predicate.advisory ? Json(*r.predicate.advisory) : Json(nullptr);
  pred["consistent_with_delta"] = r.predicate_consistent;
  j["predicate"] = pred;
  return j;
}

}  // namespace bfcurve::report
