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

#ifndef BFCURVE_TOOLS_REPORT_JSON_H_
#define BFCURVE_TOOLS_REPORT_JSON_H_

#include <string>

#include "bfcurve/apn.h"
#include "bfcurve/boolfn.h"
#include "bfcurve/curves.h"
#include "bfcurve/xalpha.h"
#include "json.hpp"

// Machine-readable encodings of every report. Field elements are lowercase
// 0x-prefixed hex, 128-bit sums are decimal strings, and key order is fixed
// so equal inputs always serialise to identical bytes.
namespace bfcurve::report {

using Json = nlohmann::ordered_json;

Json field_json(const Field& field);

Json sparse_json(const SparsePolynomial& g);
Json family_json(const FamilyPolynomial& g);

// Keys: m, linf, nl, l2sq, l4p4, divisibility_modulus, divisibility_holds,
// then informational extras.
Json stats_json(const SpectrumStats& st, const DivisibilityReport& div);
// "v_hex,walsh" then one row per v in ascending order.
std::string spectrum_csv(const WalshSpectrum& sp);

Json curve_json(const Field& field, const ArtinSchreierQuintic& curve);
Json curve_report_json(const Field& field, const ArtinSchreierQuintic& curve,
                       const QuadraticFormReport& rep);

Json alpha_json(const AlphaRecord& rec);
std::string alpha_csv_header();
std::string alpha_csv_row(const AlphaRecord& rec);

Json lower_bound_json(const LowerBoundReport& r);
Json survey_json(const Field& field, const FamilyPolynomial& g,
                 const SurveyReport& r);
std::string survey_csv_header();
std::string survey_csv_row(const FamilyPolynomial& g, const SurveyReport& r);

Json apn_json(const Field& field, const ApnReport& r);

}  // namespace bfcurve::report

#endif  // BFCURVE_TOOLS_REPORT_JSON_H_
