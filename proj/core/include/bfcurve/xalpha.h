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

#ifndef BFCURVE_XALPHA_H_
#define BFCURVE_XALPHA_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bfcurve/boolfn.h"
#include "bfcurve/curves.h"
#include "bfcurve/gf2m.h"
#include "bfcurve/wide_int.h"

namespace bfcurve {

// The curve y^2 + y = G(x + alpha) + G(x), reduced to quintic form using
// Tr(t^(2^k)) = Tr(t). Its character sum equals
// sum_x (-1)^Tr(G(x) + G(x + alpha)) exactly. Throws std::domain_error for
// alpha = 0.
ArtinSchreierQuintic derivative_curve(const Field& field,
                                      const FamilyPolynomial& g,
                                      FieldElement alpha);

// (#C_1 - q - 1)^2 for the derivative curve at alpha.
uint64_t x_alpha(const Field& field, const FamilyPolynomial& g,
                 FieldElement alpha);

// a7^(-1/3) alpha^(-7/3). Requires odd m.
FieldElement ell_of(const Field& field, const FamilyPolynomial& g,
                    FieldElement alpha);

enum class AlphaClass { kZero, kTwoQ, kEightQ };
std::string_view to_string(AlphaClass c);

struct AlphaRecord {
  FieldElement alpha;
  FieldElement ell;
  int tr_ell = 0;
  uint64_t x_alpha = 0;
  AlphaClass klass = AlphaClass::kZero;
  int w = 0;  // radical dimension of the derivative curve
  // For kEightQ: some v with v + v^4 = ell and Tr(v) = 0.
  std::optional<FieldElement> v;
};

// Classifies alpha from the exact point count and cross-checks the trace
// criteria: Tr(ell) = 1 iff X = 2q, and X = 8q implies ell = v + v^4 with
// Tr(v) = 0. Throws UnsupportedOperation for even m and InvariantViolation
// when X is outside {0, 2q, 8q} or a criterion disagrees with the count.
AlphaRecord classify_alpha(const Field& field, const FamilyPolynomial& g,
                           FieldElement alpha);

// Which part of the sqrt(2q) <= ||f^||_inf statement covers m.
enum class LowerBoundScope {
  kNonStrict,  // m <= 11 + 2s
  kGap,        // m == 13 + 2s, not covered
  kStrict,     // m >= 15 + 2s
};
std::string_view to_string(LowerBoundScope s);

struct LowerBoundReport {
  LowerBoundScope scope = LowerBoundScope::kNonStrict;
  int64_t linf = 0;
  UInt128 l4p4 = 0;
  bool nonstrict_holds = false;    // 2q <= linf^2
  bool strict_holds = false;       // 2q < linf^2
  bool l4_vs_linf_holds = false;   // l4p4 <= q linf^2
  uint64_t divisibility_modulus = 0;  // 2^ceil(m/3)
  bool divisibility_holds = false;
  // Conjunction of the checks the scope makes; nullopt in the gap.
  std::optional<bool> proposition_holds;
};

// Requires odd m (UnsupportedOperation otherwise).
LowerBoundReport lower_bound_check(const Field& field,
                                   const FamilyPolynomial& g);
LowerBoundReport lower_bound_check(const Field& field,
                                   const FamilyPolynomial& g,
                                   const SpectrumStats& stats);

struct SurveyOptions {
  unsigned workers = 0;  // 0: default_workers()
  bool keep_records = false;
};

struct SurveyReport {
  int m = 0;
  int s = 0;
  bool has_linear_term = false;
  uint64_t n0 = 0;
  uint64_t n2 = 0;
  uint64_t n8 = 0;
  UInt128 sum_x = 0;
  UInt128 l4p4_curve = 0;  // q^2 + sum X_alpha
  UInt128 l4p4_fwht = 0;
  bool l4_identity_holds = false;
  // |l4p4 - 3q^2| <= 185 2^(s-1) q^(3/2)
  bool bound_eval_holds = false;
  // |n8 - q/8| <= 23 2^(s-1) q^(1/2)
  bool bound_n8_holds = false;
  // |n2 - q/2| <= 3 q^(1/2) + 1
  bool bound_n2_holds = false;
  int64_t linf = 0;
  bool lower_bound_holds = false;   // 2q <= linf^2
  bool strict_lower_holds = false;  // 2q < linf^2
  LowerBoundReport lower;
  std::vector<AlphaRecord> records;  // ascending alpha, if requested
};

// Sweeps every alpha != 0. Requires odd m. The result does not depend on the
// worker count.
SurveyReport survey(const Field& field, const FamilyPolynomial& g,
                    const SurveyOptions& options = {});

// Exact comparisons behind the survey booleans, exposed for reuse. Each
// squares both sides so that no irrational quantity is formed.
bool eval_bound_holds(UInt128 l4p4, uint64_t q, int s);
bool n8_bound_holds(uint64_t n8, uint64_t q, int s);
bool n2_bound_holds(uint64_t n2, uint64_t q);

}  // namespace bfcurve

#endif  // BFCURVE_XALPHA_H_
