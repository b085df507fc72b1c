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

#ifndef BFCURVE_APN_H_
#define BFCURVE_APN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bfcurve/boolfn.h"
#include "bfcurve/gf2m.h"
#include "bfcurve/wide_int.h"

namespace bfcurve {

// max over a != 0 and b of #{z : G(z + a) + G(z) = b}. O(q^2).
uint64_t differential_uniformity(const Field& field,
                                 const SparsePolynomial& g,
                                 unsigned workers = 0);

// Chabaud-Vaudenay: sum over gamma != 0 of sigma(Tr(gamma G(x))) is at least
// 2 q^2 (q - 1), with equality exactly when G is APN.
struct CvSum {
  UInt128 sum = 0;
  UInt128 bound = 0;
  bool equality = false;
};
CvSum cv_sum(const Field& field, const SparsePolynomial& g,
             unsigned workers = 0);

enum class PredicateVerdict { kNotApn, kUnknown };
std::string_view to_string(PredicateVerdict v);

struct ApnPredicate {
  PredicateVerdict verdict = PredicateVerdict::kUnknown;
  std::string reason;
  std::optional<std::string> advisory;
};

// Structural non-APN tests. `s` is the family parameter when G belongs to
// the a7 x^7 + sum b_i x^(2^i+1) family; `degree` is deg G. The degree test
// d < q^(1/6) + 3.9 (m >= 6) presumes the curve X_inf is smooth, which is
// not checked.
ApnPredicate non_apn_predicate(int m, std::optional<int> s, uint64_t degree);

// Exact d < 2^(m/6) + 3.9.
bool degree_bound_holds(int m, uint64_t degree);

// Largest exponent with a nonzero coefficient; 0 for the zero polynomial.
uint64_t polynomial_degree(const SparsePolynomial& g);

struct ApnReport {
  int m = 0;
  uint64_t delta = 0;
  bool is_apn = false;
  UInt128 cv_sum = 0;
  UInt128 cv_bound = 0;
  bool cv_equality = false;
  ApnPredicate predicate;
  // False when the predicate says NotApn yet delta = 2.
  bool predicate_consistent = true;
};

// Runs both routes and checks they agree. Throws InvariantViolation if delta
// is odd, the CV sum is below the bound, or CV equality disagrees with delta.
ApnReport apn_report(const Field& field, const SparsePolynomial& g,
                     std::optional<int> family_s, unsigned workers = 0);

}  // namespace bfcurve

#endif  // BFCURVE_APN_H_
