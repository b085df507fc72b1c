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

#ifndef BFCURVE_CURVES_H_
#define BFCURVE_CURVES_H_

#include <cstdint>
#include <vector>

#include "bfcurve/gf2m.h"
#include "bfcurve/linearized.h"

namespace bfcurve {

// y^2 + y = a x^5 + b x^3 + c x + d. Genus 2 requires a != 0.
struct ArtinSchreierQuintic {
  FieldElement a, b, c, d;

  bool operator==(const ArtinSchreierQuintic&) const = default;
};

// R(x) = a x^4 + b x^2 + c^2 x.
LinearizedPolynomial r_polynomial(const Field& field,
                                  const ArtinSchreierQuintic& curve);

// Q(x) = Tr(x R(x)).
int quadratic_form_eval(const Field& field, const ArtinSchreierQuintic& curve,
                        FieldElement x);

// Radical W of <x, y>_R = Tr(x R(y) + y R(x)) = Tr(y E(x)) where
// E = R + adjoint(R). W = ker E.
struct Radical {
  std::vector<FieldElement> basis;
  int w = 0;
};
Radical radical(const Field& field, const ArtinSchreierQuintic& curve);

// S = sum_x (-1)^Tr(a x^5 + b x^3 + c x + d), by direct evaluation.
int64_t exp_sum(const Field& field, const ArtinSchreierQuintic& curve);

struct QuadraticFormReport {
  LinearizedPolynomial r;
  std::vector<FieldElement> radical_basis;
  int w = 0;
  bool v_equals_w = false;
  // Affine points plus the single point at infinity; d is included, so this
  // is 1 + q + exp_sum.
  uint64_t count_direct = 0;
  int64_t exp_sum = 0;
  // Counts allowed by the van der Geer-van der Vlugt theorem: {1 + q} when
  // V != W, else {1 + q - sqrt(2^w q), 1 + q + sqrt(2^w q)}.
  std::vector<uint64_t> admissible;
  // #{x : Q(x) = 0}, independent of d.
  uint64_t q_zero_count = 0;
};

// Throws std::domain_error when a = 0 and InvariantViolation if the direct
// count falls outside the admissible set or V has codimension > 1 in W.
QuadraticFormReport analyze(const Field& field,
                            const ArtinSchreierQuintic& curve);

}  // namespace bfcurve

#endif  // BFCURVE_CURVES_H_
