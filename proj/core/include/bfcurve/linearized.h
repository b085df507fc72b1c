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

#ifndef BFCURVE_LINEARIZED_H_
#define BFCURVE_LINEARIZED_H_

#include <span>
#include <vector>

#include "bfcurve/gf2m.h"

namespace bfcurve {

// c * x^(2^index). Indices are taken mod m on evaluation.
struct LinearizedTerm {
  int index = 0;
  FieldElement coef;
};

// L(x) = sum c_i x^(2^i), an F2-linear endomorphism of GF(2^m).
class LinearizedPolynomial {
 public:
  LinearizedPolynomial() = default;
  explicit LinearizedPolynomial(std::vector<LinearizedTerm> terms)
      : terms_(std::move(terms)) {}

  const std::vector<LinearizedTerm>& terms() const { return terms_; }

  FieldElement eval(const Field& field, FieldElement x) const;

  // Trace adjoint: the unique L' with Tr(y L(x)) = Tr(x L'(y)). For
  // L = sum r_i x^(2^i) this is sum (r_i x)^(2^(m-i)).
  LinearizedPolynomial adjoint(const Field& field) const;

  // Images of the monomial basis X^0..X^(m-1).
  std::vector<uint64_t> matrix_columns(const Field& field) const;

  friend LinearizedPolynomial operator+(const LinearizedPolynomial& a,
                                        const LinearizedPolynomial& b);

 private:
  std::vector<LinearizedTerm> terms_;
};

// F2 basis of ker L by Gaussian elimination on the m x m matrix of L.
std::vector<FieldElement> linearized_kernel(const Field& field,
                                            const LinearizedPolynomial& poly);

// Every x with L(x) = target, in ascending bitmask order. Empty when the
// system is inconsistent, otherwise exactly 2^dim(ker L) entries.
std::vector<FieldElement> linearized_solve(const Field& field,
                                           const LinearizedPolynomial& poly,
                                           FieldElement target);

// All 2^k F2-combinations of a basis, in ascending bitmask order.
std::vector<FieldElement> span_of(std::span<const FieldElement> basis);

}  // namespace bfcurve

#endif  // BFCURVE_LINEARIZED_H_
