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

#include "bfcurve/curves.h"

#include <bit>
#include <stdexcept>
#include <string>

#include "bfcurve/errors.h"

namespace bfcurve {

LinearizedPolynomial r_polynomial(const Field& field,
                                  const ArtinSchreierQuintic& curve) {
  return LinearizedPolynomial(
      {{2, curve.a}, {1, curve.b}, {0, field.sqr(curve.c)}});
}

int quadratic_form_eval(const Field& field, const ArtinSchreierQuintic& curve,
                        FieldElement x) {
  const FieldElement x2 = field.sqr(x);
  const FieldElement r = field.mul(curve.a, field.sqr(x2)) +
                         field.mul(curve.b, x2) +
                         field.mul(field.sqr(curve.c), x);
  return field.trace(field.mul(x, r));
}

Radical radical(const Field& field, const ArtinSchreierQuintic& curve) {
  const auto r = r_polynomial(field, curve);
  const auto e = r + r.adjoint(field);
  Radical out;
  out.basis = linearized_kernel(field, e);
  out.w = static_cast<int>(out.basis.size());
  return out;
}

int64_t exp_sum(const Field& field, const ArtinSchreierQuintic& curve) {
  const uint64_t q = field.q();
  int64_t zeros = 0;
  for (uint64_t xb = 0; xb < q; ++xb) {
    const FieldElement x{xb};
    const FieldElement x2 = field.sqr(x);
    const FieldElement inner =
        field.mul(field.mul(curve.a, x2) + curve.b, x2) + curve.c;
    zeros += 1 - field.trace(field.mul(inner, x) + curve.d);
  }
  return 2 * zeros - static_cast<int64_t>(q);
}

namespace {

// #{x : Tr(x R(x)) = 0}, walking x in Gray-code order so R(x) is updated by
// one column XOR per step.
uint64_t count_q_zeros(const Field& field, const LinearizedPolynomial& r) {
  const auto cols = r.matrix_columns(field);
  const uint64_t q = field.q();
  uint64_t zeros = 1;  // x = 0
  uint64_t x = 0;
  uint64_t rx = 0;
  for (uint64_t k = 1; k < q; ++k) {
    const int bit = std::countr_zero(k);
    x ^= uint64_t{1} << bit;
    rx ^= cols[bit];
    zeros += 1 - field.trace(field.mul(FieldElement{x}, FieldElement{rx}));
  }
  return zeros;
}

}  // namespace

QuadraticFormReport analyze(const Field& field,
                            const ArtinSchreierQuintic& curve) {
  if (curve.a.is_zero()) {
    throw std::domain_error("curve is not genus 2: leading coefficient a = 0");
  }
  QuadraticFormReport rep;
  const uint64_t q = field.q();
  rep.r = r_polynomial(field, curve);
  const Radical rad = radical(field, curve);
  rep.radical_basis = rad.basis;
  rep.w = rad.w;

  const auto w_elems = span_of(rad.basis);
  uint64_t zeros_on_w = 0;
  for (const auto& x : w_elems) {
    zeros_on_w += 1 - quadratic_form_eval(field, curve, x);
  }
  if (zeros_on_w != w_elems.size() && 2 * zeros_on_w != w_elems.size()) {
    throw InvariantViolation("Q vanishes on " + std::to_string(zeros_on_w) +
                             " of " + std::to_string(w_elems.size()) +
                             " radical elements");
  }
  rep.v_equals_w = zeros_on_w == w_elems.size();

  rep.exp_sum = exp_sum(field, curve);
  rep.count_direct = static_cast<uint64_t>(static_cast<int64_t>(q) + 1 +
                                           rep.exp_sum);
  rep.q_zero_count = count_q_zeros(field, rep.r);

  if (!rep.v_equals_w) {
    rep.admissible = {q + 1};
  } else if ((rep.w + field.m()) % 2 == 0) {
    const uint64_t dev = uint64_t{1} << ((rep.w + field.m()) / 2);
    rep.admissible = {q + 1 - dev, q + 1 + dev};
  }
  // An empty admissible set (V = W with w + m odd) cannot satisfy any count.
  bool member = false;
  for (uint64_t c : rep.admissible) member = member || c == rep.count_direct;
  if (!member) {
    throw InvariantViolation(
        "point count " + std::to_string(rep.count_direct) +
        " not admissible for w=" + std::to_string(rep.w) +
        (rep.v_equals_w ? ", V=W" : ", V!=W") + " over " + field.to_string());
  }
  return rep;
}

}  // namespace bfcurve
