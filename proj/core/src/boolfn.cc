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

#include "bfcurve/boolfn.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "bfcurve/errors.h"

namespace bfcurve {

SparsePolynomial::SparsePolynomial(std::vector<PolyTerm> terms)
    : terms_(std::move(terms)) {
  std::set<uint64_t> seen;
  for (const auto& t : terms_) {
    if (!seen.insert(t.exponent).second) {
      throw std::invalid_argument("repeated exponent " +
                                  std::to_string(t.exponent));
    }
  }
}

bool SparsePolynomial::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const PolyTerm& t) { return t.coef.is_zero(); });
}

FieldElement SparsePolynomial::eval(const Field& field, FieldElement x) const {
  FieldElement acc;
  for (const auto& t : terms_) {
    acc += field.mul(t.coef, field.pow(x, t.exponent));
  }
  return acc;
}

FamilyPolynomial::FamilyPolynomial(const Field& field, FieldElement a7,
                                   std::vector<BTerm> b, FamilyOptions options)
    : a7_(a7), b_(std::move(b)) {
  if (a7_.is_zero()) throw std::invalid_argument("a7 must be nonzero");
  if (!field.contains(a7_)) {
    throw std::invalid_argument("a7 " + to_hex(a7_) + " not in " +
                                field.to_string());
  }
  std::sort(b_.begin(), b_.end(),
            [](const BTerm& x, const BTerm& y) { return x.first < y.first; });
  const int lo = options.allow_linear_term ? 0 : 1;
  for (size_t k = 0; k < b_.size(); ++k) {
    const auto& [i, coef] = b_[k];
    if (i < lo || i > field.m() - 1) {
      throw std::invalid_argument(
          "b index " + std::to_string(i) + " outside [" + std::to_string(lo) +
          ", " + std::to_string(field.m() - 1) + "]" +
          (i == 0 ? " (pass allow_linear_term for b_0 x^2)" : ""));
    }
    if (k > 0 && b_[k - 1].first == i) {
      throw std::invalid_argument("repeated b index " + std::to_string(i));
    }
    if (!field.contains(coef)) {
      throw std::invalid_argument("b_" + std::to_string(i) + " " +
                                  to_hex(coef) + " not in " +
                                  field.to_string());
    }
    if (i == 0) has_linear_term_ = true;
  }
  s_ = b_.empty() ? 0 : b_.back().first;
}

SparsePolynomial FamilyPolynomial::to_sparse() const {
  std::vector<PolyTerm> terms{{7, a7_}};
  for (const auto& [i, coef] : b_) {
    // 2^1 + 1 = 3 and 2^2 + 1 = 5 never collide with 7.
    terms.push_back({(uint64_t{1} << i) + 1, coef});
  }
  return SparsePolynomial(std::move(terms));
}

FieldElement FamilyPolynomial::eval(const Field& field, FieldElement x) const {
  FieldElement acc = field.mul(a7_, field.pow(x, 7));
  for (const auto& [i, coef] : b_) {
    acc += field.mul(coef, field.mul(field.frobenius(x, i), x));
  }
  return acc;
}

std::vector<FieldElement> evaluate_all(const Field& field,
                                       const SparsePolynomial& poly) {
  std::vector<FieldElement> out(field.q());
  for (uint64_t x = 0; x < field.q(); ++x) {
    out[x] = poly.eval(field, FieldElement{x});
  }
  return out;
}

TruthTable from_trace_poly(const Field& field, const SparsePolynomial& poly) {
  TruthTable tt{field.m(), std::vector<uint8_t>(field.q())};
  for (uint64_t x = 0; x < field.q(); ++x) {
    tt.values[x] =
        static_cast<uint8_t>(field.trace(poly.eval(field, FieldElement{x})));
  }
  return tt;
}

TruthTable from_trace_poly(const Field& field, const FamilyPolynomial& poly) {
  return from_trace_poly(field, poly.to_sparse());
}

void fwht_inplace(std::span<int64_t> data) {
  const size_t n = data.size();
  if (!std::has_single_bit(n)) {
    throw std::invalid_argument("transform length must be a power of two");
  }
  for (size_t h = 1; h < n; h <<= 1) {
    for (size_t i = 0; i < n; i += 2 * h) {
      for (size_t j = i; j < i + h; ++j) {
        const int64_t a = data[j];
        const int64_t b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const Field& field, const TruthTable& tt,
                              Pairing pairing) {
  if (tt.m != field.m() || tt.values.size() != field.q()) {
    throw std::invalid_argument("truth table does not match " +
                                field.to_string());
  }
  const uint64_t q = field.q();
  std::vector<int64_t> buf(q);
  for (uint64_t x = 0; x < q; ++x) buf[x] = tt.values[x] ? -1 : 1;
  fwht_inplace(buf);
  if (pairing == Pairing::kDot) return WalshSpectrum{field.m(), std::move(buf)};

  // Tr(v x) = u(v) . x with u(v)_j = Tr(v X^j); u is F2-linear in v, so it is
  // assembled from the images of the basis one low bit at a time.
  const int m = field.m();
  std::vector<uint64_t> basis_u(m);
  for (int i = 0; i < m; ++i) {
    uint64_t u = 0;
    for (int j = 0; j < m; ++j) {
      const auto prod = field.mul(FieldElement{uint64_t{1} << i},
                                  FieldElement{uint64_t{1} << j});
      u |= static_cast<uint64_t>(field.trace(prod)) << j;
    }
    basis_u[i] = u;
  }
  std::vector<uint64_t> u_of(q, 0);
  std::vector<int64_t> out(q);
  out[0] = buf[0];
  for (uint64_t v = 1; v < q; ++v) {
    const uint64_t low = v & (~v + 1);
    u_of[v] = u_of[v ^ low] ^ basis_u[std::countr_zero(low)];
    out[v] = buf[u_of[v]];
  }
  return WalshSpectrum{m, std::move(out)};
}

SpectrumStats spectrum_stats(const WalshSpectrum& sp) {
  const uint64_t q = uint64_t{1} << sp.m;
  if (sp.values.size() != q) {
    throw CorruptedSpectrum("spectrum has " + std::to_string(sp.values.size()) +
                            " entries, expected " + std::to_string(q));
  }
  SpectrumStats st;
  st.m = sp.m;
  for (int64_t w : sp.values) {
    const auto a = static_cast<UInt128>(w < 0 ? -w : w);
    st.linf = std::max<int64_t>(st.linf, static_cast<int64_t>(a));
    st.sum_sq += a * a;
    st.sum_fourth += a * a * a * a;
  }
  if (st.sum_sq % q != 0 || st.sum_fourth % q != 0) {
    throw CorruptedSpectrum("power sums of the spectrum are not divisible by q");
  }
  st.l2sq = static_cast<int64_t>(st.sum_sq / q);
  if (static_cast<uint64_t>(st.l2sq) != q) {
    throw CorruptedSpectrum("Parseval fails: (1/q) sum f^2 = " +
                            std::to_string(st.l2sq) + ", q = " +
                            std::to_string(q));
  }
  st.l4p4 = st.sum_fourth / q;
  st.nl = static_cast<int64_t>(q / 2) - st.linf / 2;
  return st;
}

int binary_degree(const SparsePolynomial& poly) {
  if (poly.is_zero()) {
    throw std::domain_error("binary degree of the zero polynomial");
  }
  int d = 0;
  for (const auto& t : poly.terms()) {
    if (!t.coef.is_zero()) d = std::max(d, std::popcount(t.exponent));
  }
  return d;
}

DivisibilityReport divisibility_check(const WalshSpectrum& sp, int degree) {
  DivisibilityReport r;
  r.degree = degree;
  const int d = std::max(degree, 1);
  const int exponent = (sp.m + d - 1) / d;
  r.modulus = uint64_t{1} << exponent;
  int64_t linf = 0;
  r.all_values_divisible = true;
  const auto mod = static_cast<int64_t>(r.modulus);
  for (uint64_t v = 0; v < sp.values.size(); ++v) {
    const int64_t w = sp.values[v];
    linf = std::max<int64_t>(linf, std::abs(w));
    if (r.all_values_divisible && w % mod != 0) {
      r.all_values_divisible = false;
      r.first_indivisible_v = v;
    }
  }
  r.holds = linf % mod == 0;
  if (!r.holds) r.witness = linf;
  return r;
}

}  // namespace bfcurve
