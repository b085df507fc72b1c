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

#ifndef BFCURVE_BOOLFN_H_
#define BFCURVE_BOOLFN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bfcurve/gf2m.h"
#include "bfcurve/wide_int.h"

namespace bfcurve {

struct PolyTerm {
  uint64_t exponent = 0;
  FieldElement coef;
};

// G(x) = sum c_e x^e with distinct exponents. Terms with a zero coefficient
// are kept as given but ignored by binary_degree().
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  // Throws std::invalid_argument on repeated exponents.
  explicit SparsePolynomial(std::vector<PolyTerm> terms);

  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const;
  FieldElement eval(const Field& field, FieldElement x) const;

 private:
  std::vector<PolyTerm> terms_;
};

struct FamilyOptions {
  // Accept the index i = 0 term b_0 x^2. Tr(b_0 x^2) = Tr(sqrt(b_0) x) is
  // affine, so it only shifts the spectrum; reports flag it.
  bool allow_linear_term = false;
};

// G = a7 x^7 + sum_i b_i x^(2^i + 1), with a7 != 0 and distinct i in
// [1, m-1] (or [0, m-1] with allow_linear_term).
class FamilyPolynomial {
 public:
  using BTerm = std::pair<int, FieldElement>;

  // Throws std::invalid_argument when a7 = 0, an index is out of range or
  // repeated, or a coefficient is not in the field.
  FamilyPolynomial(const Field& field, FieldElement a7, std::vector<BTerm> b,
                   FamilyOptions options = {});

  FieldElement a7() const { return a7_; }
  const std::vector<BTerm>& b() const { return b_; }
  // Largest index present; 0 for an empty list.
  int s() const { return s_; }
  bool has_linear_term() const { return has_linear_term_; }

  SparsePolynomial to_sparse() const;
  FieldElement eval(const Field& field, FieldElement x) const;

 private:
  FieldElement a7_;
  std::vector<BTerm> b_;
  int s_ = 0;
  bool has_linear_term_ = false;
};

// values[x] = f(x) for every bitmask x; exactly 2^m entries.
struct TruthTable {
  int m = 0;
  std::vector<uint8_t> values;
};

// G(x) for every x, indexed by bitmask.
std::vector<FieldElement> evaluate_all(const Field& field,
                                       const SparsePolynomial& poly);

TruthTable from_trace_poly(const Field& field, const SparsePolynomial& poly);
TruthTable from_trace_poly(const Field& field, const FamilyPolynomial& poly);

// Pairing <v, x> used to index the spectrum. kTrace is Tr(v x) in the field;
// kDot is the bitwise dot product of the coordinate vectors.
enum class Pairing { kTrace, kDot };

struct WalshSpectrum {
  int m = 0;
  std::vector<int64_t> values;
};

// In-place Walsh-Hadamard butterfly over the dot-product pairing; the length
// must be a power of two.
void fwht_inplace(std::span<int64_t> data);

// f^(v) = sum_x (-1)^(f(x) + <v, x>), O(q log q).
WalshSpectrum walsh_transform(const Field& field, const TruthTable& tt,
                              Pairing pairing = Pairing::kTrace);

struct SpectrumStats {
  int m = 0;
  int64_t linf = 0;  // max |f^(v)|
  int64_t nl = 0;    // 2^(m-1) - linf/2
  int64_t l2sq = 0;  // (1/q) sum f^2, equal to q by Parseval
  UInt128 l4p4 = 0;  // (1/q) sum f^4, the sum-of-square indicator
  UInt128 sum_sq = 0;
  UInt128 sum_fourth = 0;
};

// Throws CorruptedSpectrum when either normalising division is inexact or
// Parseval fails.
SpectrumStats spectrum_stats(const WalshSpectrum& sp);

// Maximum popcount over exponents with a nonzero coefficient. Throws
// std::domain_error for the zero polynomial.
int binary_degree(const SparsePolynomial& poly);

struct DivisibilityReport {
  int degree = 0;
  uint64_t modulus = 0;  // 2^ceil(m/d)
  bool holds = false;    // modulus | linf
  std::optional<int64_t> witness;  // linf, when it does not divide
  // Informational: whether every single Walsh value is divisible.
  bool all_values_divisible = false;
  std::optional<uint64_t> first_indivisible_v;
};

// A binary degree below 1 (constant G) is treated as 1.
DivisibilityReport divisibility_check(const WalshSpectrum& sp, int degree);

}  // namespace bfcurve

#endif  // BFCURVE_BOOLFN_H_
