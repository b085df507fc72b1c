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

#ifndef BFCURVE_GF2M_H_
#define BFCURVE_GF2M_H_

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bfcurve {

// Element of GF(2^m) in the monomial basis: bit i is the coefficient of X^i
// modulo the reduction polynomial. Addition is XOR and needs no field.
struct FieldElement {
  uint64_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  constexpr bool operator==(const FieldElement&) const = default;
  constexpr auto operator<=>(const FieldElement&) const = default;

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    return FieldElement{a.bits ^ b.bits};
  }
  constexpr FieldElement& operator+=(FieldElement o) {
    bits ^= o.bits;
    return *this;
  }
};

// Carry-less polynomial helpers over F2. Polynomials are bitmasks, bit i being
// the coefficient of X^i.
int poly_degree(uint64_t p);
uint64_t poly_mod(uint64_t a, uint64_t modulus);
// Trial division by every polynomial of degree 1..deg(p)/2.
bool is_irreducible(uint64_t p);
// Smallest bitmask encoding a monic irreducible polynomial of degree m.
uint64_t default_reduction(int m);

// GF(2^m) defined by an explicit reduction polynomial. A Field is a cheap,
// immutable handle to shared lookup tables; copies share state and the type
// is safe to use from any number of threads.
//
// Elements carry no field tag. Operations trust their inputs are < q; use
// element() or contains() at API boundaries.
class Field {
 public:
  static constexpr int kMinDegree = 2;
  static constexpr int kMaxDegree = 32;
  // Fields up to this degree use log/antilog tables for multiplication.
  static constexpr int kMaxTableDegree = 16;

  // Throws std::invalid_argument if m is out of range or the override is not
  // a monic irreducible polynomial of degree m.
  explicit Field(int m, std::optional<uint64_t> reduction = std::nullopt);

  int m() const { return m_; }
  uint64_t q() const { return uint64_t{1} << m_; }
  uint64_t reduction() const { return reduction_; }

  bool contains(FieldElement a) const { return a.bits < q(); }
  // Checked construction; throws std::out_of_range when bits >= q.
  FieldElement element(uint64_t bits) const;
  static constexpr FieldElement zero() { return FieldElement{0}; }
  static constexpr FieldElement one() { return FieldElement{1}; }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.bits == 0 || b.bits == 0) return zero();
    if (tables_) {
      const uint32_t* lg = tables_->log.data();
      return FieldElement{tables_->exp[lg[a.bits] + lg[b.bits]]};
    }
    return FieldElement{clmul_reduce(a.bits, b.bits)};
  }
  FieldElement sqr(FieldElement a) const { return mul(a, a); }

  // Throws std::domain_error for a == 0.
  FieldElement inv(FieldElement a) const;

  // 0^0 = 1. Exponents of a nonzero base are reduced mod q-1.
  FieldElement pow(FieldElement a, uint64_t e) const;
  // Negative exponents are allowed for a != 0; 0^e with e < 0 throws
  // std::domain_error.
  FieldElement pow_signed(FieldElement a, int64_t e) const;

  // a^(2^k) for any integer k; k is reduced mod m, so k = -1 gives sqrt.
  FieldElement frobenius(FieldElement a, int64_t k) const;

  int trace(FieldElement a) const {
    return std::popcount(a.bits & trace_mask_) & 1;
  }
  // Bit i is Tr(X^i); Tr(a) is the parity of a & trace_mask().
  uint64_t trace_mask() const { return trace_mask_; }

  FieldElement sqrt(FieldElement a) const { return frobenius(a, -1); }

  // Unique cube root a^e with 3e = 1 mod (q-1). Throws UnsupportedOperation
  // when m is even.
  FieldElement cube_root(FieldElement a) const;
  uint64_t cube_root_exponent() const;

  // Both roots {v, v+1} of v^2 + v = c, or nullopt when Tr(c) = 1. Odd m uses
  // the half-trace; even m falls back to linear algebra.
  std::optional<std::pair<FieldElement, FieldElement>> half_trace_solve(
      FieldElement c) const;

  // "m=<int>,poly=0x<hex>"
  std::string to_string() const;
  // Parses the to_string() form.
  static Field parse(std::string_view text);

  bool operator==(const Field& o) const {
    return m_ == o.m_ && reduction_ == o.reduction_;
  }

 private:
  struct Tables {
    std::vector<uint32_t> log;  // log[0] unused
    std::vector<uint32_t> exp;  // length 2(q-1), so no reduction after add
  };

  uint64_t clmul_reduce(uint64_t a, uint64_t b) const;
  uint64_t slow_pow(uint64_t a, uint64_t e) const;

  int m_;
  uint64_t reduction_;
  uint64_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

// Lowercase hex with 0x prefix.
std::string to_hex(uint64_t bits);
inline std::string to_hex(FieldElement a) { return to_hex(a.bits); }
// Accepts an optional 0x/0X prefix. Throws std::invalid_argument.
uint64_t parse_hex(std::string_view text);

}  // namespace bfcurve

#endif  // BFCURVE_GF2M_H_
