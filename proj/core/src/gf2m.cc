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

#include "bfcurve/gf2m.h"

#include <charconv>
#include <stdexcept>

#include "bfcurve/errors.h"
#include "bfcurve/linearized.h"

namespace bfcurve {

int poly_degree(uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

uint64_t poly_mod(uint64_t a, uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("polynomial division by zero");
  const int dm = poly_degree(modulus);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    a ^= modulus << (da - dm);
  }
  return a;
}

bool is_irreducible(uint64_t p) {
  const int deg = poly_degree(p);
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (uint64_t d = 2; poly_degree(d) <= deg / 2; ++d) {
    if (poly_mod(p, d) == 0) return false;
  }
  return true;
}

uint64_t default_reduction(int m) {
  if (m < 1 || m > Field::kMaxDegree) {
    throw std::invalid_argument("degree out of range: " + std::to_string(m));
  }
  // Irreducible polynomials of degree >= 2 have a nonzero constant term.
  for (uint64_t p = (uint64_t{1} << m) | 1; p < (uint64_t{1} << (m + 1));
       p += 2) {
    if (is_irreducible(p)) return p;
  }
  throw std::logic_error("no irreducible polynomial found");
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field::Field(int m, std::optional<uint64_t> reduction) : m_(m) {
  if (m < kMinDegree || m > kMaxDegree) {
    throw std::invalid_argument("field degree m=" + std::to_string(m) +
                                " outside [2, 32]");
  }
  if (reduction) {
    if (poly_degree(*reduction) != m) {
      throw std::invalid_argument("reduction polynomial " + to_hex(*reduction) +
                                  " does not have degree " + std::to_string(m));
    }
    if (!is_irreducible(*reduction)) {
      throw std::invalid_argument("reduction polynomial " + to_hex(*reduction) +
                                  " is reducible over F2");
    }
    reduction_ = *reduction;
  } else {
    reduction_ = default_reduction(m);
  }

  for (int i = 0; i < m; ++i) {
    uint64_t t = uint64_t{1} << i;
    uint64_t s = 0;
    for (int k = 0; k < m; ++k) {
      s ^= t;
      t = clmul_reduce(t, t);
    }
    if (s > 1) throw std::logic_error("trace left the prime field");
    trace_mask_ |= s << i;
  }

  if (m <= kMaxTableDegree) {
    const uint64_t order = q() - 1;
    const auto factors = prime_factors(order);
    uint64_t gen = 2;
    for (;; ++gen) {
      bool primitive = true;
      for (uint64_t p : factors) {
        if (slow_pow(gen, order / p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) break;
    }
    auto tables = std::make_shared<Tables>();
    tables->log.assign(q(), 0);
    tables->exp.resize(2 * order);
    uint64_t x = 1;
    for (uint64_t i = 0; i < 2 * order; ++i) {
      tables->exp[i] = static_cast<uint32_t>(x);
      if (i < order) tables->log[x] = static_cast<uint32_t>(i);
      x = clmul_reduce(x, gen);
    }
    tables_ = std::move(tables);
  }
}

uint64_t Field::clmul_reduce(uint64_t a, uint64_t b) const {
  uint64_t r = 0;
  for (; b != 0; b &= b - 1) r ^= a << std::countr_zero(b);
  for (int bit = poly_degree(r); bit >= m_; bit = poly_degree(r)) {
    r ^= reduction_ << (bit - m_);
  }
  return r;
}

uint64_t Field::slow_pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = clmul_reduce(r, a);
    a = clmul_reduce(a, a);
    e >>= 1;
  }
  return r;
}

FieldElement Field::element(uint64_t bits) const {
  if (bits >= q()) {
    throw std::out_of_range(to_hex(bits) + " is not an element of " +
                            to_string());
  }
  return FieldElement{bits};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  return pow(a, q() - 2);
}

FieldElement Field::pow(FieldElement a, uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const uint64_t order = q() - 1;
  e %= order;
  if (tables_) {
    const uint64_t lg = tables_->log[a.bits];
    return FieldElement{tables_->exp[(lg * e) % order]};
  }
  return FieldElement{slow_pow(a.bits, e)};
}

FieldElement Field::pow_signed(FieldElement a, int64_t e) const {
  if (e >= 0) return pow(a, static_cast<uint64_t>(e));
  if (a.is_zero()) throw std::domain_error("negative power of zero");
  const auto order = static_cast<int64_t>(q() - 1);
  int64_t r = e % order;
  if (r < 0) r += order;
  return pow(a, static_cast<uint64_t>(r));
}

FieldElement Field::frobenius(FieldElement a, int64_t k) const {
  int64_t r = k % m_;
  if (r < 0) r += m_;
  if (tables_) return pow(a, uint64_t{1} << r);
  for (int64_t i = 0; i < r; ++i) a = sqr(a);
  return a;
}

uint64_t Field::cube_root_exponent() const {
  if (m_ % 2 == 0) {
    throw UnsupportedOperation("cube roots are not unique in GF(2^" +
                               std::to_string(m_) + ") (m even)");
  }
  // q-1 = 1 mod 3 for odd m, so (2(q-1)+1)/3 inverts 3.
  return (2 * (q() - 1) + 1) / 3;
}

FieldElement Field::cube_root(FieldElement a) const {
  return pow(a, cube_root_exponent());
}

std::optional<std::pair<FieldElement, FieldElement>> Field::half_trace_solve(
    FieldElement c) const {
  if (trace(c) == 1) return std::nullopt;
  FieldElement v;
  if (m_ % 2 == 1) {
    FieldElement t = c;
    for (int i = 0; i <= (m_ - 1) / 2; ++i) {
      v += t;
      t = frobenius(t, 2);
    }
  } else {
    LinearizedPolynomial as({{1, one()}, {0, one()}});
    const auto roots = linearized_solve(*this, as, c);
    if (roots.size() != 2) {
      throw InvariantViolation("v^2+v=c has " + std::to_string(roots.size()) +
                               " roots for a trace-zero c");
    }
    v = roots.front();
  }
  if (sqr(v) + v != c) {
    throw InvariantViolation("half-trace root failed substitution for c=" +
                             to_hex(c));
  }
  return std::make_pair(v, v + one());
}

std::string Field::to_string() const {
  return "m=" + std::to_string(m_) + ",poly=" + to_hex(reduction_);
}

Field Field::parse(std::string_view text) {
  constexpr std::string_view kM = "m=";
  constexpr std::string_view kPoly = ",poly=";
  const auto comma = text.find(kPoly);
  if (!text.starts_with(kM) || comma == std::string_view::npos) {
    throw std::invalid_argument("malformed field text: " + std::string(text));
  }
  const auto m_text = text.substr(kM.size(), comma - kM.size());
  int m = 0;
  const auto [ptr, ec] =
      std::from_chars(m_text.data(), m_text.data() + m_text.size(), m);
  if (ec != std::errc{} || ptr != m_text.data() + m_text.size()) {
    throw std::invalid_argument("malformed field degree: " +
                                std::string(m_text));
  }
  return Field(m, parse_hex(text.substr(comma + kPoly.size())));
}

std::string to_hex(uint64_t bits) {
  char buf[24];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), bits, 16);
  return "0x" + std::string(buf, ptr);
}

uint64_t parse_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.starts_with("0x") || digits.starts_with("0X")) {
    digits.remove_prefix(2);
  }
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (digits.empty() || ec != std::errc{} ||
      ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed hex value: '" + std::string(text) +
                                "'");
  }
  return value;
}

}  // namespace bfcurve
