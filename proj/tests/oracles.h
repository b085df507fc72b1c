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

#ifndef BFCURVE_TESTS_ORACLES_H_
#define BFCURVE_TESTS_ORACLES_H_

// Brute-force reference computations. These deliberately avoid the library's
// tables, transforms and linear algebra: multiplication is shift-and-add,
// sums are direct loops, point counts enumerate (x, y) pairs.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace bfcurve::oracle {

struct NaiveField {
  int m;
  uint64_t poly;

  uint64_t q() const { return uint64_t{1} << m; }

  uint64_t mul(uint64_t a, uint64_t b) const {
    uint64_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if ((a >> m) & 1) a ^= poly;
    }
    return r;
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  int trace(uint64_t a) const {
    uint64_t s = 0;
    for (int i = 0; i < m; ++i) {
      s ^= a;
      a = mul(a, a);
    }
    return static_cast<int>(s);
  }
};

// Irreducible iff no root-free factorisation: test every monic polynomial of
// degree 1..deg/2 as a divisor by long division.
inline bool naive_irreducible(uint64_t p) {
  int deg = 63;
  while (deg >= 0 && !((p >> deg) & 1)) --deg;
  for (uint64_t d = 2; d < (uint64_t{1} << (deg / 2 + 1)); ++d) {
    uint64_t a = p;
    int dd = 63;
    while (!((d >> dd) & 1)) --dd;
    for (int k = deg; k >= dd; --k) {
      if ((a >> k) & 1) a ^= d << (k - dd);
    }
    if (a == 0) return false;
  }
  return true;
}

struct Term {
  uint64_t exp;
  uint64_t coef;
};

inline uint64_t eval(const NaiveField& f, const std::vector<Term>& g,
                     uint64_t x) {
  uint64_t acc = 0;
  for (const auto& t : g) acc ^= f.mul(t.coef, f.pow(x, t.exp));
  return acc;
}

// f^(v) = sum_x (-1)^(Tr(G(x)) + Tr(v x)), O(q^2).
inline std::vector<int64_t> naive_walsh(const NaiveField& f,
                                        const std::vector<Term>& g) {
  const uint64_t q = f.q();
  std::vector<int> fx(q);
  for (uint64_t x = 0; x < q; ++x) fx[x] = f.trace(eval(f, g, x));
  std::vector<int64_t> out(q);
  for (uint64_t v = 0; v < q; ++v) {
    int64_t s = 0;
    for (uint64_t x = 0; x < q; ++x) {
      s += ((fx[x] ^ f.trace(f.mul(v, x))) ? -1 : 1);
    }
    out[v] = s;
  }
  return out;
}

// sum_x (-1)^Tr(G(x) + G(x + alpha)).
inline int64_t derivative_sum(const NaiveField& f, const std::vector<Term>& g,
                              uint64_t alpha) {
  int64_t s = 0;
  for (uint64_t x = 0; x < f.q(); ++x) {
    s += f.trace(eval(f, g, x) ^ eval(f, g, x ^ alpha)) ? -1 : 1;
  }
  return s;
}

// #{(x, y) : y^2 + y = a x^5 + b x^3 + c x + d} + 1 (one point at infinity).
inline uint64_t enumerate_points(const NaiveField& f, uint64_t a, uint64_t b,
                                 uint64_t c, uint64_t d) {
  const uint64_t q = f.q();
  std::vector<uint32_t> as_hits(q, 0);  // #{y : y^2 + y = t}
  for (uint64_t y = 0; y < q; ++y) ++as_hits[f.mul(y, y) ^ y];
  uint64_t n = 1;
  for (uint64_t x = 0; x < q; ++x) {
    const uint64_t rhs = f.mul(a, f.pow(x, 5)) ^ f.mul(b, f.pow(x, 3)) ^
                         f.mul(c, x) ^ d;
    n += as_hits[rhs];
  }
  return n;
}

inline uint64_t naive_delta(const NaiveField& f, const std::vector<Term>& g) {
  const uint64_t q = f.q();
  std::vector<uint64_t> table(q);
  for (uint64_t x = 0; x < q; ++x) table[x] = eval(f, g, x);
  uint64_t best = 0;
  for (uint64_t a = 1; a < q; ++a) {
    std::map<uint64_t, uint64_t> hist;
    for (uint64_t z = 0; z < q; ++z) ++hist[table[z ^ a] ^ table[z]];
    for (const auto& [b, n] : hist) best = std::max(best, n);
  }
  return best;
}

inline uint64_t random_nonzero(std::mt19937_64& rng, uint64_t q) {
  for (;;) {
    const uint64_t v = rng() & (q - 1);
    if (v) return v;
  }
}

}  // namespace bfcurve::oracle

#endif  // BFCURVE_TESTS_ORACLES_H_
