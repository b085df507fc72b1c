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

#include "bfcurve/apn.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "bfcurve/errors.h"
#include "bfcurve/parallel.h"

namespace bfcurve {

uint64_t differential_uniformity(const Field& field,
                                 const SparsePolynomial& g,
                                 unsigned workers) {
  const uint64_t q = field.q();
  const auto table = evaluate_all(field, g);
  const unsigned n_workers =
      static_cast<unsigned>(std::min<uint64_t>(
          workers == 0 ? default_workers() : workers, q - 1));
  std::vector<uint64_t> best(n_workers, 0);
  parallel_for(q - 1, n_workers, [&](uint64_t begin, uint64_t end,
                                     unsigned worker) {
    std::vector<uint32_t> hist(q, 0);
    uint64_t local = 0;
    for (uint64_t a = begin + 1; a <= end; ++a) {
      for (uint64_t z = 0; z < q; ++z) {
        ++hist[(table[z ^ a] + table[z]).bits];
      }
      for (uint64_t z = 0; z < q; ++z) {
        const uint64_t b = (table[z ^ a] + table[z]).bits;
        local = std::max<uint64_t>(local, hist[b]);
        hist[b] = 0;
      }
    }
    best[worker] = local;
  });
  return *std::max_element(best.begin(), best.end());
}

CvSum cv_sum(const Field& field, const SparsePolynomial& g,
             unsigned workers) {
  const uint64_t q = field.q();
  const auto table = evaluate_all(field, g);
  std::vector<UInt128> sigma(q - 1, 0);
  parallel_for(q - 1, workers, [&](uint64_t begin, uint64_t end, unsigned) {
    std::vector<int64_t> buf(q);
    for (uint64_t i = begin; i < end; ++i) {
      const FieldElement gamma{i + 1};
      for (uint64_t x = 0; x < q; ++x) {
        buf[x] = field.trace(field.mul(gamma, table[x])) ? -1 : 1;
      }
      // sigma does not depend on the pairing, so the plain butterfly does.
      fwht_inplace(buf);
      UInt128 fourth = 0;
      for (int64_t w : buf) {
        const auto a = static_cast<UInt128>(w < 0 ? -w : w);
        fourth += a * a * a * a;
      }
      if (fourth % q != 0) {
        throw CorruptedSpectrum("fourth-power sum not divisible by q");
      }
      sigma[i] = fourth / q;
    }
  });
  CvSum out;
  for (const auto& v : sigma) out.sum += v;
  out.bound = 2 * static_cast<UInt128>(q) * q * (q - 1);
  out.equality = out.sum == out.bound;
  return out;
}

std::string_view to_string(PredicateVerdict v) {
  return v == PredicateVerdict::kNotApn ? "not_apn" : "unknown";
}

bool degree_bound_holds(int m, uint64_t degree) {
  using boost::multiprecision::cpp_int;
  // d < q^(1/6) + 3.9  <=>  10d - 39 < 10 q^(1/6)
  const cpp_int lhs = 10 * cpp_int(degree) - 39;
  if (lhs <= 0) return true;
  return boost::multiprecision::pow(lhs, 6) <
         cpp_int(1000000) * (cpp_int(1) << m);
}

ApnPredicate non_apn_predicate(int m, std::optional<int> s, uint64_t degree) {
  ApnPredicate p;
  if (s && m >= 13 + 2 * *s) {
    p.verdict = PredicateVerdict::kNotApn;
    p.reason = "family, m >= 13+2s";
  } else if (m >= 6 && degree_bound_holds(m, degree)) {
    p.verdict = PredicateVerdict::kNotApn;
    p.reason = "degree bound, smoothness assumed";
  } else {
    p.verdict = PredicateVerdict::kUnknown;
    p.reason = "no predicate applies";
  }
  if (s && *s <= 2 && m >= 11) {
    p.advisory =
        "s <= 2: the degree-bound theorem gives not APN for m >= 11, "
        "assuming X_inf is smooth";
  }
  return p;
}

uint64_t polynomial_degree(const SparsePolynomial& g) {
  uint64_t d = 0;
  for (const auto& t : g.terms()) {
    if (!t.coef.is_zero()) d = std::max(d, t.exponent);
  }
  return d;
}

ApnReport apn_report(const Field& field, const SparsePolynomial& g,
                     std::optional<int> family_s, unsigned workers) {
  ApnReport r;
  r.m = field.m();
  r.delta = differential_uniformity(field, g, workers);
  r.is_apn = r.delta <= 2;
  const auto cv = cv_sum(field, g, workers);
  r.cv_sum = cv.sum;
  r.cv_bound = cv.bound;
  r.cv_equality = cv.equality;
  r.predicate = non_apn_predicate(field.m(), family_s, polynomial_degree(g));
  r.predicate_consistent =
      !(r.predicate.verdict == PredicateVerdict::kNotApn && r.is_apn);

  if (r.delta % 2 != 0) {
    throw InvariantViolation("odd differential uniformity " +
                             std::to_string(r.delta));
  }
  if (r.cv_sum < r.cv_bound) {
    throw InvariantViolation("Chabaud-Vaudenay sum " + to_decimal(r.cv_sum) +
                             " below 2q^2(q-1) = " + to_decimal(r.cv_bound));
  }
  if (r.cv_equality != r.is_apn) {
    throw InvariantViolation("CV equality " + std::to_string(r.cv_equality) +
                             " disagrees with delta = " +
                             std::to_string(r.delta));
  }
  return r;
}

}  // namespace bfcurve
