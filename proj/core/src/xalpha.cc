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

#include "bfcurve/xalpha.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "bfcurve/errors.h"
#include "bfcurve/parallel.h"

namespace bfcurve {

using boost::multiprecision::cpp_int;

namespace {

cpp_int to_big(UInt128 v) {
  cpp_int hi = static_cast<uint64_t>(v >> 64);
  return (hi << 64) | static_cast<uint64_t>(v);
}

cpp_int pow4(int s) { return cpp_int(1) << (2 * s); }

void require_odd(const Field& field, const char* what) {
  if (field.m() % 2 == 0) {
    throw UnsupportedOperation(std::string(what) + " requires odd m, got " +
                               field.to_string());
  }
}

}  // namespace

ArtinSchreierQuintic derivative_curve(const Field& field,
                                      const FamilyPolynomial& g,
                                      FieldElement alpha) {
  if (alpha.is_zero()) throw std::domain_error("alpha must be nonzero");
  const FieldElement a7 = g.a7();
  const FieldElement al2 = field.sqr(alpha);
  const FieldElement al3 = field.mul(al2, alpha);
  const FieldElement al4 = field.sqr(al2);
  const FieldElement al5 = field.mul(al4, alpha);
  const FieldElement al6 = field.mul(al4, al2);

  ArtinSchreierQuintic curve;
  curve.a = field.mul(a7, al2);
  // a7 a^4 + a7^(1/2) a^(1/2)
  curve.b = field.mul(a7, al4) + field.sqrt(field.mul(a7, alpha));
  // a7 a^6 + a7^(1/4) a^(3/4) + a7^(1/2) a^(5/2)
  curve.c = field.mul(a7, al6) +
            field.frobenius(field.mul(a7, al3), -2) +
            field.sqrt(field.mul(a7, al5));
  for (const auto& [i, bi] : g.b()) {
    curve.c += field.frobenius(field.mul(bi, alpha), -i);
    curve.c += field.mul(bi, field.frobenius(alpha, i));
  }
  curve.d = g.eval(field, alpha);
  return curve;
}

uint64_t x_alpha(const Field& field, const FamilyPolynomial& g,
                 FieldElement alpha) {
  const auto rep = analyze(field, derivative_curve(field, g, alpha));
  const int64_t dev = rep.exp_sum;
  return static_cast<uint64_t>(dev * dev);
}

FieldElement ell_of(const Field& field, const FamilyPolynomial& g,
                    FieldElement alpha) {
  require_odd(field, "ell");
  if (alpha.is_zero()) throw std::domain_error("alpha must be nonzero");
  const FieldElement inner =
      field.mul(field.inv(g.a7()), field.pow(field.inv(alpha), 7));
  return field.cube_root(inner);
}

std::string_view to_string(AlphaClass c) {
  switch (c) {
    case AlphaClass::kZero:
      return "0";
    case AlphaClass::kTwoQ:
      return "2q";
    case AlphaClass::kEightQ:
      return "8q";
  }
  return "?";
}

AlphaRecord classify_alpha(const Field& field, const FamilyPolynomial& g,
                           FieldElement alpha) {
  require_odd(field, "alpha classification");
  AlphaRecord rec;
  rec.alpha = alpha;
  rec.ell = ell_of(field, g, alpha);
  rec.tr_ell = field.trace(rec.ell);

  const auto rep = analyze(field, derivative_curve(field, g, alpha));
  rec.w = rep.w;
  rec.x_alpha = static_cast<uint64_t>(rep.exp_sum * rep.exp_sum);
  const uint64_t q = field.q();
  if (rec.x_alpha == 0) {
    rec.klass = AlphaClass::kZero;
  } else if (rec.x_alpha == 2 * q) {
    rec.klass = AlphaClass::kTwoQ;
  } else if (rec.x_alpha == 8 * q) {
    rec.klass = AlphaClass::kEightQ;
  } else {
    throw InvariantViolation("X_alpha = " + std::to_string(rec.x_alpha) +
                             " outside {0, 2q, 8q} at alpha=" + to_hex(alpha) +
                             " over " + field.to_string());
  }

  if ((rec.tr_ell == 1) != (rec.klass == AlphaClass::kTwoQ)) {
    throw InvariantViolation("Tr(ell) = " + std::to_string(rec.tr_ell) +
                             " but X_alpha class is " +
                             std::string(to_string(rec.klass)) +
                             " at alpha=" + to_hex(alpha));
  }
  if (rec.klass == AlphaClass::kEightQ) {
    const LinearizedPolynomial v_plus_v4({{0, Field::one()}, {2, Field::one()}});
    for (const auto& v : linearized_solve(field, v_plus_v4, rec.ell)) {
      if (field.trace(v) == 0) {
        rec.v = v;
        break;
      }
    }
    if (!rec.v) {
      throw InvariantViolation("X_alpha = 8q but ell=" + to_hex(rec.ell) +
                               " is not v + v^4 with Tr(v) = 0");
    }
  }
  return rec;
}

std::string_view to_string(LowerBoundScope s) {
  switch (s) {
    case LowerBoundScope::kNonStrict:
      return "m<=11+2s";
    case LowerBoundScope::kGap:
      return "outside proposition scope (m=13+2s)";
    case LowerBoundScope::kStrict:
      return "m>=15+2s";
  }
  return "?";
}

LowerBoundReport lower_bound_check(const Field& field,
                                   const FamilyPolynomial& g) {
  require_odd(field, "lower bound check");
  const auto sp = walsh_transform(field, from_trace_poly(field, g));
  return lower_bound_check(field, g, spectrum_stats(sp));
}

LowerBoundReport lower_bound_check(const Field& field,
                                   const FamilyPolynomial& g,
                                   const SpectrumStats& stats) {
  require_odd(field, "lower bound check");
  const int m = field.m();
  const int s = g.s();
  const uint64_t q = field.q();
  LowerBoundReport r;
  if (m <= 11 + 2 * s) {
    r.scope = LowerBoundScope::kNonStrict;
  } else if (m == 13 + 2 * s) {
    r.scope = LowerBoundScope::kGap;
  } else {
    r.scope = LowerBoundScope::kStrict;
  }
  r.linf = stats.linf;
  r.l4p4 = stats.l4p4;
  const auto linf_sq = static_cast<UInt128>(stats.linf) * stats.linf;
  r.nonstrict_holds = 2 * static_cast<UInt128>(q) <= linf_sq;
  r.strict_holds = 2 * static_cast<UInt128>(q) < linf_sq;
  r.l4_vs_linf_holds = stats.l4p4 <= static_cast<UInt128>(q) * linf_sq;
  r.divisibility_modulus = uint64_t{1} << ((m + 2) / 3);
  r.divisibility_holds =
      static_cast<uint64_t>(stats.linf) % r.divisibility_modulus == 0;
  switch (r.scope) {
    case LowerBoundScope::kNonStrict:
      r.proposition_holds = r.nonstrict_holds;
      break;
    case LowerBoundScope::kStrict:
      r.proposition_holds = r.nonstrict_holds && r.strict_holds;
      break;
    case LowerBoundScope::kGap:
      break;
  }
  return r;
}

bool eval_bound_holds(UInt128 l4p4, uint64_t q, int s) {
  // |X| <= 185 2^(s-1) q^(3/2)  <=>  4 X^2 <= 185^2 4^s q^3
  const cpp_int bq = q;
  const cpp_int x = to_big(l4p4) - 3 * bq * bq;
  return 4 * x * x <= cpp_int(185 * 185) * pow4(s) * bq * bq * bq;
}

bool n8_bound_holds(uint64_t n8, uint64_t q, int s) {
  // |8 n8 - q| <= 8 * 23 2^(s-1) q^(1/2)  <=>  4 (8n8-q)^2 <= 64*529 4^s q
  const cpp_int x = 8 * cpp_int(n8) - q;
  return 4 * x * x <= cpp_int(64 * 529) * pow4(s) * q;
}

bool n2_bound_holds(uint64_t n2, uint64_t q) {
  // |2 n2 - q| <= 6 q^(1/2) + 2
  cpp_int dev = 2 * cpp_int(n2) - q;
  if (dev < 0) dev = -dev;
  if (dev <= 2) return true;
  return (dev - 2) * (dev - 2) <= 36 * cpp_int(q);
}

SurveyReport survey(const Field& field, const FamilyPolynomial& g,
                    const SurveyOptions& options) {
  require_odd(field, "survey");
  const uint64_t q = field.q();
  std::vector<AlphaRecord> records(q - 1);
  parallel_for(q - 1, options.workers,
               [&](uint64_t begin, uint64_t end, unsigned) {
                 for (uint64_t i = begin; i < end; ++i) {
                   records[i] = classify_alpha(field, g, FieldElement{i + 1});
                 }
               });

  SurveyReport rep;
  rep.m = field.m();
  rep.s = g.s();
  rep.has_linear_term = g.has_linear_term();
  for (const auto& rec : records) {
    switch (rec.klass) {
      case AlphaClass::kZero:
        ++rep.n0;
        break;
      case AlphaClass::kTwoQ:
        ++rep.n2;
        break;
      case AlphaClass::kEightQ:
        ++rep.n8;
        break;
    }
    rep.sum_x += rec.x_alpha;
  }
  rep.l4p4_curve = static_cast<UInt128>(q) * q + rep.sum_x;

  const auto stats =
      spectrum_stats(walsh_transform(field, from_trace_poly(field, g)));
  rep.l4p4_fwht = stats.l4p4;
  rep.l4_identity_holds = rep.l4p4_curve == rep.l4p4_fwht;
  rep.linf = stats.linf;

  rep.bound_eval_holds = eval_bound_holds(rep.l4p4_fwht, q, rep.s);
  rep.bound_n8_holds = n8_bound_holds(rep.n8, q, rep.s);
  rep.bound_n2_holds = n2_bound_holds(rep.n2, q);

  rep.lower = lower_bound_check(field, g, stats);
  rep.lower_bound_holds = rep.lower.nonstrict_holds;
  rep.strict_lower_holds = rep.lower.strict_holds;
  if (options.keep_records) rep.records = std::move(records);
  return rep;
}

}  // namespace bfcurve
