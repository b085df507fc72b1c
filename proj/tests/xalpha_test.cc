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

#include <algorithm>
#include <random>

#include "bfcurve/errors.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace bfcurve {
namespace {

FamilyPolynomial random_family(const Field& f, std::mt19937_64& rng, int s) {
  std::vector<FamilyPolynomial::BTerm> b;
  for (int i = 1; i <= s; ++i) {
    b.emplace_back(i, FieldElement{oracle::random_nonzero(rng, f.q())});
  }
  return FamilyPolynomial(f, FieldElement{oracle::random_nonzero(rng, f.q())},
                          std::move(b));
}

std::vector<oracle::Term> to_oracle(const FamilyPolynomial& g) {
  std::vector<oracle::Term> out;
  const SparsePolynomial sparse = g.to_sparse();
  for (const auto& t : sparse.terms()) {
    out.push_back({t.exponent, t.coef.bits});
  }
  return out;
}

TEST(DerivativeCurve, PureSeptic) {
  const Field f(7);
  const FieldElement a7{0x5a}, al{0x13};
  const FamilyPolynomial g(f, a7, {});
  const auto c = derivative_curve(f, g, al);
  EXPECT_EQ(c.a, f.mul(a7, f.pow(al, 2)));
  EXPECT_EQ(c.b, f.mul(a7, f.pow(al, 4)) +
                     f.mul(f.sqrt(a7), f.sqrt(al)));
  // a7 al^6 + a7^(1/4) al^(3/4) + a7^(1/2) al^(5/2)
  const FieldElement quarter_a7 = f.frobenius(a7, -2);
  const FieldElement al_3_4 = f.frobenius(f.pow(al, 3), -2);
  const FieldElement al_5_2 = f.sqrt(f.pow(al, 5));
  EXPECT_EQ(c.c, f.mul(a7, f.pow(al, 6)) + f.mul(quarter_a7, al_3_4) +
                     f.mul(f.sqrt(a7), al_5_2));
  EXPECT_EQ(c.d, f.mul(a7, f.pow(al, 7)));
  EXPECT_THROW(derivative_curve(f, g, Field::zero()), std::domain_error);
}

TEST(DerivativeCurve, CharacterSumMatchesDirectDerivativeSum) {
  std::mt19937_64 rng(1);
  for (int m : {4, 5, 6, 7}) {
    const Field f(m);
    const oracle::NaiveField nf{m, f.reduction()};
    for (int k = 0; k < 6; ++k) {
      const auto g = random_family(f, rng, k % 3);
      const auto og = to_oracle(g);
      for (uint64_t al = 1; al < f.q(); ++al) {
        const auto c = derivative_curve(f, g, FieldElement{al});
        ASSERT_FALSE(c.a.is_zero());
        ASSERT_EQ(exp_sum(f, c), oracle::derivative_sum(nf, og, al))
            << "m=" << m << " alpha=" << al;
      }
    }
  }
}

TEST(XAlpha, SepticMonomialMatchesBruteForceAtM7) {
  const Field f(7);
  const oracle::NaiveField nf{7, f.reduction()};
  const FamilyPolynomial g(f, Field::one(), {});
  const auto og = to_oracle(g);
  std::vector<uint64_t> ours, brute;
  for (uint64_t al = 1; al < f.q(); ++al) {
    ours.push_back(x_alpha(f, g, FieldElement{al}));
    const int64_t s = oracle::derivative_sum(nf, og, al);
    brute.push_back(static_cast<uint64_t>(s * s));
  }
  EXPECT_EQ(ours, brute);
  for (uint64_t x : ours) {
    EXPECT_TRUE(x == 0 || x == 2 * f.q() || x == 8 * f.q());
  }
}

TEST(ClassifyAlpha, RequiresOddM) {
  const Field f(6);
  const FamilyPolynomial g(f, Field::one(), {});
  EXPECT_THROW(classify_alpha(f, g, Field::one()), UnsupportedOperation);
  EXPECT_THROW(survey(f, g), UnsupportedOperation);
}

TEST(ClassifyAlpha, CriteriaHoldExhaustively) {
  std::mt19937_64 rng(2);
  for (int m : {5, 7, 9}) {
    const Field f(m);
    for (int k = 0; k < 20; ++k) {
      const auto g = random_family(f, rng, k % 3);
      for (uint64_t al = 1; al < f.q(); ++al) {
        const auto rec = classify_alpha(f, g, FieldElement{al});
        // ell^3 a7 alpha^7 = 1
        ASSERT_EQ(f.mul(f.mul(f.pow(rec.ell, 3), g.a7()),
                        f.pow(FieldElement{al}, 7)),
                  Field::one());
        ASSERT_EQ(rec.tr_ell == 1, rec.klass == AlphaClass::kTwoQ);
        if (rec.klass == AlphaClass::kEightQ) {
          ASSERT_TRUE(rec.v.has_value());
          ASSERT_EQ(*rec.v + f.pow(*rec.v, 4), rec.ell);
          ASSERT_EQ(f.trace(*rec.v), 0);
          ASSERT_EQ(rec.tr_ell, 0);
        }
      }
    }
  }
}

TEST(Survey, L4IdentityAndPartition) {
  std::mt19937_64 rng(3);
  for (int m : {5, 7, 9, 11}) {
    const Field f(m);
    for (int k = 0; k < (m <= 9 ? 20 : 5); ++k) {
      const auto g = random_family(f, rng, k % 3);
      const auto rep = survey(f, g, SurveyOptions{2, false});
      EXPECT_EQ(rep.n0 + rep.n2 + rep.n8, f.q() - 1);
      EXPECT_TRUE(rep.l4_identity_holds);
      EXPECT_EQ(rep.l4p4_curve, rep.l4p4_fwht);
      EXPECT_TRUE(rep.bound_eval_holds);
      EXPECT_TRUE(rep.bound_n2_holds);
    }
  }
}

TEST(Survey, IndependentOfWorkerCount) {
  const Field f(9);
  std::mt19937_64 rng(4);
  const auto g = random_family(f, rng, 2);
  const auto a = survey(f, g, SurveyOptions{1, true});
  const auto b = survey(f, g, SurveyOptions{5, true});
  EXPECT_EQ(a.n0, b.n0);
  EXPECT_EQ(a.n2, b.n2);
  EXPECT_EQ(a.n8, b.n8);
  EXPECT_EQ(a.sum_x, b.sum_x);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    ASSERT_EQ(a.records[i].x_alpha, b.records[i].x_alpha);
    ASSERT_EQ(a.records[i].alpha.bits, i + 1);
  }
}

TEST(Bounds, ExactComparisons) {
  // |X| <= 92.5 q^(3/2) at s = 0; q = 2^5 gives 92.5 * 181.02 = 16744.6.
  const uint64_t q = 32;
  const UInt128 three_q2 = 3 * q * q;
  EXPECT_TRUE(eval_bound_holds(three_q2 + 16744, q, 0));
  EXPECT_FALSE(eval_bound_holds(three_q2 + 16745, q, 0));
  // Below 3q^2 needs q large enough that 3q^2 exceeds the bound:
  // q = 2^11 gives 92.5 * 92681.9 = 8573075.8.
  const UInt128 big = 2048;
  EXPECT_TRUE(eval_bound_holds(3 * big * big - 8573075, 2048, 0));
  EXPECT_FALSE(eval_bound_holds(3 * big * big - 8573076, 2048, 0));
  // s = 1 doubles the constant: 185 * 181.019 = 33488.6
  EXPECT_TRUE(eval_bound_holds(three_q2 + 33488, q, 1));
  EXPECT_FALSE(eval_bound_holds(three_q2 + 33489, q, 1));

  // |n8 - q/8| <= 11.5 sqrt(q): q = 2^7, 11.5 * 11.3137 = 130.1
  EXPECT_TRUE(n8_bound_holds(16 + 130, 128, 0));
  EXPECT_FALSE(n8_bound_holds(16 + 131, 128, 0));
  // |n2 - q/2| <= 3 sqrt(q) + 1: q = 2^7 gives 34.94
  EXPECT_TRUE(n2_bound_holds(64 + 34, 128));
  EXPECT_FALSE(n2_bound_holds(64 + 35, 128));
  EXPECT_TRUE(n2_bound_holds(64 - 34, 128));
  EXPECT_FALSE(n2_bound_holds(64 - 35, 128));
}

TEST(LowerBound, ScopesAndChecks) {
  std::mt19937_64 rng(6);
  const Field f9(9);
  const auto g = random_family(f9, rng, 1);
  const auto r = lower_bound_check(f9, g);
  EXPECT_EQ(r.scope, LowerBoundScope::kNonStrict);
  EXPECT_EQ(r.divisibility_modulus, 8u);
  EXPECT_TRUE(r.divisibility_holds);
  EXPECT_TRUE(r.l4_vs_linf_holds);
  EXPECT_TRUE(r.nonstrict_holds);
  ASSERT_TRUE(r.proposition_holds.has_value());

  const Field f13(13);
  const auto gap = lower_bound_check(f13, random_family(f13, rng, 0));
  EXPECT_EQ(gap.scope, LowerBoundScope::kGap);
  EXPECT_FALSE(gap.proposition_holds.has_value());

  const Field f11(11);
  EXPECT_EQ(lower_bound_check(f11, random_family(f11, rng, 0)).scope,
            LowerBoundScope::kNonStrict);
  EXPECT_THROW(lower_bound_check(Field(8), FamilyPolynomial(Field(8),
                                                             Field::one(), {})),
               UnsupportedOperation);
}

}  // namespace
}  // namespace bfcurve
