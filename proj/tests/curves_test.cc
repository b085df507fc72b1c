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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"

namespace bfcurve {
namespace {

ArtinSchreierQuintic random_curve(const Field& f, std::mt19937_64& rng) {
  return {FieldElement{oracle::random_nonzero(rng, f.q())},
          FieldElement{rng() & (f.q() - 1)}, FieldElement{rng() & (f.q() - 1)},
          FieldElement{rng() & (f.q() - 1)}};
}

TEST(QuadraticForm, TwoEvaluationRoutesAgree) {
  std::mt19937_64 rng(1);
  for (int m = 2; m <= 10; ++m) {
    const Field f(m);
    for (int k = 0; k < 5; ++k) {
      const auto c = random_curve(f, rng);
      EXPECT_EQ(quadratic_form_eval(f, c, Field::zero()), 0);
      for (uint64_t xb = 0; xb < f.q(); ++xb) {
        const FieldElement x{xb};
        // Tr(c^2 x^2) = Tr(c x)
        const FieldElement poly = f.mul(c.a, f.pow(x, 5)) +
                                  f.mul(c.b, f.pow(x, 3)) + f.mul(c.c, x);
        ASSERT_EQ(quadratic_form_eval(f, c, x), f.trace(poly));
      }
    }
  }
}

TEST(QuadraticForm, PureQuinticIsTraceOfX5) {
  const Field f(7);
  const ArtinSchreierQuintic c{Field::one(), {}, {}, {}};
  for (uint64_t x = 0; x < f.q(); ++x) {
    ASSERT_EQ(quadratic_form_eval(f, c, FieldElement{x}),
              f.trace(f.pow(FieldElement{x}, 5)));
  }
}

TEST(Radical, PureQuinticAtM5) {
  const Field f(5);
  const ArtinSchreierQuintic c{Field::one(), {}, {}, {}};
  const auto rad = radical(f, c);
  EXPECT_EQ(rad.w, 1);
  EXPECT_EQ(rad.basis, std::vector<FieldElement>{Field::one()});
}

TEST(Radical, MatchesSymplecticFormDefinition) {
  // Brute-force radical: x with Tr(x R(y) + y R(x)) = 0 for every y.
  std::mt19937_64 rng(2);
  for (int m : {3, 4, 5, 6, 7}) {
    const Field f(m);
    for (int k = 0; k < 10; ++k) {
      const auto c = random_curve(f, rng);
      const auto r = r_polynomial(f, c);
      std::vector<FieldElement> brute;
      for (uint64_t x = 0; x < f.q(); ++x) {
        bool in_radical = true;
        for (uint64_t y = 0; y < f.q() && in_radical; ++y) {
          const FieldElement xe{x}, ye{y};
          in_radical = f.trace(f.mul(xe, r.eval(f, ye)) +
                               f.mul(ye, r.eval(f, xe))) == 0;
        }
        if (in_radical) brute.push_back(FieldElement{x});
      }
      EXPECT_EQ(span_of(radical(f, c).basis), brute);
    }
  }
}

TEST(Radical, IndependentOfConstantTerm) {
  std::mt19937_64 rng(3);
  const Field f(9);
  for (int k = 0; k < 50; ++k) {
    auto c = random_curve(f, rng);
    const int w = radical(f, c).w;
    c.d = FieldElement{rng() & (f.q() - 1)};
    EXPECT_EQ(radical(f, c).w, w);
  }
}

TEST(Analyze, RejectsDegenerateCurve) {
  const Field f(5);
  EXPECT_THROW(analyze(f, {Field::zero(), Field::one(), {}, {}}),
               std::domain_error);
}

TEST(Analyze, CountsMatchPointEnumeration) {
  // The enumeration oracle counts (x, y) pairs directly.
  std::mt19937_64 rng(4);
  for (int m : {3, 4, 5, 6, 7}) {
    const Field f(m);
    const oracle::NaiveField nf{m, f.reduction()};
    for (int k = 0; k < 40; ++k) {
      const auto c = random_curve(f, rng);
      const auto rep = analyze(f, c);
      ASSERT_EQ(rep.count_direct,
                oracle::enumerate_points(nf, c.a.bits, c.b.bits, c.c.bits,
                                         c.d.bits));
    }
  }
}

TEST(Analyze, TheoremHoldsOnRandomCurves) {
  std::mt19937_64 rng(5);
  for (int m : {3, 5, 7, 9, 11}) {
    const Field f(m);
    const int n = m <= 9 ? 1000 : 300;
    for (int k = 0; k < n; ++k) {
      const auto c = random_curve(f, rng);
      const auto rep = analyze(f, c);
      const auto q = static_cast<int64_t>(f.q());
      ASSERT_EQ(static_cast<int64_t>(rep.count_direct), 1 + q + rep.exp_sum);
      ASSERT_EQ(rep.exp_sum, exp_sum(f, c));
      const int64_t dev = rep.exp_sum;
      if (rep.v_equals_w) {
        ASSERT_EQ(dev * dev, (int64_t{1} << rep.w) * q);
      } else {
        ASSERT_EQ(dev, 0);
      }
      ASSERT_EQ((rep.w + m) % 2, 0);
      // Tr(d) = 0 reduces to the 1 + 2 #Q^-1(0) formula.
      if (f.trace(c.d) == 0) {
        ASSERT_EQ(rep.count_direct, 1 + 2 * rep.q_zero_count);
      }
    }
  }
}

TEST(Analyze, QOnRadicalIsZeroOrHalf) {
  std::mt19937_64 rng(6);
  const Field f(8);
  for (int k = 0; k < 100; ++k) {
    const auto c = random_curve(f, rng);
    const auto w_elems = span_of(radical(f, c).basis);
    std::set<FieldElement> closed(w_elems.begin(), w_elems.end());
    size_t zeros = 0;
    for (const auto& x : w_elems) {
      for (const auto& y : w_elems) ASSERT_TRUE(closed.count(x + y));
      zeros += quadratic_form_eval(f, c, x) == 0;
    }
    ASSERT_TRUE(zeros == w_elems.size() || 2 * zeros == w_elems.size());
    ASSERT_EQ(analyze(f, c).v_equals_w, zeros == w_elems.size());
  }
}

TEST(ExpSum, ConstantTermActsThroughTrace) {
  std::mt19937_64 rng(7);
  const Field f(7);
  for (int k = 0; k < 50; ++k) {
    auto c = random_curve(f, rng);
    const int64_t s = exp_sum(f, c);
    const FieldElement delta{rng() & (f.q() - 1)};
    const ArtinSchreierQuintic shifted{c.a, c.b, c.c, c.d + delta};
    ASSERT_EQ(exp_sum(f, shifted), f.trace(delta) ? -s : s);
  }
}

TEST(ExpSum, PureQuinticAtM3) {
  const Field f(3);
  const ArtinSchreierQuintic c{Field::one(), {}, {}, {}};
  const oracle::NaiveField nf{3, f.reduction()};
  int64_t brute = 0;
  for (uint64_t x = 0; x < 8; ++x) brute += nf.trace(nf.pow(x, 5)) ? -1 : 1;
  const auto rep = analyze(f, c);
  EXPECT_EQ(exp_sum(f, c), brute);
  EXPECT_TRUE(brute == 0 || brute * brute == (int64_t{1} << rep.w) * 8);
}

}  // namespace
}  // namespace bfcurve
