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

#include "bfcurve/linearized.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bfcurve {

namespace {

// Echelon form of an F2-linear map given by its column images. Each stored
// pivot row keeps the preimage combination that produced it, so L(pre) = img
// holds for every row and reductions yield kernel vectors and particular
// solutions directly.
class Eliminator {
 public:
  explicit Eliminator(std::span<const uint64_t> columns) {
    for (size_t j = 0; j < columns.size(); ++j) {
      uint64_t img = columns[j];
      uint64_t pre = uint64_t{1} << j;
      reduce(img, pre);
      if (img == 0) {
        kernel_.push_back(pre);
      } else {
        const int top = 63 - std::countl_zero(img);
        pivot_img_[top] = img;
        pivot_pre_[top] = pre;
      }
    }
  }

  const std::vector<uint64_t>& kernel() const { return kernel_; }

  std::optional<uint64_t> particular(uint64_t target) const {
    uint64_t pre = 0;
    if (!reduce(target, pre)) return std::nullopt;
    return pre;
  }

 private:
  // Clears img against pivots. Returns false if a leading bit has no pivot.
  bool reduce(uint64_t& img, uint64_t& pre) const {
    while (img != 0) {
      const int top = 63 - std::countl_zero(img);
      if (pivot_img_[top] == 0) return false;
      img ^= pivot_img_[top];
      pre ^= pivot_pre_[top];
    }
    return true;
  }

  std::array<uint64_t, 64> pivot_img_{};
  std::array<uint64_t, 64> pivot_pre_{};
  std::vector<uint64_t> kernel_;
};

}  // namespace

FieldElement LinearizedPolynomial::eval(const Field& field,
                                        FieldElement x) const {
  FieldElement acc;
  for (const auto& t : terms_) {
    acc += field.mul(t.coef, field.frobenius(x, t.index));
  }
  return acc;
}

LinearizedPolynomial LinearizedPolynomial::adjoint(const Field& field) const {
  std::vector<LinearizedTerm> out;
  out.reserve(terms_.size());
  const int m = field.m();
  for (const auto& t : terms_) {
    const int i = ((t.index % m) + m) % m;
    out.push_back({(m - i) % m, field.frobenius(t.coef, -i)});
  }
  return LinearizedPolynomial(std::move(out));
}

std::vector<uint64_t> LinearizedPolynomial::matrix_columns(
    const Field& field) const {
  std::vector<uint64_t> cols(field.m());
  for (int j = 0; j < field.m(); ++j) {
    cols[j] = eval(field, FieldElement{uint64_t{1} << j}).bits;
  }
  return cols;
}

LinearizedPolynomial operator+(const LinearizedPolynomial& a,
                               const LinearizedPolynomial& b) {
  std::vector<LinearizedTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return LinearizedPolynomial(std::move(terms));
}

std::vector<FieldElement> linearized_kernel(const Field& field,
                                            const LinearizedPolynomial& poly) {
  const auto cols = poly.matrix_columns(field);
  Eliminator elim(cols);
  std::vector<FieldElement> basis;
  basis.reserve(elim.kernel().size());
  for (uint64_t v : elim.kernel()) basis.push_back(FieldElement{v});
  return basis;
}

std::vector<FieldElement> linearized_solve(const Field& field,
                                           const LinearizedPolynomial& poly,
                                           FieldElement target) {
  const auto cols = poly.matrix_columns(field);
  Eliminator elim(cols);
  const auto x0 = elim.particular(target.bits);
  if (!x0) return {};
  std::vector<FieldElement> kernel;
  for (uint64_t v : elim.kernel()) kernel.push_back(FieldElement{v});
  auto sols = span_of(kernel);
  for (auto& s : sols) s += FieldElement{*x0};
  std::sort(sols.begin(), sols.end());
  return sols;
}

std::vector<FieldElement> span_of(std::span<const FieldElement> basis) {
  if (basis.size() >= 32) throw std::length_error("span too large");
  std::vector<FieldElement> out{FieldElement{}};
  out.reserve(size_t{1} << basis.size());
  for (const auto& b : basis) {
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] + b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bfcurve
