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

#ifndef BFCURVE_ERRORS_H_
#define BFCURVE_ERRORS_H_

#include <stdexcept>

namespace bfcurve {

// An analysis produced a value that contradicts a proven identity or a
// structural invariant. Never expected on correct inputs.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Walsh spectrum failed an exactness check (e.g. Parseval sum not divisible
// by q).
class CorruptedSpectrum : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// Operation is mathematically ill-defined for the given field, e.g. cube
// roots when m is even.
class UnsupportedOperation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace bfcurve

#endif  // BFCURVE_ERRORS_H_
