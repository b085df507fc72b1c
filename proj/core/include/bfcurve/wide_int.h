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

#ifndef BFCURVE_WIDE_INT_H_
#define BFCURVE_WIDE_INT_H_

#include <string>

namespace bfcurve {

// Exact 128-bit accumulators for fourth-power spectrum sums, which reach
// about 2^(4m).
__extension__ typedef unsigned __int128 UInt128;
__extension__ typedef __int128 Int128;

std::string to_decimal(UInt128 v);
std::string to_decimal(Int128 v);

}  // namespace bfcurve

#endif  // BFCURVE_WIDE_INT_H_
