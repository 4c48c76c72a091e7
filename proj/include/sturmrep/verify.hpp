// Copyright 2026 The sturmrep Authors
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

// Verification suites shared by the `verify` command and the tests.

#ifndef STURMREP_VERIFY_HPP_
#define STURMREP_VERIFY_HPP_

#include <cstddef>
#include <vector>

#include "sturmrep/spectrum.hpp"

namespace sturmrep {

// Worked example, engine equivalence, Sturmian profile laws, factor
// complexity and the case-2 lower bounds, on prefixes resolving n <= n_max.
std::vector<CheckResult> verify_words(std::size_t n_max = 2000);

// Pattern bounds, exact rep anchors, e_j algebra, lambda recurrences, the
// h_n forms, limits, separation and minimality over the family.
std::vector<CheckResult> verify_spectrum();

// D_n forms and residues for n <= n_max and the Q(sqrt10) exclusion.
std::vector<CheckResult> verify_congruence(unsigned n_max = 2000);

}  // namespace sturmrep

#endif  // STURMREP_VERIFY_HPP_
