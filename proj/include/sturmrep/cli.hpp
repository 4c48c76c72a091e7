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

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#ifndef STURMREP_CLI_HPP_
#define STURMREP_CLI_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sturmrep/exact.hpp"

namespace sturmrep {

// Integer, p/q or a finite decimal such as 1.645, as an exact rational.
Rational parse_rational(std::string_view text);

// r1, r2, r3, rmax or a rational.
QuadExt parse_threshold(std::string_view text);

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmrep

#endif  // STURMREP_CLI_HPP_
