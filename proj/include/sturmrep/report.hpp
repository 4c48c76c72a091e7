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

// Serialization of profiles and check reports.

#ifndef STURMREP_REPORT_HPP_
#define STURMREP_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sturmrep/exact.hpp"
#include "sturmrep/repetition.hpp"
#include "sturmrep/spectrum.hpp"

namespace sturmrep {

// Big integers become JSON numbers when they fit in int64, strings otherwise.
nlohmann::json integer_json(const Integer& v);
// {a, b, c, D} for (a + b sqrt D)/c.
nlohmann::json exact_json(const QuadExt& x);

struct Report {
  std::string input;
  std::optional<QuadExt> value;
  std::optional<std::size_t> argmin_phase;
  std::optional<std::string> argmin_kind;
  std::vector<CheckResult> checks;

  bool ok() const;
};

// {input, value_exact, value_decimal, argmin_phase, argmin_kind, checks}.
// Absent optional fields are null. value_decimal has 30 digits.
nlohmann::json to_json(const Report& report);

// Header `n,r_n,ratio`; ratio to 12 digits, round-half-even; unresolved
// rows keep empty fields.
void write_profile_csv(std::ostream& out, const RepProfile& profile);

}  // namespace sturmrep

#endif  // STURMREP_REPORT_HPP_
