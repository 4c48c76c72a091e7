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

#include "sturmrep/report.hpp"

#include <algorithm>

namespace sturmrep {

nlohmann::json integer_json(const Integer& v) {
  if (const auto small = to_int64(v)) return *small;
  return v.get_str();
}

nlohmann::json exact_json(const QuadExt& x) {
  return {{"a", integer_json(x.a())}, {"b", integer_json(x.b())}, {"c", integer_json(x.c())},
          {"D", integer_json(x.radicand())}};
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["input"] = report.input;
  j["value_exact"] = report.value ? exact_json(*report.value) : nlohmann::json();
  j["value_decimal"] = report.value ? nlohmann::json(format_decimal(*report.value, 30)) : nlohmann::json();
  j["argmin_phase"] = report.argmin_phase ? nlohmann::json(*report.argmin_phase) : nlohmann::json();
  j["argmin_kind"] = report.argmin_kind ? nlohmann::json(*report.argmin_kind) : nlohmann::json();
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  return j;
}

void write_profile_csv(std::ostream& out, const RepProfile& profile) {
  out << "n,r_n,ratio\n";
  for (std::size_t n = 1; n <= profile.n_max(); ++n) {
    out << n << ',';
    if (const auto& r = profile.at(n)) {
      Rational ratio(Integer(static_cast<unsigned long>(*r)), Integer(static_cast<unsigned long>(n)));
      ratio.canonicalize();
      out << *r << ',' << format_decimal(ratio, 12);
    } else {
      out << ',';
    }
    out << '\n';
  }
}

}  // namespace sturmrep
