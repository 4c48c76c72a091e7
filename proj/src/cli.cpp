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

#include "sturmrep/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmrep/contfrac.hpp"
#include "sturmrep/report.hpp"
#include "sturmrep/repetition.hpp"
#include "sturmrep/spectrum.hpp"
#include "sturmrep/verify.hpp"
#include "sturmrep/words.hpp"

namespace sturmrep {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, csv, json };

struct FormatFlags {
  bool text = false, csv = false, json = false;

  void attach(CLI::App* app) {
    auto* t = app->add_flag("--text", text, "Human-readable output");
    auto* c = app->add_flag("--csv", csv, "CSV output");
    auto* j = app->add_flag("--json", json, "JSON output");
    t->excludes(c)->excludes(j);
    c->excludes(j);
  }

  Format resolve(Format fallback, std::initializer_list<Format> allowed) const {
    Format f = fallback;
    if (text) f = Format::text;
    if (csv) f = Format::csv;
    if (json) f = Format::json;
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
      throw UsageError("output format not supported by this command");
    }
    return f;
  }
};

std::string trim(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

Integer parse_integer(const std::string& s) {
  if (s.empty()) throw ParseError("empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("invalid number: " + s);
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("invalid number: " + s);
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

std::vector<Integer> parse_digit_list(std::string_view text) {
  const std::string s = trim(text);
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const Integer v = parse_integer(item);
    if (v < 1) throw ParseError("partial quotients must be positive: " + item);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

DigitMode digit_mode(const std::string& mode) { return mode == "ceiling" ? DigitMode::ceiling : DigitMode::floor; }

BinaryWord make_word(const ContinuedFraction& cf, const std::optional<std::string>& intercept, const std::string& mode,
                     std::size_t length) {
  if (mode == "characteristic" || mode == "case2") {
    if (intercept) throw UsageError("--intercept applies to floor and ceiling modes only");
    return mode == "case2" ? case2_word(cf, length) : characteristic_word(cf, length);
  }
  if (!cf.is_periodic()) throw UsageError("floor and ceiling modes need an eventually periodic slope");
  const Rational rho = intercept ? parse_rational(*intercept) : Rational(0);
  return sturmian_word(cf_value(cf), rho, length, digit_mode(mode));
}

std::string approx(const QuadExt& x, unsigned digits) { return format_decimal(x, digits) + "…"; }

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

// Writes through `body` to stdout or to `path`.
void with_output(std::ostream& out, const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("write failed: " + path);
}

struct NamedConstant {
  const char* name;
  QuadExt value;
};

std::vector<NamedConstant> named_constants() {
  return {{"r_max", constants::r_max()},
          {"r_1", constants::r_1()},
          {"r_2", constants::r_2()},
          {"r_3", constants::r_3()},
          {"phi", constants::phi()}};
}

void print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  const std::size_t slash = s.find('/');
  Rational r;
  if (slash != std::string::npos) {
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: " + s);
    r = Rational(num, den);
  } else if (const std::size_t dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("invalid rational: " + s);
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits = (whole.empty() || whole == "-" || whole == "+" ? std::string("0") : whole) + frac;
    Integer num = parse_integer(digits);
    if (negative && num > 0) num = -num;
    r = Rational(num, pow10(static_cast<unsigned>(frac.size())));
  } else {
    r = Rational(parse_integer(s));
  }
  r.canonicalize();
  return r;
}

QuadExt parse_threshold(std::string_view text) {
  const std::string s = trim(text);
  if (s == "r1") return constants::r_1();
  if (s == "r2") return constants::r_2();
  if (s == "r3") return constants::r_3();
  if (s == "rmax") return constants::r_max();
  return QuadExt(parse_rational(s));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repetition function and exponent of repetition of Sturmian words", "sturmrep"};
  app.require_subcommand(1, 1);

  // constants
  FormatFlags constants_fmt;
  auto* constants_cmd = app.add_subcommand("constants", "Print the exact spectrum constants");
  constants_fmt.attach(constants_cmd);

  // word gen
  auto* word_cmd = app.add_subcommand("word", "Word generation");
  word_cmd->require_subcommand(1, 1);
  auto* word_gen = word_cmd->add_subcommand("gen", "Generate a Sturmian word prefix");
  std::string slope, mode = "floor", output;
  std::optional<std::string> intercept;
  std::size_t length = 0;
  word_gen->add_option("--slope", slope, "Slope as a continued fraction, e.g. 0;(2,1,1)")->required();
  word_gen->add_option("--intercept", intercept, "Intercept p/q");
  word_gen->add_option("--mode", mode)->check(CLI::IsMember({"floor", "ceiling", "characteristic", "case2"}));
  word_gen->add_option("--length", length)->required()->check(CLI::PositiveNumber);
  word_gen->add_option("--output", output, "Write to a file instead of stdout");

  // rep ...
  auto* rep_cmd = app.add_subcommand("rep", "Repetition function and exponent");
  rep_cmd->require_subcommand(1, 1);
  auto* rep_profile = rep_cmd->add_subcommand("profile", "r(n) for n <= nmax as CSV");
  std::size_t nmax = 0, prefix_length = 0;
  std::string engine = "fast";
  FormatFlags profile_fmt;
  rep_profile->add_option("--slope", slope)->required();
  rep_profile->add_option("--intercept", intercept);
  rep_profile->add_option("--mode", mode)->check(CLI::IsMember({"floor", "ceiling", "characteristic", "case2"}));
  rep_profile->add_option("--nmax", nmax)->required()->check(CLI::PositiveNumber);
  rep_profile->add_option("--length", prefix_length, "Prefix length (default 2 nmax + 2)");
  rep_profile->add_option("--engine", engine)->check(CLI::IsMember({"fast", "oracle", "both"}));
  rep_profile->add_option("--output", output);
  profile_fmt.attach(rep_profile);

  auto* rep_estimate_cmd = rep_cmd->add_subcommand("estimate", "Window minimum of r(n)/n");
  std::string window = "1/2";
  FormatFlags estimate_fmt;
  rep_estimate_cmd->add_option("--slope", slope)->required();
  rep_estimate_cmd->add_option("--intercept", intercept);
  rep_estimate_cmd->add_option("--mode", mode)->check(CLI::IsMember({"floor", "ceiling", "characteristic", "case2"}));
  rep_estimate_cmd->add_option("--length", length)->required()->check(CLI::PositiveNumber);
  rep_estimate_cmd->add_option("--window", window, "Window fraction f; n ranges over [f nmax, nmax]");
  estimate_fmt.attach(rep_estimate_cmd);

  auto* rep_exact_cmd = rep_cmd->add_subcommand("exact", "Exact exponent for a case-2 word with periodic slope");
  std::string period, preperiod;
  FormatFlags exact_fmt;
  rep_exact_cmd->add_option("--period", period)->required();
  rep_exact_cmd->add_option("--preperiod", preperiod);
  exact_fmt.attach(rep_exact_cmd);

  // pattern bound
  auto* pattern_cmd = app.add_subcommand("pattern", "Quotient-pattern exclusion");
  pattern_cmd->require_subcommand(1, 1);
  auto* pattern_bound = pattern_cmd->add_subcommand("bound", "Upper bound forced by a quotient pattern");
  std::string pattern, threshold, bound_mode = "B2_then_B1";
  FormatFlags bound_fmt;
  pattern_bound->add_option("--pattern", pattern)->required();
  pattern_bound->add_option("--threshold", threshold, "r1, r2, r3, rmax or p/q")->required();
  pattern_bound->add_option("--mode", bound_mode)->check(CLI::IsMember({"B2_then_B1", "B1_then_B2"}));
  bound_fmt.attach(pattern_bound);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  std::string suite = "all";
  std::size_t verify_nmax = 2000;
  FormatFlags verify_fmt;
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "words", "spectrum", "congruence"}));
  verify_cmd->add_option("--nmax", verify_nmax, "Size of the word and congruence checks")->check(CLI::PositiveNumber);
  verify_fmt.attach(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (constants_cmd->parsed()) {
      const Format f = constants_fmt.resolve(Format::text, {Format::text, Format::json});
      if (f == Format::json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : named_constants()) {
          j.push_back({{"name", c.name}, {"value_exact", exact_json(c.value)},
                       {"value_decimal", format_decimal(c.value, 30)}});
        }
        emit_json(out, j);
      } else {
        for (const auto& c : named_constants()) {
          out << c.name << " = " << c.value.to_string() << " = " << format_decimal(c.value, 30) << '\n';
        }
      }
      return 0;
    }

    if (word_gen->parsed()) {
      const BinaryWord x = make_word(ContinuedFraction::parse(slope), intercept, mode, length);
      with_output(out, output, [&](std::ostream& o) { o << x.to_string() << '\n'; });
      return 0;
    }

    if (rep_profile->parsed()) {
      profile_fmt.resolve(Format::csv, {Format::csv});
      const std::size_t len = prefix_length ? prefix_length : 2 * nmax + 2;
      const BinaryWord x = make_word(ContinuedFraction::parse(slope), intercept, mode, len);
      RepProfile profile;
      if (engine == "oracle") {
        profile = r_profile_oracle(x, nmax);
      } else {
        profile = r_profile_fast(x, nmax);
        if (engine == "both") {
          err << "# checking fast engine against the oracle\n";
          if (!(r_profile_oracle(x, nmax) == profile)) throw VerificationFailure("fast and oracle profiles differ");
        }
      }
      with_output(out, output, [&](std::ostream& o) { write_profile_csv(o, profile); });
      return 0;
    }

    if (rep_estimate_cmd->parsed()) {
      const Format f = estimate_fmt.resolve(Format::text, {Format::text, Format::json});
      const BinaryWord x = make_word(ContinuedFraction::parse(slope), intercept, mode, length);
      const std::size_t n_max = (length - 1) / 2;
      if (n_max < 1) throw UsageError("--length too small");
      const RepEstimate est = rep_estimate(r_profile_fast(x, n_max), parse_rational(window));
      if (f == Format::json) {
        emit_json(out, {{"input", slope},
                        {"window_min", {{"num", integer_json(est.window_min.get_num())},
                                        {"den", integer_json(est.window_min.get_den())}}},
                        {"window_min_decimal", format_decimal(est.window_min, 12)},
                        {"argmin_n", est.argmin_n},
                        {"n_lo", est.n_lo},
                        {"n_hi", est.n_hi},
                        {"record_lows", est.record_lows.size()}});
      } else {
        out << "window_min = " << est.window_min.get_str() << " = " << format_decimal(est.window_min, 12)
            << " at n = " << est.argmin_n << " (window " << est.n_lo << ".." << est.n_hi << ")\n";
      }
      return 0;
    }

    if (rep_exact_cmd->parsed()) {
      const Format f = exact_fmt.resolve(Format::text, {Format::text, Format::json});
      const ContinuedFraction cf(Integer(0), preperiod.empty() ? std::vector<Integer>{} : parse_digit_list(preperiod),
                                 parse_digit_list(period));
      const ExactRepResult r = rep_exact_case2(cf);
      Report rep;
      rep.input = cf.to_string();
      rep.value = r.value;
      rep.argmin_phase = r.argmin_phase;
      rep.argmin_kind = to_string(r.argmin_kind);
      rep.checks.push_back({"beta < 1", sign(QuadExt(1L) - r.beta) > 0, "period product " + format_decimal(r.beta, 12)});
      std::string ties;
      for (const auto& [phase, kind] : r.ties) ties += (ties.empty() ? "" : ", ") + std::to_string(phase) + " " + to_string(kind);
      if (f == Format::json) {
        nlohmann::json j = to_json(rep);
        j["method_extrapolated"] = r.method_extrapolated;
        j["ties"] = ties;
        emit_json(out, j);
      } else {
        out << "rep = " << r.value.to_string() << " ≈ " << approx(r.value, 9) << '\n';
        out << "argmin: " << ties << '\n';
        if (r.method_extrapolated) out << "note: method-extrapolated (period outside the closed-form families)\n";
      }
      return 0;
    }

    if (pattern_bound->parsed()) {
      const Format f = bound_fmt.resolve(Format::text, {Format::text, Format::json});
      const QuadExt thr = parse_threshold(threshold);
      const BoundMode m = bound_mode == "B1_then_B2" ? BoundMode::B1_then_B2 : BoundMode::B2_then_B1;
      const PatternBound b = pattern_exclusion_bound(parse_digit_list(pattern), thr, m);
      const bool excluded = QuadExt::same_field(b.value, thr) ? b.value < thr : compare_certified(b.value, thr) < 0;
      if (f == Format::json) {
        Report rep;
        rep.input = pattern + " " + threshold + " " + bound_mode;
        rep.value = b.value;
        rep.checks.push_back({"bound below threshold", excluded, "worst eta = " + std::to_string(b.worst_eta)});
        emit_json(out, to_json(rep));
      } else {
        out << "bound = " << b.value.to_string() << " ≈ " << approx(b.value, 9) << " (worst eta = " << b.worst_eta
            << ")\n";
        out << (excluded ? "excluded: bound < threshold\n" : "not excluded: bound >= threshold\n");
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      const Format f = verify_fmt.resolve(Format::text, {Format::text, Format::json});
      std::vector<CheckResult> checks;
      auto add = [&](std::vector<CheckResult> v) {
        for (auto& c : v) checks.push_back(std::move(c));
      };
      if (suite == "all" || suite == "words") add(verify_words(verify_nmax));
      if (suite == "all" || suite == "spectrum") add(verify_spectrum());
      if (suite == "all" || suite == "congruence") add(verify_congruence(static_cast<unsigned>(verify_nmax)));
      Report rep;
      rep.input = "verify --suite " + suite;
      rep.checks = std::move(checks);
      if (f == Format::json) {
        emit_json(out, to_json(rep));
      } else {
        print_checks(out, rep.checks);
      }
      return rep.ok() ? 0 : 1;
    }
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sturmrep
