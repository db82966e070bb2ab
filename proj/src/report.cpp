/*
   Copyright 2026 The rootless Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "rootless/report.hpp"

#include <cstdio>

namespace rootless {

void Report::param(const std::string& key, const std::string& value) { parameters.emplace_back(key, value); }

void Report::verdict(const std::string& key, const std::string& value) { verdicts.emplace_back(key, value); }

void Report::violation(const std::string& key, const std::string& value) {
  verdicts.emplace_back(key, value);
  passed = false;
}

void Report::timing(const std::string& key, double seconds) { timings.emplace_back(key, seconds); }

void Report::trace(const std::string& name, const std::string& text) { traces.emplace_back(name, text); }

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& [k, v] : other.verdicts) verdicts.emplace_back(prefix + "." + k, v);
  verdicts.emplace_back(prefix + ".status", other.passed ? "pass" : "fail");
  for (const auto& [k, v] : other.timings) timings.emplace_back(prefix + "." + k, v);
  for (const auto& [k, v] : other.traces) traces.emplace_back(prefix + "." + k, v);
  passed = passed && other.passed;
}

std::string Report::to_string(bool with_timings) const {
  std::string out = "command=" + command + "\n";
  for (const auto& [k, v] : parameters) out += "param." + k + "=" + v + "\n";
  for (const auto& [k, v] : verdicts) out += k + "=" + v + "\n";
  out += std::string("status=") + (passed ? "pass" : "fail") + "\n";
  if (with_timings) {
    for (const auto& [k, s] : timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", s);
      out += "time." + k + "=" + buf + "\n";
    }
  }
  for (const auto& [name, text] : traces) {
    out += "begin trace " + name + "\n" + text;
    if (!text.empty() && text.back() != '\n') out += "\n";
    out += "end trace\n";
  }
  return out;
}

int exit_code(const Report& r) { return r.passed ? 0 : 1; }

}  // namespace rootless
