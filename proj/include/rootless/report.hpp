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

// Line-oriented key=value reports with optional audit trace blocks.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rootless {

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::pair<std::string, double>> timings;  // seconds
  std::vector<std::pair<std::string, std::string>> traces;
  bool passed = true;

  void param(const std::string& key, const std::string& value);
  void verdict(const std::string& key, const std::string& value);
  /// Records a violated claim; the report no longer passes.
  void violation(const std::string& key, const std::string& value);
  void timing(const std::string& key, double seconds);
  void trace(const std::string& name, const std::string& text);
  /// Appends the verdicts, timings and traces of `other` under `prefix.`.
  void merge(const std::string& prefix, const Report& other);

  /// command=, param.*=, the verdict lines, status=pass|fail, then with
  /// timings time.*= lines, then "begin trace NAME" ... "end trace" blocks.
  std::string to_string(bool with_timings = false) const;
};

/// Exit code for a finished report: 0 on pass, 1 on a violated claim.
int exit_code(const Report& r);

}  // namespace rootless
