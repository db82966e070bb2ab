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

// Runs every acceptance check and prints one PASS/FAIL line per criterion.
// With --verbose the full reports follow.

#include <cstring>
#include <exception>
#include <iostream>

#include "rootless/checks.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "--verbose") == 0;
  const char* tolerances[] = {"exact", "exact", "exact", "exact", "exact",
                              "zero violations", "zero exceptions", "exact agreement", "exact",
                              "relative 0.05"};
  int failed = 0;
  std::size_t i = 0;
  for (const auto& check : rootless::acceptance_checks()) {
    const char* tol = tolerances[i++];
    try {
      auto report = check.run({});
      double seconds = report.timings.empty() ? 0.0 : report.timings.front().second;
      std::cout << (report.passed ? "PASS " : "FAIL ") << check.name << " tolerance=" << tol
                << " seconds=" << static_cast<long>(seconds + 0.5) << std::endl;
      if (verbose || !report.passed) std::cout << report.to_string(true);
      failed += !report.passed;
    } catch (const std::exception& e) {
      std::cout << "FAIL " << check.name << " tolerance=" << tol << " error=" << e.what() << std::endl;
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
