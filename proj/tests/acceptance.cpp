// Copyright 2026 The formula-flow Authors
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

// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Pass criterion numbers or names as arguments to run a subset.

#include <cstdio>
#include <string>
#include <vector>

#include "ff/verify/criteria.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> suites;
  for (int i = 1; i < argc; ++i) suites.emplace_back(argv[i]);
  if (suites.empty()) suites.emplace_back("all");
  bool all_passed = true;
  for (const auto& suite : suites) {
    for (const auto& result : ff::verify::run_suite(suite)) {
      std::printf("%s\n", ff::verify::format_result(result).c_str());
      std::fflush(stdout);
      all_passed = all_passed && result.passed;
    }
  }
  return all_passed ? 0 : 1;
}
