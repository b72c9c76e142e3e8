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

#ifndef FF_VERIFY_CRITERIA_HPP_
#define FF_VERIFY_CRITERIA_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace ff::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* summary;
};

// The twelve acceptance checks, in order.
const std::vector<CriterionInfo>& criteria();

CriterionResult run_criterion(int id);

// `suite` is "all", a criterion number ("7") or a criterion name
// ("resistance-product"). Throws DomainError for anything else.
std::vector<CriterionResult> run_suite(std::string_view suite);

// "PASS  7 resistance-product  (1.2 s)  detail"
std::string format_result(const CriterionResult& result);

}  // namespace ff::verify

#endif  // FF_VERIFY_CRITERIA_HPP_
