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

#include "ff/sweep.hpp"

#include <atomic>
#include <cstdlib>

#include "ff/error.hpp"

namespace ff {

namespace {

std::size_t jobs_from_environment() {
  const char* text = std::getenv("FF_JOBS");
  if (text == nullptr) return 1;
  char* end = nullptr;
  long value = std::strtol(text, &end, 10);
  if (end == text || *end != '\0' || value < 1) return 1;
  return static_cast<std::size_t>(value);
}

std::atomic<std::size_t>& jobs_setting() {
  static std::atomic<std::size_t> jobs{jobs_from_environment()};
  return jobs;
}

}  // namespace

std::size_t sweep_jobs() { return jobs_setting().load(); }

void set_sweep_jobs(std::size_t jobs) { jobs_setting().store(jobs == 0 ? 1 : jobs); }

AssignmentSet full_assignments(std::size_t num_variables) {
  if (num_variables > kMaxEnumerationBits) {
    throw DomainError("full domain on " + std::to_string(num_variables) +
                      " variables is too large to enumerate");
  }
  AssignmentSet set;
  std::uint64_t count = std::uint64_t{1} << num_variables;
  set.points.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    set.points.push_back(Assignment::from_index(code, num_variables));
  }
  set.description = "full(" + std::to_string(num_variables) + ")";
  return set;
}

AssignmentSet promise_assignments(const PromiseDomain& dom) {
  if (dom.is_full()) return full_assignments(dom.num_variables());
  Formula f = dom.formula();
  std::size_t n = f.num_variables();
  if (n > kMaxEnumerationBits) {
    throw DomainError("promise domain on " + std::to_string(n) +
                      " variables is too large to enumerate");
  }
  AssignmentSet set;
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < count; ++code) {
    Assignment x = Assignment::from_index(code, n);
    if (promise_membership(dom, f, x)) set.points.push_back(std::move(x));
  }
  set.description = dom.describe();
  return set;
}

AssignmentSet explicit_assignments(std::vector<Assignment> points, std::string description,
                                   bool exhaustive) {
  return AssignmentSet{std::move(points), exhaustive, std::move(description)};
}

}  // namespace ff
