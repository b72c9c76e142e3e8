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

#ifndef FF_SWEEP_HPP_
#define FF_SWEEP_HPP_

#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "ff/formula.hpp"

namespace ff {

// Worker count for parallel sweeps. Starts at $FF_JOBS (or 1) and can be
// overridden, e.g. by the CLI's --jobs flag.
std::size_t sweep_jobs();
void set_sweep_jobs(std::size_t jobs);

// Evaluates fn(0..count-1) on up to `jobs` threads. Results land at their
// index, so the output never depends on the thread count. The first
// exception thrown by any worker is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn, std::size_t jobs = sweep_jobs()) {
  std::vector<T> out(count);
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  if (jobs > count) jobs = count;
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += jobs) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return out;
}

// A finite set of inputs to sweep over. `exhaustive` is false when the set
// is a sample, in which case maxima over it are only lower estimates.
struct AssignmentSet {
  std::vector<Assignment> points;
  bool exhaustive = true;
  std::string description;
};

// Largest domain enumerated point by point.
inline constexpr std::size_t kMaxEnumerationBits = 20;

AssignmentSet full_assignments(std::size_t num_variables);
// Every x satisfying the promise on dom.formula().
AssignmentSet promise_assignments(const PromiseDomain& dom);
AssignmentSet explicit_assignments(std::vector<Assignment> points, std::string description,
                                   bool exhaustive = false);

}  // namespace ff

#endif  // FF_SWEEP_HPP_
