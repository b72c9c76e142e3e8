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

#ifndef FF_ERROR_HPP_
#define FF_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ff {

// Raised for inputs that violate an operation's domain (wrong lengths,
// disconnected terminals where a flow is required, unknown labels, ...).
// The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax errors carry the 0-based character offset of the offending token.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : DomainError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ff

#endif  // FF_ERROR_HPP_
