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

#include "ff/extended.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "ff/error.hpp"

namespace ff {

Rational parse_rational(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("invalid rational '" + std::string(text) + "'", i);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  }
  std::string body(text[0] == '+' ? text.substr(1) : text);
  Rational value;
  if (value.set_str(body, 10) != 0) throw ParseError("invalid rational '" + body + "'", 0);
  if (value.get_den() == 0) throw DomainError("zero denominator in '" + body + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

std::string to_string(const ExtRational& value) {
  return value.is_infinite() ? "inf" : format_rational(value.value());
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string to_string(const ExtReal& value) {
  return value.is_infinite() ? "inf" : format_double(value.value());
}

std::string to_string(const ExtCount& value) {
  return value.is_infinite() ? "inf" : std::to_string(value.value());
}

}  // namespace ff
