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

#ifndef FF_EXTENDED_HPP_
#define FF_EXTENDED_HPP_

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ff {

using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

// num/den in lowest terms. The two-argument mpq_class constructor leaves the
// fraction as given, and comparisons assume canonical form.
inline Rational make_rational(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

// A nonnegative quantity extended with a single point at infinity.
//
// Resistances, witness sizes and cut sizes are all "infinite" when the
// relevant terminals are disconnected, so the sentinel is a first-class
// value here instead of a huge float. The arithmetic follows the usual
// electrical conventions: x + inf = inf, 1/0 = inf and 1/inf = 0.
template <typename T>
class Extended {
 public:
  Extended() : value_(0) {}
  Extended(T value) : value_(std::move(value)) {}  // NOLINT: implicit on purpose

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const T& value() const {
    if (infinite_) throw std::logic_error("value() of an infinite quantity");
    return value_;
  }

  Extended reciprocal() const {
    if (infinite_) return Extended(T(0));
    if (value_ == 0) return infinity();
    return Extended(T(1) / value_);
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(T(a.value_ + b.value_));
  }

  // Scaling by a strictly positive finite factor.
  friend Extended operator*(const Extended& a, const T& factor) {
    if (a.infinite_) return infinity();
    return Extended(T(a.value_ * factor));
  }
  friend Extended operator/(const Extended& a, const T& divisor) {
    if (a.infinite_) return infinity();
    return Extended(T(a.value_ / divisor));
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

  friend Extended min(const Extended& a, const Extended& b) { return b < a ? b : a; }
  friend Extended max(const Extended& a, const Extended& b) { return a < b ? b : a; }

 private:
  T value_;
  bool infinite_ = false;
};

using ExtRational = Extended<Rational>;
using ExtReal = Extended<double>;
using ExtCount = Extended<unsigned long long>;

// Series combination: resistances add.
template <typename T>
Extended<T> series_sum(const Extended<T>& a, const Extended<T>& b) {
  return a + b;
}

// Parallel combination: conductances add.
template <typename T>
Extended<T> parallel_sum(const Extended<T>& a, const Extended<T>& b) {
  return (a.reciprocal() + b.reciprocal()).reciprocal();
}

inline ExtReal to_real(const ExtRational& value) {
  if (value.is_infinite()) return ExtReal::infinity();
  return ExtReal(value.value().get_d());
}
inline ExtReal to_real(const ExtReal& value) { return value; }

inline double to_double(const ExtReal& value) {
  return value.is_infinite() ? HUGE_VAL : value.value();
}
inline double to_double(const ExtRational& value) { return to_double(to_real(value)); }

std::string to_string(const ExtRational& value);
std::string to_string(const ExtReal& value);
std::string to_string(const ExtCount& value);

// Shortest round-trippable decimal rendering of a double.
std::string format_double(double value);

}  // namespace ff

#endif  // FF_EXTENDED_HPP_
