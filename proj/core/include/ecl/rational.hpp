// Copyright 2026 The ecl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECL_RATIONAL_HPP_
#define ECL_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>

namespace ecl {

// Small exact rational used for audit metadata of generated instances.
// Arithmetic throws std::overflow_error if an intermediate leaves int64.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / den_; }
  std::string str() const;

  // Recovers p/q with q <= max_den if (double)p/q reproduces x bit-exactly,
  // so decimal literals such as 0.1 map to 1/10.
  static std::optional<Rational> from_double(double x,
                                             std::int64_t max_den = 1000000);

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend bool operator<(const Rational& x, const Rational& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ecl

#endif  // ECL_RATIONAL_HPP_
