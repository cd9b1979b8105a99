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

#include "ecl/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ecl {
namespace {

__extension__ using Wide = __int128;

std::int64_t checked(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(checked(num), checked(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::from_double(double x, std::int64_t max_den) {
  if (!std::isfinite(x) || std::fabs(x) > 1e12) return std::nullopt;
  // Continued-fraction convergents of x.
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(r);
    auto a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 > max_den) break;
    if (static_cast<double>(p2) / static_cast<double>(q2) == x) {
      return Rational(p2, q2);
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - fl;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

Rational operator+(const Rational& x, const Rational& y) {
  return make(static_cast<Wide>(x.num_) * y.den_ +
                  static_cast<Wide>(y.num_) * x.den_,
              static_cast<Wide>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return make(static_cast<Wide>(x.num_) * y.den_ -
                  static_cast<Wide>(y.num_) * x.den_,
              static_cast<Wide>(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return make(static_cast<Wide>(x.num_) * y.num_,
              static_cast<Wide>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  return make(static_cast<Wide>(x.num_) * y.den_,
              static_cast<Wide>(x.den_) * y.num_);
}

bool operator<(const Rational& x, const Rational& y) {
  return static_cast<Wide>(x.num_) * y.den_ <
         static_cast<Wide>(y.num_) * x.den_;
}

}  // namespace ecl
