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

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "ecl/rational.hpp"

namespace ecl {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_TRUE(b < a);
  EXPECT_FALSE(a < a);
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_DOUBLE_EQ(Rational(5, 8).to_double(), 0.625);
}

TEST(RationalTest, FromDouble) {
  EXPECT_EQ(Rational::from_double(0.1), Rational(1, 10));
  EXPECT_EQ(Rational::from_double(1.0 / 3.0), Rational(1, 3));
  EXPECT_EQ(Rational::from_double(-2.5), Rational(-5, 2));
  EXPECT_EQ(Rational::from_double(0.0), Rational(0));
  EXPECT_FALSE(Rational::from_double(std::sqrt(2.0)).has_value());
  EXPECT_FALSE(Rational::from_double(0.123457, 1000).has_value());
  EXPECT_FALSE(
      Rational::from_double(std::numeric_limits<double>::infinity()).has_value());
}

TEST(RationalTest, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  EXPECT_THROW(big * Rational(4), std::overflow_error);
  EXPECT_THROW(big + big + big, std::overflow_error);
}

}  // namespace
}  // namespace ecl
