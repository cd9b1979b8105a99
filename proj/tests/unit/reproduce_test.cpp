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

#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "ecl/errors.hpp"
#include "ecl/reproduce.hpp"

namespace ecl {
namespace {

std::set<std::string> criteria(const ReproductionReport& r) {
  std::set<std::string> out;
  for (const auto& row : r.rows) out.insert(row.criterion);
  return out;
}

TEST(ReproduceTest, AllFamiliesPass) {
  const ReproductionReport r = reproduce();
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.failing_families().empty());
  EXPECT_EQ(r.families.size(), reproduction_families().size());
  std::set<std::string> want;
  for (int i = 1; i <= 11; ++i) want.insert("C" + std::to_string(i));
  EXPECT_EQ(criteria(r), want);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.pass || row.informational)
        << row.family << " " << row.label << " expected " << row.expected
        << " measured " << row.measured << " " << row.detail;
  }
}

TEST(ReproduceTest, FamilyFilter) {
  ReproduceOptions o;
  o.families = {"pigou"};
  const ReproductionReport r = reproduce(o);
  EXPECT_EQ(r.families, (std::vector<std::string>{"pigou"}));
  ASSERT_FALSE(r.rows.empty());
  for (const auto& row : r.rows) EXPECT_EQ(row.family, "pigou");
  o.families = {"no-such-family"};
  EXPECT_THROW(reproduce(o), DomainError);
  o.families = {};
  o.tamper = "no-such-family";
  EXPECT_THROW(reproduce(o), DomainError);
}

TEST(ReproduceTest, TamperTurnsExactlyThatFamilyRed) {
  for (const auto& family : reproduction_families()) {
    ReproduceOptions o;
    o.tamper = family.name;
    const ReproductionReport r = reproduce(o);
    EXPECT_FALSE(r.pass) << family.name;
    EXPECT_EQ(r.failing_families(), (std::vector<std::string>{family.name}));
  }
}

TEST(ReproduceTest, DeterministicForSeed) {
  ReproduceOptions o;
  o.seed = 7;
  std::ostringstream a, b;
  write_report_csv(a, reproduce(o));
  write_report_csv(b, reproduce(o));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().rfind("family,criterion,label,", 0), 0u);
}

TEST(ReproduceTest, OtherSeedStillPasses) {
  ReproduceOptions o;
  o.seed = 20261016;
  EXPECT_TRUE(reproduce(o).pass);
}

}  // namespace
}  // namespace ecl
