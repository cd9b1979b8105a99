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

#ifndef ECL_REPRODUCE_HPP_
#define ECL_REPRODUCE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecl {

// One checked quantity: `measured` compared against `expected` through
// `relation` at `tolerance`.
struct ReproductionRow {
  std::string family;
  std::string criterion;  // "C1" ... "C11"
  std::string label;
  double epsilon = 0.0;
  double expected = 0.0;
  double measured = 0.0;
  std::string relation;  // "==", "<=", ">=", "<"
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;  // reported, never counted against `pass`
  std::string detail;
};

struct ReproductionReport {
  std::uint64_t seed = 42;
  std::vector<std::string> families;
  std::vector<ReproductionRow> rows;
  double seconds = 0.0;
  bool pass = false;

  std::vector<std::string> failing_families() const;
};

// Family name and the criterion it reproduces, in run order.
struct ReproductionFamily {
  std::string name;
  std::string criterion;
  std::string summary;
};

const std::vector<ReproductionFamily>& reproduction_families();

struct ReproduceOptions {
  std::uint64_t seed = 42;
  std::vector<std::string> families;  // empty: all
  unsigned jobs = 1;
  // Negative control: perturbs the expected value of every equality row of
  // this family by a relative 1e-6, which must turn those rows red.
  std::string tamper;
};

// Runs the selected families; throws DomainError on unknown family names.
ReproductionReport reproduce(const ReproduceOptions& options = {});

void write_report_csv(std::ostream& out, const ReproductionReport& report);

// Default seed: ECL_SEED when set and parseable, 42 otherwise.
std::uint64_t default_seed();

}  // namespace ecl

#endif  // ECL_REPRODUCE_HPP_
