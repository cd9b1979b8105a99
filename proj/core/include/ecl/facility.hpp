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

#ifndef ECL_FACILITY_HPP_
#define ECL_FACILITY_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ecl {

// Tolerance used for every floating-point equality decision in the library.
inline constexpr double kTolerance = 1e-9;

// A resource with linear latency l(x) = a*x + b.
struct Facility {
  int id = 0;
  double a = 0.0;
  double b = 0.0;

  double latency(double load) const { return a * load + b; }
};

// Atomic games only ever evaluate latencies at integer loads >= 1, so a
// negative constant term is admissible there as long as l(1) = a + b >= 0.
// Non-atomic games evaluate latencies at arbitrarily small loads and need
// b >= 0.
enum class LatencyDomain { kAtomic, kNonatomic };

// Checks coefficient signs and id uniqueness; throws ValidationError.
void validate_facilities(std::span<const Facility> facilities,
                         LatencyDomain domain);

// Sorts facilities by id and returns the id -> position map.
std::map<int, std::size_t> canonicalize_facilities(
    std::vector<Facility>& facilities);

// Converts a list of facility ids into sorted, deduplicated positions.
std::vector<std::size_t> resolve_strategy(
    std::span<const int> ids, const std::map<int, std::size_t>& index);

}  // namespace ecl

#endif  // ECL_FACILITY_HPP_
