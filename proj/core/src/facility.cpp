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

#include "ecl/facility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecl/errors.hpp"

namespace ecl {

void validate_facilities(std::span<const Facility> facilities,
                         LatencyDomain domain) {
  std::map<int, int> seen;
  for (const Facility& f : facilities) {
    if (!std::isfinite(f.a) || !std::isfinite(f.b)) {
      throw ValidationError("facility " + std::to_string(f.id) +
                            ": non-finite latency coefficient");
    }
    if (f.a < 0.0) {
      throw ValidationError("facility " + std::to_string(f.id) +
                            ": negative load coefficient a");
    }
    if (domain == LatencyDomain::kNonatomic && f.b < 0.0) {
      throw ValidationError("facility " + std::to_string(f.id) +
                            ": negative constant term b");
    }
    if (domain == LatencyDomain::kAtomic && f.a + f.b < 0.0) {
      throw ValidationError("facility " + std::to_string(f.id) +
                            ": latency at load 1 is negative");
    }
    if (++seen[f.id] > 1) {
      throw ValidationError("duplicate facility id " + std::to_string(f.id));
    }
  }
}

std::map<int, std::size_t> canonicalize_facilities(
    std::vector<Facility>& facilities) {
  std::sort(facilities.begin(), facilities.end(),
            [](const Facility& x, const Facility& y) { return x.id < y.id; });
  std::map<int, std::size_t> index;
  for (std::size_t k = 0; k < facilities.size(); ++k) {
    index.emplace(facilities[k].id, k);
  }
  return index;
}

std::vector<std::size_t> resolve_strategy(
    std::span<const int> ids, const std::map<int, std::size_t>& index) {
  if (ids.empty()) throw ValidationError("empty strategy");
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (int id : ids) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw ValidationError("strategy references unknown facility " +
                            std::to_string(id));
    }
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ecl
