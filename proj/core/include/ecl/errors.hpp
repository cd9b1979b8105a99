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

#ifndef ECL_ERRORS_HPP_
#define ECL_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ecl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game, profile, flow or graph.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Parameter outside the mathematical domain of a formula (negative epsilon,
// non-natural lemma arguments, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// A generator could not realize its construction, or a generated instance
// failed its own certification.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ecl

#endif  // ECL_ERRORS_HPP_
