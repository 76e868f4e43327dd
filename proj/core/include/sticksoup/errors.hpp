// Copyright 2026 The sticksoup Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sticksoup {

/// Invalid caller input: bad parameter ranges, malformed descriptors, windows
/// that are too small for the requested event.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested measure (or sampler) would need infinitely many sticks.
class InfiniteMeasureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Tolerance-coincident geometry (triple points, endpoint-on-stick, tangencies).
/// These are null events under the soup law; callers resample.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (e.g. the exploration revisited a dart).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sticksoup
