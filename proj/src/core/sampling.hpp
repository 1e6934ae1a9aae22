// Copyright 2026 The quadrant Authors
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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/catalog.hpp"

namespace quadrant {

/// Where forward samples are drawn from.
///   box=lo:hi   both coordinates uniform on [lo, hi], on a dyadic grid of
///               2^32 steps so every sample is an exact rational
///   logq=lo:hi  both coordinates log-uniform on [lo, hi], 0 < lo <= hi
struct RegionSpec {
  enum class Kind { box, log_quadrant };
  Kind kind = Kind::box;
  Rational lo;
  Rational hi;

  static RegionSpec parse(std::string_view text);
  std::string to_string() const;
};

struct ContainmentReport {
  std::string map_name;
  RegionSpec region;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  std::vector<Rational> min;  // per image coordinate
  std::vector<Rational> max;
  /// Up to five offending sample points, "p/q" strings.
  std::vector<std::vector<std::string>> examples;
};

/// The sample point with index i of a campaign; independent of n and of
/// how the campaign is split across threads.
std::vector<Rational> sample_point(const RegionSpec& region, std::uint64_t seed, std::uint64_t i);

/// Evaluates the named map exactly at n seeded samples and counts images
/// outside the open quadrant. `threads` = 0 uses the hardware concurrency;
/// the report does not depend on it.
ContainmentReport sample_forward(const Catalog& catalog, std::string_view map_name,
                                 const RegionSpec& region, std::uint64_t n, std::uint64_t seed,
                                 unsigned threads = 0);

nlohmann::ordered_json to_json(const ContainmentReport& r);

}  // namespace quadrant
