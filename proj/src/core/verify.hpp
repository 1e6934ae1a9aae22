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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/catalog.hpp"

namespace quadrant {

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Outcome of one verification suite; passes iff every check passes.
struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

/// Suites: "identities" (exact stage identities on seeded random
/// parameters), "slp" (factored programs: counts, expansions, evaluation),
/// "transcription" (old map g against its published form), "metrics"
/// (degrees and monomial counts, composition consistency) and "all".
const std::vector<std::string>& suite_names();

VerificationReport verify(std::string_view suite, const Catalog& catalog = Catalog::standard(),
                          std::uint64_t seed = 2014);

nlohmann::ordered_json to_json(const VerificationReport& r);

}  // namespace quadrant
