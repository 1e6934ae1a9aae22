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

#include "core/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace quadrant {
namespace {

constexpr int kGridBits = 32;

struct Partial {
  std::uint64_t violations = 0;
  std::vector<Rational> min;
  std::vector<Rational> max;
  std::vector<std::pair<std::uint64_t, std::vector<std::string>>> examples;
};

void merge_into(Partial& acc, Partial&& part) {
  acc.violations += part.violations;
  if (acc.min.empty()) {
    acc.min = std::move(part.min);
    acc.max = std::move(part.max);
  } else if (!part.min.empty()) {
    for (std::size_t k = 0; k < acc.min.size(); ++k) {
      if (part.min[k] < acc.min[k]) acc.min[k] = part.min[k];
      if (part.max[k] > acc.max[k]) acc.max[k] = part.max[k];
    }
  }
  for (auto& e : part.examples) acc.examples.push_back(std::move(e));
}

}  // namespace

RegionSpec RegionSpec::parse(std::string_view text) {
  RegionSpec spec;
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw invalid_input("region spec must look like box=lo:hi or logq=lo:hi");
  }
  std::string_view kind = text.substr(0, eq);
  std::string_view range = text.substr(eq + 1);
  if (kind == "box") {
    spec.kind = Kind::box;
  } else if (kind == "logq") {
    spec.kind = Kind::log_quadrant;
  } else {
    throw invalid_input("unknown region kind '" + std::string(kind) + "'");
  }
  auto colon = range.find(':');
  if (colon == std::string_view::npos) throw invalid_input("region range must be lo:hi");
  try {
    spec.lo = parse_rational(range.substr(0, colon));
    spec.hi = parse_rational(range.substr(colon + 1));
  } catch (const Error& e) {
    throw invalid_input(std::string("region spec: ") + e.what());
  }
  if (spec.lo > spec.hi) throw invalid_input("region spec needs lo <= hi");
  if (spec.kind == Kind::log_quadrant && sgn(spec.lo) <= 0) {
    throw invalid_input("logq region needs lo > 0");
  }
  return spec;
}

std::string RegionSpec::to_string() const {
  return std::string(kind == Kind::box ? "box=" : "logq=") + to_short_string(lo) + ":" +
         to_short_string(hi);
}

std::vector<Rational> sample_point(const RegionSpec& region, std::uint64_t seed, std::uint64_t i) {
  SplitMix64 rng = SplitMix64::for_index(seed, i);
  std::vector<Rational> p;
  p.reserve(2);
  for (int k = 0; k < 2; ++k) {
    if (region.kind == RegionSpec::Kind::box) {
      // lo + (hi - lo) * j / 2^32 with j uniform in [0, 2^32].
      const std::uint64_t j = rng.next() % ((std::uint64_t{1} << kGridBits) + 1);
      Rational t(Integer(static_cast<unsigned long>(j)), Integer(1) << kGridBits);
      t.canonicalize();
      p.push_back(region.lo + (region.hi - region.lo) * t);
    } else {
      const double lo = std::log(to_double(region.lo));
      const double hi = std::log(to_double(region.hi));
      double v = std::exp(lo + (hi - lo) * rng.uniform());
      v = std::clamp(v, to_double(region.lo), to_double(region.hi));
      p.push_back(from_double(v));
    }
  }
  return p;
}

ContainmentReport sample_forward(const Catalog& catalog, std::string_view map_name,
                                 const RegionSpec& region, std::uint64_t n, std::uint64_t seed,
                                 unsigned threads) {
  if (n == 0) throw invalid_input("sample count must be positive");
  const PolyMap& map = catalog.get(map_name);
  if (map.input_arity() != 2) throw invalid_input("sampling supports maps of the plane only");

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));

  std::vector<Partial> parts(threads);
  auto work = [&](unsigned t) {
    Partial& part = parts[t];
    const std::uint64_t begin = n * t / threads;
    const std::uint64_t end = n * (t + 1) / threads;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::vector<Rational> p = sample_point(region, seed, i);
      std::vector<Rational> image = map.eval(p);
      bool bad = false;
      for (const Rational& v : image) bad = bad || sgn(v) <= 0;
      if (bad) {
        ++part.violations;
        if (part.examples.size() < 5) {
          part.examples.push_back({i, {to_short_string(p[0]), to_short_string(p[1])}});
        }
      }
      if (part.min.empty()) {
        part.min = image;
        part.max = std::move(image);
      } else {
        for (std::size_t k = 0; k < image.size(); ++k) {
          if (image[k] < part.min[k]) part.min[k] = image[k];
          if (image[k] > part.max[k]) part.max[k] = std::move(image[k]);
        }
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  Partial total;
  for (auto& part : parts) merge_into(total, std::move(part));
  std::sort(total.examples.begin(), total.examples.end());

  ContainmentReport report;
  report.map_name = std::string(map_name);
  report.region = region;
  report.n = n;
  report.seed = seed;
  report.violations = total.violations;
  report.min = std::move(total.min);
  report.max = std::move(total.max);
  for (std::size_t k = 0; k < total.examples.size() && k < 5; ++k) {
    report.examples.push_back(std::move(total.examples[k].second));
  }
  return report;
}

nlohmann::ordered_json to_json(const ContainmentReport& r) {
  using nlohmann::ordered_json;
  auto doubles = [](const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const Rational& x : v) a.push_back(to_double(x));
    return a;
  };
  return {{"map", r.map_name},
          {"region", r.region.to_string()},
          {"n", r.n},
          {"seed", r.seed},
          {"violations", r.violations},
          {"extrema", {{"min", doubles(r.min)}, {"max", doubles(r.max)}}},
          {"violating_samples", r.examples}};
}

}  // namespace quadrant
