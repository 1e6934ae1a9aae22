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

// Command-line front end. Everything goes through the public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadrant/quadrant.h"

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalid = 2, kVerification = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(qd_status s) {
  switch (s) {
    case QD_OK: return kOk;
    case QD_ERR_INVALID:
    case QD_ERR_PARSE:
    case QD_ERR_IO: return kInvalid;
    case QD_ERR_VERIFICATION: return kVerification;
    default: return kInternal;
  }
}

void check(qd_status s) {
  if (s != QD_OK) throw Failure{exit_code_for(s), qd_last_error()};
}

[[noreturn]] void invalid(const std::string& message) { throw Failure{kInvalid, message}; }

class OwnedString {
 public:
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { qd_string_free(ptr_); }
  char** out() { return &ptr_; }
  std::string str() const { return ptr_ ? ptr_ : ""; }

 private:
  char* ptr_ = nullptr;
};

struct MapHandle {
  qd_map* ptr = nullptr;
  MapHandle() = default;
  MapHandle(const MapHandle&) = delete;
  MapHandle& operator=(const MapHandle&) = delete;
  ~MapHandle() { qd_map_free(ptr); }
};

struct SlpHandle {
  qd_slp* ptr = nullptr;
  SlpHandle() = default;
  SlpHandle(const SlpHandle&) = delete;
  SlpHandle& operator=(const SlpHandle&) = delete;
  ~SlpHandle() { qd_slp_free(ptr); }
};

struct Common {
  std::uint64_t seed = 2014;
  std::optional<std::uint64_t> n;
  std::optional<std::string> tol;
  std::optional<std::string> format;
  std::string out;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) invalid("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) invalid("failed writing '" + path + "'");
}

std::uint64_t parse_count(const std::string& key, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    invalid("expected a non-negative integer for " + key + ", got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    invalid("value out of range for " + key + ": '" + text + "'");
  }
}

double parse_number(const std::string& text) {
  double value = 0;
  check(qd_parse_number(text.c_str(), &value));
  return value;
}

qd_format parse_format(const std::string& name) {
  static const std::map<std::string, qd_format> formats = {
      {"canonical", QD_FORMAT_CANONICAL}, {"table-style", QD_FORMAT_TABLE},
      {"table", QD_FORMAT_TABLE},         {"json", QD_FORMAT_JSON},
      {"tex", QD_FORMAT_TEX}};
  auto it = formats.find(name);
  if (it == formats.end()) invalid("unknown format '" + name + "'");
  return it->second;
}

// Splits "key=value" tokens out of a positional list. Plain tokens are kept.
std::vector<std::string> take_pairs(const std::vector<std::string>& args, Common& common,
                                    std::string* region) {
  std::vector<std::string> rest;
  for (const std::string& arg : args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
      rest.push_back(arg);
      continue;
    }
    const std::string key = arg.substr(0, eq);
    const std::string value = arg.substr(eq + 1);
    if (key == "n") {
      common.n = parse_count("n", value);
    } else if (key == "seed") {
      common.seed = parse_count("seed", value);
    } else if (key == "tol") {
      common.tol = value;
    } else if ((key == "box" || key == "logq") && region != nullptr) {
      *region = arg;
    } else {
      invalid("unrecognised argument '" + arg + "'");
    }
  }
  return rest;
}

int cmd_metrics(const std::vector<std::string>& args, Common& common) {
  const auto rest = take_pairs(args, common, nullptr);
  if (rest.size() != 1) invalid("metrics expects exactly one map name");
  MapHandle map;
  check(qd_map_catalog(rest[0].c_str(), &map.ptr));
  OwnedString json;
  check(qd_map_metrics_json(map.ptr, rest[0].c_str(), json.out()));
  write_output(json.str(), common.out);
  return kOk;
}

int cmd_expand(const std::vector<std::string>& args, Common& common) {
  const auto rest = take_pairs(args, common, nullptr);
  if (rest.empty() || rest.size() > 2) invalid("expand expects a map name and optional format");
  std::string format = common.format.value_or("canonical");
  if (rest.size() == 2) format = rest[1];
  MapHandle map;
  check(qd_map_catalog(rest[0].c_str(), &map.ptr));
  OwnedString text;
  check(qd_map_render(map.ptr, parse_format(format), rest[0].c_str(), text.out()));
  write_output(text.str(), common.out);
  return kOk;
}

int cmd_verify(const std::vector<std::string>& args, Common& common,
               std::optional<std::uint64_t> mutate) {
  const auto rest = take_pairs(args, common, nullptr);
  if (rest.size() > 1) invalid("verify expects at most one suite name");
  const std::string suite = rest.empty() ? "all" : rest[0];
  OwnedString json;
  int passed = 0;
  if (mutate) {
    check(qd_verify_mutated(suite.c_str(), common.seed, *mutate, json.out(), &passed));
  } else {
    check(qd_verify(suite.c_str(), common.seed, json.out(), &passed));
  }
  write_output(json.str(), common.out);
  return passed ? kOk : kVerification;
}

int cmd_preimage(const std::vector<std::string>& args, Common& common) {
  const auto rest = take_pairs(args, common, nullptr);
  if (rest.size() < 2 || rest.size() > 3) invalid("preimage expects u v [tolerance]");
  if (rest.size() == 3) common.tol = rest[2];
  const double bound = common.tol ? parse_number(*common.tol) : 0.0;
  if (common.tol && !(bound > 0)) invalid("tolerance must be positive");
  OwnedString json;
  check(qd_preimage_json(rest[0].c_str(), rest[1].c_str(), bound, json.out()));
  write_output(json.str(), common.out);
  return kOk;
}

std::string default_region(const std::string& map) {
  if (map == "F") return "box=-100:100";
  if (map == "f") return "box=-50:50";
  if (map == "g") return "box=-20:20";
  return "box=-10:10";
}

int cmd_sample(const std::vector<std::string>& args, Common& common, unsigned threads) {
  std::string region;
  const auto rest = take_pairs(args, common, &region);
  if (rest.size() != 1) invalid("sample expects exactly one map name");
  if (region.empty()) region = default_region(rest[0]);
  const std::uint64_t n = common.n.value_or(10000);
  std::uint64_t violations = 0;
  OwnedString json;
  check(qd_sample(rest[0].c_str(), region.c_str(), n, common.seed, threads, &violations,
                  json.out()));
  write_output(json.str(), common.out);
  return violations == 0 ? kOk : kVerification;
}

qd_slp_stage parse_stage(const std::string& name) {
  if (name == "F") return QD_SLP_F;
  if (name == "G") return QD_SLP_G;
  if (name == "H") return QD_SLP_H;
  if (name == "f" || name == "chained") return QD_SLP_CHAINED;
  invalid("unknown program '" + name + "' (expected F, G, H or f)");
}

int cmd_slp(const std::vector<std::string>& args, Common& common) {
  const auto rest = take_pairs(args, common, nullptr);
  if (rest.size() > 1) invalid("slp expects at most one program name");
  const std::string format = common.format.value_or(rest.empty() ? "json" : "program");
  if (rest.empty()) {
    if (format != "json") invalid("the program report is only available as json");
    OwnedString json;
    check(qd_slp_report_json(json.out()));
    write_output(json.str(), common.out);
    return kOk;
  }
  SlpHandle prog;
  check(qd_slp_quadrant(parse_stage(rest[0]), &prog.ptr));
  OwnedString text;
  if (format == "program") {
    check(qd_slp_render(prog.ptr, text.out()));
  } else {
    MapHandle expanded;
    check(qd_slp_expand(prog.ptr, &expanded.ptr));
    check(qd_map_render(expanded.ptr, parse_format(format), rest[0].c_str(), text.out()));
  }
  write_output(text.str(), common.out);
  return kOk;
}

int cmd_plot(const std::vector<std::string>& args, Common& common) {
  const auto rest = take_pairs(args, common, nullptr);
  if (rest.empty() || rest.size() > 2) invalid("plot expects region list and optional path");
  std::string path = common.out;
  if (rest.size() == 2) path = rest[1];
  OwnedString svg;
  check(qd_plot_svg(rest[0].c_str(), svg.out()));
  write_output(svg.str(), path);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial maps onto the open quadrant: metrics, expansions, preimages"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qd_version()));

  Common common;
  std::vector<std::string> args;
  std::optional<std::uint64_t> mutate;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Random seed");
    sub->add_option("--n", common.n, "Number of samples");
    sub->add_option("--tol", common.tol, "Residual tolerance (decimal or p/q)");
    sub->add_option("--format", common.format,
                    "Output format: canonical, table-style, json, tex");
    sub->add_option("--out", common.out, "Write output to this file instead of stdout");
    sub->add_option("args", args, "Positional arguments");
    sub->positionals_at_end(false);
  };

  auto* metrics = app.add_subcommand("metrics", "Degrees and monomial counts of a catalog map");
  auto* expand = app.add_subcommand("expand", "Render the expansion of a catalog map");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* preimage = app.add_subcommand("preimage", "Construct a preimage of (u, v) under f");
  auto* sample = app.add_subcommand("sample", "Forward containment sampling campaign");
  auto* slp = app.add_subcommand("slp", "Straight-line programs for the stage maps");
  auto* plot = app.add_subcommand("plot", "SVG drawing of the regions Q, A, B");
  for (auto* sub : {metrics, expand, verify, preimage, sample, slp, plot}) add_common(sub);
  verify->add_option("--mutate", mutate, "Corrupt one catalog coefficient using this seed");
  sample->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (*metrics) return cmd_metrics(args, common);
    if (*expand) return cmd_expand(args, common);
    if (*verify) return cmd_verify(args, common, mutate);
    if (*preimage) return cmd_preimage(args, common);
    if (*sample) return cmd_sample(args, common, threads);
    if (*slp) return cmd_slp(args, common);
    if (*plot) return cmd_plot(args, common);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
