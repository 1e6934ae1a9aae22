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

#include "quadrant/quadrant.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/plot.hpp"
#include "core/polyio.hpp"
#include "core/preimage.hpp"
#include "core/region.hpp"
#include "core/sampling.hpp"
#include "core/slp.hpp"
#include "core/verify.hpp"

struct qd_map {
  quadrant::PolyMap value;
};

struct qd_slp {
  quadrant::SlpProgram value;
};

namespace {

using namespace quadrant;

thread_local std::string last_error;

qd_status to_status(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return QD_ERR_INVALID;
    case ErrorKind::parse: return QD_ERR_PARSE;
    case ErrorKind::numeric: return QD_ERR_NUMERIC;
    case ErrorKind::io: return QD_ERR_IO;
    case ErrorKind::internal: return QD_ERR_INTERNAL;
  }
  return QD_ERR_INTERNAL;
}

template <class Fn>
qd_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return QD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return QD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QD_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw invalid_input(std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const std::string& s, char** out) {
  require(out, "output pointer");
  *out = dup_string(s);
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

qd_point to_c(Point2 p) { return {p.x, p.y}; }

std::string_view stage_name(qd_slp_stage s) {
  switch (s) {
    case QD_SLP_F: return "F";
    case QD_SLP_G: return "G";
    case QD_SLP_H: return "H";
    case QD_SLP_CHAINED: return "f";
  }
  throw invalid_input("unknown program stage");
}

const SlpProgram& quadrant_program(qd_slp_stage s) {
  static const QuadrantPrograms progs = build_quadrant_programs();
  switch (s) {
    case QD_SLP_F: return progs.F;
    case QD_SLP_G: return progs.G;
    case QD_SLP_H: return progs.H;
    case QD_SLP_CHAINED: return progs.f;
  }
  throw invalid_input("unknown program stage");
}

void run_verify(const char* suite, const Catalog& catalog, uint64_t seed, char** json,
                int* passed) {
  require(suite, "suite");
  require(passed, "passed");
  VerificationReport report = verify(suite, catalog, seed);
  if (json != nullptr) emit(dump(to_json(report)), json);
  *passed = report.ok() ? 1 : 0;
}

}  // namespace

extern "C" {

const char* qd_version(void) { return "1.0.0"; }

const char* qd_last_error(void) { return last_error.c_str(); }

const char* qd_status_name(qd_status status) {
  switch (status) {
    case QD_OK: return "ok";
    case QD_ERR_INTERNAL: return "internal error";
    case QD_ERR_INVALID: return "invalid input";
    case QD_ERR_VERIFICATION: return "verification failure";
    case QD_ERR_PARSE: return "parse error";
    case QD_ERR_NUMERIC: return "numeric failure";
    case QD_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

void qd_string_free(char* s) { std::free(s); }

qd_status qd_parse_number(const char* text, double* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    try {
      *out = to_double(parse_rational(text));
    } catch (const Error& e) {
      throw invalid_input(e.what());
    }
  });
}

// ---- maps -------------------------------------------------------------------

qd_status qd_map_catalog(const char* name, qd_map** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new qd_map{Catalog::standard().get(name)};
  });
}

qd_status qd_map_parse(const char* text, qd_format format, qd_map** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    switch (format) {
      case QD_FORMAT_CANONICAL: *out = new qd_map{parse_map(text)}; break;
      case QD_FORMAT_TABLE: *out = new qd_map{parse_table(text)}; break;
      default: throw invalid_input("only canonical and table text can be parsed");
    }
  });
}

void qd_map_free(qd_map* map) { delete map; }

size_t qd_map_input_arity(const qd_map* map) { return map ? map->value.input_arity() : 0; }

size_t qd_map_output_arity(const qd_map* map) { return map ? map->value.output_arity() : 0; }

int qd_map_equal(const qd_map* a, const qd_map* b) {
  return a != nullptr && b != nullptr && a->value == b->value ? 1 : 0;
}

qd_status qd_map_compose(const qd_map* outer, const qd_map* inner, qd_map** out) {
  return guarded([&] {
    require(outer, "outer");
    require(inner, "inner");
    require(out, "out");
    *out = new qd_map{compose(outer->value, inner->value)};
  });
}

qd_status qd_map_metrics(const qd_map* map, qd_metrics* out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    Metrics m = metrics(map->value);
    *out = {map->value.output_arity(), m.total_degree, m.total_monomials};
  });
}

qd_status qd_map_component_metrics(const qd_map* map, size_t index, unsigned* degree,
                                   size_t* monomials) {
  return guarded([&] {
    require(map, "map");
    if (index >= map->value.output_arity()) throw invalid_input("component index out of range");
    const Poly& p = map->value.component(index);
    if (degree) *degree = p.total_degree();
    if (monomials) *monomials = p.monomial_count();
  });
}

qd_status qd_map_metrics_json(const qd_map* map, const char* name, char** out) {
  return guarded([&] {
    require(map, "map");
    Metrics m = metrics(map->value);
    nlohmann::ordered_json j;
    if (name) j["map"] = name;
    j["component_degrees"] = m.degrees;
    j["component_monomials"] = m.monomials;
    j["total_degree"] = m.total_degree;
    j["monomials"] = m.total_monomials;
    emit(dump(j), out);
  });
}

qd_status qd_map_render(const qd_map* map, qd_format format, const char* name, char** out) {
  return guarded([&] {
    require(map, "map");
    const std::string label = name ? name : "p";
    switch (format) {
      case QD_FORMAT_CANONICAL: emit(serialize(map->value), out); break;
      case QD_FORMAT_TABLE: emit(render_table(map->value, label), out); break;
      case QD_FORMAT_JSON: {
        nlohmann::ordered_json j;
        if (name) j["map"] = name;
        j.update(to_json(map->value));
        emit(dump(j), out);
        break;
      }
      case QD_FORMAT_TEX: emit(render_tex(map->value, label), out); break;
      default: throw invalid_input("unknown format");
    }
  });
}

qd_status qd_map_eval(const qd_map* map, const double* point, size_t n, double* out, size_t m) {
  return guarded([&] {
    require(map, "map");
    require(point, "point");
    require(out, "out");
    if (m < map->value.output_arity()) throw invalid_input("output buffer too small");
    std::vector<Rational> p;
    for (size_t i = 0; i < n; ++i) p.push_back(from_double(point[i]));
    auto v = map->value.eval(p);
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  });
}

qd_status qd_map_eval_exact(const qd_map* map, const char* const* point, size_t n, char** out) {
  return guarded([&] {
    require(map, "map");
    require(point, "point");
    std::vector<Rational> p;
    for (size_t i = 0; i < n; ++i) {
      require(point[i], "coordinate");
      p.push_back(parse_rational(point[i]));
    }
    std::string s;
    for (const Rational& v : map->value.eval(p)) {
      if (!s.empty()) s += ' ';
      s += to_canonical_string(v);
    }
    emit(s, out);
  });
}

// ---- regions and preimages ----------------------------------------------------

qd_status qd_in_region(const char* region, const char* x, const char* y, int* out) {
  return guarded([&] {
    require(region, "region");
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = contains(parse_region(region), parse_rational(x), parse_rational(y)) ? 1 : 0;
  });
}

qd_status qd_invert_F(double a, double b, qd_point* out) {
  return guarded([&] {
    require(out, "out");
    *out = to_c(invert_F(a, b));
  });
}

qd_status qd_invert_G(double x, double w, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = invert_G(x, w);
  });
}

qd_status qd_invert_H(double u, double v, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = invert_H(u, v);
  });
}

qd_status qd_preimage(double u, double v, double residual_bound, qd_witness* out) {
  return guarded([&] {
    require(out, "out");
    PreimageOptions options;
    if (residual_bound > 0) options.residual_bound = residual_bound;
    PreimageWitness w = preimage(Point2{u, v}, options);
    *out = {to_c(w.target),   to_c(w.stage_H_point),    to_c(w.stage_G_point),
            to_c(w.source),   {w.image[0], w.image[1]}, w.residual,
            w.float_source_residual};
  });
}

qd_status qd_preimage_json(const char* u, const char* v, double residual_bound, char** out) {
  return guarded([&] {
    require(u, "u");
    require(v, "v");
    PreimageOptions options;
    if (residual_bound > 0) options.residual_bound = residual_bound;
    Rational eu, ev;
    try {
      eu = parse_rational(u);
      ev = parse_rational(v);
    } catch (const Error& e) {
      throw invalid_input(e.what());
    }
    emit(dump(to_json(preimage(eu, ev, options))), out);
  });
}

qd_status qd_sample(const char* map, const char* region_spec, uint64_t n, uint64_t seed,
                    unsigned threads, uint64_t* violations, char** json) {
  return guarded([&] {
    require(map, "map");
    require(region_spec, "region_spec");
    ContainmentReport r = sample_forward(Catalog::standard(), map, RegionSpec::parse(region_spec),
                                         n, seed, threads);
    if (violations) *violations = r.violations;
    if (json) emit(dump(to_json(r)), json);
  });
}

// ---- straight-line programs ------------------------------------------------------

qd_status qd_slp_quadrant(qd_slp_stage stage, qd_slp** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qd_slp{quadrant_program(stage)};
  });
}

qd_status qd_slp_parse(const char* text, qd_slp** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qd_slp{parse_slp(text)};
  });
}

void qd_slp_free(qd_slp* prog) { delete prog; }

qd_status qd_slp_render(const qd_slp* prog, char** out) {
  return guarded([&] {
    require(prog, "prog");
    emit(serialize(prog->value), out);
  });
}

size_t qd_slp_nonscalar_count(const qd_slp* prog) {
  return prog ? nonscalar_count(prog->value) : 0;
}

qd_status qd_slp_expand(const qd_slp* prog, qd_map** out) {
  return guarded([&] {
    require(prog, "prog");
    require(out, "out");
    *out = new qd_map{slp_expand(prog->value)};
  });
}

qd_status qd_slp_eval(const qd_slp* prog, const double* point, size_t n, double* out, size_t m) {
  return guarded([&] {
    require(prog, "prog");
    require(point, "point");
    require(out, "out");
    if (m < prog->value.outputs().size()) throw invalid_input("output buffer too small");
    std::vector<Rational> p;
    for (size_t i = 0; i < n; ++i) p.push_back(from_double(point[i]));
    auto v = slp_eval(prog->value, p);
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  });
}

qd_status qd_slp_report_json(char** out) {
  return guarded([&] {
    const Catalog& cat = Catalog::standard();
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    std::size_t sum = 0;
    for (qd_slp_stage s : {QD_SLP_F, QD_SLP_G, QD_SLP_H, QD_SLP_CHAINED}) {
      const SlpProgram& prog = quadrant_program(s);
      const std::string name(stage_name(s));
      const std::size_t count = nonscalar_count(prog);
      if (s != QD_SLP_CHAINED) sum += count;
      stages.push_back({{"stage", name},
                        {"nonscalar_count", count},
                        {"instructions", prog.instructions().size()},
                        {"expands_to_catalog_map", serialize(slp_expand(prog)) == serialize(cat.get(name))},
                        {"program", serialize(prog)}});
    }
    nlohmann::ordered_json j;
    j["stages"] = std::move(stages);
    j["stage_count_sum"] = sum;
    j["remark"] =
        "With complex coefficients the F stage can be evaluated with one product fewer; "
        "these programs use real coefficients only.";
    emit(dump(j), out);
  });
}

// ---- verification and plots ----------------------------------------------------

qd_status qd_verify(const char* suite, uint64_t seed, char** json, int* passed) {
  return guarded([&] { run_verify(suite, Catalog::standard(), seed, json, passed); });
}

qd_status qd_verify_mutated(const char* suite, uint64_t seed, uint64_t mutation_seed, char** json,
                            int* passed) {
  return guarded([&] {
    run_verify(suite, Catalog::standard().corrupted(mutation_seed), seed, json, passed);
  });
}

qd_status qd_plot_svg(const char* regions, char** out) {
  return guarded([&] {
    require(regions, "regions");
    const std::vector<Region> list = parse_region_list(regions);
    emit(render_svg(list), out);
  });
}

}  // extern "C"
