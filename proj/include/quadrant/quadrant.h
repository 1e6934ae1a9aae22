/*
 * Copyright 2026 The quadrant Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * libquadrant: exact polynomial maps of the plane onto the open quadrant
 * {x > 0, y > 0}, their stage-wise inversion, and straight-line programs
 * evaluating them.
 *
 * Conventions:
 *  - Every fallible call returns a qd_status; on failure the message is
 *    available from qd_last_error() on the same thread until the next call.
 *  - Strings returned through char** are heap-allocated and must be released
 *    with qd_string_free(). Handles are released with their *_free call.
 *  - Exact values cross the boundary as text ("p/q", integers, decimals).
 *  - Handles are immutable; sharing them across threads is safe.
 */
#ifndef QUADRANT_QUADRANT_H
#define QUADRANT_QUADRANT_H

#include <stddef.h>
#include <stdint.h>

#if defined(QD_BUILDING_LIBRARY)
#define QD_API __attribute__((visibility("default")))
#else
#define QD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
  QD_OK = 0,
  QD_ERR_INTERNAL = 1,
  QD_ERR_INVALID = 2,      /* bad argument or violated precondition */
  QD_ERR_VERIFICATION = 3, /* reserved for callers reporting failed checks */
  QD_ERR_PARSE = 4,
  QD_ERR_NUMERIC = 5,      /* a solver could not meet its contract */
  QD_ERR_IO = 6
} qd_status;

typedef enum qd_format {
  QD_FORMAT_CANONICAL = 0, /* "<p>/<q> <e1> ... <en>" lines, "--" between components */
  QD_FORMAT_TABLE = 1,     /* "f1(x,y) := (...)y^k + ..." grouped by powers of y */
  QD_FORMAT_JSON = 2,
  QD_FORMAT_TEX = 3
} qd_format;

typedef enum qd_slp_stage {
  QD_SLP_F = 0,
  QD_SLP_G = 1,
  QD_SLP_H = 2,
  QD_SLP_CHAINED = 3 /* H o G o F */
} qd_slp_stage;

typedef struct qd_map qd_map;
typedef struct qd_slp qd_slp;

typedef struct qd_point {
  double x;
  double y;
} qd_point;

typedef struct qd_metrics {
  size_t components;
  unsigned total_degree;  /* sum of component degrees */
  size_t total_monomials; /* sum of component term counts */
} qd_metrics;

typedef struct qd_witness {
  qd_point target;
  qd_point stage_h; /* in B; H maps it to target */
  qd_point stage_g; /* in A; G maps it to stage_h */
  qd_point source;  /* F maps it to stage_g */
  double image[2];  /* f(source) */
  /* max_i |f_i(source) - target_i| / max(1, |target_i|), measured at the
     exact source the solver computed (stage points are nearest doubles). */
  double residual;
  /* The same metric measured at the rounded double source. */
  double float_source_residual;
} qd_witness;

/* ---- general ------------------------------------------------------------ */

QD_API const char* qd_version(void);
QD_API const char* qd_last_error(void);
QD_API const char* qd_status_name(qd_status status);
QD_API void qd_string_free(char* s);

/* Parses "p/q", integers and decimals exactly, then rounds to double. */
QD_API qd_status qd_parse_number(const char* text, double* out);

/* ---- polynomial maps ------------------------------------------------------ */

/* name: "F", "G", "H", "GF", "f" or "g". */
QD_API qd_status qd_map_catalog(const char* name, qd_map** out);
/* format: QD_FORMAT_CANONICAL or QD_FORMAT_TABLE (arity 2). */
QD_API qd_status qd_map_parse(const char* text, qd_format format, qd_map** out);
QD_API void qd_map_free(qd_map* map);

QD_API size_t qd_map_input_arity(const qd_map* map);
QD_API size_t qd_map_output_arity(const qd_map* map);
QD_API int qd_map_equal(const qd_map* a, const qd_map* b);

/* outer o inner */
QD_API qd_status qd_map_compose(const qd_map* outer, const qd_map* inner, qd_map** out);

QD_API qd_status qd_map_metrics(const qd_map* map, qd_metrics* out);
QD_API qd_status qd_map_component_metrics(const qd_map* map, size_t index, unsigned* degree,
                                          size_t* monomials);
QD_API qd_status qd_map_metrics_json(const qd_map* map, const char* name, char** out);

/* name labels the components in QD_FORMAT_TABLE / QD_FORMAT_TEX output. */
QD_API qd_status qd_map_render(const qd_map* map, qd_format format, const char* name,
                               char** out);

/* Exact evaluation at point[0..n), rounded into out[0..m). */
QD_API qd_status qd_map_eval(const qd_map* map, const double* point, size_t n, double* out,
                             size_t m);
/* Exact evaluation at rational text coordinates; *out holds the canonical
 * component values separated by single spaces. */
QD_API qd_status qd_map_eval_exact(const qd_map* map, const char* const* point, size_t n,
                                   char** out);

/* ---- regions and preimages ------------------------------------------------ */

/* region: "Q", "A" or "B"; coordinates as exact text. */
QD_API qd_status qd_in_region(const char* region, const char* x, const char* y, int* out);

QD_API qd_status qd_invert_F(double a, double b, qd_point* out);
QD_API qd_status qd_invert_G(double x, double w, double* out);
QD_API qd_status qd_invert_H(double u, double v, double* out);

/* residual_bound <= 0 selects the default 1e-6. */
QD_API qd_status qd_preimage(double u, double v, double residual_bound, qd_witness* out);
/* Coordinates as exact text ("p/q" or decimals); the JSON report also carries
   the exact source as canonical fractions. */
QD_API qd_status qd_preimage_json(const char* u, const char* v, double residual_bound,
                                  char** out);

/* region_spec: "box=lo:hi" or "logq=lo:hi". threads = 0: all cores. */
QD_API qd_status qd_sample(const char* map, const char* region_spec, uint64_t n, uint64_t seed,
                           unsigned threads, uint64_t* violations, char** json);

/* ---- straight-line programs ------------------------------------------------ */

QD_API qd_status qd_slp_quadrant(qd_slp_stage stage, qd_slp** out);
QD_API qd_status qd_slp_parse(const char* text, qd_slp** out);
QD_API void qd_slp_free(qd_slp* prog);
QD_API qd_status qd_slp_render(const qd_slp* prog, char** out);
QD_API size_t qd_slp_nonscalar_count(const qd_slp* prog);
QD_API qd_status qd_slp_expand(const qd_slp* prog, qd_map** out);
QD_API qd_status qd_slp_eval(const qd_slp* prog, const double* point, size_t n, double* out,
                             size_t m);
/* Counts, program texts and expansion checks for the quadrant stages. */
QD_API qd_status qd_slp_report_json(char** out);

/* ---- verification and plots ------------------------------------------------ */

/* suite: "identities", "slp", "transcription", "metrics" or "all".
 * *passed is set to 1 iff every check passed. */
QD_API qd_status qd_verify(const char* suite, uint64_t seed, char** json, int* passed);
/* Same, against a catalog with one coefficient perturbed (chosen by
 * mutation_seed). A sound build reports failure. */
QD_API qd_status qd_verify_mutated(const char* suite, uint64_t seed, uint64_t mutation_seed,
                                   char** json, int* passed);

/* regions: comma-separated subset of "Q", "A", "B"; one panel each. */
QD_API qd_status qd_plot_svg(const char* regions, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QUADRANT_QUADRANT_H */
