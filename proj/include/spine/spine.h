/* C interface to the spine library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Strings returned through `char**` are heap-allocated and released with
 * spine_string_free. Every function returns a spine_status; on a non-OK
 * status spine_last_error() and spine_last_error_code() describe the failure
 * for the calling thread until its next API call. */
#ifndef SPINE_SPINE_H
#define SPINE_SPINE_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SPINE_API __declspec(dllexport)
#else
#define SPINE_API __attribute__((visibility("default")))
#endif

typedef enum spine_status {
  SPINE_OK = 0,
  SPINE_INVALID = 1,  /* input parsed but failed validation */
  SPINE_PARSE = 2,    /* malformed text */
  SPINE_OP_ERROR = 3, /* an operation's precondition failed */
  SPINE_BAD_ARG = 4   /* null pointer or out-of-range argument */
} spine_status;

typedef struct spine_polyhedron spine_polyhedron;
typedef struct spine_bornmap spine_bornmap;
typedef struct spine_plan spine_plan;

SPINE_API const char* spine_last_error(void);
SPINE_API const char* spine_last_error_code(void);
SPINE_API void spine_string_free(char* s);

/* Polyhedra (.spoly text). */
SPINE_API spine_status spine_polyhedron_parse(const char* text, spine_polyhedron** out);
SPINE_API spine_status spine_polyhedron_emit(const spine_polyhedron* p, char** text);
SPINE_API void spine_polyhedron_free(spine_polyhedron* p);
/* SPINE_INVALID when violations exist; the report is filled either way. */
SPINE_API spine_status spine_polyhedron_validate(const spine_polyhedron* p, char** report);
SPINE_API spine_status spine_polyhedron_euler(const spine_polyhedron* p, int* chi);
/* Branch circles, triple arcs, boundary arcs, vertices, sheets, normality. */
SPINE_API spine_status spine_polyhedron_summary(const spine_polyhedron* p, char** text);
SPINE_API spine_status spine_polyhedron_homology(const spine_polyhedron* p, int betti[3]);
SPINE_API spine_status spine_polyhedron_surfaces(const spine_polyhedron* p, long bound, char** text);
SPINE_API spine_status spine_polyhedron_s3(const spine_polyhedron* p, long bound, int* obstructed,
                                           char** text);

/* Born maps (.spoly plus .arr text). */
SPINE_API spine_status spine_bornmap_parse(const char* spoly, const char* arr, spine_bornmap** out);
SPINE_API spine_status spine_bornmap_emit(const spine_bornmap* c, char** spoly, char** arr);
SPINE_API void spine_bornmap_free(spine_bornmap* c);
SPINE_API spine_status spine_bornmap_validate(const spine_bornmap* c, char** report);
SPINE_API spine_status spine_bornmap_polyhedron(const spine_bornmap* c, spine_polyhedron** out);
SPINE_API spine_status spine_bornmap_certificate(const spine_bornmap* c, int dimension, char** text);
SPINE_API spine_status spine_bornmap_svg(const spine_bornmap* c, char** svg);

/* Surgery plans (.plan text) over a base born map. */
SPINE_API spine_status spine_plan_parse(const char* text, const spine_bornmap* base, spine_plan** out);
SPINE_API spine_status spine_plan_emit(const spine_plan* plan, char** text);
SPINE_API void spine_plan_free(spine_plan* plan);
SPINE_API spine_status spine_plan_check(const spine_plan* plan, char** report);
SPINE_API spine_status spine_plan_attach(const spine_plan* plan, spine_bornmap** out, char** notes);
SPINE_API spine_status spine_plan_normalize(const spine_plan* plan, spine_plan** out);
SPINE_API spine_status spine_plan_apply_disk_surgery(const spine_plan* plan, spine_bornmap** out);
/* Orientation criterion for the disks bounded by the plan's circles. The
 * report lists the incidence graphs even when no maximal graph exists. */
SPINE_API spine_status spine_plan_obstruct(const spine_plan* plan, int in_closed_submanifold, long bound,
                                           char** report);
SPINE_API spine_status spine_plan_graphs_dot(const spine_plan* plan, char** dot);

/* Built-in examples: "wf", "wfprime", "theta", "empty" and plans "klein", "twin", "relocate". */
SPINE_API spine_status spine_example(const char* name, spine_bornmap** out);
SPINE_API spine_status spine_example_plan(const char* name, spine_plan** out);

SPINE_API spine_status spine_heegaard_target(int heegaard_genus, int circles, char** description,
                                             int* summands);

#ifdef __cplusplus
}
#endif

#endif
