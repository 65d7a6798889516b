#ifndef GWB_H
#define GWB_H

/* C interface to the gwb library. Results come back as JSON text that the
 * caller releases with gwb_string_free. On a nonzero status the message of
 * the failure is available from gwb_last_error on the same thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GWB_API __declspec(dllexport)
#else
#define GWB_API __attribute__((visibility("default")))
#endif

typedef enum {
  GWB_OK = 0,
  GWB_VERIFICATION_FAILED = 1, /* computed fine, but a checked property does not hold */
  GWB_INVALID_INPUT = 2,
  GWB_INTERNAL_ERROR = 3
} gwb_status;

typedef struct gwb_ring gwb_ring;
typedef struct gwb_mackey gwb_mackey;
typedef struct gwb_diagram gwb_diagram;

GWB_API const char* gwb_version(void);
GWB_API const char* gwb_last_error(void);
GWB_API void gwb_string_free(char* s);

/* Tuples are passed as text: "2,1", "(2,1)" or "[2,1]". */

/* Finite sets and slices. */
GWB_API gwb_status gwb_surjection_count(int k, int i, char** out);
GWB_API gwb_status gwb_surj_table_json(int n, char** out);
GWB_API gwb_status gwb_objects_json(int d, int r, char** out);
GWB_API gwb_status gwb_hom_json(const char* u, const char* v, char** out);
GWB_API gwb_status gwb_orbitality_json(int d, int r, char** out);

/* Pullback of f: A ->> E <<- B :g of connected objects in Fin_{Epi_{d,r}},
 * maps as value lists. Also runs the universal-property check. */
GWB_API gwb_status gwb_pullback_json(const char* a, const char* b, const char* e, const char* f, const char* g, int d,
                                     char** out);

/* Spans as "LEFTFOOT:APEX:RIGHTFOOT:LEFTLEG:RIGHTLEG", e.g. "1:2:1:1,1:1,1".
 * Returns the composite of s2 after s1. */
GWB_API gwb_status gwb_span_compose_json(const char* s2, const char* s1, int d, char** out);

/* Burnside rings. */
GWB_API gwb_status gwb_ring_build(int d, int r, gwb_ring** out);
GWB_API void gwb_ring_free(gwb_ring* ring);
GWB_API size_t gwb_ring_rank(const gwb_ring* ring);
GWB_API gwb_status gwb_ring_structure_constant(const gwb_ring* ring, size_t u, size_t v, size_t w, int64_t* out);
GWB_API gwb_status gwb_ring_to_json(const gwb_ring* ring, char** out);
GWB_API gwb_status gwb_ring_marks_csv(const gwb_ring* ring, char** out);

/* Generator of (p, Phi^[k](I(d))); p <= 0 means no p. */
GWB_API gwb_status gwb_ideal_image(int d, int k, long p, int allow_composite, char** out);
GWB_API gwb_status gwb_segal_report_json(long p, char** out);

/* Mackey functors. */
GWB_API gwb_status gwb_mackey_representable(int d, int r, const char* v, gwb_mackey** out);
GWB_API gwb_status gwb_mackey_from_json(const char* json, gwb_mackey** out);
GWB_API void gwb_mackey_free(gwb_mackey* m);
GWB_API gwb_status gwb_mackey_to_json(const gwb_mackey* m, char** out);
/* Report JSON; GWB_VERIFICATION_FAILED when an axiom fails. */
GWB_API gwb_status gwb_mackey_check(const gwb_mackey* m, char** out);
/* index_only = 0: sections vanishing on sizes > b; otherwise plain index restriction. */
GWB_API gwb_status gwb_mackey_restrict(const gwb_mackey* m, int b, int index_only, gwb_mackey** out);
GWB_API gwb_status gwb_mackey_vanishing_json(const gwb_mackey* m, char** out);
GWB_API gwb_status gwb_endomorphism_ring_json(int d, int r, char** out);

/* Cube diagrams. */
GWB_API gwb_status gwb_diagram_from_json(const char* json, gwb_diagram** out);
GWB_API gwb_status gwb_diagram_random(const char* shape_json, uint64_t seed, int max_dim, int extended,
                                      gwb_diagram** out);
GWB_API void gwb_diagram_free(gwb_diagram* f);
GWB_API gwb_status gwb_diagram_to_json(const gwb_diagram* f, char** out);
/* Extends a diagram given on the sub-poset to the full poset. */
GWB_API gwb_status gwb_diagram_extend(const gwb_diagram* f, gwb_diagram** out);
/* Report JSON; GWB_VERIFICATION_FAILED when the diagram is not extended from its sub-poset. */
GWB_API gwb_status gwb_cube_check(const gwb_diagram* f, char** out);

/* Degree arithmetic. */
GWB_API gwb_status gwb_pigeonhole_json(int d, int r, int s, char** out);
GWB_API gwb_status gwb_crosseffect_degrees_json(const char* profile, const char* map, char** out);
GWB_API gwb_status gwb_diagonal_degrees_json(const char* profile, const char* map, char** out);
GWB_API gwb_status gwb_degenerate_direction_json(int d, const char* profile, const char* excisiveness, char** out);

/* Every suite at bound d. */
GWB_API gwb_status gwb_verify_all_json(int d, unsigned diagrams_per_shape, char** out);

#ifdef __cplusplus
}
#endif

#endif
