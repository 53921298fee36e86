#ifndef CONN2K_H
#define CONN2K_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes. The nonzero error values match the exit codes of the
// command-line tool where both exist.
typedef enum Conn2kStatus {
  CONN2K_STATUS_OK = 0,
  // Malformed input or a violated precondition.
  CONN2K_STATUS_INVALID_INPUT = 2,
  // An internal invariant failed. Always a bug.
  CONN2K_STATUS_INTERNAL = 3,
  CONN2K_STATUS_NULL_POINTER = 4,
  CONN2K_STATUS_OUT_OF_RANGE = 5,
  // A panic was caught at the boundary.
  CONN2K_STATUS_PANIC = 6,
} Conn2kStatus;

typedef enum Conn2kAlgo {
  CONN2K_ALGO_FAST = 0,
  CONN2K_ALGO_NAIVE = 1,
} Conn2kAlgo;

typedef enum Conn2kAssertLevel {
  CONN2K_ASSERT_LEVEL_OFF = 0,
  CONN2K_ASSERT_LEVEL_CHEAP = 1,
  CONN2K_ASSERT_LEVEL_FULL = 2,
} Conn2kAssertLevel;

// Opaque capacitated graph.
typedef struct Conn2kGraph Conn2kGraph;

// Opaque augmentation result: the added edges and the augmented graph.
typedef struct Conn2kResult Conn2kResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into this library from the same thread.
const char *conn2k_last_error(void);

// Edgeless graph on `n` vertices. Never returns null.
struct Conn2kGraph *conn2k_graph_new(uintptr_t n);

// Parses an instance in the text format read by the command-line tool.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum Conn2kStatus conn2k_graph_parse(const char *text, struct Conn2kGraph **out);

// # Safety
// `g` must be null or a handle from this library not yet freed.
void conn2k_graph_free(struct Conn2kGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
uintptr_t conn2k_graph_vertex_count(const struct Conn2kGraph *g);

// Capacity between `u` and `v`, 0 when absent or out of range.
//
// # Safety
// `g` must be null or a live graph handle.
uint64_t conn2k_graph_capacity(const struct Conn2kGraph *g, uintptr_t u, uintptr_t v);

// Adds `cap` to the capacity between `u` and `v`.
//
// # Safety
// `g` must be a live graph handle.
enum Conn2kStatus conn2k_graph_add_edge(struct Conn2kGraph *g,
                                        uintptr_t u,
                                        uintptr_t v,
                                        uint64_t cap);

// Writes whether `g` is (2,k)-connected to `out`.
//
// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum Conn2kStatus conn2k_check(const struct Conn2kGraph *g, uint64_t k, bool *out);

// Computes a minimum (2,k)-connected augmentation of `g`.
//
// # Safety
// `g` must be a live graph handle and `out` a valid pointer.
enum Conn2kStatus conn2k_augment(const struct Conn2kGraph *g,
                                 uint64_t k,
                                 enum Conn2kAlgo algo,
                                 enum Conn2kAssertLevel level,
                                 struct Conn2kResult **out);

// # Safety
// `r` must be null or a result handle from this library not yet freed.
void conn2k_result_free(struct Conn2kResult *r);

// Total added capacity, or 0 for a null handle.
//
// # Safety
// `r` must be null or a live result handle.
uint64_t conn2k_result_total(const struct Conn2kResult *r);

// Number of distinct added edges, or 0 for a null handle.
//
// # Safety
// `r` must be null or a live result handle.
uintptr_t conn2k_result_edge_count(const struct Conn2kResult *r);

// The `i`-th added edge, with `u < v`. Edges are sorted by endpoints.
//
// # Safety
// `r` must be a live result handle; `u`, `v` and `cap` valid pointers.
enum Conn2kStatus conn2k_result_edge(const struct Conn2kResult *r,
                                     uintptr_t i,
                                     uintptr_t *u,
                                     uintptr_t *v,
                                     uint64_t *cap);

// Number of maximal splitting operations performed, or 0 for a null handle.
//
// # Safety
// `r` must be null or a live result handle.
uint64_t conn2k_result_maximal_splits(const struct Conn2kResult *r);

// A new graph handle holding a copy of the augmented graph. Free it with
// [`conn2k_graph_free`]. Returns null for a null handle.
//
// # Safety
// `r` must be null or a live result handle.
struct Conn2kGraph *conn2k_result_graph(const struct Conn2kResult *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONN2K_H */
