#ifndef TRICENSUS_H
#define TRICENSUS_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum TcStatus {
  TC_STATUS_OK = 0,
  TC_STATUS_NULL_POINTER = 1,
  TC_STATUS_INVALID_UTF8 = 2,
  TC_STATUS_PARSE = 3,
  TC_STATUS_INVALID_GRAPH = 4,
  TC_STATUS_OUT_OF_RANGE = 5,
  TC_STATUS_BUDGET_EXCEEDED = 6,
  TC_STATUS_BUFFER_TOO_SMALL = 7,
  TC_STATUS_INTERNAL = 8,
} TcStatus;

/**
 * Graph families accepted by [`tc_generate`].
 */
typedef enum TcFamily {
  /**
   * `param` = n.
   */
  TC_FAMILY_DOUBLE_WHEEL = 0,
  /**
   * `param` = n.
   */
  TC_FAMILY_FLIPPED_DOUBLE_WHEEL = 1,
  /**
   * `param` = p, default apex layout.
   */
  TC_FAMILY_GP = 2,
  /**
   * `param` = depth.
   */
  TC_FAMILY_STACKED = 3,
  /**
   * `param` = n, with `seed`.
   */
  TC_FAMILY_RANDOM = 4,
} TcFamily;

/**
 * Opaque triangulation handle.
 */
typedef struct TcTriangulation TcTriangulation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated)
 * and returns its length without the terminator. Returns 0 when there is no
 * message. If `buf` is null or too small nothing is written and the needed
 * length is still returned.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t tc_last_error_message(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *tc_version(void);

/**
 * Parses the textual rotation format and validates it as a triangulation.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum TcStatus tc_triangulation_from_rot(const char *text, struct TcTriangulation **out);

/**
 * Reads graph number `index` of a planar_code stream.
 *
 * # Safety
 * `data` must point to `len` readable bytes; `out` must be writable.
 */
enum TcStatus tc_triangulation_from_planar_code(const uint8_t *data,
                                                size_t len,
                                                size_t index,
                                                struct TcTriangulation **out);

/**
 * Generates a family member.
 *
 * # Safety
 * `out` must be writable.
 */
enum TcStatus tc_generate(enum TcFamily family,
                          size_t param,
                          uint64_t seed,
                          struct TcTriangulation **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be freed twice.
 */
void tc_triangulation_free(struct TcTriangulation *h);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t tc_order(const struct TcTriangulation *h);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t tc_size(const struct TcTriangulation *h);

/**
 * Face count, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t tc_face_count(const struct TcTriangulation *h);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum TcStatus tc_is_four_connected(const struct TcTriangulation *h, bool *out);

/**
 * Number of cycles of length `len`. `budget` caps the partial paths
 * explored; 0 means the library default.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum TcStatus tc_cycle_count(const struct TcTriangulation *h,
                             size_t len,
                             uint64_t budget,
                             uint64_t *out);

/**
 * Circumference and number of hamiltonian cycles (undirected).
 *
 * # Safety
 * `h` must be a live handle; `circ` and `ham` writable.
 */
enum TcStatus tc_circumference(const struct TcTriangulation *h,
                               uint64_t budget,
                               size_t *circ,
                               uint64_t *ham);

/**
 * Radius and diameter of the dual graph.
 *
 * # Safety
 * `h` must be a live handle; `rad` and `diam` writable.
 */
enum TcStatus tc_dual_radius_diameter(const struct TcTriangulation *h, size_t *rad, size_t *diam);

/**
 * Writes the rotation text into `buf` (NUL-terminated). `needed` receives
 * the length without terminator; `BufferTooSmall` is returned when `buf`
 * cannot hold it.
 *
 * # Safety
 * `h` must be a live handle, `needed` writable, `buf` null or `len` bytes.
 */
enum TcStatus tc_write_rot(const struct TcTriangulation *h, char *buf, size_t len, size_t *needed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRICENSUS_H */
