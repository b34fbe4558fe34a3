#ifndef CLUSTERCOMB_H
#define CLUSTERCOMB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every entry point.
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_UTF8 = 2,
  CC_STATUS_PARSE_ERROR = 3,
  CC_STATUS_VALIDATION_ERROR = 4,
  CC_STATUS_UNKNOWN_NAME = 5,
  CC_STATUS_PANIC = 6,
} CcStatus;

// A labelled coloured tree.
typedef struct CcTree CcTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next call into the library.
const char *cc_last_error(void);

// Library version as a static string.
const char *cc_version(void);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void cc_string_free(char *s);

// Parses a tree from JSON `{"k":…,"m":…,"edges":[[u,v,c],…]}`.
//
// # Safety
// `json` must be a nul-terminated string and `out` a valid pointer.
enum CcStatus cc_tree_from_json(const char *json, struct CcTree **out);

// Releases a tree. Null is ignored.
//
// # Safety
// `t` must come from this library and not have been freed already.
void cc_tree_free(struct CcTree *t);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `t` must be null or a live handle.
size_t cc_tree_k(const struct CcTree *t);

// Number of colours, or 0 for a null handle.
//
// # Safety
// `t` must be null or a live handle.
size_t cc_tree_m(const struct CcTree *t);

// Writes the tree as JSON to `*out`.
//
// # Safety
// `t` must be a live handle and `out` a valid pointer.
enum CcStatus cc_tree_to_json(const struct CcTree *t, char **out);

// Fills `image[0..k]` with the circular order: `image[v-1] = σ(v)`.
// `len` must be at least `k`.
//
// # Safety
// `t` must be a live handle and `image` must point to `len` writable values.
enum CcStatus cc_tree_circular_order(const struct CcTree *t, size_t *image, size_t len);

// Applies one induction move given as JSON
// `{"kind":"R"|"L","i":…,"j":…,"chain":[…]}` and returns a new tree.
//
// # Safety
// `t` must be a live handle, `step_json` a nul-terminated string and `out`
// a valid pointer.
enum CcStatus cc_tree_apply_step(const struct CcTree *t,
                                 const char *step_json,
                                 struct CcTree **out);

// Replaces the tree by its two-colour normal form, returning a new handle.
//
// # Safety
// `t` must be a live handle and `out` a valid pointer.
enum CcStatus cc_tree_normal_form(const struct CcTree *t, struct CcTree **out);

// Applies a named map such as `"diagram->forest"` or `"family:2->6"` to a
// JSON object and writes the image JSON to `*out`.
//
// # Safety
// `name` and `input` must be nul-terminated strings and `out` a valid pointer.
enum CcStatus cc_map_json(const char *name, const char *input, char **out);

// Writes `T_{k,m}`, `S_{k,m}` or `U_{k,m}` (selected by `family` = 'T',
// 'S' or 'U') to `*out` as a decimal string.
//
// # Safety
// `out` must be a valid pointer.
enum CcStatus cc_count(char family, size_t k, size_t m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUSTERCOMB_H */
