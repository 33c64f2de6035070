#ifndef PERMOD_H
#define PERMOD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum PermodStatus {
  PERMOD_STATUS_OK = 0,
  PERMOD_STATUS_NULL_POINTER = 1,
  PERMOD_STATUS_INVALID_UTF8 = 2,
  PERMOD_STATUS_INVALID_ARGUMENT = 3,
  PERMOD_STATUS_PARSE = 4,
  PERMOD_STATUS_INVALID_MODEL = 5,
  PERMOD_STATUS_AXIOM_VIOLATION = 6,
  PERMOD_STATUS_GROUP = 7,
  PERMOD_STATUS_IO = 8,
  PERMOD_STATUS_PANIC = 9,
} PermodStatus;

/**
 * A permutation action of a finitely generated group on a finite set.
 */
typedef struct PermodAction PermodAction;

/**
 * A validated anyon model.
 */
typedef struct PermodModel PermodModel;

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *permod_last_error(void);

/**
 * Loads a built-in model (`fibonacci`, `ising`, `vec_z<N>`, `vec_z<N>:<p>`).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PermodStatus permod_model_builtin(const char *name, struct PermodModel **out);

/**
 * Parses a model document. With `verify` set, the model is rejected unless
 * the pentagon and hexagon identities hold.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PermodStatus permod_model_from_json(const char *json, bool verify, struct PermodModel **out);

/**
 * # Safety
 * `model` must be null or a handle from this library that was not freed yet.
 */
void permod_model_free(struct PermodModel *model);

/**
 * Number of simple objects, or 0 for a null handle.
 *
 * # Safety
 * `model` must be null or a live handle.
 */
uintptr_t permod_model_num_labels(const struct PermodModel *model);

/**
 * Maximum pentagon and hexagon residuals.
 *
 * # Safety
 * `model` must be a live handle; the output pointers must be valid.
 */
enum PermodStatus permod_model_verify(const struct PermodModel *model,
                                      double *pentagon,
                                      double *hexagon);

/**
 * Parses a group-action document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PermodStatus permod_action_from_json(const char *json, struct PermodAction **out);

/**
 * `cyclic:N`, `symmetric:N`, or the path of a group-action document.
 *
 * # Safety
 * `reference` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PermodStatus permod_action_resolve(const char *reference, struct PermodAction **out);

/**
 * # Safety
 * `action` must be null or a handle from this library that was not freed yet.
 */
void permod_action_free(struct PermodAction *action);

/**
 * Size of the permuted set, or 0 for a null handle.
 *
 * # Safety
 * `action` must be null or a live handle.
 */
uintptr_t permod_action_size(const struct PermodAction *action);

/**
 * Writes the images of the group element `word` (e.g. `"r*s"`) to
 * `images[0..size]`.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `images` must hold
 * `permod_action_size(action)` entries.
 */
enum PermodStatus permod_action_element(const struct PermodAction *action,
                                        const char *word,
                                        uintptr_t *images);

/**
 * Residual of the mixed pentagon for the element `word`. `a`, `b`, `c`
 * have one label per point of X, `m` one label per `<g>`-orbit in order of
 * smallest element.
 *
 * # Safety
 * Handles must be live, `word` NUL-terminated, and each array must hold the
 * stated number of entries.
 */
enum PermodStatus permod_pentagon_check(const struct PermodModel *model,
                                        const struct PermodAction *action,
                                        const char *word,
                                        const uintptr_t *a,
                                        const uintptr_t *b,
                                        const uintptr_t *c,
                                        uintptr_t x_len,
                                        const uintptr_t *m,
                                        uintptr_t m_len,
                                        double *residual);

/**
 * Residual of the naturality of `Γ` on one orbit of size `n`, with `u` and
 * `v` listed in action order.
 *
 * # Safety
 * `model` must be live; `u` and `v` must hold `n` entries.
 */
enum PermodStatus permod_gamma_check(const struct PermodModel *model,
                                     const uintptr_t *u,
                                     const uintptr_t *v,
                                     uintptr_t n,
                                     uintptr_t m,
                                     double *residual);

/**
 * Residuals of the two induction identities at orbit size `n ≥ 3`.
 *
 * # Safety
 * `model` must be live; `u` and `v` must hold `n` entries.
 */
enum PermodStatus permod_induction_check(const struct PermodModel *model,
                                         const uintptr_t *u,
                                         const uintptr_t *v,
                                         uintptr_t n,
                                         uintptr_t m,
                                         double *left,
                                         double *right);

/**
 * Commutators of `Z(g)` with `S^{⊗X}` and `T^{⊗X}`, for `g` given by its
 * images on `0..degree`.
 *
 * # Safety
 * `model` must be live and `images` must hold `degree` entries.
 */
enum PermodStatus permod_zmatrix_check(const struct PermodModel *model,
                                       const uintptr_t *images,
                                       uintptr_t degree,
                                       double *s_residual,
                                       double *t_residual);

#endif  /* PERMOD_H */
