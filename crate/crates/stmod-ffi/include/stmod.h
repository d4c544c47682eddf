#ifndef STMOD_H
#define STMOD_H

/* Generated from the stmod-ffi crate by cbindgen; edit the Rust source, not this file. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
enum stmod_status
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  // Computed; out parameters are valid. Refutations (a verdict of
  // not-ghost, a report that fails) are still Ok.
  STMOD_STATUS_OK = 0,
  // Rejected input: parse failure, validation failure, incompatible
  // operands.
  STMOD_STATUS_BAD_INPUT = 1,
  // Blocked by a configured cap before any verdict was reached.
  STMOD_STATUS_CAP = 2,
  // Internal invariant violation or a panic; a bug, please report.
  STMOD_STATUS_INTERNAL = 3,
  // A required pointer argument was null.
  STMOD_STATUS_NULL_ARG = 4,
  // A string argument was not valid UTF-8.
  STMOD_STATUS_UTF8 = 5,
  // The result could not be serialized to JSON.
  STMOD_STATUS_JSON = 6,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum stmod_status stmod_status;
#else
typedef int32_t stmod_status;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

// Engine context: caps, seed, and the syzygy/hom caches.
typedef struct StmodCtx StmodCtx;

// A validated finite group with its multiplication table.
typedef struct StmodGroup StmodGroup;

// An equivariant linear map between two modules.
typedef struct StmodMap StmodMap;

// A finite dimensional module over a group algebra.
typedef struct StmodModule StmodModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Crate version as a static string; never freed.
const char *stmod_version(void);

// Message for the most recent failure on this thread, or null when
// every call so far succeeded. The pointer stays valid until the next
// failing call on the same thread; do not free it.
const char *stmod_last_error(void);

// Releases a string returned through a `char **` out parameter.
void stmod_string_free(char *s);

// Creates an engine context. `degree_cap` bounds the Tate degrees any
// computation may touch (the syzygy cap is twice that); `seed` fixes
// every randomized search, so equal seeds give equal answers.
stmod_status stmod_ctx_new(uint64_t seed, int64_t degree_cap, struct StmodCtx **out);

void stmod_ctx_free(struct StmodCtx *ctx);

// Builds a group from a spec: `trivial`, `cyclic:N`, `elemab:P:K`,
// `dihedral:ORDER`, `quaternion:8`, `symmetric:M`, or
// `product:SPEC,SPEC[,...]` of further specs.
stmod_status stmod_group_from_spec(const char *spec, struct StmodGroup **out);

void stmod_group_free(struct StmodGroup *g);

stmod_status stmod_group_order(const struct StmodGroup *g, uint64_t *out);

// Structural facts about a group as a JSON object: name, order,
// abelian flag, element orders, generator set, table fingerprint.
stmod_status stmod_group_describe(const struct StmodGroup *g, char **out);

// Builds a module over `group` in characteristic `p` from a spec:
// `trivial`, `regular`, `jordan:I`, or `v4band:N:LAMBDA`.
stmod_status stmod_module_from_spec(const struct StmodGroup *group,
                                    uint64_t p,
                                    const char *spec,
                                    struct StmodModule **out);

void stmod_module_free(struct StmodModule *m);

stmod_status stmod_module_dim(const struct StmodModule *m, uint64_t *out);

// Module facts as a JSON object: name, dimension, characteristic, and
// the group it lives over.
stmod_status stmod_module_describe(const struct StmodModule *m, char **out);

// The linear dual with the contragredient action.
stmod_status stmod_module_dual(const struct StmodModule *m, struct StmodModule **out);

// The i-th syzygy as a projective-free module; negative `i` takes
// cosyzygies. `i = 0` strips projective summands.
stmod_status stmod_module_syzygy(const struct StmodCtx *ctx,
                                 const struct StmodModule *m,
                                 int64_t i,
                                 struct StmodModule **out);

// Wraps `entries` as an equivariant map `domain -> codomain`. The
// matrix is row major with `dim codomain` rows and `dim domain`
// columns, entries reduced mod p; non-equivariant matrices are
// rejected.
stmod_status stmod_map_new(const struct StmodModule *domain,
                           const struct StmodModule *codomain,
                           const uint8_t *entries,
                           size_t len,
                           struct StmodMap **out);

void stmod_map_free(struct StmodMap *f);

// Whether the map factors through a projective module.
stmod_status stmod_map_is_stably_zero(const struct StmodCtx *ctx,
                                      const struct StmodMap *f,
                                      bool *out);

// Dimension of the stable hom space Hom(m, n) modulo maps factoring
// through projectives.
stmod_status stmod_stable_hom_dim(const struct StmodCtx *ctx,
                                  const struct StmodModule *m,
                                  const struct StmodModule *n,
                                  uint64_t *out);

// Dimension of Tate cohomology of the module's group with the module
// as coefficients, in degree `i` (any sign).
stmod_status stmod_tate_dim(const struct StmodCtx *ctx,
                            const struct StmodModule *m,
                            int64_t i,
                            uint64_t *out);

// Ghost certificate for a map as JSON, in the given mode: `auto`,
// `periodic`, `bounds`, or `window:FROM:TO`; null means `auto`. A
// verdict of not-ghost is still `STMOD_STATUS_OK`; read the verdict
// from the JSON.
stmod_status stmod_ghost_check(const struct StmodCtx *ctx,
                               const struct StmodMap *f,
                               const char *mode,
                               char **out);

// Strong-ghost certificate as JSON: ghost on every restriction to a
// subgroup. `reduce_to_conjugacy_classes` sweeps one subgroup per
// conjugacy class instead of all of them.
stmod_status stmod_ghost_strong(const struct StmodCtx *ctx,
                                const struct StmodMap *f,
                                bool reduce_to_conjugacy_classes,
                                char **out);

// Searches for a module whose almost split sequence yields a strong
// ghost out of it, over `group` in characteristic `p`. The JSON
// carries `found` plus, when found, the module data, the checked
// conditions, and both certificates; groups proven to have none
// report `found: false`.
stmod_status stmod_strong_ghost_witness(const struct StmodCtx *ctx,
                                        const struct StmodGroup *group,
                                        uint64_t p,
                                        char **out);

// Runs one named verification report and returns it as JSON. Valid
// names are the CLI's report names; the JSON's `pass` field says
// whether every check held (a failing report is still
// `STMOD_STATUS_OK`).
stmod_status stmod_report_run(const struct StmodCtx *ctx, const char *name, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STMOD_H */
