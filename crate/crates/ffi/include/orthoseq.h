#ifndef ORTHOSEQ_H
#define ORTHOSEQ_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum OrthoseqStatus {
  ORTHOSEQ_STATUS_OK = 0,
  // A required pointer argument was null.
  ORTHOSEQ_STATUS_NULL_POINTER = 1,
  // Parameters outside the supported range (or a guard was hit).
  ORTHOSEQ_STATUS_INVALID_PARAMETER = 2,
  // Index past the end of a collection.
  ORTHOSEQ_STATUS_OUT_OF_RANGE = 3,
  // Caller buffer too small; the required size was written back.
  ORTHOSEQ_STATUS_BUFFER_TOO_SMALL = 4,
  // Construction or certification failed internally.
  ORTHOSEQ_STATUS_INTERNAL = 5,
  // A Rust panic was caught at the boundary.
  ORTHOSEQ_STATUS_PANIC = 6,
} OrthoseqStatus;

// A certified collection of circular sequences.
typedef struct OrthoseqCollection OrthoseqCollection;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Build `ell * K` pairwise ell-orthogonal (sigma,k)-de Bruijn sequences.
//
// # Safety
// `out` must be null or point to writable storage for one handle pointer.
enum OrthoseqStatus orthoseq_l_orthogonal_de_bruijn(size_t sigma,
                                                    size_t k,
                                                    size_t ell,
                                                    struct OrthoseqCollection **out);

// Build ell-orthogonal (sigma,k)-Kautz sequences.
//
// # Safety
// As for `orthoseq_l_orthogonal_de_bruijn`.
enum OrthoseqStatus orthoseq_l_orthogonal_kautz(size_t sigma,
                                                size_t k,
                                                size_t ell,
                                                struct OrthoseqCollection **out);

// Build `c` orthogonal b-balanced de Bruijn sequences of order `k`.
//
// # Safety
// As for `orthoseq_l_orthogonal_de_bruijn`.
enum OrthoseqStatus orthoseq_balanced_de_bruijn(size_t c,
                                                size_t b,
                                                size_t k,
                                                struct OrthoseqCollection **out);

// Build `c` orthogonal b-balanced Kautz sequences of order `k`.
//
// # Safety
// As for `orthoseq_l_orthogonal_de_bruijn`.
enum OrthoseqStatus orthoseq_balanced_kautz(size_t c,
                                            size_t b,
                                            size_t k,
                                            struct OrthoseqCollection **out);

// Release a collection. Null is ignored.
//
// # Safety
// `handle` must come from this library and not be freed twice.
void orthoseq_collection_free(struct OrthoseqCollection *handle);

// Number of sequences; 0 for a null handle.
//
// # Safety
// `handle` must be null or a live collection.
size_t orthoseq_collection_len(const struct OrthoseqCollection *handle);

// Alphabet size used by the collection; 0 for a null handle.
//
// # Safety
// `handle` must be null or a live collection.
size_t orthoseq_collection_sigma(const struct OrthoseqCollection *handle);

// Whether the attached certificate holds (1) or not (0); 0 for null.
//
// # Safety
// `handle` must be null or a live collection.
int32_t orthoseq_collection_certified(const struct OrthoseqCollection *handle);

// Copy sequence `index` as symbol indices into `buf`.
//
// The sequence length is always written to `*len`; pass a null `buf` to
// query it. Returns `BufferTooSmall` when `cap` is insufficient.
//
// # Safety
// `handle` must be a live collection, `len` writable, and `buf` null or
// valid for `cap` writes.
enum OrthoseqStatus orthoseq_collection_word(const struct OrthoseqCollection *handle,
                                             size_t index,
                                             uint16_t *buf,
                                             size_t cap,
                                             size_t *len);

// Check that a circular word is a (sigma,k)-de Bruijn sequence.
//
// # Safety
// `word` must be valid for `len` reads; `holds` must be writable.
enum OrthoseqStatus orthoseq_is_de_bruijn(const uint16_t *word,
                                          size_t len,
                                          size_t sigma,
                                          size_t k,
                                          int32_t *holds);

// Check that every k-window occurs exactly `b` times.
//
// # Safety
// As for `orthoseq_is_de_bruijn`.
enum OrthoseqStatus orthoseq_is_b_balanced(const uint16_t *word,
                                           size_t len,
                                           size_t sigma,
                                           size_t k,
                                           size_t b,
                                           int32_t *holds);

// Check that a circular word is a (sigma,k)-Kautz sequence.
//
// # Safety
// As for `orthoseq_is_de_bruijn`.
enum OrthoseqStatus orthoseq_is_kautz(const uint16_t *word,
                                      size_t len,
                                      size_t sigma,
                                      size_t k,
                                      int32_t *holds);

// Check that no (k+1)-window occurs more than `ell` times across `count`
// circular words.
//
// # Safety
// `words` and `lens` must be valid for `count` reads and each `words[i]`
// valid for `lens[i]` reads; `holds` must be writable.
enum OrthoseqStatus orthoseq_is_l_orthogonal(const uint16_t *const *words,
                                             const size_t *lens,
                                             size_t count,
                                             size_t k,
                                             size_t ell,
                                             int32_t *holds);

// Message of the last failure on this thread, or null. The pointer stays
// valid until the next failing call on the same thread.
const char *orthoseq_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORTHOSEQ_H */
