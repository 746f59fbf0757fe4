/* C interface to the qpath lattice path statistics library. */

#ifndef QPATH_H
#define QPATH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call in this ABI.
 */
typedef enum QPathStatus {
  Q_PATH_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  Q_PATH_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  Q_PATH_STATUS_INVALID_UTF8 = 2,
  Q_PATH_STATUS_INVALID_ARGUMENT = 3,
  /**
   * Exact polynomial division left a remainder.
   */
  Q_PATH_STATUS_NOT_DIVISIBLE = 4,
  /**
   * A stated precondition of the operation does not hold.
   */
  Q_PATH_STATUS_PRECONDITION = 5,
  /**
   * An enumeration would exceed the step bound.
   */
  Q_PATH_STATUS_LIMIT_EXCEEDED = 6,
  /**
   * Internal panic; the library state is still sound.
   */
  Q_PATH_STATUS_PANIC = 7,
} QPathStatus;

/**
 * Opaque handle to a residue-class count distribution.
 */
typedef struct QPathDist QPathDist;

/**
 * Opaque handle to a polynomial with exact integer coefficients.
 */
typedef struct QPathPoly QPathPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *qpath_version(void);

/**
 * Message for the most recent failure on this thread. Empty when the last
 * call succeeded. The pointer is valid until the next qpath call on the
 * same thread; do not free.
 */
const char *qpath_last_error(void);

/**
 * Frees a string returned by this library. Null is a no-op.
 */
void qpath_string_free(char *s);

/**
 * Frees a polynomial handle. Null is a no-op.
 */
void qpath_poly_free(struct QPathPoly *p);

/**
 * Frees a distribution handle. Null is a no-op.
 */
void qpath_dist_free(struct QPathDist *d);

/**
 * Gaussian binomial for n over k: the area generating polynomial of the
 * lattice paths from the origin to (k, n-k). Requires k <= n.
 */
enum QPathStatus qpath_gauss_binom(uint32_t n, uint32_t k, struct QPathPoly **out);

/**
 * The polynomial 1 + q + ... + q^(m-1). Requires m >= 1.
 */
enum QPathStatus qpath_q_analogue(uint64_t m, struct QPathPoly **out);

/**
 * The n-th q-Catalan polynomial.
 */
enum QPathStatus qpath_q_catalan(uint32_t n, struct QPathPoly **out);

enum QPathStatus qpath_poly_mul(const struct QPathPoly *a,
                                const struct QPathPoly *b,
                                struct QPathPoly **out);

/**
 * Exact division in the polynomial ring; fails with `NotDivisible` when a
 * remainder would be left.
 */
enum QPathStatus qpath_poly_exact_div(const struct QPathPoly *num,
                                      const struct QPathPoly *den,
                                      struct QPathPoly **out);

enum QPathStatus qpath_poly_is_zero(const struct QPathPoly *p, bool *out);

/**
 * Degree of the polynomial. Fails with `Precondition` for the zero
 * polynomial, which has none.
 */
enum QPathStatus qpath_poly_degree(const struct QPathPoly *p, uint64_t *out);

/**
 * Coefficient of q^power as a decimal string (zero beyond the degree).
 */
enum QPathStatus qpath_poly_coeff(const struct QPathPoly *p, uint64_t power, char **out);

/**
 * Value at q = 1 (the plain count) as a decimal string.
 */
enum QPathStatus qpath_poly_value_at_one(const struct QPathPoly *p, char **out);

/**
 * Whether the coefficient sums over the modulus residue classes of the
 * exponents all agree; equivalent to divisibility by the q-analogue of
 * the modulus.
 */
enum QPathStatus qpath_poly_equal_content(const struct QPathPoly *p, uint64_t modulus, bool *out);

/**
 * Residue-class coefficient sums of a polynomial with nonnegative
 * coefficients.
 */
enum QPathStatus qpath_poly_content_sums(const struct QPathPoly *p,
                                         uint64_t modulus,
                                         struct QPathDist **out);

/**
 * Area under a lattice path written in E/N or 0/1 letters.
 */
enum QPathStatus qpath_path_area(const char *path, uint64_t *out);

/**
 * Exceedance of a path with a square endpoint: the number of north steps
 * taken on or above the diagonal.
 */
enum QPathStatus qpath_path_exceedance(const char *path, uint64_t *out);

/**
 * Inversions of a binary word (pairs 1...0); equals the area of the
 * corresponding path.
 */
enum QPathStatus qpath_word_inversions(const char *word, uint64_t *out);

/**
 * Major index of a binary word: the sum of the descent positions.
 */
enum QPathStatus qpath_word_major_index(const char *word, uint64_t *out);

/**
 * Area counts mod `modulus` for paths to (width, height). Chooses between
 * direct enumeration and the polynomial route automatically.
 */
enum QPathStatus qpath_area_distribution(uint32_t width,
                                         uint32_t height,
                                         uint64_t modulus,
                                         struct QPathDist **out);

/**
 * Sums of k-element subsets of {1, ..., n} mod `modulus`.
 */
enum QPathStatus qpath_subset_sum_distribution(uint64_t n,
                                               uint64_t k,
                                               uint64_t modulus,
                                               struct QPathDist **out);

/**
 * Products of l-element subsets of the units mod a prime p, counted over
 * the residues 1, ..., p-1. Requires gcd(l, p-1) = 1.
 */
enum QPathStatus qpath_subset_product_distribution(uint64_t p, uint64_t l, struct QPathDist **out);

/**
 * Major-index counts mod `modulus` over binary words with n ones and
 * n zeros.
 */
enum QPathStatus qpath_maj_distribution(uint32_t n, uint64_t modulus, struct QPathDist **out);

enum QPathStatus qpath_dist_modulus(const struct QPathDist *d, uint64_t *out);

/**
 * Number of residue classes carried by the distribution.
 */
enum QPathStatus qpath_dist_class_count(const struct QPathDist *d, uint64_t *out);

/**
 * Residue labelled by the first class (0, or 1 for unit-group
 * distributions).
 */
enum QPathStatus qpath_dist_first_residue(const struct QPathDist *d, uint64_t *out);

/**
 * Count in the class at `index` (0-based) as a decimal string.
 */
enum QPathStatus qpath_dist_count(const struct QPathDist *d, uint64_t index, char **out);

enum QPathStatus qpath_dist_is_uniform(const struct QPathDist *d, bool *out);

/**
 * Sum of all class counts as a decimal string.
 */
enum QPathStatus qpath_dist_total(const struct QPathDist *d, char **out);

/**
 * Full orbit of a start object under a named cyclic map, rendered as
 * JSON. Map names: rotate, phi-square, phi-word, phi-seq,
 * catalan-restrict. `bound` only applies to phi-seq; pass 0 to infer it
 * from the number of terms.
 */
enum QPathStatus qpath_orbit_json(const char *map, const char *start, uint64_t bound, char **out);

/**
 * Checks the central factorization, the q-Catalan identity, and central
 * divisibility for every n up to `max_n`; true when all hold.
 */
enum QPathStatus qpath_verify_q_identities(uint32_t max_n, bool *out);

/**
 * Checks the doubling recurrence for the central binomial coefficients up
 * to `max_n`; true when it holds throughout.
 */
enum QPathStatus qpath_verify_central_recurrence(uint64_t max_n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QPATH_H */
