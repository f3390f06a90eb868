/* bunblocks: exact-arithmetic calculators for affine Weyl alcove
 * classification, type A1 fusion rings and Verlinde dimensions, a
 * Borel-Weil-Bott cohomology oracle, coinvariant-algebra characters, and
 * semiorthogonal block tables with Hochschild-additivity checks.
 *
 * Every operation returns a freshly allocated bb_result carrying a status,
 * a canonical JSON payload (valid when the status is BB_OK), and an error
 * message (non-empty otherwise).  Results are immutable; release them with
 * bb_result_free.  All functions are thread-safe: no shared mutable state.
 *
 * JSON conventions: object keys are sorted; arbitrary-precision integers
 * are decimal strings; bounded structural integers (weights, degrees,
 * ranks, exponents) are JSON numbers; the only floating-point fields are
 * trigonometric cross-checks, which carry an "approx": true marker.
 */

#ifndef BUNBLOCKS_H
#define BUNBLOCKS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bb_status {
  BB_OK = 0,
  BB_ERR_INVALID_ARGUMENT = 1, /* parameter outside the supported range */
  BB_ERR_UNSUPPORTED = 2,      /* well-formed request the library refuses */
  BB_ERR_SEARCH_LIMIT = 3,     /* iteration bound exhausted */
  BB_ERR_CHECK_FAILED = 4,     /* an internal cross-validation did not hold */
  BB_ERR_INTERNAL = 5
} bb_status;

typedef struct bb_result bb_result;

/* Library version string, e.g. "0.1.0". */
const char* bb_version(void);

bb_status bb_result_status(const bb_result* r);
/* Canonical JSON text; empty string unless the status is BB_OK. */
const char* bb_result_json(const bb_result* r);
/* Error message; empty string when the status is BB_OK. */
const char* bb_result_error(const bb_result* r);
void bb_result_free(bb_result* r);

/* --- Root data and SL2 characters --------------------------------------- */

/* Dual Coxeter number of the simple type (series in "ABCDEFG").
 * JSON: {"dual_coxeter": n, "type": "A3"} */
bb_result* bb_dual_coxeter(char series, int rank);

/* Character of the irreducible SL2 representation with highest weight m.
 * JSON: {"character": [[w, "mult"], ...], "dimension": "...", "weight": m} */
bb_result* bb_irrep_character(long long m);

/* Decomposition of the m-th tensor power of the defining representation.
 * JSON: {"character": ..., "decomposition": [[w, "mult"], ...],
 *        "dimension": "...", "m": m} */
bb_result* bb_tensor_power(long long m);

/* --- Affine Weyl alcove classification ---------------------------------- */

/* Closed form for SL2 at the given nonnegative level.
 * JSON: {"regular": false} or {"regular": true, "length": l, "reduced": [w]} */
bb_result* bb_alcove_sl2(long long level, long long weight);

/* Residue route for type A_rank; lambda has `len` = rank coordinates. */
bb_result* bb_alcove_type_a(int rank, long long level, const long long* lambda, size_t len);

/* Breadth-first search over reflection words (the oracle route); radius <= 0
 * selects the built-in default.  Adds "word": [i, ...] to the JSON. */
bb_result* bb_alcove_bfs(int rank, long long level, const long long* lambda, size_t len,
                         int radius);

/* --- Fusion ring and Verlinde dimensions -------------------------------- */

/* JSON: {"a": a, "b": b, "c": c, "coefficient": "0|1", "level": k} */
bb_result* bb_fusion_coefficient(int level, int a, int b, int c);

/* JSON: {"a": a, "level": k, "matrix": [["...", ...], ...]} */
bb_result* bb_fusion_matrix(int level, int a);

/* Verlinde dimension at the level for a genus-g surface with the given
 * insertions.  include_trig != 0 adds the floating cross-check field.
 * JSON: {"dim": "...", ...} (+ "trig": {"approx": true, "value": x}) */
bb_result* bb_verlinde(int level, long long genus, const int* insertions, size_t len,
                       int include_trig);

/* --- Cohomology oracle and Hom bookkeeping ------------------------------ */

/* Borel-Weil-Bott answer for the given level, genus, insertion weights and
 * twist parity.  JSON: {"vanishes": true} or
 * {"vanishes": false, "degree": d, "dim": "..."} */
bb_result* bb_cohomology(long long level, long long genus, const long long* insertions,
                         size_t len, int xi_parity);

/* Hom-degree report between the m-th and n-th kernel images: parity
 * obstruction, amplitude interval with the enumerated maximum, and the
 * semiorthogonality certificate when m > n.
 * JSON: {"m": m, "n": n, "parity_obstruction": b,
 *        "amplitude": {"lo": 0, "hi": h, "enumerated_max": e},
 *        "certificate": {"amplitude_length_after_degree0": a,
 *                         "diagonal_codim": c, "pass": b}}
 * (amplitude/certificate present only where defined). */
bb_result* bb_homs(long long m, long long n);

/* --- Coinvariant algebra ------------------------------------------------- */

/* Graded dimension of the rank-m coinvariant algebra (1 <= m <= 4).
 * JSON: {"hilbert": ["1", "2", ...], "m": m, "total": "..."} */
bb_result* bb_coinv_hilbert(int m);

/* Graded SL2 character of the symmetric-group invariants of the m-fold
 * tensor model (1 <= m <= 4); reports both the degree and the mirrored
 * filtration index per piece. */
bb_result* bb_coinv_graded_character(int m);

/* Character of the rank-n quotient module in the given model
 * ("quotient-by-t" or "fiber-tensor"); n >= 0. */
bb_result* bb_coinv_character_s(long long n, const char* model);

/* Multiplicity of the weight-m irreducible in the rank-n quotient module.
 * JSON: {"m": m, "model": ..., "multiplicity": "...", "n": n} */
bb_result* bb_coinv_hom_mult(long long m, long long n, const char* model);

/* Exact rank check that the degree-0 component generates the quotient model
 * under the loop operators (1 <= m <= 3).  JSON: {"generated": b, "m": m} */
bb_result* bb_coinv_generation_check(int m);

/* --- Semiorthogonal block tables and Hodge checks ------------------------ */

/* Block table of one variant: "stack", "semistable", "coarse", "generalG",
 * "generalG-coarse" or "conjecture".  index_cap < 0 means no cap (required
 * to be >= 0 for the stack and conjecture variants). */
bb_result* bb_blocks(const char* variant, char series, int rank, long long genus,
                     long long index_cap, int xi_parity);

/* Hodge polynomial of the n-th symmetric power of a genus-g curve
 * (two internal routes must agree).  JSON: {"genus": g, "hodge": [[p, q,
 * "h"], ...], "n": n, "poincare": ["...", ...]} */
bb_result* bb_hodge_sym_power(long long genus, long long n);

/* Hodge polynomial of the rank-2 odd-determinant coarse moduli space,
 * validated internally (2 <= genus <= 6). */
bb_result* bb_hodge_moduli_rank2_odd(long long genus);

/* Hochschild additivity across the coarse block table.
 * JSON: {"genus": g, "lhs": {...}, "pass": b, "rhs": {...}} */
bb_result* bb_hh_check(long long genus);

/* Full acceptance sweep.  JSON: {"criteria": [...], "pass": b} */
bb_result* bb_verify_all(void);

#ifdef __cplusplus
}
#endif

#endif /* BUNBLOCKS_H */
