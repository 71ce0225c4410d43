/*
 * qsymkit C API.
 *
 * Every function returns a qsk_status. On failure the out-parameters are
 * left untouched and qsk_last_error() describes the problem (per thread).
 * Handles are opaque and owned by the caller; release them with the
 * matching *_free function. Strings returned through char** are allocated
 * by the library and released with qsk_string_free.
 *
 * Text formats:
 *   composition        (2,1,3)       empty: ()
 *   quasisymmetric fn  M(2) + 2*M(1,1) - 1/2*M(3)       zero: 0
 *   skew shape         [2,1]/[1]
 *   poset JSON         {"elements":[..],"lt1":[[a,b]..],"lt2":[..],"w":{..}}
 *   group JSON         {"generators":[{"a":"b","b":"a"}]}
 */
#ifndef QSYMKIT_QSYMKIT_H
#define QSYMKIT_QSYMKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  define QSK_API __declspec(dllexport)
#else
#  define QSK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsk_status {
  QSK_OK = 0,
  QSK_ERR_PARSE = 1,
  QSK_ERR_INVALID_ARGUMENT = 2,
  QSK_ERR_CYCLE = 3,
  QSK_ERR_NOT_TERTISPECIAL = 4,
  QSK_ERR_NOT_PRESERVING = 5,
  QSK_ERR_CLOSURE_TOO_LARGE = 6,
  QSK_ERR_BOUND_EXCEEDED = 7,
  QSK_ERR_NULL_ARGUMENT = 8,
  QSK_ERR_INTERNAL = 9
} qsk_status;

typedef struct qsk_qsym qsk_qsym;           /* element of QSym, monomial basis */
typedef struct qsk_poset qsk_poset;         /* weighted double poset */
typedef struct qsk_group qsk_group;         /* group acting on a weighted double poset */
typedef struct qsk_orderpoly qsk_orderpoly; /* equivariant order polynomial */

QSK_API const char* qsk_version(void);
QSK_API const char* qsk_status_name(qsk_status status);
QSK_API const char* qsk_last_error(void);
QSK_API void qsk_string_free(char* s);

/* Compositions */
QSK_API qsk_status qsk_composition_normalize(const char* alpha, char** out);
QSK_API qsk_status qsk_composition_descent_set(const char* alpha, char** out);
QSK_API qsk_status qsk_composition_reverse(const char* alpha, char** out);
QSK_API qsk_status qsk_composition_conjugate(const char* alpha, char** out);

/* Quasisymmetric functions */
QSK_API qsk_status qsk_qsym_parse(const char* text, qsk_qsym** out);
QSK_API qsk_status qsk_qsym_from_json(const char* json, qsk_qsym** out);
QSK_API qsk_status qsk_qsym_monomial(const char* alpha, qsk_qsym** out);
QSK_API qsk_status qsk_qsym_fundamental(const char* alpha, qsk_qsym** out);
QSK_API void qsk_qsym_free(qsk_qsym* f);
QSK_API qsk_status qsk_qsym_to_string(const qsk_qsym* f, char** out);
QSK_API qsk_status qsk_qsym_to_json(const qsk_qsym* f, char** out);
QSK_API qsk_status qsk_qsym_equal(const qsk_qsym* f, const qsk_qsym* g, int* out);
QSK_API qsk_status qsk_qsym_add(const qsk_qsym* f, const qsk_qsym* g, qsk_qsym** out);
QSK_API qsk_status qsk_qsym_scale(const qsk_qsym* f, const char* rational, qsk_qsym** out);
QSK_API qsk_status qsk_qsym_product(const qsk_qsym* f, const qsk_qsym* g, qsk_qsym** out);
/* recursive != 0 selects the degree-by-degree antipode instead of the closed form. */
QSK_API qsk_status qsk_qsym_antipode(const qsk_qsym* f, int recursive, qsk_qsym** out);
/* as_json != 0 emits {"tensor":[...]}, otherwise one `M(b) (x) R` line per left factor. */
QSK_API qsk_status qsk_qsym_coproduct(const qsk_qsym* f, int as_json, char** out);
QSK_API qsk_status qsk_qsym_counit(const qsk_qsym* f, char** out);
QSK_API qsk_status qsk_qsym_ps1(const qsk_qsym* f, long long q, char** out);
/* S(F_alpha) = (-1)^|alpha| F_omega(alpha); also reports omega(alpha). */
QSK_API qsk_status qsk_antipode_fundamental(const char* alpha, qsk_qsym** antipode,
                                            char** omega, int* holds);

/* Weighted double posets */
QSK_API qsk_status qsk_poset_from_json(const char* json, qsk_poset** out);
QSK_API void qsk_poset_free(qsk_poset* p);
QSK_API qsk_status qsk_poset_to_json(const qsk_poset* p, char** out);
QSK_API qsk_status qsk_poset_size(const qsk_poset* p, size_t* out);
QSK_API qsk_status qsk_poset_classify(const qsk_poset* p, int* special, int* semispecial,
                                      int* tertispecial);
QSK_API qsk_status qsk_poset_opposite1(const qsk_poset* p, qsk_poset** out);
QSK_API qsk_status qsk_poset_disjoint_union(const qsk_poset* a, const qsk_poset* b,
                                            qsk_poset** out);
/* One `P | Q` line per admissible pair, labels separated by commas. */
QSK_API qsk_status qsk_poset_admissible_pairs(const qsk_poset* p, char** out);
/* values are indexed like the "elements" array. */
QSK_API qsk_status qsk_poset_is_epartition(const qsk_poset* p, const int* values, size_t n,
                                           int* out);
QSK_API qsk_status qsk_poset_gamma(const qsk_poset* p, qsk_qsym** out);
/* Sum over admissible pairs; holds = whether it equals the coproduct of Gamma. */
QSK_API qsk_status qsk_poset_coproduct(const qsk_poset* p, int as_json, char** out, int* holds);
/* lhs = S(Gamma(E,w)), rhs = (-1)^|E| Gamma((E,>1,<2),w). */
QSK_API qsk_status qsk_poset_antipode_theorem(const qsk_poset* p, qsk_qsym** lhs,
                                              qsk_qsym** rhs, int* holds);
/* lhs = Gamma(E u F), rhs = Gamma(E) Gamma(F). */
QSK_API qsk_status qsk_poset_product_rule(const qsk_poset* a, const qsk_poset* b,
                                          qsk_qsym** lhs, qsk_qsym** rhs, int* holds);

/* Group actions; cap = 0 uses the default cap of 5040 elements. */
QSK_API qsk_status qsk_group_from_json(const qsk_poset* base, const char* json, size_t cap,
                                       qsk_group** out);
QSK_API void qsk_group_free(qsk_group* g);
QSK_API qsk_status qsk_group_order(const qsk_group* g, size_t* out);
/* plus != 0 selects the coeven-orbit function. */
QSK_API qsk_status qsk_group_gamma(const qsk_group* g, int plus, qsk_qsym** out);
/* lhs = S(Gamma(E,w,G)), rhs = (-1)^|E| Gamma+((E,>1,<2),w,G). */
QSK_API qsk_status qsk_group_antipode_theorem(const qsk_group* g, qsk_qsym** lhs,
                                              qsk_qsym** rhs, int* holds);
QSK_API qsk_status qsk_group_order_polynomial(const qsk_group* g, qsk_orderpoly** out);
/* limit = 0 uses the default enumeration limit. */
QSK_API qsk_status qsk_group_count_orbits(const qsk_group* g, long long q,
                                          unsigned long long limit, int coeven_only,
                                          unsigned long long* out);
QSK_API qsk_status qsk_group_reciprocity(const qsk_group* g, long long q,
                                         unsigned long long limit, char** polynomial_value,
                                         char** signed_count, int* holds);

QSK_API void qsk_orderpoly_free(qsk_orderpoly* p);
/* power_basis != 0 prints the expanded polynomial in q. */
QSK_API qsk_status qsk_orderpoly_to_string(const qsk_orderpoly* p, int power_basis, char** out);
QSK_API qsk_status qsk_orderpoly_to_json(const qsk_orderpoly* p, char** out);
QSK_API qsk_status qsk_orderpoly_eval(const qsk_orderpoly* p, long long q, char** out);

/* Skew shapes; max_cells = 0 means no limit. */
QSK_API qsk_status qsk_shape_poset(const char* shape, int horizontal, qsk_poset** out);
QSK_API qsk_status qsk_shape_schur(const char* shape, size_t max_cells, qsk_qsym** out);
/* lhs = S(s_shape), rhs = (-1)^cells s_conjugate; conjugate gets the transposed shape. */
QSK_API qsk_status qsk_shape_antipode(const char* shape, size_t max_cells, qsk_qsym** lhs,
                                      qsk_qsym** rhs, char** conjugate, int* holds);
/* values are indexed by cells in row-major order. */
QSK_API qsk_status qsk_shape_is_ssyt(const char* shape, const int* values, size_t n, int* out);

/* Desk-scale verification suites; report has one line per suite. */
QSK_API qsk_status qsk_selftest(int max_size, char** report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QSYMKIT_QSYMKIT_H */
