/* C interface to the frep library: exact computation with uniformly
 * presented vector spaces over the category of finite sets.
 *
 * All functions return a frep_status; results are written through out
 * parameters. Strings returned through char** are owned by the caller and
 * must be released with frep_string_free. frep_last_error() describes the
 * most recent failure on the calling thread.
 */
#ifndef FREP_H
#define FREP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frep_status {
  FREP_OK = 0,
  FREP_ERR_INTERNAL = 1,
  FREP_ERR_PARSE = 2,
  FREP_ERR_CAP = 3,
  FREP_ERR_VERIFY = 4,
  FREP_ERR_INVALID = 5
} frep_status;

typedef struct frep_presentation frep_presentation;
typedef struct frep_resolution frep_resolution;

const char* frep_last_error(void);
void frep_string_free(char* s);

/* Parses presentation text. */
frep_status frep_presentation_parse(const char* text, frep_presentation** out);
/* Named presentation: "builtin:tensor/3", "builtin:p/2,1", "builtin:d/3",
 * "builtin:c/2,2", "builtin:lambda/2", "builtin:s/2", "builtin:theta/2",
 * "builtin:d0"; the "builtin:" prefix is optional. */
frep_status frep_presentation_builtin(const char* uri, frep_presentation** out);
void frep_presentation_free(frep_presentation* p);
frep_status frep_presentation_serialize(const frep_presentation* p, char** out);
frep_status frep_degree_bound(const frep_presentation* p, unsigned* out);

/* row_cap = 0 selects the default cap (100000 hom-space coordinates). */
frep_status frep_eval_dim(const frep_presentation* p, unsigned n, size_t row_cap,
                          unsigned long* dim_out);
/* sigma is a permutation of [n] in one-line notation, e.g. "213". The value
 * is an exact rational rendered as a string. */
frep_status frep_character(const frep_presentation* p, unsigned n, const char* sigma,
                           size_t row_cap, char** value_out);
/* One line per conjugacy class: "<cycle type>: <value>". */
frep_status frep_character_table(const frep_presentation* p, unsigned n, size_t row_cap,
                                 char** table_out);

frep_status frep_resolve(const frep_presentation* p, size_t row_cap, frep_resolution** out);
void frep_resolution_free(frep_resolution* r);
/* as_json != 0 emits the JSON schema; otherwise a text report with the term
 * list, dimension polynomial and character polynomial. */
frep_status frep_resolution_report(const frep_resolution* r, int as_json, char** out);
/* Exactness check of the evaluated complex for n = 0..n_max; FREP_ERR_VERIFY
 * on failure with the report still written. */
frep_status frep_resolution_verify(const frep_resolution* r, unsigned n_max, size_t row_cap,
                                   char** report_out);

/* Compares the resolution-derived dimension and character polynomials against
 * direct evaluation for n = 0..n_max. */
frep_status frep_verify_against_oracle(const frep_presentation* p, unsigned n_max, size_t row_cap,
                                       char** report_out);

/* Squishing elements in linear-combination text form. */
frep_status frep_squisher_upper(unsigned k, unsigned n, char** out);
frep_status frep_squisher_lower(unsigned k, int allow_large, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FREP_H */
