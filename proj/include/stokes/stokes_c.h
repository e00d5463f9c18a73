#ifndef STOKES_STOKES_C_H
#define STOKES_STOKES_C_H

/*
 * C interface of the stokes library. All requests and results are JSON
 * strings; arithmetic behind the interface is exact (rationals, rational
 * multiples of pi), so equal inputs always produce byte-equal outputs.
 *
 * Commands
 *   directions  {phi?, psi?, config?}           incomparability directions
 *   order       {config?, theta}                factors sorted at a direction
 *   decompose   {config?}                       formal decomposition
 *   dims        {config?, theta | grid}         stalk dimensions
 *   resolve     {config?, psi?}                 blow-up tower and good forms
 *   fiber       {config?, psi?, theta}          boundary support set
 *   stokes      {rep?}                          Stokes matrices of the example
 *   verify      {seed?, trials?}                randomized invariant checks
 *
 * A config is {rank, components:[{kind, q, mu0:{modulus, argument_pi},
 * phi_dim?, label?}]}; when omitted, a two-component demonstration
 * configuration of the given rank (default 2) is used. phi and psi are
 * either a factor object, the string "0", or an integer index into the
 * configuration's factor set (0 is the zero factor). A rep is
 * {backend:"symbolic"} | {backend:"matrix", S, T, U} |
 * {backend:"random", rank, seed?}.
 *
 * Return codes: 0 success, 1 domain/validation error, 2 malformed request,
 * 3 internal error. *out is set in every case (including nonzero codes) and
 * stk_result_json then carries {"ok":false,"error":{"kind","message"}}.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stk_result stk_result;

int stk_run(const char* command, const char* request_json, stk_result** out);

/* UTF-8, owned by the result; valid until stk_result_free. */
const char* stk_result_json(const stk_result* result);

void stk_result_free(stk_result* result);

const char* stk_version(void);

#ifdef __cplusplus
}
#endif

#endif /* STOKES_STOKES_C_H */
