/* C interface to the xyent library. All handles are opaque; every call that
 * can fail returns an xyent_status and leaves a message for xyent_last_error(). */
#ifndef XYENT_XYENT_H
#define XYENT_XYENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(XYENT_BUILDING)
#    define XYENT_API __declspec(dllexport)
#  else
#    define XYENT_API __declspec(dllimport)
#  endif
#else
#  define XYENT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xyent_status {
  XYENT_OK = 0,
  XYENT_E_INVALID_ARGUMENT = 1,
  XYENT_E_DOMAIN = 2,
  XYENT_E_BOUNDARY = 3,
  XYENT_E_CONVERGENCE = 4,
  XYENT_E_SINGULAR_SYMBOL = 5,
  XYENT_E_RESOLUTION = 6,
  XYENT_E_PROXIMITY = 7,
  XYENT_E_HYPOTHESIS = 8,
  XYENT_E_OVERFLOW = 9,
  XYENT_E_EIGENSOLVER = 10,
  XYENT_E_INTERNAL = 11
} xyent_status;

typedef enum xyent_case { XYENT_CASE_1A = 0, XYENT_CASE_1B = 1, XYENT_CASE_2 = 2 } xyent_case;

typedef enum xyent_limit_method {
  XYENT_LIMIT_SERIES = 0,
  XYENT_LIMIT_INTEGRAL = 1,
  XYENT_LIMIT_CLOSED = 2
} xyent_limit_method;

typedef enum xyent_renyi_method { XYENT_RENYI_QPRODUCT = 0, XYENT_RENYI_MODULAR = 1 } xyent_renyi_method;

typedef struct xyent_model xyent_model;
typedef struct xyent_spectrum xyent_spectrum;
typedef struct xyent_density xyent_density;

/* Message of the last failure on the calling thread; empty after a success. */
XYENT_API const char* xyent_last_error(void);
XYENT_API const char* xyent_status_name(xyent_status s);

/* model (gamma, h) */
XYENT_API xyent_status xyent_model_create(double gamma, double h, xyent_model** out);
XYENT_API void xyent_model_destroy(xyent_model* m);
XYENT_API xyent_status xyent_model_case(const xyent_model* m, xyent_case* label, int* sigma);
XYENT_API xyent_status xyent_model_modulus(const xyent_model* m, double* k, double* kprime, double* tau0);

/* nu spectrum of a block of L spins; gamma = 0, |h| < 2 uses the XX matrix */
XYENT_API xyent_status xyent_spectrum_compute(const xyent_model* m, int L, xyent_spectrum** out);
XYENT_API void xyent_spectrum_destroy(xyent_spectrum* s);
XYENT_API size_t xyent_spectrum_size(const xyent_spectrum* s);
XYENT_API xyent_status xyent_spectrum_values(const xyent_spectrum* s, double* out, size_t capacity);
/* largest K eigenvalues of the block density matrix, descending */
XYENT_API xyent_status xyent_spectrum_density_top(const xyent_spectrum* s, size_t K, double* out);

/* entropies, in nats */
XYENT_API xyent_status xyent_entropy_exact(const xyent_spectrum* s, double* out);
XYENT_API xyent_status xyent_renyi_exact(const xyent_spectrum* s, double alpha, double* out);
XYENT_API xyent_status xyent_entropy_xx_asymptotic(double h, int L, double* out);
XYENT_API xyent_status xyent_upsilon1(double* out);
XYENT_API xyent_status xyent_entropy_limit(const xyent_model* m, xyent_limit_method method, double* out);
XYENT_API xyent_status xyent_renyi_limit(const xyent_model* m, double alpha, xyent_renyi_method method,
                                         double* out);
XYENT_API xyent_status xyent_entropy_critical(const xyent_model* m, double* out);

/* characteristic determinants D_L(lambda): log|D| exact and asymptotic.
 * gamma = 0 selects the XX determinant, otherwise the block determinant.
 * proximity <= 0 selects the default exclusion radius. */
XYENT_API xyent_status xyent_detcheck(const xyent_model* m, double lambda_re, double lambda_im, int L,
                                      double proximity, double* exact_log_abs, double* asym_log_abs,
                                      double* rel_gap);

/* limiting density-matrix spectrum */
XYENT_API xyent_status xyent_density_create(const xyent_model* m, int nmax, xyent_density** out);
XYENT_API void xyent_density_destroy(xyent_density* d);
XYENT_API int xyent_density_nmax(const xyent_density* d);
XYENT_API double xyent_density_ratio(const xyent_density* d);
XYENT_API xyent_status xyent_density_lambda(const xyent_density* d, int n, double* out);
/* multiplicity as uint64 (XYENT_E_OVERFLOW if wider) or as a decimal string */
XYENT_API xyent_status xyent_density_multiplicity_u64(const xyent_density* d, int n, uint64_t* out);
XYENT_API xyent_status xyent_density_multiplicity_str(const xyent_density* d, int n, char* buf, size_t cap);
XYENT_API xyent_status xyent_density_zeta(const xyent_density* d, double alpha, double* out);
XYENT_API xyent_status xyent_density_nmax_for_tail(const xyent_model* m, double alpha, double tol, int* out);
XYENT_API double xyent_multiplicity_asymptotic(int n);

#ifdef __cplusplus
}
#endif

#endif
