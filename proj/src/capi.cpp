#include "xyent/xyent.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "xyent/density_spectrum.hpp"
#include "xyent/entropy.hpp"
#include "xyent/errors.hpp"
#include "xyent/toeplitz.hpp"
#include "xyent/xy_chain.hpp"

struct xyent_model {
  xyent::chain::ModelParams p;
};

struct xyent_spectrum {
  xyent::chain::NuSpectrum nus;
};

struct xyent_density {
  xyent::density::DensitySpectrum spec;
};

namespace {

thread_local std::string g_last_error;

xyent_status status_of(xyent::ErrorKind k) {
  using xyent::ErrorKind;
  switch (k) {
    case ErrorKind::Domain: return XYENT_E_DOMAIN;
    case ErrorKind::Boundary: return XYENT_E_BOUNDARY;
    case ErrorKind::Convergence: return XYENT_E_CONVERGENCE;
    case ErrorKind::SingularSymbol: return XYENT_E_SINGULAR_SYMBOL;
    case ErrorKind::Resolution: return XYENT_E_RESOLUTION;
    case ErrorKind::Proximity: return XYENT_E_PROXIMITY;
    case ErrorKind::Hypothesis: return XYENT_E_HYPOTHESIS;
    case ErrorKind::Overflow: return XYENT_E_OVERFLOW;
    case ErrorKind::Eigensolver: return XYENT_E_EIGENSOLVER;
  }
  return XYENT_E_INTERNAL;
}

template <class F>
xyent_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return XYENT_OK;
  } catch (const xyent::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return XYENT_E_INTERNAL;
}

xyent_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return XYENT_E_INVALID_ARGUMENT;
}

#define XYENT_REQUIRE(ptr) \
  if (!(ptr)) return null_arg(#ptr)

}  // namespace

extern "C" {

const char* xyent_last_error(void) { return g_last_error.c_str(); }

const char* xyent_status_name(xyent_status s) {
  switch (s) {
    case XYENT_OK: return "ok";
    case XYENT_E_INVALID_ARGUMENT: return "invalid-argument";
    case XYENT_E_DOMAIN: return "domain";
    case XYENT_E_BOUNDARY: return "boundary";
    case XYENT_E_CONVERGENCE: return "convergence";
    case XYENT_E_SINGULAR_SYMBOL: return "singular-symbol";
    case XYENT_E_RESOLUTION: return "resolution";
    case XYENT_E_PROXIMITY: return "proximity";
    case XYENT_E_HYPOTHESIS: return "hypothesis";
    case XYENT_E_OVERFLOW: return "overflow";
    case XYENT_E_EIGENSOLVER: return "eigensolver";
    case XYENT_E_INTERNAL: return "internal";
  }
  return "unknown";
}

xyent_status xyent_model_create(double gamma, double h, xyent_model** out) {
  XYENT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    if (!(gamma >= 0.0) || !(h >= 0.0)) throw xyent::DomainError("model needs gamma >= 0 and h >= 0");
    *out = new xyent_model{{gamma, h}};
  });
}

void xyent_model_destroy(xyent_model* m) { delete m; }

xyent_status xyent_model_case(const xyent_model* m, xyent_case* label, int* sigma) {
  XYENT_REQUIRE(m);
  return guarded([&] {
    const auto pc = xyent::chain::classify_case(m->p);
    if (label) *label = static_cast<xyent_case>(static_cast<int>(pc.label));
    if (sigma) *sigma = pc.sigma;
  });
}

xyent_status xyent_model_modulus(const xyent_model* m, double* k, double* kprime, double* tau0) {
  XYENT_REQUIRE(m);
  return guarded([&] {
    const auto e = xyent::chain::modulus_k(m->p);
    if (k) *k = e.k;
    if (kprime) *kprime = e.kprime;
    if (tau0) *tau0 = e.tau0;
  });
}

xyent_status xyent_spectrum_compute(const xyent_model* m, int L, xyent_spectrum** out) {
  XYENT_REQUIRE(m);
  XYENT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new xyent_spectrum{xyent::chain::nu_spectrum_for(m->p, L)}; });
}

void xyent_spectrum_destroy(xyent_spectrum* s) { delete s; }

size_t xyent_spectrum_size(const xyent_spectrum* s) { return s ? s->nus.nus.size() : 0; }

xyent_status xyent_spectrum_values(const xyent_spectrum* s, double* out, size_t capacity) {
  XYENT_REQUIRE(s);
  XYENT_REQUIRE(out);
  if (capacity < s->nus.nus.size()) {
    g_last_error = "output buffer smaller than the spectrum";
    return XYENT_E_INVALID_ARGUMENT;
  }
  std::memcpy(out, s->nus.nus.data(), s->nus.nus.size() * sizeof(double));
  g_last_error.clear();
  return XYENT_OK;
}

xyent_status xyent_spectrum_density_top(const xyent_spectrum* s, size_t K, double* out) {
  XYENT_REQUIRE(s);
  XYENT_REQUIRE(out);
  return guarded([&] {
    const auto v = xyent::density::finite_l_density_eigenvalues(s->nus, K);
    for (size_t i = 0; i < K; ++i) out[i] = i < v.size() ? v[i] : 0.0;
  });
}

xyent_status xyent_entropy_exact(const xyent_spectrum* s, double* out) {
  XYENT_REQUIRE(s);
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::entropy::vn_entropy_exact(s->nus).value; });
}

xyent_status xyent_renyi_exact(const xyent_spectrum* s, double alpha, double* out) {
  XYENT_REQUIRE(s);
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::entropy::renyi_exact(s->nus, alpha).value; });
}

xyent_status xyent_entropy_xx_asymptotic(double h, int L, double* out) {
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::entropy::xx_entropy_asymptotic(h, L).value; });
}

xyent_status xyent_upsilon1(double* out) {
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::entropy::upsilon1(); });
}

xyent_status xyent_entropy_limit(const xyent_model* m, xyent_limit_method method, double* out) {
  XYENT_REQUIRE(m);
  XYENT_REQUIRE(out);
  return guarded([&] {
    using namespace xyent;
    const auto pc = chain::classify_case(m->p);
    const auto e = chain::modulus_k(m->p);
    switch (method) {
      case XYENT_LIMIT_SERIES: *out = entropy::vn_entropy_limit_series(e, pc.sigma).value; break;
      case XYENT_LIMIT_INTEGRAL: *out = entropy::vn_entropy_limit_integral(e, pc.sigma).value; break;
      case XYENT_LIMIT_CLOSED: *out = entropy::vn_entropy_closed(e, pc).value; break;
      default: throw DomainError("unknown limit method");
    }
  });
}

xyent_status xyent_renyi_limit(const xyent_model* m, double alpha, xyent_renyi_method method, double* out) {
  XYENT_REQUIRE(m);
  XYENT_REQUIRE(out);
  return guarded([&] {
    using namespace xyent;
    const auto pc = chain::classify_case(m->p);
    const auto e = chain::modulus_k(m->p);
    switch (method) {
      case XYENT_RENYI_QPRODUCT: *out = entropy::renyi_limit_qproduct(alpha, e, pc).value; break;
      case XYENT_RENYI_MODULAR: *out = entropy::renyi_limit_modular(alpha, e, pc).value; break;
      default: throw DomainError("unknown Renyi method");
    }
  });
}

xyent_status xyent_entropy_critical(const xyent_model* m, double* out) {
  XYENT_REQUIRE(m);
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::entropy::critical_entropy_approx(m->p).value; });
}

xyent_status xyent_detcheck(const xyent_model* m, double lambda_re, double lambda_im, int L, double proximity,
                            double* exact_log_abs, double* asym_log_abs, double* rel_gap) {
  XYENT_REQUIRE(m);
  return guarded([&] {
    using namespace xyent;
    const auto s = toeplitz::spectral_beta({lambda_re, lambda_im});
    toeplitz::LogValue exact, asym;
    if (m->p.gamma == 0.0) {
      asym = toeplitz::xx_char_det_asymptotic(s, m->p.h, L);
      exact = toeplitz::xx_char_det_exact(chain::nu_spectrum_for(m->p, L), s.lambda);
    } else {
      const auto pc = chain::classify_case(m->p);
      const auto e = chain::modulus_k(m->p);
      asym = toeplitz::xy_block_det_asymptotic(s, e, pc, L, proximity > 0 ? proximity : toeplitz::kProximity);
      exact = toeplitz::xy_char_det_exact(chain::nu_spectrum_for(m->p, L), s.lambda);
    }
    if (exact_log_abs) *exact_log_abs = exact.log_abs();
    if (asym_log_abs) *asym_log_abs = asym.log_abs();
    if (rel_gap) *rel_gap = toeplitz::relative_gap(asym, exact);
  });
}

xyent_status xyent_density_create(const xyent_model* m, int nmax, xyent_density** out) {
  XYENT_REQUIRE(m);
  XYENT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new xyent_density{xyent::density::density_spectrum(m->p, nmax)}; });
}

void xyent_density_destroy(xyent_density* d) { delete d; }

int xyent_density_nmax(const xyent_density* d) { return d ? d->spec.nmax : -1; }

double xyent_density_ratio(const xyent_density* d) { return d ? d->spec.ratio : 0.0; }

xyent_status xyent_density_lambda(const xyent_density* d, int n, double* out) {
  XYENT_REQUIRE(d);
  XYENT_REQUIRE(out);
  return guarded([&] {
    if (n < 0 || n > d->spec.nmax) throw xyent::DomainError("index outside 0..nmax");
    *out = d->spec.lambdas[n];
  });
}

xyent_status xyent_density_multiplicity_u64(const xyent_density* d, int n, uint64_t* out) {
  XYENT_REQUIRE(d);
  XYENT_REQUIRE(out);
  return guarded([&] {
    if (n < 0 || n > d->spec.nmax) throw xyent::DomainError("index outside 0..nmax");
    *out = xyent::density::to_u64(d->spec.mults[n]);
  });
}

xyent_status xyent_density_multiplicity_str(const xyent_density* d, int n, char* buf, size_t cap) {
  XYENT_REQUIRE(d);
  XYENT_REQUIRE(buf);
  return guarded([&] {
    if (n < 0 || n > d->spec.nmax) throw xyent::DomainError("index outside 0..nmax");
    const std::string s = d->spec.mults[n].str();
    if (s.size() + 1 > cap) throw xyent::DomainError("buffer too small for the multiplicity");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

xyent_status xyent_density_zeta(const xyent_density* d, double alpha, double* out) {
  XYENT_REQUIRE(d);
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::density::zeta_function(d->spec, alpha); });
}

xyent_status xyent_density_nmax_for_tail(const xyent_model* m, double alpha, double tol, int* out) {
  XYENT_REQUIRE(m);
  XYENT_REQUIRE(out);
  return guarded([&] { *out = xyent::density::nmax_for_tail(m->p, alpha, tol); });
}

double xyent_multiplicity_asymptotic(int n) {
  try {
    return xyent::density::multiplicity_asymptotic(n);
  } catch (...) {
    return 0.0;
  }
}

}  // extern "C"
