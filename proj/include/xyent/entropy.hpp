#pragma once

#include <vector>

#include "xyent/special_functions.hpp"
#include "xyent/xy_chain.hpp"

namespace xyent::entropy {

using chain::ModelParams;
using chain::NuSpectrum;
using chain::PhaseCase;
using special::EllipticModulus;

enum class Method {
  ExactFiniteL,
  XXAsymptotic,
  LimitSeries,
  LimitIntegral,
  ClosedFormElliptic,
  RenyiQProduct,
  RenyiModular,
  CriticalApprox,
};

const char* to_string(Method m);

inline constexpr int kInfiniteL = -1;

struct EntropyResult {
  double value = 0.0;  // nats
  Method method = Method::ExactFiniteL;
  double gamma = 0.0;
  double h = 0.0;
  int L = kInfiniteL;
  double alpha = 1.0;
};

struct ThetaZeroLadder {
  double tau0 = 0.0;
  int sigma = 1;
  std::vector<double> values;  // lambda_m, m = 0..M
};

// e(x, nu) with 0 ln 0 = 0.
double e_func(double x, double nu);

EntropyResult vn_entropy_exact(const NuSpectrum& nus);
EntropyResult renyi_exact(const NuSpectrum& nus, double alpha);

double upsilon1();
// The raw integrand of upsilon1 and its cancellation-free form (both equal off t = 0).
double upsilon1_integrand(double t);
double upsilon1_integrand_stable(double t);
EntropyResult xx_entropy_asymptotic(double h, int L);

ThetaZeroLadder theta_zero_ladder(const EllipticModulus& e, int sigma, int M);

struct SeriesReport {
  EntropyResult result;
  int terms = 0;
  double tail_bound = 0.0;
};

SeriesReport vn_entropy_limit_series_report(const EllipticModulus& e, int sigma, double tol = 1e-16);
EntropyResult vn_entropy_limit_series(const EllipticModulus& e, int sigma, double tol = 1e-16);
// (pi/2) ln R(x) / sinh^2(pi x), continuous at x = 0.
double limit_integrand(double x, const EllipticModulus& e, int sigma);
EntropyResult vn_entropy_limit_integral(const EllipticModulus& e, int sigma);
EntropyResult vn_entropy_closed(const EllipticModulus& e, const PhaseCase& pc);

EntropyResult renyi_limit_qproduct(double alpha, const EllipticModulus& e, const PhaseCase& pc,
                                   double tol = 1e-15);
EntropyResult renyi_limit_modular(double alpha, const EllipticModulus& e, const PhaseCase& pc);

EntropyResult critical_entropy_approx(const ModelParams& p);

// Attaches (gamma, h) to a limit result; the limit operations only see (k, k', tau0).
EntropyResult with_params(EntropyResult r, const ModelParams& p);

}  // namespace xyent::entropy
