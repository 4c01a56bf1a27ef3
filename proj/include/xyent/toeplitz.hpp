#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "xyent/special_functions.hpp"
#include "xyent/xy_chain.hpp"

namespace xyent::toeplitz {

using cplx = std::complex<double>;
using Symbol = std::function<cplx(double)>;

inline constexpr double kProximity = 1e-3;
inline constexpr double kWienerHopfTail = 1e-12;

// c_k for |k| <= n.
struct TwoSidedCoeffs {
  int n = 0;
  std::vector<cplx> c;

  TwoSidedCoeffs() = default;
  explicit TwoSidedCoeffs(int half) : n(half), c(2 * half + 1, 0.0) {}
  cplx operator[](int k) const { return (k < -n || k > n) ? cplx(0.0) : c[k + n]; }
  cplx& at(int k) { return c[k + n]; }
};

struct BlockCoeffs {
  int n = 0;
  std::vector<Eigen::Matrix2cd> c;
  Eigen::Matrix2cd operator[](int k) const { return c[k + n]; }
};

// A complex number carried as its logarithm; phase reduced to (-pi, pi].
struct LogValue {
  cplx log{0.0, 0.0};
  bool zero = false;

  static LogValue from_log(cplx l);
  static LogValue from_value(cplx v);

  double log_abs() const { return zero ? -HUGE_VAL : log.real(); }
  double phase() const { return log.imag(); }
  cplx value() const { return zero ? cplx(0.0) : std::exp(log); }
};

// |a/b - 1| evaluated from the logs.
double relative_gap(const LogValue& a, const LogValue& b);

struct DetResult {
  LogValue det;
  bool singular = false;  // LU hit an exact zero pivot; det reported as 0
  double rcond = 1.0;     // reciprocal condition estimate of the LU

  cplx value() const { return det.value(); }
};

TwoSidedCoeffs fourier_coeffs(const Symbol& symbol, int n, int quad_points, bool smooth = true,
                              double alias_tol = 1e-10);

DetResult toeplitz_det_exact(const TwoSidedCoeffs& coeffs, int L);
DetResult block_toeplitz_det_exact(const BlockCoeffs& coeffs, int L);
DetResult dense_det(const Eigen::MatrixXcd& m);

// D_L(lambda) = det(lambda - G_L) = prod (lambda - nu) over signed XX eigenvalues.
LogValue xx_char_det_exact(const chain::NuSpectrum& nus, cplx lambda);
// D_L(lambda) = det(i lambda - B_L) = (-1)^L prod (lambda^2 - nu^2).
LogValue xy_char_det_exact(const chain::NuSpectrum& nus, cplx lambda);

// Smooth part e^{V(theta)} of a symbol: V_k, and the Wiener-Hopf factors b+-.
class SmoothSymbolFactorization {
 public:
  // Builds V = log phi on a grid. phi must be nonvanishing with winding number zero.
  static SmoothSymbolFactorization from_symbol(const Symbol& phi, int quad_points = 4096,
                                               double tail_tol = kWienerHopfTail);
  static SmoothSymbolFactorization from_log_coefficients(TwoSidedCoeffs V);
  static SmoothSymbolFactorization constant(cplx value);
  static SmoothSymbolFactorization constant_log(cplx V0);

  cplx V0() const { return V_[0]; }
  const TwoSidedCoeffs& V() const { return V_; }
  // log b+(z) = sum_{k>0} V_k z^k, log b-(z) = sum_{k>0} V_{-k} z^{-k}
  cplx log_bplus(cplx z) const;
  cplx log_bminus(cplx z) const;
  // Power series coefficients of b+(z) and of b-(1/z), leading 1.
  const std::vector<cplx>& bplus_coeffs() const { return bplus_; }
  const std::vector<cplx>& bminus_coeffs() const { return bminus_; }
  // sum_{k>=1} k V_k V_{-k}
  cplx szego_log_constant() const;

 private:
  explicit SmoothSymbolFactorization(TwoSidedCoeffs V);
  TwoSidedCoeffs V_;
  std::vector<cplx> bplus_, bminus_;
};

struct FHSingularity {
  double theta = 0.0;  // in [0, 2 pi)
  cplx alpha{0.0, 0.0};
  cplx beta{0.0, 0.0};

  cplx z() const { return std::polar(1.0, theta); }
};

struct SpectralParameter {
  cplx lambda;
  cplx beta;  // (1/2 pi i) log((lambda+1)/(lambda-1)), arg in [-pi, pi)
};

SpectralParameter spectral_beta(cplx lambda);
// beta on the cut (-1, 1), approached with the same arg convention: -1/2 - i atanh(lambda)/pi.
cplx beta_on_cut(double lambda);

LogValue szego_asymptotic(const SmoothSymbolFactorization& f, int L);
LogValue fisher_hartwig_asymptotic(const SmoothSymbolFactorization& f,
                                   const std::vector<FHSingularity>& sings, int L);

struct FisherHartwigData {
  SmoothSymbolFactorization smooth;
  std::vector<FHSingularity> sings;
};
// Jump data of lambda - phi(theta) for the XX symbol at field h.
FisherHartwigData xx_fisher_hartwig_data(const SpectralParameter& s, double h);

LogValue xx_char_det_asymptotic(const SpectralParameter& s, double h, int L);

// theta3(beta + sigma tau/2) theta3(beta - sigma tau/2) / theta3(sigma tau/2)^2, tau = i tau0.
LogValue widom_theta_prefactor(cplx beta, const special::EllipticModulus& e, int sigma);
// theta3(beta(lambda) + sigma tau/2) on the cut. Real there; changes sign at each +-lambda_m.
double widom_theta_factor_on_cut(double lambda, const special::EllipticModulus& e, int sigma);

LogValue xy_block_det_asymptotic(const SpectralParameter& s, const special::EllipticModulus& e,
                                 const chain::PhaseCase& pc, int L, double proximity = kProximity);

}  // namespace xyent::toeplitz
