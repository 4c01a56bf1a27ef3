#pragma once

#include <complex>
#include <cstddef>

namespace xyent::special {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kDefaultTol = 1e-14;
inline constexpr double kThetaTol = 1e-17;
inline constexpr std::size_t kTermBudget = 1000000;

// Point tau in the upper half plane together with its nome q = exp(i pi tau).
class ModularPoint {
 public:
  explicit ModularPoint(cplx tau);
  static ModularPoint imaginary(double t) { return ModularPoint(cplx(0.0, t)); }

  cplx tau() const { return tau_; }
  cplx q() const;

 private:
  cplx tau_;
};

struct EllipticModulus {
  double k = 0.0;
  double kprime = 0.0;
  double tau0 = 0.0;  // K(k') / K(k)
};

// G(1+x) for |x| <= 1. Returns 0 at x = -1.
cplx barnes_g(cplx x, double tol = kDefaultTol);
// log G(1+x); the point x = -1 is rejected.
cplx log_barnes_g(cplx x, double tol = kDefaultTol);

// G(1+beta) G(1-beta) from the even product, |Re beta| <= 1/2.
cplx barnes_g_pair(cplx beta, double tol = kDefaultTol);
cplx log_barnes_g_pair(cplx beta, double tol = kDefaultTol);

// Complete elliptic integral of the first kind, AGM evaluation.
double complete_elliptic_K(double k);
// Same integral taking the complementary modulus, accurate as k -> 1.
double complete_elliptic_K_from_complement(double kprime);

// Jacobi theta functions theta_j(s|tau), j in {2,3,4}.
cplx theta(int j, cplx s, const ModularPoint& tau, double tol = kThetaTol);
// log theta_j, summed around the dominant term so large |Im s| does not overflow.
// The imaginary part is determined only modulo 2 pi.
cplx log_theta(int j, cplx s, const ModularPoint& tau, double tol = kThetaTol);

// lambda(tau) = theta2^4 / theta3^4 at s = 0.
cplx modular_lambda(const ModularPoint& tau);
// 1 - lambda(tau), computed as theta4^4 / theta3^4 without cancellation.
cplx modular_lambda_complement(const ModularPoint& tau);

EllipticModulus tau0_from_modulus(double k);
// Variant for callers that already hold an accurate k'.
EllipticModulus modulus_from_pair(double k, double kprime);

// Hurwitz zeta sum_{n >= a} n^{-s} for integer s >= 2 and a >= 8.
double hurwitz_zeta_tail(int s, double a);

}  // namespace xyent::special
