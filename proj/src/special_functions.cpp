#include "xyent/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "xyent/errors.hpp"

namespace xyent::special {

namespace {

constexpr double kLog2Pi = 1.83787706640934548356;
constexpr double kTwoPi = 2.0 * kPi;

std::string describe(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

// n [log(1+z) - z + z^2/2] with the cubic and higher terms summed directly when |z| is small.
cplx log1p_remainder(cplx z, double n) {
  if (std::abs(z) < 0.25) {
    cplx zk = z * z * z;
    cplx sum = 0.0;
    for (int k = 3; k < 200; ++k) {
      cplx term = ((k % 2) ? 1.0 : -1.0) * zk / double(k);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
      zk *= z;
    }
    return n * sum;
  }
  return n * (std::log(1.0 + z) - z + 0.5 * z * z);
}

int head_terms(double magnitude) {
  double n = std::max(16.0, std::ceil(8.0 * magnitude));
  if (n > double(kTermBudget)) {
    throw ConvergenceError("Barnes G product: argument magnitude needs more than the term budget");
  }
  return int(n);
}

}  // namespace

ModularPoint::ModularPoint(cplx tau) : tau_(tau) {
  if (!(tau.imag() > 0.0)) {
    throw DomainError("modular point requires Im(tau) > 0, got tau=" + describe(tau));
  }
}

cplx ModularPoint::q() const { return std::exp(cplx(0.0, kPi) * tau_); }

double hurwitz_zeta_tail(int s, double a) {
  if (s < 2 || a < 8.0) throw DomainError("hurwitz_zeta_tail requires s >= 2 and a >= 8");
  static constexpr std::array<double, 8> b2j = {1.0 / 6,   -1.0 / 30,      1.0 / 42,  -1.0 / 30,
                                                5.0 / 66,  -691.0 / 2730, 7.0 / 6,   -3617.0 / 510};
  const double as = std::pow(a, -double(s));
  double sum = a * as / double(s - 1) + 0.5 * as;
  // rising factorial s(s+1)...(s+2j-2) / (2j)!, times a^{-s-2j+1}
  double coef = double(s) / 2.0;  // j = 1: s / 2!
  double apow = as / a;
  for (std::size_t j = 1; j <= b2j.size(); ++j) {
    double term = b2j[j - 1] * coef * apow;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    double m = double(2 * j);
    coef *= (s + m - 1) * (s + m) / ((m + 1) * (m + 2));
    apow /= a * a;
  }
  return sum;
}

cplx log_barnes_g(cplx x, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!(std::abs(x) <= 1.0 + 1e-15)) throw DomainError("Barnes G needs |x| <= 1, got x=" + describe(x));
  if (std::abs(x + 1.0) < 1e-15) throw DomainError("log G(0) is undefined (G has a zero there)");
  if (x == cplx(0.0)) return 0.0;

  const int N = head_terms(std::abs(x));
  cplx sum = 0.5 * x * kLog2Pi - 0.5 * (x + 1.0) * x - 0.5 * kEulerGamma * x * x;
  for (int n = 1; n <= N; ++n) sum += log1p_remainder(x / double(n), double(n));

  // sum_{n>N} sum_{k>=3} (-1)^{k+1} x^k / (k n^{k-1})
  cplx xk = x * x * x;
  for (std::size_t k = 3;; ++k) {
    if (k > kTermBudget) throw ConvergenceError("Barnes G tail did not reach tolerance");
    cplx term = ((k % 2) ? 1.0 : -1.0) * xk / double(k) * hurwitz_zeta_tail(int(k) - 1, N + 1.0);
    sum += term;
    if (std::abs(term) <= tol * std::max(std::abs(sum), 1e-300)) break;
    xk *= x;
  }
  return sum;
}

cplx barnes_g(cplx x, double tol) {
  if (std::abs(x) <= 1.0 + 1e-15 && std::abs(x + 1.0) < 1e-15) return 0.0;
  return std::exp(log_barnes_g(x, tol));
}

cplx log_barnes_g_pair(cplx beta, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  if (!(std::abs(beta.real()) <= 0.5)) {
    throw DomainError("G(1+beta)G(1-beta) needs |Re beta| <= 1/2, got beta=" + describe(beta));
  }
  if (beta == cplx(0.0)) return 0.0;

  const cplx b2 = beta * beta;
  const int N = head_terms(std::abs(beta));
  cplx sum = -(1.0 + kEulerGamma) * b2;
  for (int n = 1; n <= N; ++n) {
    // n log(1 - b2/n^2) + b2/n
    const double nn = double(n);
    cplx w = b2 / (nn * nn);
    if (std::abs(w) < 0.25) {
      cplx wj = w * w;
      cplx s = 0.0;
      for (int j = 2; j < 200; ++j) {
        cplx term = wj / double(j);
        s += term;
        if (std::abs(term) <= 1e-18 * std::abs(s)) break;
        wj *= w;
      }
      sum -= nn * s;
    } else {
      sum += nn * std::log(1.0 - w) + b2 / nn;
    }
  }

  // -sum_{j>=2} beta^{2j}/j * zeta_H(2j-1, N+1)
  cplx bj = b2 * b2;
  for (std::size_t j = 2;; ++j) {
    if (j > kTermBudget) throw ConvergenceError("Barnes G pair tail did not reach tolerance");
    cplx term = bj / double(j) * hurwitz_zeta_tail(int(2 * j - 1), N + 1.0);
    sum -= term;
    if (std::abs(term) <= tol * std::max(std::abs(sum), 1e-300)) break;
    bj *= b2;
  }
  return sum;
}

cplx barnes_g_pair(cplx beta, double tol) { return std::exp(log_barnes_g_pair(beta, tol)); }

namespace {

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    double an = 0.5 * (a + b);
    double bn = std::sqrt(a * b);
    if (std::abs(an - bn) <= 1e-16 * an) return 0.5 * (an + bn);
    a = an;
    b = bn;
  }
  return 0.5 * (a + b);
}

}  // namespace

double complete_elliptic_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("complete elliptic K needs 0 <= k < 1");
  return complete_elliptic_K_from_complement(std::sqrt((1.0 - k) * (1.0 + k)));
}

double complete_elliptic_K_from_complement(double kprime) {
  if (!(kprime > 0.0 && kprime <= 1.0)) throw DomainError("complementary modulus must lie in (0, 1]");
  return kPi / (2.0 * agm(1.0, kprime));
}

namespace {

struct ThetaSum {
  cplx lead;  // exponent of the dominant term
  cplx sum;   // sum of all terms divided by exp(lead)
};

ThetaSum theta_sum(int j, cplx s, const ModularPoint& tp, double tol) {
  if (j < 2 || j > 4) throw DomainError("theta index must be 2, 3 or 4");
  const cplx tau = tp.tau();
  const double T = tau.imag();
  if (!(T > 0.0)) throw ConvergenceError("theta series diverges for Im(tau) <= 0");
  const double c = (j == 2) ? 0.5 : 0.0;
  const cplx ipi(0.0, kPi);

  // Term index m = n + c; |term| peaks where m = -Im(s)/T.
  const double mstar = -s.imag() / T;
  const double n0 = std::round(mstar - c);
  const double m0 = n0 + c;
  cplx lead = ipi * tau * m0 * m0 + 2.0 * ipi * s * m0;
  if (j == 4) lead += ipi * n0;
  lead = cplx(lead.real(), std::remainder(lead.imag(), kTwoPi));

  auto rel = [&](double d) {
    cplx e = ipi * tau * (2.0 * m0 * d + d * d) + 2.0 * ipi * s * d;
    if (j == 4) e += ipi * d;
    return std::exp(e);
  };

  cplx sum = 1.0;
  for (std::size_t d = 1;; ++d) {
    if (d > kTermBudget) throw ConvergenceError("theta series exceeded the term budget");
    cplx up = rel(double(d));
    cplx down = rel(-double(d));
    sum += up + down;
    if (std::abs(up) + std::abs(down) <= tol * std::max(std::abs(sum), 1e-300)) break;
  }
  return {lead, sum};
}

}  // namespace

cplx theta(int j, cplx s, const ModularPoint& tau, double tol) {
  ThetaSum t = theta_sum(j, s, tau, tol);
  return std::exp(t.lead) * t.sum;
}

cplx log_theta(int j, cplx s, const ModularPoint& tau, double tol) {
  ThetaSum t = theta_sum(j, s, tau, tol);
  return t.lead + std::log(t.sum);
}

cplx modular_lambda(const ModularPoint& tau) {
  cplx r = theta(2, 0.0, tau) / theta(3, 0.0, tau);
  r *= r;
  return r * r;
}

cplx modular_lambda_complement(const ModularPoint& tau) {
  cplx r = theta(4, 0.0, tau) / theta(3, 0.0, tau);
  r *= r;
  return r * r;
}

EllipticModulus modulus_from_pair(double k, double kprime) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("modulus k must lie strictly inside (0, 1)");
  if (!(kprime > 0.0 && kprime < 1.0)) throw DomainError("modulus k' must lie strictly inside (0, 1)");
  EllipticModulus e;
  e.k = k;
  e.kprime = kprime;
  // K(k')/K(k) = agm(1,k') / agm(1,k)
  e.tau0 = agm(1.0, kprime) / agm(1.0, k);
  return e;
}

EllipticModulus tau0_from_modulus(double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("tau0 needs 0 < k < 1");
  return modulus_from_pair(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

}  // namespace xyent::special
