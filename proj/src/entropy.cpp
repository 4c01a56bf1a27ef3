#include "xyent/entropy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "xyent/errors.hpp"

namespace xyent::entropy {

namespace {

constexpr double kPi = special::kPi;
constexpr double kLn2 = 0.69314718055994530942;
constexpr int kSeriesBudget = 100000;

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Renyi index needs alpha > 0");
  if (alpha == 1.0) throw DomainError("Renyi index alpha = 1 is excluded; use the von Neumann entropy");
}

void require_modulus(const EllipticModulus& e) {
  if (!(e.tau0 > 0.0) || !(e.k > 0.0 && e.k < 1.0) || !(e.kprime > 0.0 && e.kprime < 1.0)) {
    throw DomainError("elliptic modulus must have 0 < k, k' < 1 and tau0 > 0");
  }
}

void require_sigma(int sigma) {
  if (sigma != 0 && sigma != 1) throw DomainError("sigma must be 0 or 1");
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// e(1, tanh x) from the logistic pair, accurate when tanh x is close to 1.
double ladder_term(double x) {
  const double u = std::exp(-2.0 * x);
  const double l = std::log1p(u);
  return l + 2.0 * x * u / (1.0 + u);
}

EntropyResult limit_result(double v, Method m, double alpha = 1.0) {
  EntropyResult r;
  r.value = v;
  r.method = m;
  r.L = kInfiniteL;
  r.alpha = alpha;
  return r;
}

// sum_j log1p(q^{first + j step}), q^m evaluated in log space.
double log_qproduct(double logq, int first, int step, double tol) {
  double s = 0.0;
  for (int m = first, i = 0;; m += step, ++i) {
    if (i > kSeriesBudget) throw ConvergenceError("q-product exceeded the term budget");
    const double t = std::log1p(std::exp(logq * m));
    s += t;
    if (t <= tol * s || t == 0.0) break;
  }
  return s;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::ExactFiniteL: return "ExactFiniteL";
    case Method::XXAsymptotic: return "XXAsymptotic";
    case Method::LimitSeries: return "LimitSeries";
    case Method::LimitIntegral: return "LimitIntegral";
    case Method::ClosedFormElliptic: return "ClosedFormElliptic";
    case Method::RenyiQProduct: return "RenyiQProduct";
    case Method::RenyiModular: return "RenyiModular";
    case Method::CriticalApprox: return "CriticalApprox";
  }
  return "?";
}

double e_func(double x, double nu) {
  if (!(x + 1e-15 >= std::abs(nu))) {
    std::ostringstream os;
    os.precision(17);
    os << "e(x, nu) needs x >= |nu|, got x=" << x << " nu=" << nu;
    throw DomainError(os.str());
  }
  const double a = std::max(0.0, 0.5 * (x + nu));
  const double b = std::max(0.0, 0.5 * (x - nu));
  return -xlogx(a) - xlogx(b);
}

EntropyResult vn_entropy_exact(const NuSpectrum& nus) {
  EntropyResult r;
  for (double v : nus.nus) r.value += e_func(1.0, v);
  r.method = Method::ExactFiniteL;
  r.gamma = nus.params.gamma;
  r.h = nus.params.h;
  r.L = int(nus.nus.size());
  return r;
}

EntropyResult renyi_exact(const NuSpectrum& nus, double alpha) {
  require_alpha(alpha);
  double s = 0.0;
  for (double v : nus.nus) {
    const double p = 0.5 * (1.0 + v), q = 0.5 * (1.0 - v);
    s += std::log(std::pow(p, alpha) + std::pow(q, alpha));
  }
  EntropyResult r;
  r.value = s / (1.0 - alpha);
  r.method = Method::ExactFiniteL;
  r.gamma = nus.params.gamma;
  r.h = nus.params.h;
  r.L = int(nus.nus.size());
  r.alpha = alpha;
  return r;
}

double upsilon1_integrand(double t) {
  const double u = 0.5 * t;
  const double sh = std::sinh(u);
  return std::exp(-t) / (3.0 * t) + 1.0 / (t * sh * sh) - std::cosh(u) / (2.0 * sh * sh * sh);
}

double upsilon1_integrand_stable(double t) {
  if (t > 1.0) return upsilon1_integrand(t);
  if (t == 0.0) return -1.0 / 3.0;
  // sinh^3 u + 3 (sinh u - u cosh u) = sum_{k>=2} c_k u^{2k+1} / (2k+1)!
  const double u = 0.5 * t;
  double N = 0.0, upow = u * u * u * u * u, fact = 120.0, three = 243.0;
  for (int k = 2; k < 40; ++k) {
    const double term = ((three - 3.0) / 4.0 - 6.0 * k) * upow / fact;
    N += term;
    if (std::abs(term) < 1e-18 * std::abs(N)) break;
    upow *= u * u;
    fact *= double(2 * k + 2) * double(2 * k + 3);
    three *= 9.0;
  }
  const double sh = std::sinh(u);
  return std::expm1(-t) / (3.0 * t) + N / (6.0 * u * sh * sh * sh);
}

double upsilon1() {
  static const double value = [] {
    const double a = GK::integrate(upsilon1_integrand_stable, 0.0, 1.0, 15, 1e-13);
    const double b = GK::integrate(upsilon1_integrand, 1.0, 50.0, 15, 1e-13);
    return -(a + b);
  }();
  return value;
}

EntropyResult xx_entropy_asymptotic(double h, int L) {
  if (!(std::abs(h) < 2.0)) throw DomainError("XX asymptotics need |h| < 2");
  if (L < 2) throw DomainError("XX asymptotics need L >= 2");
  const double hh = 0.5 * h;
  EntropyResult r;
  r.value = std::log(double(L)) / 3.0 + std::log((1.0 - hh) * (1.0 + hh)) / 6.0 + kLn2 / 3.0 + upsilon1();
  r.method = Method::XXAsymptotic;
  r.gamma = 0.0;
  r.h = h;
  r.L = L;
  return r;
}

ThetaZeroLadder theta_zero_ladder(const EllipticModulus& e, int sigma, int M) {
  if (!(e.tau0 > 0.0)) throw DomainError("ladder needs tau0 > 0");
  require_sigma(sigma);
  if (M < 0) throw DomainError("ladder length must be nonnegative");
  ThetaZeroLadder z{e.tau0, sigma, {}};
  z.values.reserve(M + 1);
  for (int m = 0; m <= M; ++m) z.values.push_back(std::tanh((m + 0.5 * (1 - sigma)) * kPi * e.tau0));
  return z;
}

SeriesReport vn_entropy_limit_series_report(const EllipticModulus& e, int sigma, double tol) {
  if (!(e.tau0 > 0.0)) throw DomainError("limit series needs tau0 > 0");
  require_sigma(sigma);
  SeriesReport rep;
  // Two-sided sum over m in Z folds onto m >= 0 by tanh oddness.
  double s = sigma == 1 ? kLn2 : 0.0;
  const int first = sigma == 1 ? 1 : 0;
  const double r = std::exp(-2.0 * kPi * e.tau0);
  for (int m = first;; ++m) {
    if (m - first > kSeriesBudget) throw ConvergenceError("limit series exceeded the term budget");
    const double t = ladder_term((m + 0.5 * (1 - sigma)) * kPi * e.tau0);
    s += 2.0 * t;
    ++rep.terms;
    if (t < tol) {
      // later terms shrink at least by the factor r each
      rep.tail_bound = r < 1.0 ? 2.0 * t * r / (1.0 - r) : HUGE_VAL;
      break;
    }
  }
  rep.result = limit_result(s, Method::LimitSeries);
  return rep;
}

EntropyResult vn_entropy_limit_series(const EllipticModulus& e, int sigma, double tol) {
  return vn_entropy_limit_series_report(e, sigma, tol).result;
}

double limit_integrand(double x, const EllipticModulus& e, int sigma) {
  require_sigma(sigma);
  if (!(e.tau0 > 0.0)) throw DomainError("limit integrand needs tau0 > 0");
  x = std::abs(x);  // even in x
  // Triple product: ln R = sigma ln(1 + s2) + 2 sum_n ln(1 + 4 c_n s2 / (1 + c_n)^2),
  // s2 = sinh^2(pi x), c_n = q^{2n-1+sigma}, q = e^{-pi tau0}.
  const double w = std::exp(-2.0 * kPi * x);
  const double logq = -kPi * e.tau0;
  if (x == 0.0) {
    double v = double(sigma);
    for (int n = 1; n < kSeriesBudget; ++n) {
      const double c = std::exp(logq * (2 * n - 1 + sigma));
      const double t = 8.0 * c / ((1.0 + c) * (1.0 + c));
      v += t;
      if (t < 1e-18 * v) break;
    }
    return 0.5 * kPi * v;
  }
  const double s2 = x < 1.0 ? std::pow(std::sinh(kPi * x), 2) : (1.0 - w) * (1.0 - w) / (4.0 * w);
  double lnR = sigma ? std::log1p(s2) : 0.0;
  for (int n = 1;; ++n) {
    if (n > kSeriesBudget) throw ConvergenceError("limit integrand product did not converge");
    const double c = std::exp(logq * (2 * n - 1 + sigma));
    const double t = 2.0 * std::log1p(4.0 * c * s2 / ((1.0 + c) * (1.0 + c)));
    lnR += t;
    if (t <= 1e-18 * lnR || c == 0.0) break;
  }
  const double inv_sinh2 = x < 1.0 ? 1.0 / s2 : 4.0 * w / ((1.0 - w) * (1.0 - w));
  return 0.5 * kPi * lnR * inv_sinh2;
}

EntropyResult vn_entropy_limit_integral(const EllipticModulus& e, int sigma) {
  require_modulus(e);
  require_sigma(sigma);
  auto f = [&](double x) { return limit_integrand(x, e, sigma); };
  double X = 1.0;
  while (std::abs(f(X)) >= 1e-16) {
    X += 1.0;
    if (X > 1000.0) throw ConvergenceError("limit integrand did not decay");
  }
  double err = 0.0;
  const double v = GK::integrate(f, 0.0, X, 20, 1e-14, &err);
  if (!std::isfinite(v) || err > 1e-9) throw ConvergenceError("limit integral quadrature did not converge");
  return limit_result(v, Method::LimitIntegral);
}

EntropyResult vn_entropy_closed(const EllipticModulus& e, const PhaseCase& pc) {
  require_modulus(e);
  const double k = e.k, kp = e.kprime;
  const double K = special::complete_elliptic_K_from_complement(kp);
  const double Kp = special::complete_elliptic_K_from_complement(k);
  const double kk = 4.0 * K * Kp / kPi;
  double v;
  if (pc.label == chain::CaseLabel::Case2) {
    v = (std::log(16.0 / (k * k * kp * kp)) + (k * k - kp * kp) * kk) / 12.0;
  } else {
    v = (std::log(k * k / (16.0 * kp)) + (1.0 - 0.5 * k * k) * kk) / 6.0 + kLn2;
  }
  return limit_result(v, Method::ClosedFormElliptic);
}

EntropyResult renyi_limit_qproduct(double alpha, const EllipticModulus& e, const PhaseCase& pc, double tol) {
  require_alpha(alpha);
  require_modulus(e);
  const double logq = -alpha * kPi * e.tau0;
  const double a1 = alpha / (1.0 - alpha), b1 = 1.0 / (1.0 - alpha);
  double v;
  if (pc.label == chain::CaseLabel::Case2) {
    v = a1 * (kPi * e.tau0 / 12.0 + std::log(e.k * e.kprime / 4.0) / 6.0) +
        b1 * 2.0 * log_qproduct(logq, 1, 2, tol);
  } else {
    v = a1 * (-kPi * e.tau0 / 6.0 + std::log(e.kprime / (4.0 * e.k * e.k)) / 6.0) +
        b1 * 2.0 * log_qproduct(logq, 2, 2, tol) + b1 * kLn2;
  }
  return limit_result(v, Method::RenyiQProduct, alpha);
}

EntropyResult renyi_limit_modular(double alpha, const EllipticModulus& e, const PhaseCase& pc) {
  require_alpha(alpha);
  require_modulus(e);
  const auto tp = special::ModularPoint::imaginary(alpha * e.tau0);
  const double l3 = special::log_theta(3, 0.0, tp).real();
  const double loglam = 4.0 * (special::log_theta(2, 0.0, tp).real() - l3);
  const double logcomp = 4.0 * (special::log_theta(4, 0.0, tp).real() - l3);
  const double a1 = alpha / (1.0 - alpha), b1 = 1.0 / (1.0 - alpha);
  double v;
  if (pc.label == chain::CaseLabel::Case2) {
    v = a1 * std::log(e.k * e.kprime) / 6.0 - b1 * (loglam + logcomp) / 12.0 + kLn2 / 3.0;
  } else {
    v = a1 * std::log(e.kprime / (e.k * e.k)) / 6.0 + b1 * (2.0 * loglam - logcomp) / 12.0 + kLn2 / 3.0;
  }
  return limit_result(v, Method::RenyiModular, alpha);
}

constexpr double kCriticalWindow = 0.1;

EntropyResult critical_entropy_approx(const ModelParams& p) {
  if (!(p.gamma >= 0.0) || !(p.h >= 0.0)) throw DomainError("critical approximation needs gamma, h >= 0");
  EntropyResult r;
  r.method = Method::CriticalApprox;
  r.gamma = p.gamma;
  r.h = p.h;
  const double d = std::abs(2.0 - p.h);
  // closed window: h = 1.9 sits exactly on its edge
  if (d <= kCriticalWindow + 1e-12) {
    if (d == 0.0) throw BoundaryError("the near-critical formula diverges at h = 2");
    if (!(p.gamma > 0.0)) throw HypothesisError("the near-critical formula needs gamma > 0");
    r.value = -std::log(d) / 6.0 + std::log(4.0 * p.gamma) / 3.0;
    return r;
  }
  if (p.gamma < kCriticalWindow && p.h < 2.0) {
    if (!(p.gamma > 0.0)) throw HypothesisError("the small-gamma formula needs gamma > 0");
    r.value = -std::log(p.gamma) / 3.0 + std::log((2.0 - p.h) * (2.0 + p.h)) / 6.0 + kLn2 / 3.0;
    return r;
  }
  throw HypothesisError("critical approximation needs |2 - h| <= 0.1, or gamma < 0.1 with h < 2");
}

EntropyResult with_params(EntropyResult r, const ModelParams& p) {
  r.gamma = p.gamma;
  r.h = p.h;
  return r;
}

}  // namespace xyent::entropy
