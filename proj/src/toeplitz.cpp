#include "xyent/toeplitz.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <sstream>

#include "grid_fft.hpp"
#include "xyent/errors.hpp"

namespace xyent::toeplitz {

namespace {

constexpr double kPi = special::kPi;
constexpr double kTwoPi = 2.0 * kPi;
const cplx kI(0.0, 1.0);

cplx safe_log(cplx v, bool& zero) {
  if (v == cplx(0.0)) {
    zero = true;
    return 0.0;
  }
  return std::log(v);
}

bool is_negative_integer(cplx x) {
  if (std::abs(x.imag()) > 1e-14) return false;
  const double r = std::round(x.real());
  return r <= -1.0 && std::abs(x.real() - r) < 1e-14;
}

}  // namespace

LogValue LogValue::from_log(cplx l) {
  double ph = std::remainder(l.imag(), kTwoPi);
  if (ph <= -kPi) ph += kTwoPi;
  LogValue v;
  v.log = cplx(l.real(), ph);
  return v;
}

LogValue LogValue::from_value(cplx v) {
  if (v == cplx(0.0)) {
    LogValue z;
    z.zero = true;
    return z;
  }
  return from_log(std::log(v));
}

double relative_gap(const LogValue& a, const LogValue& b) {
  if (a.zero && b.zero) return 0.0;
  if (a.zero || b.zero) return HUGE_VAL;
  const cplx d = a.log - b.log;
  // expm1 on the complex difference: exp(x)(cos y + i sin y) - 1
  const double em = std::expm1(d.real());
  const double c = std::cos(d.imag()), s = std::sin(d.imag());
  const double re = em * c - 2.0 * std::pow(std::sin(0.5 * d.imag()), 2);
  const double im = (em + 1.0) * s;
  return std::hypot(re, im);
}

TwoSidedCoeffs fourier_coeffs(const Symbol& symbol, int n, int quad_points, bool smooth, double alias_tol) {
  if (n < 0) throw DomainError("half-bandwidth must be nonnegative");
  if (!detail::is_power_of_two(quad_points) || quad_points < 4 * n || quad_points < 4) {
    throw DomainError("quad_points must be a power of two >= max(4, 4n)");
  }
  const auto c = detail::grid_coefficients(symbol, quad_points);
  if (smooth) {
    const double band = detail::aliasing_band(c);
    if (band > alias_tol) {
      std::ostringstream os;
      os << "symbol declared smooth still has coefficients of size " << band << " near the Nyquist band on a "
         << quad_points << "-point grid";
      throw ResolutionError(os.str());
    }
  }
  TwoSidedCoeffs out(n);
  for (int k = -n; k <= n; ++k) out.at(k) = detail::coeff_at(c, k);
  return out;
}

DetResult dense_det(const Eigen::MatrixXcd& m) {
  DetResult r;
  if (m.rows() == 0) return r;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const auto& U = lu.matrixLU();
  cplx acc = 0.0;
  for (Eigen::Index i = 0; i < U.rows(); ++i) {
    if (U(i, i) == cplx(0.0)) {
      r.singular = true;
      r.det = LogValue::from_value(0.0);
      r.rcond = 0.0;
      return r;
    }
    acc += std::log(U(i, i));
  }
  if (lu.permutationP().determinant() < 0) acc += cplx(0.0, kPi);
  r.det = LogValue::from_log(acc);
  r.rcond = lu.rcond();
  return r;
}

DetResult toeplitz_det_exact(const TwoSidedCoeffs& coeffs, int L) {
  if (L < 1) throw DomainError("determinant dimension must be >= 1");
  if (coeffs.n < L - 1) throw DomainError("need coefficients for |k| <= L-1");
  Eigen::MatrixXcd T(L, L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) T(i, j) = coeffs[i - j];
  return dense_det(T);
}

DetResult block_toeplitz_det_exact(const BlockCoeffs& coeffs, int L) {
  if (L < 1) throw DomainError("determinant dimension must be >= 1");
  if (coeffs.n < L - 1 || int(coeffs.c.size()) != 2 * coeffs.n + 1) {
    throw DomainError("need block coefficients for |k| <= L-1");
  }
  Eigen::MatrixXcd T(2 * L, 2 * L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) T.block<2, 2>(2 * i, 2 * j) = coeffs[i - j];
  return dense_det(T);
}

LogValue xx_char_det_exact(const chain::NuSpectrum& nus, cplx lambda) {
  bool zero = false;
  cplx acc = 0.0;
  for (double v : nus.nus) acc += safe_log(lambda - v, zero);
  if (zero) return LogValue::from_value(0.0);
  return LogValue::from_log(acc);
}

LogValue xy_char_det_exact(const chain::NuSpectrum& nus, cplx lambda) {
  bool zero = false;
  cplx acc = double(nus.nus.size() % 2) * cplx(0.0, kPi);
  const cplx l2 = lambda * lambda;
  for (double v : nus.nus) acc += safe_log(l2 - v * v, zero);
  if (zero) return LogValue::from_value(0.0);
  return LogValue::from_log(acc);
}

SmoothSymbolFactorization::SmoothSymbolFactorization(TwoSidedCoeffs V) : V_(std::move(V)) {
  const int n = V_.n;
  auto exp_series = [n](auto coeff) {
    // b = exp(v), v(0) = 0: m b_m = sum_{k=1}^m k v_k b_{m-k}
    std::vector<cplx> b(n + 1, 0.0);
    b[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
      cplx s = 0.0;
      for (int k = 1; k <= m; ++k) s += double(k) * coeff(k) * b[m - k];
      b[m] = s / double(m);
    }
    return b;
  };
  bplus_ = exp_series([this](int k) { return V_[k]; });
  bminus_ = exp_series([this](int k) { return V_[-k]; });
}

SmoothSymbolFactorization SmoothSymbolFactorization::from_log_coefficients(TwoSidedCoeffs V) {
  return SmoothSymbolFactorization(std::move(V));
}

SmoothSymbolFactorization SmoothSymbolFactorization::constant_log(cplx V0) {
  TwoSidedCoeffs V(0);
  V.at(0) = V0;
  return SmoothSymbolFactorization(std::move(V));
}

SmoothSymbolFactorization SmoothSymbolFactorization::constant(cplx value) {
  if (value == cplx(0.0)) throw SingularSymbolError("constant symbol is zero");
  return constant_log(std::log(value));
}

SmoothSymbolFactorization SmoothSymbolFactorization::from_symbol(const Symbol& phi, int quad_points,
                                                                 double tail_tol) {
  const int N = quad_points;
  if (!detail::is_power_of_two(N) || N < 16) throw DomainError("quad_points must be a power of two >= 16");
  std::vector<cplx> f(N);
  for (int j = 0; j < N; ++j) {
    f[j] = phi(kTwoPi * j / N);
    if (!(std::abs(f[j]) > 0.0) || !std::isfinite(std::abs(f[j]))) {
      throw SingularSymbolError("symbol vanishes or is not finite on the unit circle");
    }
  }
  // continuous argument along the grid
  std::vector<double> arg(N);
  arg[0] = std::arg(f[0]);
  for (int j = 1; j < N; ++j) arg[j] = arg[j - 1] + std::arg(f[j] / f[j - 1]);
  const double total = arg[N - 1] + std::arg(f[0] / f[N - 1]) - arg[0];
  const long winding = std::lround(total / kTwoPi);
  if (winding != 0) {
    throw HypothesisError("symbol has nonzero winding number " + std::to_string(winding) +
                          "; the smooth factorization needs index 0");
  }
  std::vector<cplx> logs(N);
  for (int j = 0; j < N; ++j) logs[j] = cplx(std::log(std::abs(f[j])), arg[j]);
  const auto c = detail::grid_coefficients(std::move(logs));
  const double band = detail::aliasing_band(c);
  if (band > tail_tol) {
    std::ostringstream os;
    os << "log-symbol coefficients have not decayed below " << tail_tol << " (band max " << band << ")";
    throw ResolutionError(os.str());
  }
  const int n = N / 4;
  TwoSidedCoeffs V(n);
  for (int k = -n; k <= n; ++k) V.at(k) = detail::coeff_at(c, k);
  return SmoothSymbolFactorization(std::move(V));
}

cplx SmoothSymbolFactorization::log_bplus(cplx z) const {
  cplx s = 0.0, zk = 1.0;
  for (int k = 1; k <= V_.n; ++k) {
    zk *= z;
    s += V_[k] * zk;
  }
  return s;
}

cplx SmoothSymbolFactorization::log_bminus(cplx z) const {
  cplx s = 0.0, zk = 1.0;
  const cplx w = 1.0 / z;
  for (int k = 1; k <= V_.n; ++k) {
    zk *= w;
    s += V_[-k] * zk;
  }
  return s;
}

cplx SmoothSymbolFactorization::szego_log_constant() const {
  cplx s = 0.0;
  for (int k = 1; k <= V_.n; ++k) s += double(k) * V_[k] * V_[-k];
  return s;
}

SpectralParameter spectral_beta(cplx lambda) {
  if (lambda.imag() == 0.0 && std::abs(lambda.real()) <= 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << "spectral parameter lambda=" << lambda.real() << " lies on the cut [-1, 1]";
    throw DomainError(os.str());
  }
  const cplx w = (lambda + 1.0) / (lambda - 1.0);
  double a = std::arg(w);
  if (a >= kPi) a -= kTwoPi;
  const cplx lw(std::log(std::abs(w)), a);
  return {lambda, lw / cplx(0.0, kTwoPi)};
}

cplx beta_on_cut(double lambda) {
  if (!(std::abs(lambda) < 1.0)) throw DomainError("beta_on_cut needs |lambda| < 1");
  return cplx(-0.5, -std::atanh(lambda) / kPi);
}

LogValue szego_asymptotic(const SmoothSymbolFactorization& f, int L) {
  return fisher_hartwig_asymptotic(f, {}, L);
}

LogValue fisher_hartwig_asymptotic(const SmoothSymbolFactorization& f, const std::vector<FHSingularity>& sings,
                                   int L) {
  if (L < 1) throw DomainError("determinant dimension must be >= 1");
  std::vector<FHSingularity> s = sings;
  for (const auto& x : s) {
    if (!(x.theta >= 0.0 && x.theta < kTwoPi)) throw DomainError("singularity angle must lie in [0, 2 pi)");
    if (!(x.alpha.real() > -0.5)) throw HypothesisError("singularity needs Re alpha > -1/2");
    if (is_negative_integer(x.alpha + x.beta) || is_negative_integer(x.alpha - x.beta)) {
      throw HypothesisError("alpha +- beta is a negative integer");
    }
  }
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.theta < b.theta; });
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t k = j + 1; k < s.size(); ++k) {
      if (s[j].theta == s[k].theta) throw DomainError("singularities must sit at distinct points");
      if (!(std::abs(s[j].beta.real() - s[k].beta.real()) < 1.0)) {
        throw HypothesisError("|Re beta_j - Re beta_k| < 1 fails; outside the Fisher-Hartwig regime");
      }
    }
  }

  const double lnL = std::log(double(L));
  cplx acc = double(L) * f.V0() + f.szego_log_constant();
  for (const auto& x : s) {
    const cplx z = x.z();
    acc += (x.alpha * x.alpha - x.beta * x.beta) * lnL;
    acc += (-x.alpha + x.beta) * f.log_bplus(z) + (-x.alpha - x.beta) * f.log_bminus(z);
    acc += special::log_barnes_g(x.alpha + x.beta) + special::log_barnes_g(x.alpha - x.beta) -
           special::log_barnes_g(2.0 * x.alpha);
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t k = j + 1; k < s.size(); ++k) {
      const auto &a = s[j], &b = s[k];
      acc += 2.0 * (a.beta * b.beta - a.alpha * b.alpha) * std::log(std::abs(a.z() - b.z()));
      // (z_k / (z_j e^{i pi}))^{alpha_j beta_k - alpha_k beta_j}
      acc += (a.alpha * b.beta - b.alpha * a.beta) * kI * (b.theta - a.theta - kPi);
    }
  }
  return LogValue::from_log(acc);
}

FisherHartwigData xx_fisher_hartwig_data(const SpectralParameter& s, double h) {
  if (!(std::abs(h) < 2.0)) throw DomainError("XX symbol needs |h| < 2");
  const double kf = std::acos(std::abs(h) / 2.0);
  const cplx V0 = std::log(s.lambda + 1.0) - 2.0 * kI * kf * s.beta;
  FisherHartwigData d{SmoothSymbolFactorization::constant_log(V0), {}};
  d.sings.push_back({kf, 0.0, -s.beta});
  d.sings.push_back({kTwoPi - kf, 0.0, s.beta});
  return d;
}

LogValue xx_char_det_asymptotic(const SpectralParameter& s, double h, int L) {
  if (!(std::abs(h) < 2.0)) throw DomainError("XX determinant needs |h| < 2");
  if (L < 1) throw DomainError("determinant dimension must be >= 1");
  const double kf = std::acos(std::abs(h) / 2.0);
  const cplx b2 = s.beta * s.beta;
  cplx acc = -b2 * std::log(2.0 - 2.0 * std::cos(2.0 * kf));
  acc += 2.0 * special::log_barnes_g_pair(s.beta);
  acc += double(L) * (std::log(s.lambda + 1.0) - 2.0 * kI * kf * s.beta);
  acc -= 2.0 * b2 * std::log(double(L));
  return LogValue::from_log(acc);
}

LogValue widom_theta_prefactor(cplx beta, const special::EllipticModulus& e, int sigma) {
  const special::ModularPoint tp = special::ModularPoint::imaginary(e.tau0);
  const cplx half = 0.5 * double(sigma) * tp.tau();
  const cplx l = special::log_theta(3, beta + half, tp) + special::log_theta(3, beta - half, tp) -
                 2.0 * special::log_theta(3, half, tp);
  return LogValue::from_log(l);
}

double widom_theta_factor_on_cut(double lambda, const special::EllipticModulus& e, int sigma) {
  const special::ModularPoint tp = special::ModularPoint::imaginary(e.tau0);
  const cplx s = beta_on_cut(lambda) + 0.5 * double(sigma) * tp.tau();
  return special::theta(3, s, tp).real();
}

LogValue xy_block_det_asymptotic(const SpectralParameter& s, const special::EllipticModulus& e,
                                 const chain::PhaseCase& pc, int L, double proximity) {
  if (L < 1) throw DomainError("determinant dimension must be >= 1");
  const cplx lam = s.lambda;
  auto too_close = [&](double point) {
    return std::abs(lam - point) < proximity || std::abs(lam + point) < proximity;
  };
  if (too_close(1.0)) throw ProximityError("lambda within the proximity threshold of +-1");
  for (int m = 0;; ++m) {
    const double lm = std::tanh((m + 0.5 * (1 - pc.sigma)) * kPi * e.tau0);
    if (1.0 - lm < 0.5 * proximity) break;
    if (too_close(lm)) {
      std::ostringstream os;
      os.precision(17);
      os << "lambda within " << proximity << " of the prefactor zero +-" << lm << " (m=" << m << ")";
      throw ProximityError(os.str());
    }
  }
  const LogValue pre = widom_theta_prefactor(s.beta, e, pc.sigma);
  return LogValue::from_log(pre.log + double(L) * std::log(1.0 - lam * lam));
}

}  // namespace xyent::toeplitz
