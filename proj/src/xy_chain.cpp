#include "xyent/xy_chain.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "grid_fft.hpp"
#include "xyent/errors.hpp"

namespace xyent::chain {

namespace {

constexpr double kPi = special::kPi;

std::string params_text(const ModelParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(gamma=" << p.gamma << ", h=" << p.h << ")";
  return os.str();
}

void require_physical(const ModelParams& p) {
  if (!(p.gamma >= 0.0) || !(p.h >= 0.0) || !std::isfinite(p.gamma) || !std::isfinite(p.h)) {
    throw DomainError("model parameters need gamma >= 0 and h >= 0, got " + params_text(p));
  }
}

bool xx_closed_form(const ModelParams& p) { return p.gamma == 0.0 && std::abs(p.h) < 2.0; }

}  // namespace

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Case1a: return "Case1a";
    case CaseLabel::Case1b: return "Case1b";
    case CaseLabel::Case2: return "Case2";
  }
  return "?";
}

PhaseCase classify_case(const ModelParams& p) {
  require_physical(p);
  if (std::abs(p.h - 2.0) <= 2.0 * kBoundaryTol) {
    throw BoundaryError("critical field h = 2 has no phase case " + params_text(p));
  }
  if (p.gamma <= kBoundaryTol) {
    throw BoundaryError("isotropic line gamma = 0 is critical " + params_text(p));
  }
  if (p.h > 2.0) return {CaseLabel::Case2, 0};
  // h^2 = 4(1 - gamma^2) separates 1a from 1b; for gamma >= 1 only 1a remains.
  const double s = 4.0 * (1.0 - p.gamma) * (1.0 + p.gamma);
  const double hb = s > 0.0 ? std::sqrt(s) : 0.0;
  if (s >= 0.0 && std::abs(p.h - hb) <= kBoundaryTol * std::max(1.0, hb)) {
    throw BoundaryError("on the manifold h^2 = 4(1 - gamma^2) " + params_text(p));
  }
  if (p.h * p.h > s) return {CaseLabel::Case1a, 1};
  return {CaseLabel::Case1b, 1};
}

BranchPoints branch_points(const ModelParams& p) {
  const PhaseCase pc = classify_case(p);
  const double g = p.gamma, h = p.h;
  BranchPoints b;
  const cplx inf(std::numeric_limits<double>::infinity(), 0.0);
  if (pc.label == CaseLabel::Case1b) {
    const double r = std::sqrt(4.0 * (1.0 - g) * (1.0 + g) - h * h);
    b.lambda1 = cplx(h, -r) / (2.0 * (1.0 + g));
    b.lambda2 = 1.0 / std::conj(b.lambda1);
    b.A = b.lambda1;
    b.B = 1.0 / b.lambda2;
    b.C = 1.0 / b.lambda1;
    b.D = b.lambda2;
    return b;
  }
  // Rationalised form stays finite at gamma = 1 where lambda1 = 0.
  const double D = h * h - 4.0 * (1.0 - g) * (1.0 + g);
  const double den = h + std::sqrt(D);
  const double l1 = 2.0 * (1.0 - g) / den;
  const double l2 = 2.0 * (1.0 + g) / den;
  b.lambda1 = l1;
  b.lambda2 = l2;
  b.pole_at_origin = (l1 == 0.0);
  const cplx inv1 = b.pole_at_origin ? inf : cplx(1.0 / l1);
  b.A = l1;
  if (pc.label == CaseLabel::Case1a) {
    b.B = 1.0 / l2;
    b.C = l2;
  } else {
    b.B = l2;
    b.C = 1.0 / l2;
  }
  b.D = inv1;
  return b;
}

EllipticModulus modulus_k(const ModelParams& p) {
  const PhaseCase pc = classify_case(p);
  const double g = p.gamma, hh = 0.5 * p.h;
  double k = 0, kp = 0;
  switch (pc.label) {
    case CaseLabel::Case1a: {
      k = std::sqrt(hh * hh + g * g - 1.0) / g;
      kp = std::sqrt((1.0 - hh) * (1.0 + hh)) / g;
      break;
    }
    case CaseLabel::Case1b: {
      const double w = (1.0 - hh) * (1.0 + hh);
      k = std::sqrt((w - g * g) / w);
      kp = g / std::sqrt(w);
      break;
    }
    case CaseLabel::Case2: {
      const double r = std::sqrt(hh * hh + g * g - 1.0);
      k = g / r;
      kp = std::sqrt((hh - 1.0) * (hh + 1.0)) / r;
      break;
    }
  }
  if (!(k > 0.0 && k < 1.0 && kp > 0.0 && kp < 1.0)) {
    throw BoundaryError("modulus degenerates at " + params_text(p));
  }
  return special::modulus_from_pair(k, kp);
}

cplx symbol_phi(double theta, const ModelParams& p) {
  const cplx z(std::cos(theta) - 0.5 * p.h, -p.gamma * std::sin(theta));
  const double a = std::abs(z);
  if (!(a > 1e-300)) {
    throw SingularSymbolError("symbol vanishes on the unit circle at " + params_text(p));
  }
  return z / a;
}

Eigen::Matrix2cd symbol_phi0(double theta, const ModelParams& p) {
  const cplx f = symbol_phi(theta, p);
  Eigen::Matrix2cd m;
  m << 0.0, f, -1.0 / f, 0.0;
  return m;
}

std::vector<double> symbol_coefficients(const ModelParams& p, int n, int quad_points, int* used_points) {
  if (n < 0) throw DomainError("coefficient half-bandwidth must be nonnegative");
  std::vector<double> out(2 * n + 1, 0.0);
  if (used_points) *used_points = 0;

  if (xx_closed_form(p)) {
    const double kf = std::acos(std::abs(p.h) / 2.0);
    out[n] = 2.0 * kf / kPi - 1.0;
    for (int l = 1; l <= n; ++l) out[n + l] = out[n - l] = 2.0 * std::sin(kf * l) / (kPi * l);
    return out;
  }
  if (p.gamma == 0.0 && std::abs(p.h) > 2.0) {
    out[n] = p.h > 0 ? -1.0 : 1.0;
    return out;
  }

  const bool automatic = (quad_points == 0);
  int N = automatic ? detail::next_power_of_two(std::max(4096, 8 * n)) : quad_points;
  if (!detail::is_power_of_two(N) || N < 4 * n) {
    throw DomainError("quad_points must be a power of two >= 4L");
  }
  auto f = [&](double t) { return symbol_phi(t, p); };
  for (;;) {
    const auto c = detail::grid_coefficients(f, N);
    const double band = detail::aliasing_band(c);
    if (band <= kCoefficientTail) {
      for (int l = -n; l <= n; ++l) out[n + l] = detail::coeff_at(c, l).real();
      if (used_points) *used_points = N;
      return out;
    }
    if (!automatic || N >= kMaxQuadPoints) {
      std::ostringstream os;
      os << "Fourier grid of " << N << " points leaves trailing coefficients of " << band
         << " (> " << kCoefficientTail << ") at " << params_text(p);
      throw ResolutionError(os.str());
    }
    N *= 2;
  }
}

CorrelationMatrix build_correlation_matrix(const ModelParams& p, int L, int quad_points) {
  require_physical(p);
  if (L < 1) throw DomainError("block length L must be >= 1");
  int used = 0;
  const auto phi = symbol_coefficients(p, L - 1, quad_points, &used);
  const int n = L - 1;
  CorrelationMatrix c;
  c.kind = MatrixKind::MajoranaXY;
  c.L = L;
  c.params = p;
  c.quad_points = used;
  c.entries = Eigen::MatrixXd::Zero(2 * L, 2 * L);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      // block Pi_{i-j} = [[0, phi_{i-j}], [-phi_{j-i}, 0]]
      c.entries(2 * i, 2 * j + 1) = phi[n + i - j];
      c.entries(2 * i + 1, 2 * j) = -phi[n + j - i];
    }
  }
  return c;
}

CorrelationMatrix build_xx_matrix(double h, int L) {
  if (!(std::abs(h) < 2.0)) throw DomainError("XX matrix needs |h| < 2");
  if (L < 1) throw DomainError("block length L must be >= 1");
  const auto phi = symbol_coefficients({0.0, std::abs(h)}, L - 1);
  CorrelationMatrix c;
  c.kind = MatrixKind::SymmetricXX;
  c.L = L;
  c.params = {0.0, h};
  c.entries.resize(L, L);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) c.entries(i, j) = phi[L - 1 + i - j];
  return c;
}

NuSpectrum nu_spectrum(const CorrelationMatrix& c) {
  NuSpectrum s;
  s.kind = c.kind;
  s.params = c.params;
  std::vector<double> raw;
  if (c.kind == MatrixKind::SymmetricXX) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c.entries, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigensolverError("symmetric eigensolve failed");
    raw.assign(es.eigenvalues().data(), es.eigenvalues().data() + c.L);
  } else {
    // i B is Hermitian with spectrum {+nu, -nu}; keep the upper half.
    const Eigen::MatrixXcd H = cplx(0.0, 1.0) * c.entries.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigensolverError("Hermitian eigensolve failed");
    const auto& ev = es.eigenvalues();
    raw.assign(ev.data() + c.L, ev.data() + 2 * c.L);
  }
  const double lo = (c.kind == MatrixKind::SymmetricXX) ? -1.0 : 0.0;
  for (double v : raw) {
    if (!(std::abs(v) <= 1.0 + 1e-8)) {
      std::ostringstream os;
      os.precision(17);
      os << "nu = " << v << " outside [-1, 1]";
      throw EigensolverError(os.str());
    }
  }
  for (double& v : raw) v = std::clamp(v, lo, 1.0);
  std::sort(raw.begin(), raw.end(), std::greater<double>());
  s.nus = std::move(raw);
  return s;
}

NuSpectrum nu_spectrum_for(const ModelParams& p, int L) {
  if (xx_closed_form(p)) return nu_spectrum(build_xx_matrix(p.h, L));
  return nu_spectrum(build_correlation_matrix(p, L));
}

}  // namespace xyent::chain
