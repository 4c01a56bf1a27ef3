#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xyent/entropy.hpp"
#include "xyent/errors.hpp"
#include "xyent/toeplitz.hpp"
#include "xyent/xy_chain.hpp"

using namespace xyent;
using namespace xyent::toeplitz;

namespace {

constexpr double kPi = oracle::kPi;

// Closed-form coefficients of lambda - g(theta), g = +1 on |theta| < kF and -1 elsewhere.
TwoSidedCoeffs xx_char_coeffs(cplx lambda, double h, int n) {
  const double kf = std::acos(h / 2.0);
  TwoSidedCoeffs c(n);
  c.at(0) = lambda - (2.0 * kf / kPi - 1.0);
  for (int l = 1; l <= n; ++l) {
    c.at(l) = c.at(-l) = -2.0 * std::sin(kf * l) / (kPi * l);
  }
  return c;
}

double gap_to_exact(cplx lambda, double h, int L) {
  const auto s = spectral_beta(lambda);
  const auto exact = toeplitz_det_exact(xx_char_coeffs(lambda, h, L), L).det;
  return relative_gap(xx_char_det_asymptotic(s, h, L), exact);
}

}  // namespace

TEST_CASE("fourier coefficients of simple symbols") {
  const auto one = fourier_coeffs([](double) { return cplx(1.0); }, 4, 64);
  CHECK(std::abs(one[0] - 1.0) < 1e-15);
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(one[k]) + std::abs(one[-k]) < 1e-15);
  const auto e1 = fourier_coeffs([](double t) { return std::polar(1.0, t); }, 4, 64);
  CHECK(std::abs(e1[1] - 1.0) < 1e-15);
  CHECK(std::abs(e1[0]) + std::abs(e1[-1]) + std::abs(e1[2]) < 1e-15);

  // piecewise-constant XX symbol: grid error is O(1/N), so a fine grid and a loose tolerance
  const double h = 0.6, kf = std::acos(h / 2.0);
  const auto xx = fourier_coeffs([&](double t) { return cplx(std::cos(t) > h / 2.0 ? 1.0 : -1.0); }, 5, 1 << 20,
                                 false);
  for (int l = 1; l <= 5; ++l) CHECK(std::abs(xx[l] - 2.0 * std::sin(kf * l) / (kPi * l)) < 1e-5);
  CHECK_THROWS_AS(fourier_coeffs([&](double t) { return cplx(std::cos(t) > 0.3 ? 1.0 : -1.0); }, 5, 1024),
                  ResolutionError);
}

TEST_CASE("exact determinants") {
  TwoSidedCoeffs c(0);
  c.at(0) = 2.5;
  CHECK(std::abs(toeplitz_det_exact(c, 1).value() - 2.5) < 1e-15);
  TwoSidedCoeffs id(7);
  id.at(0) = 1.0;
  CHECK(std::abs(toeplitz_det_exact(id, 8).value() - 1.0) < 1e-15);

  // D_6(3) = prod (3 - nu) over the XX spectrum
  const auto nus = chain::nu_spectrum(chain::build_xx_matrix(0.0, 6));
  const auto lu = toeplitz_det_exact(xx_char_coeffs(3.0, 0.0, 6), 6).det;
  CHECK(relative_gap(lu, xx_char_det_exact(nus, 3.0)) < 1e-13);

  // the singular case is reported rather than thrown
  TwoSidedCoeffs z(2);
  const auto zr = toeplitz_det_exact(z, 3);
  CHECK(zr.singular);
  CHECK(zr.det.zero);
}

TEST_CASE("block determinant LU path equals the eigenvalue product") {
  const chain::ModelParams p{0.5, 1.0};
  const int L = 10;
  const auto c = chain::build_correlation_matrix(p, L);
  const auto nus = chain::nu_spectrum(c);
  BlockCoeffs bc;
  bc.n = L - 1;
  for (int k = -(L - 1); k <= L - 1; ++k) {
    // block (i, j) of B_L depends on i - j only
    const int i = std::max(k, 0), j = std::max(-k, 0);
    Eigen::Matrix2cd blk = -c.entries.block<2, 2>(2 * i, 2 * j).cast<cplx>();
    if (k == 0) blk += cplx(0.0, 2.0) * Eigen::Matrix2cd::Identity();
    bc.c.push_back(blk);
  }
  const auto lu = block_toeplitz_det_exact(bc, L).det;
  CHECK(relative_gap(lu, xy_char_det_exact(nus, 2.0)) < 1e-12);
}

TEST_CASE("Szego theorem") {
  const auto f = SmoothSymbolFactorization::constant(2.0);
  CHECK(std::abs(szego_asymptotic(f, 7).value() - 128.0) < 1e-12);

  const double a = 0.3;
  auto sym = [a](double t) { return cplx(std::exp(a * std::cos(t))); };
  const auto fac = SmoothSymbolFactorization::from_symbol(sym);
  CHECK(std::abs(fac.szego_log_constant() - a * a / 4.0) < 1e-14);
  CHECK(std::abs(fac.V0()) < 1e-15);
  double prev = HUGE_VAL;
  for (int L : {2, 4, 8, 20}) {
    const auto exact = toeplitz_det_exact(fourier_coeffs(sym, L, 1024), L).det;
    const double gap = relative_gap(szego_asymptotic(fac, L), exact);
    CAPTURE(L);
    CHECK(gap < 0.01);
    CHECK((gap < prev || gap < 1e-14));
    prev = gap;
  }
  CHECK(prev < 1e-12);

  // winding symbols are outside the theorem
  CHECK_THROWS_AS(SmoothSymbolFactorization::from_symbol([](double t) { return std::polar(2.0, t); }),
                  HypothesisError);
}

TEST_CASE("Wiener-Hopf factors") {
  const double a = 0.4;
  const auto fac = SmoothSymbolFactorization::from_symbol([a](double t) { return cplx(std::exp(a * std::cos(t))); });
  const cplx z = std::polar(0.7, 0.3);
  CHECK(std::abs(fac.log_bplus(z) - a * z / 2.0) < 1e-14);
  CHECK(std::abs(fac.log_bminus(1.0 / z) - a * z / 2.0) < 1e-14);
  // power series of b+ = exp(a z / 2)
  const auto& bp = fac.bplus_coeffs();
  REQUIRE(bp.size() > 4);
  CHECK(std::abs(bp[0] - 1.0) < 1e-15);
  CHECK(std::abs(bp[3] - std::pow(a / 2, 3) / 6.0) < 1e-15);
}

TEST_CASE("Fisher-Hartwig with no singularities is Szego") {
  const auto fac = SmoothSymbolFactorization::from_symbol([](double t) { return cplx(2.0 + std::cos(t), 0.3 * std::sin(t)); });
  for (int L : {5, 50}) {
    CHECK(std::abs(fisher_hartwig_asymptotic(fac, {}, L).log - szego_asymptotic(fac, L).log) < 1e-14);
  }
}

TEST_CASE("Fisher-Hartwig pure singularity against the exact product") {
  const double alpha = 0.3, beta = 0.2;
  // closed-form coefficients reproduce the exact product formula
  for (int L : {1, 4, 12}) {
    TwoSidedCoeffs c(L - 1);
    for (int k = -(L - 1); k <= L - 1; ++k) c.at(k) = oracle::pure_fh_coefficient(alpha, beta, k);
    CHECK(std::abs(toeplitz_det_exact(c, L).det.log_abs() - oracle::pure_fh_log_det(alpha, beta, L)) < 1e-12);
  }
  const auto flat = SmoothSymbolFactorization::constant(1.0);
  double prev = HUGE_VAL;
  for (int L : {16, 32, 64, 128}) {
    const auto asym = fisher_hartwig_asymptotic(flat, {{0.0, alpha, beta}}, L);
    const double gap = std::abs(std::expm1(asym.log_abs() - oracle::pure_fh_log_det(alpha, beta, L)));
    CAPTURE(L);
    CHECK(gap < prev);
    CHECK(std::abs(asym.phase()) < 1e-14);
    prev = gap;
  }
  CHECK(prev < 1e-3);

  // pure root singularities: L^{sum a^2} prod G(1+a)^2/G(1+2a) prod |z_j - z_k|^{-2 a_j a_k}
  const std::vector<FHSingularity> roots{{0.5, 0.25, 0.0}, {2.5, 0.4, 0.0}};
  const int L = 40;
  cplx expect = (0.25 * 0.25 + 0.4 * 0.4) * std::log(double(L));
  for (const auto& s : roots) expect += 2.0 * special::log_barnes_g(s.alpha) - special::log_barnes_g(2.0 * s.alpha);
  expect -= 2.0 * 0.25 * 0.4 * std::log(std::abs(roots[0].z() - roots[1].z()));
  CHECK(std::abs(fisher_hartwig_asymptotic(flat, roots, L).log - expect) < 1e-13);
}

TEST_CASE("Fisher-Hartwig hypotheses") {
  const auto flat = SmoothSymbolFactorization::constant(1.0);
  CHECK_THROWS_AS(fisher_hartwig_asymptotic(flat, {{1.0, -0.6, 0.0}}, 10), HypothesisError);
  // |Re beta_j - Re beta_k| < 1 is a pairwise condition
  CHECK_NOTHROW(fisher_hartwig_asymptotic(flat, {{1.0, 0.0, 0.7}}, 10));
  CHECK_THROWS_AS(fisher_hartwig_asymptotic(flat, {{1.0, 0.0, 0.6}, {2.0, 0.0, -0.6}}, 10), HypothesisError);
  CHECK_THROWS_AS(fisher_hartwig_asymptotic(flat, {{1.0, 0.0, 0.1}, {1.0, 0.0, -0.1}}, 10), DomainError);
}

TEST_CASE("XX characteristic determinant") {
  for (cplx lam : {cplx(3.0), cplx(2.0, 1.0), cplx(-5.0)}) {
    for (double h : {0.0, 0.8}) {
      const auto s = spectral_beta(lam);
      const auto d = xx_fisher_hartwig_data(s, h);
      for (int L : {16, 64, 128}) {
        const auto a = xx_char_det_asymptotic(s, h, L);
        const auto b = fisher_hartwig_asymptotic(d.smooth, d.sings, L);
        CHECK(relative_gap(a, b) < 1e-12);
      }
    }
  }
  for (double h : {0.0, 0.8}) {
    double prev = HUGE_VAL;
    for (int L : {16, 32, 64, 128}) {
      const double g = gap_to_exact(3.0, h, L);
      CHECK(g < prev);
      prev = g;
    }
    CHECK(prev < 0.05);
  }
  // large lambda: D_L ~ lambda^L
  const double big = 1e6;
  CHECK(std::abs(xx_char_det_asymptotic(spectral_beta(big), 0.0, 50).log_abs() - 50 * std::log(big)) < 1e-4);
  CHECK_THROWS_AS(xx_char_det_asymptotic(spectral_beta(3.0), 2.5, 10), DomainError);
}

TEST_CASE("spectral parameter branch") {
  CHECK_THROWS_AS(spectral_beta(0.5), DomainError);
  CHECK_THROWS_AS(spectral_beta(-1.0), DomainError);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  int n = 0;
  while (n < 100) {
    const cplx lam(u(rng), u(rng));
    if (std::abs(lam.imag()) < 1e-3 && std::abs(lam.real()) <= 1.0) continue;
    ++n;
    const cplx b = spectral_beta(lam).beta;
    CHECK(std::abs(b.real()) < 0.5);
    // beta solves (lambda + 1)/(lambda - 1) = e^{2 pi i beta}
    CHECK(std::abs(std::exp(cplx(0, 2 * kPi) * b) - (lam + 1.0) / (lam - 1.0)) < 1e-12 * std::abs((lam + 1.0) / (lam - 1.0)));
  }
  for (double x : {1.5, 3.0, 10.0}) {
    const cplx up = spectral_beta(cplx(x, 1e-9)).beta, down = spectral_beta(cplx(x, -1e-9)).beta;
    CHECK(std::abs(up - down) < 1e-8);
  }
}

TEST_CASE("block theta asymptotics") {
  const chain::ModelParams p{0.5, 1.0};
  const auto pc = chain::classify_case(p);
  const auto e = chain::modulus_k(p);
  const auto nus = chain::nu_spectrum_for(p, 60);
  const auto s = spectral_beta(2.0);
  const auto asym = xy_block_det_asymptotic(s, e, pc, 60);
  CHECK(relative_gap(asym, xy_char_det_exact(nus, 2.0)) < 1e-3);

  // prefactor is the L-independent part of D_L / (1 - lambda^2)^L
  const cplx rest = xy_char_det_exact(nus, 2.0).log - 60.0 * std::log(cplx(1.0 - 4.0));
  const cplx pref = widom_theta_prefactor(s.beta, e, pc.sigma).log;
  CHECK(std::abs(std::expm1(rest.real() - pref.real())) < 1e-3);

  CHECK(std::abs(widom_theta_prefactor(0.0, e, 1).log) < 1e-15);
  CHECK(std::abs(widom_theta_prefactor(spectral_beta(1e8).beta, e, 1).log) < 1e-7);

  CHECK_THROWS_AS(xy_block_det_asymptotic(spectral_beta(1.0005), e, pc, 60), ProximityError);
  const double lam1 = entropy::theta_zero_ladder(e, pc.sigma, 2).values[1];
  CHECK_THROWS_AS(xy_block_det_asymptotic(spectral_beta(cplx(lam1, 5e-4)), e, pc, 60), ProximityError);
  CHECK_NOTHROW(xy_block_det_asymptotic(spectral_beta(cplx(lam1, 5e-4)), e, pc, 60, 1e-4));
}

TEST_CASE("theta factor changes sign at the ladder points") {
  for (const chain::ModelParams p : {chain::ModelParams{0.5, 1.0}, chain::ModelParams{1.0, 3.0}}) {
    const auto pc = chain::classify_case(p);
    const auto e = chain::modulus_k(p);
    const auto ladder = entropy::theta_zero_ladder(e, pc.sigma, 3).values;
    for (double lm : ladder) {
      for (double sgn : {1.0, -1.0}) {
        const double x = sgn * lm;
        if (!(std::abs(x) + 1e-8 < 1.0)) continue;
        const double lo = widom_theta_factor_on_cut(x - 1e-8, e, pc.sigma);
        const double hi = widom_theta_factor_on_cut(x + 1e-8, e, pc.sigma);
        CAPTURE(x);
        CHECK(lo * hi < 0.0);
      }
    }
    // and keeps its sign between consecutive points
    const double mid = 0.5 * (ladder[0] + ladder[1]);
    CHECK(widom_theta_factor_on_cut(mid - 1e-3, e, pc.sigma) * widom_theta_factor_on_cut(mid + 1e-3, e, pc.sigma) > 0);
  }
}
