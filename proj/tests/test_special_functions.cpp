#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "xyent/errors.hpp"
#include "xyent/special_functions.hpp"

using namespace xyent;
using namespace xyent::special;

namespace {
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("barnes_g_pair basic values") {
  CHECK(std::abs(barnes_g_pair(0.0) - 1.0) < 1e-15);
  const cplx brute = std::exp(oracle::log_barnes_brute(0.25) + oracle::log_barnes_brute(-0.25));
  CHECK(rel(barnes_g_pair(0.25), brute) < 1e-11);
  CHECK(rel(barnes_g_pair(cplx(0, 0.3)), barnes_g_pair(cplx(0, -0.3))) < 1e-15);
  CHECK(std::abs(barnes_g_pair(cplx(0, 0.3)).imag()) < 1e-15);
}

TEST_CASE("barnes_g against the brute product") {
  CHECK(std::abs(barnes_g(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(barnes_g(1.0) - 1.0) < 1e-12);
  CHECK(std::abs(oracle::log_barnes_brute(1.0)) < 1e-10);
  for (cplx x : {cplx(0.5), cplx(-0.5), cplx(0.3, 0.4), cplx(-0.7, 0.2), cplx(0.9), cplx(0, -0.8)}) {
    CAPTURE(x);
    CHECK(std::abs(log_barnes_g(x) - oracle::log_barnes_brute(x)) < 1e-11);
  }
  CHECK(std::abs(barnes_g(-0.5).real() - oracle::barnes_g_half()) < 1e-13);
  CHECK(std::abs(barnes_g(-1.0)) == 0.0);
  CHECK_THROWS_AS(log_barnes_g(-1.0), DomainError);
  CHECK_THROWS_AS(barnes_g(1.2), DomainError);
}

TEST_CASE("barnes pair equals the product of single values") {
  CHECK(rel(barnes_g_pair(0.5), barnes_g(0.5) * barnes_g(-0.5)) < 1e-12);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.28, 0.28);
  for (int i = 0; i < 30; ++i) {
    const cplx b(u(rng), u(rng));
    CAPTURE(b);
    CHECK(rel(barnes_g_pair(b), barnes_g(b) * barnes_g(-b)) < 1e-9);
  }
  CHECK_THROWS_AS(barnes_g_pair(0.7), DomainError);
}

TEST_CASE("complete elliptic K") {
  CHECK(complete_elliptic_K(0.0) == doctest::Approx(oracle::kPi / 2).epsilon(1e-16));
  for (double k : {0.1, 0.5, 0.8, 0.95, 0.999999}) {
    CAPTURE(k);
    const double q = oracle::elliptic_K_quadrature(k);
    CHECK(std::abs(complete_elliptic_K(k) - q) / q < 1e-12);
  }
  CHECK(complete_elliptic_K(0.999999) > 7.0);
  double prev = oracle::kPi / 2;
  for (double k = 0.05; k < 1.0; k += 0.05) {
    const double v = complete_elliptic_K(k);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(complete_elliptic_K(1.0), DomainError);
  CHECK_THROWS_AS(complete_elliptic_K(-0.1), DomainError);
  const double kp = 1e-9;
  CHECK(complete_elliptic_K_from_complement(kp) == doctest::Approx(std::log(4.0 / kp)).epsilon(1e-12));
}

TEST_CASE("theta functions") {
  const auto t10 = ModularPoint::imaginary(10.0);
  CHECK(std::abs(theta(3, 0.0, t10) - 1.0) < 1e-13);
  CHECK_THROWS_AS(ModularPoint(cplx(0.3, -0.1)), DomainError);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0), w(0.3, 3.0);
  for (int i = 0; i < 40; ++i) {
    const cplx s(u(rng), 0.4 * u(rng));
    const ModularPoint tau(cplx(0.5 * u(rng), w(rng)));
    for (int j : {2, 3, 4}) {
      const cplx v = theta(j, s, tau);
      // theta3, theta4 are 1-periodic; theta2 is antiperiodic.
      const cplx shifted = theta(j, s + 1.0, tau);
      CHECK(std::abs(shifted - (j == 2 ? -v : v)) < 1e-12 * (1.0 + std::abs(v)));
      CHECK(std::abs(std::exp(log_theta(j, s, tau)) - v) < 1e-12 * (1.0 + std::abs(v)));
    }
  }
  for (double t : {0.5, 1.0, 2.5}) {
    const cplx s(0.2, 0.1);
    CHECK(std::abs(theta(3, s, ModularPoint::imaginary(t)) - oracle::theta3_naive(s, t)) < 1e-13);
  }
  // log_theta far from the real axis does not overflow
  const cplx far(0.1, 40.0);
  const cplx lt = log_theta(3, far, ModularPoint::imaginary(1.0));
  CHECK(std::isfinite(lt.real()));
  CHECK(lt.real() > 100.0);
}

TEST_CASE("modular lambda identities") {
  CHECK(std::abs(modular_lambda(ModularPoint::imaginary(1.0)) - 0.5) < 1e-12);
  CHECK(std::abs(modular_lambda(ModularPoint::imaginary(2.0)) + modular_lambda(ModularPoint::imaginary(0.5)) - 1.0) <
        1e-12);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> w(0.3, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double t = w(rng);
    const ModularPoint tau = ModularPoint::imaginary(t);
    const cplx lam = modular_lambda(tau);
    // lambda(tau + 1) = lambda / (lambda - 1)
    const ModularPoint tau1(cplx(1.0, t));
    CHECK(std::abs(modular_lambda(tau1) - lam / (lam - 1.0)) < 1e-11 * std::abs(lam / (lam - 1.0)));
    // lambda(-1/tau) = 1 - lambda(tau)
    const ModularPoint inv = ModularPoint::imaginary(1.0 / t);
    CHECK(std::abs(modular_lambda(inv) - (1.0 - lam)) < 1e-11);
    CHECK(std::abs(modular_lambda_complement(tau) - (1.0 - lam)) < 1e-11);
  }
}

TEST_CASE("tau0 from modulus") {
  CHECK(tau0_from_modulus(std::sqrt(0.5)).tau0 == doctest::Approx(1.0).epsilon(1e-14));
  const auto e = tau0_from_modulus(0.6);
  CHECK(e.kprime == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(std::abs(e.tau0 - oracle::elliptic_K_quadrature(0.8) / oracle::elliptic_K_quadrature(0.6)) < 1e-12);
  CHECK(std::abs(modular_lambda(ModularPoint::imaginary(e.tau0)) - 0.36) < 1e-10);
  for (double k : {0.1, 0.5, 0.9}) {
    const auto m = tau0_from_modulus(k);
    CHECK(m.k * m.k + m.kprime * m.kprime == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(modular_lambda(ModularPoint::imaginary(m.tau0)) - k * k) < 1e-10);
  }
  CHECK_THROWS_AS(tau0_from_modulus(0.0), DomainError);
  CHECK_THROWS_AS(tau0_from_modulus(1.0), DomainError);
}

TEST_CASE("hurwitz tail") {
  // sum_{n >= 10} 1/n^2 = pi^2/6 - H_9^(2)
  double h = 0.0;
  for (int n = 1; n < 10; ++n) h += 1.0 / (double(n) * n);
  CHECK(hurwitz_zeta_tail(2, 10.0) == doctest::Approx(oracle::kPi * oracle::kPi / 6 - h).epsilon(1e-14));
}
