#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "xyent/xyent.h"

TEST_CASE("model lifecycle and classification") {
  xyent_model* m = nullptr;
  REQUIRE(xyent_model_create(0.5, 1.0, &m) == XYENT_OK);
  xyent_case c;
  int sigma = -1;
  CHECK(xyent_model_case(m, &c, &sigma) == XYENT_OK);
  CHECK(c == XYENT_CASE_1B);
  CHECK(sigma == 1);
  double k, kp, tau0;
  CHECK(xyent_model_modulus(m, &k, &kp, &tau0) == XYENT_OK);
  CHECK(k == doctest::Approx(std::sqrt(2.0 / 3.0)));
  xyent_model_destroy(m);

  CHECK(xyent_model_create(-1.0, 1.0, &m) == XYENT_E_DOMAIN);
  CHECK(m == nullptr);
  CHECK(std::string(xyent_last_error()).size() > 0);
  CHECK(xyent_model_create(1.0, 1.0, nullptr) == XYENT_E_INVALID_ARGUMENT);

  REQUIRE(xyent_model_create(1.0, 2.0, &m) == XYENT_OK);
  CHECK(xyent_model_case(m, &c, &sigma) == XYENT_E_BOUNDARY);
  double s;
  CHECK(xyent_entropy_limit(m, XYENT_LIMIT_SERIES, &s) == XYENT_E_BOUNDARY);
  xyent_model_destroy(m);
  xyent_model_destroy(nullptr);
}

TEST_CASE("spectrum and entropies") {
  xyent_model* m = nullptr;
  REQUIRE(xyent_model_create(0.5, 1.0, &m) == XYENT_OK);
  xyent_spectrum* s = nullptr;
  REQUIRE(xyent_spectrum_compute(m, 40, &s) == XYENT_OK);
  CHECK(xyent_spectrum_size(s) == 40);
  std::vector<double> nus(40);
  CHECK(xyent_spectrum_values(s, nus.data(), nus.size()) == XYENT_OK);
  CHECK(xyent_spectrum_values(s, nus.data(), 3) == XYENT_E_INVALID_ARGUMENT);
  double ex, lim, integ, closed;
  CHECK(xyent_entropy_exact(s, &ex) == XYENT_OK);
  CHECK(xyent_entropy_limit(m, XYENT_LIMIT_SERIES, &lim) == XYENT_OK);
  CHECK(xyent_entropy_limit(m, XYENT_LIMIT_INTEGRAL, &integ) == XYENT_OK);
  CHECK(xyent_entropy_limit(m, XYENT_LIMIT_CLOSED, &closed) == XYENT_OK);
  CHECK(std::abs(ex - lim) < 1e-6);
  CHECK(std::abs(integ - closed) < 1e-8);
  double r;
  CHECK(xyent_renyi_exact(s, 1.0, &r) == XYENT_E_DOMAIN);
  CHECK(xyent_renyi_exact(s, 2.0, &r) == XYENT_OK);
  double rq, rm;
  CHECK(xyent_renyi_limit(m, 2.0, XYENT_RENYI_QPRODUCT, &rq) == XYENT_OK);
  CHECK(xyent_renyi_limit(m, 2.0, XYENT_RENYI_MODULAR, &rm) == XYENT_OK);
  CHECK(std::abs(rq - rm) < 1e-10);
  std::vector<double> top(4);
  CHECK(xyent_spectrum_density_top(s, 4, top.data()) == XYENT_OK);
  CHECK(top[0] >= top[1]);
  double crit;
  CHECK(xyent_entropy_critical(m, &crit) == XYENT_E_HYPOTHESIS);
  xyent_spectrum_destroy(s);
  xyent_model_destroy(m);

  double u;
  CHECK(xyent_upsilon1(&u) == XYENT_OK);
  CHECK(std::abs(u - 0.4950179) < 1e-6);
  double xx;
  CHECK(xyent_entropy_xx_asymptotic(3.0, 10, &xx) == XYENT_E_DOMAIN);
}

TEST_CASE("determinant check") {
  xyent_model* m = nullptr;
  REQUIRE(xyent_model_create(0.5, 1.0, &m) == XYENT_OK);
  double ex, as, gap;
  CHECK(xyent_detcheck(m, 2.0, 0.0, 60, 0.0, &ex, &as, &gap) == XYENT_OK);
  CHECK(gap < 1e-3);
  CHECK(xyent_detcheck(m, 0.5, 0.0, 60, 0.0, &ex, &as, &gap) == XYENT_E_DOMAIN);
  CHECK(xyent_detcheck(m, 1.0001, 0.0, 60, 0.0, &ex, &as, &gap) == XYENT_E_PROXIMITY);
  xyent_model_destroy(m);
  REQUIRE(xyent_model_create(0.0, 0.0, &m) == XYENT_OK);
  CHECK(xyent_detcheck(m, 3.0, 0.0, 128, 0.0, &ex, &as, &gap) == XYENT_OK);
  CHECK(gap < 0.05);
  xyent_model_destroy(m);
}

TEST_CASE("density spectrum") {
  xyent_model* m = nullptr;
  REQUIRE(xyent_model_create(0.5, 1.0, &m) == XYENT_OK);
  xyent_density* d = nullptr;
  REQUIRE(xyent_density_create(m, 500, &d) == XYENT_OK);
  CHECK(xyent_density_nmax(d) == 500);
  std::uint64_t v;
  CHECK(xyent_density_multiplicity_u64(d, 1, &v) == XYENT_OK);
  CHECK(v == 4);
  CHECK(xyent_density_multiplicity_u64(d, 500, &v) == XYENT_E_OVERFLOW);
  char buf[64];
  CHECK(xyent_density_multiplicity_str(d, 500, buf, sizeof buf) == XYENT_OK);
  CHECK(std::string(buf).size() > 20);
  CHECK(xyent_density_multiplicity_str(d, 500, buf, 4) == XYENT_E_DOMAIN);
  CHECK(xyent_density_lambda(d, 501, nullptr) == XYENT_E_INVALID_ARGUMENT);
  double lam;
  CHECK(xyent_density_lambda(d, 501, &lam) == XYENT_E_DOMAIN);
  double z;
  CHECK(xyent_density_zeta(d, 1.0, &z) == XYENT_OK);
  CHECK(std::abs(z - 1.0) < 1e-10);
  int n;
  CHECK(xyent_density_nmax_for_tail(m, 1.0, 1e-14, &n) == XYENT_OK);
  CHECK(n > 0);
  CHECK(n < 64);
  xyent_density_destroy(d);
  xyent_model_destroy(m);
  CHECK(xyent_multiplicity_asymptotic(400) > 0.0);
  CHECK(xyent_multiplicity_asymptotic(0) == 0.0);
}

TEST_CASE("status names") {
  CHECK(std::string(xyent_status_name(XYENT_OK)) == "ok");
  CHECK(std::string(xyent_status_name(XYENT_E_CONVERGENCE)) == "convergence");
}
