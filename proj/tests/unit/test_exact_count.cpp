#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trisurf/count_table.hpp"

using namespace trisurf;

TEST_CASE("tau small values") {
  CHECK(tau(0, 0) == 1);
  CHECK(tau(1, 1) == 1);
  CHECK(tau(1, 0) == 4);
  CHECK(tau(2, 0) == 32);
  CHECK(tau(3, 0) == 336);
  CHECK(tau(2, 1) == 28);
  CHECK(tau(3, 1) == 664);
  CHECK(tau(3, 2) == 105);
  CHECK(tau(2, 2) == 0);
  CHECK(tau(-1, 0) == 0);
  CHECK(tau(3, -1) == 0);
}

TEST_CASE("recurrence consistency over the filled table") {
  const CountTable t(40);
  for (int n = 1; n <= 40; ++n)
    for (int g = 0; g <= genus_cap(n); ++g) CHECK(t.recurrence_rhs(n, g) == (n + 1) * t.tau(n, g));
}

TEST_CASE("genus sharpness up to n = 60") {
  const CountTable t(60);
  for (int n = 0; n <= 60; ++n)
    for (int g = 0; g <= 32; ++g) CHECK((t.tau(n, g) == 0) == (g > (n + 1) / 2));
}

TEST_CASE("parallel and serial fills agree, genus caps are exact") {
  const CountTable s(50, -1, Exec::Serial);
  const CountTable p(50, -1, Exec::Parallel);
  const CountTable c(50, 6, Exec::Serial);
  for (int n = 0; n <= 50; ++n)
    for (int g = 0; g <= genus_cap(n); ++g) {
      CHECK(s.tau(n, g) == p.tau(n, g));
      if (g <= 6) CHECK(s.tau(n, g) == c.tau(n, g));
    }
  CHECK_THROWS_AS(c.tau(50, 7), RangeRefusal);
  CHECK_THROWS_AS(s.tau(51, 0), RangeRefusal);
  CHECK(s.tau(51, 40) == 0);
}

TEST_CASE("h_truncated") {
  for (int K : {0, 1, 5, 50}) CHECK(h_truncated(0, K) == doctest::Approx(2.0));
  CHECK(h_truncated(0.05, 2) == doctest::Approx(3.64).epsilon(1e-12));
  for (double x : {0.01, 0.03, 0.05}) {
    double prev = h_truncated(x, 0);
    for (int K = 1; K <= 60; ++K) {
      const double cur = h_truncated(x, K);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
  int used = 0;
  const double h = h_default(0.03, &used);
  CHECK(used > 1);
  CHECK(used <= 200);
  CHECK(h == doctest::Approx(h_truncated(0.03, 200)).epsilon(1e-13));
  CHECK_THROWS_AS(h_default(0.5), DomainError);
}

TEST_CASE("ratio estimators") {
  const CountTable t(10);
  CHECK(lambda_est(t, 2, 1) == doctest::Approx(1.0 / 28));
  CHECK(lambda_est(t, 3, 1) == doctest::Approx(28.0 / 664));
  CHECK(lambda_est(t, 3, 2) == 0.0);
  CHECK_THROWS_AS(lambda_est(t, 2, 2), DomainError);
  CHECK(psi_direct(t, 2, 1) == doctest::Approx(4.0 * 32 / 28));
  CHECK(psi_direct(t, 3, 2) == doctest::Approx(9.0 * 664 / 105));
  CHECK_THROWS_AS(psi_direct(t, 2, 2), DomainError);
  CHECK(f_est(t, 1, 0) == doctest::Approx(std::log(4.0)));
  CHECK(f_est(t, 2, 1) == doctest::Approx((std::log(28.0) - 2 * std::log(2.0)) / 2));
  CHECK(f_est(t, 2, 1) == f_est(t, 2, 1));
  CHECK_THROWS_AS(f_est(t, 2, 2), DomainError);
}

TEST_CASE("psi formulas") {
  CHECK(psi_formula_literal(0.05, 2) == doctest::Approx(0.1816 / 2.25e-4).epsilon(1e-9));
  CHECK(psi_formula_literal(0.05, 2) == doctest::Approx(807.1).epsilon(1e-4));
  CHECK(psi_formula(0.05, 2) == doctest::Approx(0.1816 / (36 * 0.0025)).epsilon(1e-9));
  CHECK_THROWS_AS(psi_formula(0, 5), DomainError);
  CHECK_THROWS_AS(psi_formula_literal(0, 5), DomainError);
  double prev = psi_formula(0.03, 0);
  for (int K = 1; K <= 40; ++K) {
    const double cur = psi_formula(0.03, K);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("log of big integers") {
  mpz_class big = 1;
  for (int i = 0; i < 500; ++i) big *= 3;
  CHECK(log_mpz(big) == doctest::Approx(500 * std::log(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(log_mpz(0), DomainError);
}

TEST_CASE("psi consistency report") {
  const CountTable t(64);
  const auto rep = psi_consistency_report(t, 0.25, {8, 16, 32}, 100);
  REQUIRE(rep.rows.size() == 3);
  for (const auto& r : rep.rows) {
    CHECK(r.g == genus_for(0.25, r.n));
    CHECK(r.psi_direct > 0);
    CHECK(r.psi_formula > 0);
    CHECK(r.lambda > 0);
    CHECK(r.lambda < 1);
  }
  CHECK(rep.exp_minus_fprime.has_value());
  CHECK(psi_consistency_report(t, 0.25, {}, 100).rows.empty());
  CHECK_THROWS_AS(psi_consistency_report(t, 0.9, {10}, 100), DomainError);
  // both psi estimates approach each other as n grows
  const auto far = psi_consistency_report(t, 0.25, {32, 64}, 100);
  CHECK(far.rows[1].gap < far.rows[0].gap);
}
