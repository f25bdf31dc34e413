#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("linear profiles are Einstein with constant scalar curvature") {
  for (const auto& f : {P::linear(1, 1), P::linear(2, 0.5), P::linear(0.3, 4)}) {
    for (Index n : {2, 3, 4}) {
      const double expected = -double(n) * (n + 1);
      for (const auto& p : grid(f, n, 25)) {
        const auto ric = ricci_closed_form(p, f);
        CHECK((ric + double(n + 1) * metric_closed_form(p, f)).max_abs() <= 1e-10);
        CHECK(std::abs(scalar_curvature(p, f) - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("scalar curvature of the exponential profile at (1, 0)") {
  const auto f = P::exponential();
  const DomainPoint<double> p(point({1, 0}), f);
  CHECK(std::abs(scalar_curvature(p, f) + 4) <= 1e-8);
  CHECK(std::abs(scalar_curvature_contraction(p, f) + 4) <= 1e-8);
}

TEST_CASE("Ricci closed form against -d dbar log det") {
  for (const auto& f : builtin_profiles()) {
    for (Index n : {2, 3}) {
      for (const auto& p : grid(f, n, 15)) CHECK(max_abs_diff(ricci_closed_form(p, f), ricci_numeric(p, f)) <= 1e-4);
    }
  }
  const auto bump = bump_profile();
  for (const auto& p : grid(bump, 3, 15)) {
    if (kahler_indicator(bump, p.radial()) < -1e-2) {
      CHECK(max_abs_diff(ricci_closed_form(p, bump), ricci_numeric(p, bump)) <= 1e-4);
    }
  }
}

TEST_CASE("scalar curvature equals the trace contraction") {
  for (const auto& f : builtin_profiles()) {
    for (Index n : {2, 3, 4}) {
      for (const auto& p : grid(f, n, 25)) {
        const double s = scalar_curvature(p, f);
        CHECK(std::abs(s - scalar_curvature_contraction(p, f)) <= 1e-10 * (1 + std::abs(s)));
      }
    }
  }
}

TEST_CASE("hyperbolic generalized curvatures") {
  const auto f = P::linear(1, 1);
  const auto r2 = generalized_scalars_closed(DomainPoint<double>(point({0.2, 0.3}), f), f);
  CHECK(r2(0) == doctest::Approx(-6));
  CHECK(r2(1) == doctest::Approx(9));
  const DomainPoint<double> p3(point({0.2, 0.3, {0.1, 0.1}}), f);
  const auto r3 = generalized_scalars_closed(p3, f);
  CHECK(r3(0) == doctest::Approx(-12));
  CHECK(r3(1) == doctest::Approx(48));
  CHECK(r3(2) == doctest::Approx(-64));
  const auto poly = generalized_scalars_poly(p3, f);
  CHECK((poly - r3).cwiseAbs().maxCoeff() <= 1e-8 * 65);
}

TEST_CASE("polynomial route agrees with the closed form") {
  for (const auto& f : builtin_profiles()) {
    for (Index n : {2, 3, 4}) {
      for (const auto& p : grid(f, n, 20)) {
        const auto closed = generalized_scalars_closed(p, f);
        const auto poly = generalized_scalars_poly(p, f);
        for (Index k = 0; k < n; ++k) CHECK(std::abs(poly(k) - closed(k)) <= 1e-8 * (1 + std::abs(closed(k))));
        CHECK(std::abs(closed(0) - scalar_curvature(p, f)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("polynomial route recovers elementary symmetric functions") {
  RVector<double> d(3);
  d << 2, -1, 0.5;
  const auto rho = generalized_scalars_from_operator<double>(d.cast<cd>().asDiagonal().toDenseMatrix());
  CHECK(rho(0) == doctest::Approx(1.5));
  CHECK(rho(1) == doctest::Approx(-2 + 1 - 0.5));
  CHECK(rho(2) == doctest::Approx(-1));
}

TEST_CASE("curvature record") {
  const auto f = P::power(2);
  const DomainPoint<double> p(point({0.3, 0.2, 0.1}), f);
  const auto rec = curvature_record(p, f);
  CHECK(rec.rho.size() == 3);
  CHECK(rec.rho(0) == rec.scal);
  CHECK(max_abs_diff(rec.ricci, ricci_closed_form(p, f)) == 0);
  CHECK(rec.point == p.coords());
}
