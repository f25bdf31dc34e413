#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("linear profile jet and domain") {
  const auto f = P::linear(2, 0.5);
  CHECK(f.x0() == doctest::Approx(4));
  const auto jet = f.jet(1.0);
  CHECK(jet[0] == doctest::Approx(1.5));
  CHECK(jet[1] == doctest::Approx(-0.5));
  for (int k = 2; k <= 5; ++k) CHECK(jet[k] == 0);
  CHECK(f.contains(0));
  CHECK_FALSE(f.contains(4));
  CHECK_THROWS_AS(f.jet(4.0), DomainError);
  CHECK_THROWS_AS(f.jet(-0.1), DomainError);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(P::linear(0, 1), InvalidProfileError);
  CHECK_THROWS_AS(P::linear(1, -1), InvalidProfileError);
  CHECK_THROWS_AS(P::exponential(1, 0), InvalidProfileError);
  CHECK_THROWS_AS(P::exponential(-1, 1), InvalidProfileError);
  CHECK_THROWS_AS(P::power(0), InvalidProfileError);
  CHECK_THROWS_AS(P::table({0, 1}, {1, 1}), InvalidProfileError);
  CHECK_THROWS_AS(P::table({0, 1, 1}, {1, 1, 1}), InvalidProfileError);
  CHECK_THROWS_AS(P::table({0, 1, 2}, {1, 0, 1}), InvalidProfileError);
  CHECK_THROWS_AS(P::linear(1, 1).scaled(0), ArgumentError);
}

TEST_CASE("constant profile is unbounded and never Kähler") {
  const auto f = P::linear(1, 0);
  CHECK(f.unbounded());
  CHECK(kahler_indicator(f, 2.0) == 0);
}

TEST_CASE("exponential and power jets") {
  const auto e = P::exponential(3, 2);
  const auto je = e.jet(0.5);
  for (int k = 0; k <= 5; ++k) CHECK(je[k] == doctest::Approx(3 * std::pow(-2, k) * std::exp(-1)));

  const auto p = P::power(2);
  const auto jp = p.jet(0.25);
  CHECK(jp[0] == doctest::Approx(0.5625));
  CHECK(jp[1] == doctest::Approx(-1.5));
  CHECK(jp[2] == doctest::Approx(2));
  for (int k = 3; k <= 5; ++k) CHECK(jp[k] == 0);

  const auto q = P::power(2.5);
  CHECK(q.deriv(3, 0.5) == doctest::Approx(-2.5 * 1.5 * 0.5 * std::pow(0.5, -0.5)));
}

TEST_CASE("Kähler indicator values") {
  // (x F'/F)' = -c2 c1 / (c1 - c2 x)^2 for the linear profile.
  CHECK(kahler_indicator(P::linear(2, 0.5), 1.0) == doctest::Approx(-1.0 / 2.25));
  CHECK(kahler_indicator(P::exponential(), 3.0) == doctest::Approx(-1));
  CHECK(kahler_indicator(P::power(2), 0.5) == doctest::Approx(-8));
  const auto bump = bump_profile();
  CHECK(kahler_indicator(bump, 0.5) < 0);
  CHECK(kahler_indicator(bump, 1.0) == doctest::Approx(0).epsilon(1e-14));
  CHECK(kahler_indicator(bump, 2.0) > 0);
  CHECK_THROWS_AS(kahler_indicator(P::linear(1, 1), -0.5), DomainError);
  const auto negative = P::custom("negative", 1, [](double) { return P::Jet{-1, 0, 0, 0, 0, 0}; });
  CHECK_THROWS_AS(kahler_indicator(negative, 0.5), InvalidProfileError);
}

TEST_CASE("indicator is invariant under scaling F") {
  for (const auto& f : builtin_profiles()) {
    for (double lambda : {0.1, 3.0, 50.0}) {
      const auto g = f.scaled(lambda);
      CHECK(g(0.3) == doctest::Approx(lambda * f(0.3)));
      CHECK(std::abs(kahler_indicator(g, 0.3) - kahler_indicator(f, 0.3)) <= 1e-12);
    }
  }
}

TEST_CASE("derivative consistency") {
  for (const auto& f : builtin_profiles()) {
    for (double x : {0.1, 0.4, 0.7}) CHECK(derivative_consistency(f, x, 1e-3) <= 1e-4);
  }
  CHECK(derivative_consistency(bump_profile(), 1.3, 1e-3) <= 1e-4);
  CHECK(derivative_consistency(corrupted_profile(), 0.5, 1e-3) > 0.1);
  CHECK_THROWS_AS(derivative_consistency(P::exponential(), 0.5, 0.0), ArgumentError);
  CHECK_THROWS_AS(derivative_consistency(P::linear(1, 1), 0.999, 1e-3), DomainError);
  CHECK_THROWS_AS(derivative_consistency(P::exponential(), 0.001, 1e-3), DomainError);
}

TEST_CASE("table profile interpolates smooth data") {
  std::vector<double> xs, fs;
  for (int i = 0; i <= 60; ++i) {
    xs.push_back(0.05 * i);
    fs.push_back(std::exp(-xs.back()));
  }
  const auto t = P::table(xs, fs);
  CHECK(t.lower_precision());
  CHECK(t.kind() == ProfileKind::table);
  CHECK(t.x0() == doctest::Approx(3));
  const auto e = P::exponential();
  for (double x : {0.12, 1.01, 2.37}) {
    const auto jt = t.jet(x), je = e.jet(x);
    CHECK(std::abs(jt[0] - je[0]) < 1e-10);
    CHECK(std::abs(jt[1] - je[1]) < 1e-8);
    CHECK(std::abs(jt[2] - je[2]) < 1e-6);
  }
  CHECK_THROWS_AS(t.jet(3.0), DomainError);
}

TEST_CASE("table profile starting away from zero") {
  const auto t = P::table({0.5, 1, 1.5, 2, 2.5, 3, 3.5}, {3, 2.75, 2.5, 2.25, 2, 1.75, 1.5});
  CHECK(t.x_min() == 0.5);
  CHECK_FALSE(t.contains(0.25));
  CHECK(t.deriv(1, 1.2) == doctest::Approx(-0.5));
}
