#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// |z0|^2 |z1|^2 plus a pluriharmonic term that drops out of the Hessian.
double test_field(const Vec& z) { return std::norm(z(0)) * std::norm(z(1)) + (z(0) * z(0) * z(1)).real(); }

}  // namespace

TEST_CASE("Wirtinger Hessian of a polynomial") {
  const Vec z = point({{0.3, -0.2}, {0.1, 0.4}});
  const auto h = wirtinger_hessian<double>(test_field, z);
  CMatrix<double> expected(2, 2);
  expected << std::norm(z(1)), std::conj(z(0)) * z(1), z(0) * std::conj(z(1)), std::norm(z(0));
  CHECK((h.matrix() - expected).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("Wirtinger conjugate gradient") {
  const Vec z = point({{0.3, -0.2}, {0.1, 0.4}});
  const auto g = wirtinger_conj_gradient<double>(test_field, z);
  const cd g0 = z(0) * std::norm(z(1)) + std::conj(z(0) * z(1));
  const cd g1 = z(1) * std::norm(z(0)) + std::conj(z(0) * z(0)) / 2.0;
  CHECK(std::abs(g(0) - g0) < 1e-9);
  CHECK(std::abs(g(1) - g1) < 1e-9);
}

TEST_CASE("Wirtinger conjugate Jacobian separates holomorphic fields") {
  const Vec z = point({{0.5, 0.1}, {-0.2, 0.3}});
  auto holo = [](const Vec& w) {
    Vec out(2);
    out << w(0) * w(1), std::exp(w(0));
    return out;
  };
  CHECK(wirtinger_conj_jacobian<double>(holo, z).cwiseAbs().maxCoeff() < 1e-9);
  auto anti = [](const Vec& w) {
    Vec out(1);
    out << std::conj(w(0)) * w(1);
    return out;
  };
  const auto j = wirtinger_conj_jacobian<double>(anti, z);
  CHECK(std::abs(j(0, 0) - z(1)) < 1e-9);
  CHECK(std::abs(j(0, 1)) < 1e-9);
}

TEST_CASE("Richardson levels reduce the error") {
  auto f = [](const Vec& w) { return std::exp(std::norm(w(0))) * std::cos(w(1).real()); };
  const Vec z = point({{0.4, 0.2}, {0.3, -0.1}});
  const auto fine = wirtinger_hessian<double>(f, z, {1e-3, 4});
  const double one = max_abs_diff(wirtinger_hessian<double>(f, z, {1e-2, 1}), fine);
  const double three = max_abs_diff(wirtinger_hessian<double>(f, z, {1e-2, 3}), fine);
  CHECK(three < one / 100);
}

TEST_CASE("stencil leaving the domain is reported") {
  const auto f = P::linear(1, 1);
  const Vec z = point({{0.5, 0}, {0.84, 0}});  // A = 0.75 - 0.7056
  const DomainPoint<double> p(z, f);
  CHECK_THROWS_AS(potential_hessian_numeric(p, f, {0.1, 2}), StepTooLargeError);
  CHECK_NOTHROW(potential_hessian_numeric(p, f, {1e-3, 2}));
}
