#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "hartogs/errors.hpp"
#include "hartogs/types.hpp"

namespace hartogs {

/// Central-difference settings. Each estimate is evaluated at step,
/// step/2, ..., step/2^(levels-1) and combined by Richardson
/// extrapolation, removing one even power of the step per level.
template <typename Scalar>
struct FdOptions {
  Scalar step = Scalar(1e-3);
  int richardson_levels = 3;
};

template <typename Scalar>
using DomainPredicate = std::function<bool(const CVector<Scalar>&)>;

namespace detail {

/// Real coordinate `var` of z: even -> Re z_{var/2}, odd -> Im z_{var/2}.
template <typename Scalar>
CVector<Scalar> shifted(const CVector<Scalar>& z, Index var, Scalar delta) {
  CVector<Scalar> out = z;
  if (var % 2 == 0) {
    out(var / 2) += Complex<Scalar>(delta, 0);
  } else {
    out(var / 2) += Complex<Scalar>(0, delta);
  }
  return out;
}

template <typename Scalar, typename Value, typename EstimateAt>
Value richardson(EstimateAt&& estimate_at, const FdOptions<Scalar>& fd) {
  if (!(fd.step > 0)) throw ArgumentError("finite-difference step must be positive");
  if (fd.richardson_levels < 1) throw ArgumentError("richardson_levels must be >= 1");
  std::vector<Value> table;
  Scalar h = fd.step;
  for (int level = 0; level < fd.richardson_levels; ++level, h /= 2) table.push_back(estimate_at(h));
  Scalar factor = 1;
  for (int m = 1; m < fd.richardson_levels; ++m) {
    factor *= 4;
    for (int i = fd.richardson_levels - 1; i >= m; --i) {
      table[i] = Value((factor * table[i] - table[i - 1]) / (factor - 1));
    }
  }
  return table.back();
}

/// Wraps a field so that stencil points outside the domain (by predicate or
/// by a DomainError from the field itself) become StepTooLargeError.
template <typename Scalar, typename Field>
auto guarded(Field& f, const DomainPredicate<Scalar>& inside) {
  return [&f, &inside](const CVector<Scalar>& z) {
    if (inside && !inside(z)) throw StepTooLargeError("finite-difference stencil leaves the domain");
    try {
      return f(z);
    } catch (const DomainError& e) {
      throw StepTooLargeError(std::string("finite-difference stencil leaves the domain: ") + e.what());
    }
  };
}

}  // namespace detail

/// Complex Hessian d^2 f / dz_a dzbar_b of a real field on C^n, via
///   d/dz = (d/dx - i d/dy)/2,  d/dzbar = (d/dx + i d/dy)/2
/// applied to second-order central differences of the 2n real coordinates.
template <typename Scalar, typename Field>
HermitianMatrix<Scalar> wirtinger_hessian(Field&& f, const CVector<Scalar>& z, const FdOptions<Scalar>& fd = {},
                                          const DomainPredicate<Scalar>& inside = {}) {
  auto field = detail::guarded<Scalar>(f, inside);
  const Index n = z.size();
  const Index dims = 2 * n;
  using Real = RMatrix<Scalar>;

  auto real_hessian = [&](Scalar h) -> Real {
    Real r(dims, dims);
    const Scalar centre = field(z);
    for (Index i = 0; i < dims; ++i) {
      r(i, i) = (field(detail::shifted(z, i, h)) - 2 * centre + field(detail::shifted(z, i, -h))) / (h * h);
      for (Index j = i + 1; j < dims; ++j) {
        auto pp = field(detail::shifted(detail::shifted(z, i, h), j, h));
        auto pm = field(detail::shifted(detail::shifted(z, i, h), j, -h));
        auto mp = field(detail::shifted(detail::shifted(z, i, -h), j, h));
        auto mm = field(detail::shifted(detail::shifted(z, i, -h), j, -h));
        r(i, j) = r(j, i) = (pp - pm - mp + mm) / (4 * h * h);
      }
    }
    return r;
  };
  const Real r = detail::richardson<Scalar, Real>(real_hessian, fd);

  CMatrix<Scalar> w(n, n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index ua = 2 * a, va = 2 * a + 1, ub = 2 * b, vb = 2 * b + 1;
      w(a, b) = Complex<Scalar>(r(ua, ub) + r(va, vb), r(ua, vb) - r(va, ub)) / Scalar(4);
    }
  }
  return HermitianMatrix<Scalar>(w);
}

/// (df/dzbar_0, ..., df/dzbar_{n-1}) of a real field.
template <typename Scalar, typename Field>
CVector<Scalar> wirtinger_conj_gradient(Field&& f, const CVector<Scalar>& z, const FdOptions<Scalar>& fd = {},
                                        const DomainPredicate<Scalar>& inside = {}) {
  auto field = detail::guarded<Scalar>(f, inside);
  const Index n = z.size();
  auto estimate = [&](Scalar h) -> CVector<Scalar> {
    CVector<Scalar> g(n);
    for (Index a = 0; a < n; ++a) {
      Scalar dx = (field(detail::shifted(z, 2 * a, h)) - field(detail::shifted(z, 2 * a, -h))) / (2 * h);
      Scalar dy = (field(detail::shifted(z, 2 * a + 1, h)) - field(detail::shifted(z, 2 * a + 1, -h))) / (2 * h);
      g(a) = Complex<Scalar>(dx, dy) / Scalar(2);
    }
    return g;
  };
  return detail::richardson<Scalar, CVector<Scalar>>(estimate, fd);
}

/// J(a, c) = d F_a / dzbar_c for a vector field F : C^n -> C^m.
template <typename Scalar, typename Field>
CMatrix<Scalar> wirtinger_conj_jacobian(Field&& f, const CVector<Scalar>& z, const FdOptions<Scalar>& fd = {},
                                        const DomainPredicate<Scalar>& inside = {}) {
  auto field = detail::guarded<Scalar>(f, inside);
  const Index n = z.size();
  auto estimate = [&](Scalar h) -> CMatrix<Scalar> {
    CMatrix<Scalar> jac;
    for (Index c = 0; c < n; ++c) {
      CVector<Scalar> dx = (field(detail::shifted(z, 2 * c, h)) - field(detail::shifted(z, 2 * c, -h))) / (2 * h);
      CVector<Scalar> dy =
          (field(detail::shifted(z, 2 * c + 1, h)) - field(detail::shifted(z, 2 * c + 1, -h))) / (2 * h);
      if (jac.size() == 0) jac.resize(dx.size(), n);
      jac.col(c) = (dx + Complex<Scalar>(0, 1) * dy) / Scalar(2);
    }
    return jac;
  };
  return detail::richardson<Scalar, CMatrix<Scalar>>(estimate, fd);
}

}  // namespace hartogs
