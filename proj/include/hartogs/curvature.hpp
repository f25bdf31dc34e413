#pragma once

#include <cmath>

#include "hartogs/errors.hpp"
#include "hartogs/geometry.hpp"

namespace hartogs {

template <typename Scalar>
struct CurvatureRecord {
  CVector<Scalar> point;
  HermitianMatrix<Scalar> ricci;
  Scalar scal = 0;
  /// rho_0 .. rho_{n-1}; rho_0 == scal.
  RVector<Scalar> rho;
};

/// Ric = -(n+1) h - L(|z_0|^2) E_00.
///
/// log det h + (n+1) log A = log B depends on |z_0|^2 only, so its complex
/// Hessian has a single nonzero entry L at (0,0); every other Ricci entry is
/// the Einstein part -(n+1) g.
template <typename Scalar>
HermitianMatrix<Scalar> ricci_closed_form(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto r = radial_coefficients(profile, point.radial());
  const auto h = metric_closed_form(point, profile);
  CMatrix<Scalar> ric = -Scalar(point.dim() + 1) * h.matrix();
  ric(0, 0) -= r.L;
  return HermitianMatrix<Scalar>(ric);
}

/// -d dbar log det h by finite differences of the closed-form determinant.
template <typename Scalar>
HermitianMatrix<Scalar> ricci_numeric(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile,
                                      const FdOptions<Scalar>& fd = {}) {
  auto log_det = [&profile](const CVector<Scalar>& z) {
    return std::log(det_closed_form(DomainPoint<Scalar>(z, profile), profile));
  };
  return -wirtinger_hessian<Scalar>(log_det, point.coords(), fd, domain_predicate(profile));
}

/// Scalar curvature -(A/B) F L - n(n+1). The equivalent form
/// -n(n+1) + G A is evaluated as well; the two must agree to 1e-12 relative.
template <typename Scalar>
Scalar scalar_curvature(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto r = radial_coefficients(profile, point.radial());
  const Scalar n = Scalar(point.dim());
  const Scalar a = point.gap();
  const Scalar via_l = -(a / r.B) * r.jet[0] * r.L - n * (n + 1);
  const Scalar via_g = -n * (n + 1) + r.G * a;
  if (std::abs(via_l - via_g) > Scalar(1e-12) * (1 + std::abs(via_l))) {
    throw NumericFailureError("scalar curvature routes disagree");
  }
  return via_l;
}

/// sum_{a,b} g^{b abar} Ric_{a bbar} = Re tr(h^{-1} Ric), from the closed-form
/// inverse and Ricci matrices.
template <typename Scalar>
Scalar scalar_curvature_contraction(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto inv = inverse_metric_closed_form(point, profile);
  const auto ric = ricci_closed_form(point, profile);
  return (inv.matrix() * ric.matrix()).trace().real();
}

/// rho_k = (n+1)^k (-1)^(k+1) C(n-1, k) [ n(n+1)/(k+1) + A F L / B ].
template <typename Scalar>
RVector<Scalar> generalized_scalars_closed(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto r = radial_coefficients(profile, point.radial());
  const Index n = point.dim();
  const Scalar afl_b = point.gap() * r.jet[0] * r.L / r.B;
  RVector<Scalar> rho(n);
  Scalar binom = 1;         // C(n-1, k)
  Scalar power = 1;         // (n+1)^k
  for (Index k = 0; k < n; ++k) {
    const Scalar sign = (k % 2 == 0) ? Scalar(-1) : Scalar(1);
    rho(k) = power * sign * binom * (Scalar(n * (n + 1)) / Scalar(k + 1) + afl_b);
    binom = binom * Scalar(n - 1 - k) / Scalar(k + 1);
    power *= Scalar(n + 1);
  }
  return rho;
}

/// Coefficients rho_0..rho_{n-1} of det(I + t M) = 1 + sum rho_k t^(k+1),
/// recovered by evaluating the determinant at n+1 nodes
/// t_j = j / (2 (n+1) (1 + |M|_max)) and solving the interpolation system in
/// the rescaled variable t / t_1. Throws NumericFailureError when the
/// recovered constant term is not 1 to 1e-10 after one retry with halved
/// nodes.
template <typename Scalar>
RVector<Scalar> generalized_scalars_from_operator(const CMatrix<Scalar>& m) {
  const Index n = m.rows();
  const Scalar norm = m.size() == 0 ? Scalar(0) : m.cwiseAbs().maxCoeff();
  Scalar spacing = Scalar(1) / (2 * Scalar(n + 1) * (1 + norm));
  const CMatrix<Scalar> identity = CMatrix<Scalar>::Identity(n, n);

  for (int attempt = 0; attempt < 2; ++attempt, spacing /= 2) {
    RMatrix<Scalar> vandermonde(n + 1, n + 1);
    RVector<Scalar> values(n + 1);
    for (Index j = 0; j <= n; ++j) {
      Scalar p = 1;
      for (Index k = 0; k <= n; ++k) {
        vandermonde(j, k) = p;
        p *= Scalar(j);
      }
      const CMatrix<Scalar> shifted = identity + (Scalar(j) * spacing) * m;
      values(j) = shifted.partialPivLu().determinant().real();
    }
    const RVector<Scalar> c = vandermonde.fullPivLu().solve(values);
    if (std::abs(c(0) - 1) > Scalar(1e-10)) continue;
    RVector<Scalar> rho(n);
    Scalar scale = spacing;
    for (Index k = 0; k < n; ++k, scale *= spacing) rho(k) = c(k + 1) / scale;
    return rho;
  }
  throw NumericFailureError("generalized curvature interpolation: constant term is not 1");
}

/// Polynomial-expansion route for rho_k with M = h^{-1} Ric (closed forms).
template <typename Scalar>
RVector<Scalar> generalized_scalars_poly(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto inv = inverse_metric_closed_form(point, profile);
  const auto ric = ricci_closed_form(point, profile);
  return generalized_scalars_from_operator<Scalar>(inv.matrix() * ric.matrix());
}

template <typename Scalar>
CurvatureRecord<Scalar> curvature_record(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  CurvatureRecord<Scalar> record;
  record.point = point.coords();
  record.ricci = ricci_closed_form(point, profile);
  record.scal = scalar_curvature(point, profile);
  record.rho = generalized_scalars_closed(point, profile);
  record.rho(0) = record.scal;
  return record;
}

}  // namespace hartogs
