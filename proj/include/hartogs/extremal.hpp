#pragma once

#include <cmath>
#include <utility>

#include "hartogs/curvature.hpp"
#include "hartogs/errors.hpp"
#include "hartogs/geometry.hpp"

namespace hartogs {

template <typename Scalar>
struct ExtremalResidual {
  /// residual(a, c) = d X^a / dzbar_c.
  CMatrix<Scalar> residual;
  Scalar max_abs = 0;
  CVector<Scalar> point;
};

/// (d scal / dzbar_0, ..., d scal / dzbar_{n-1}) from scal = -n(n+1) + G A:
///   d/dzbar_0 = z_0 (G' A + G F'),   d/dzbar_i = -G z_i.
template <typename Scalar>
CVector<Scalar> scal_conjugate_gradient(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto r = radial_coefficients(profile, point.radial());
  const auto& z = point.coords();
  CVector<Scalar> grad(point.dim());
  grad(0) = z(0) * (r.dG * point.gap() + r.G * r.jet[1]);
  for (Index i = 1; i < point.dim(); ++i) grad(i) = -r.G * z(i);
  return grad;
}

/// (1,0)-part of the Hamiltonian field of scal:
///   X^a = sum_b g^{b abar} d scal / dzbar_b.
template <typename Scalar>
CVector<Scalar> hamiltonian_field(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto inv = inverse_metric_closed_form(point, profile);
  return inv.matrix().transpose() * scal_conjugate_gradient(point, profile);
}

/// Left-hand side of the extremal system d/dzbar_c ( X^a ) = 0, by central
/// Wirtinger differences of the closed-form Hamiltonian field.
template <typename Scalar>
ExtremalResidual<Scalar> extremal_residual(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile,
                                           const FdOptions<Scalar>& fd = {}) {
  auto field = [&profile](const CVector<Scalar>& z) {
    return hamiltonian_field(DomainPoint<Scalar>(z, profile), profile);
  };
  ExtremalResidual<Scalar> out;
  out.residual = wirtinger_conj_jacobian<Scalar>(field, point.coords(), fd, domain_predicate(profile));
  out.max_abs = out.residual.cwiseAbs().maxCoeff();
  out.point = point.coords();
  return out;
}

/// The two scalar conditions an extremal g_F must satisfy on an open set:
///   r1 = (G F)'(x),   r2 = (G F' x)'(x).
/// x = 0 is accepted only for closed-form profiles.
template <typename Scalar>
std::pair<Scalar, Scalar> reduced_conditions(const Profile<Scalar>& profile, Scalar x) {
  if (x < 0) throw DomainError("reduced_conditions: x must be nonnegative");
  if (x == 0 && profile.kind() == ProfileKind::table) {
    throw DomainError("reduced_conditions: x = 0 not available for table profiles");
  }
  const auto r = radial_coefficients(profile, x);
  const auto& f = r.jet;
  const Scalar r1 = r.dG * f[0] + r.G * f[1];
  const Scalar r2 = r.dG * f[1] * x + r.G * (f[1] + f[2] * x);
  return {r1, r2};
}

}  // namespace hartogs
