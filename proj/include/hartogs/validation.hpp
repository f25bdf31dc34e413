#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hartogs/curvature.hpp"
#include "hartogs/extremal.hpp"
#include "hartogs/geometry.hpp"
#include "hartogs/sampling.hpp"

// Grid sweeps pairing each closed form with its independent oracle.
// Reductions run in grid index order, so results do not depend on how the
// points were produced.

namespace hartogs {

template <typename Scalar>
struct GeometrySweep {
  int points = 0;
  /// Points where (x F'/F)' < 0; determinant and inverse identities are only
  /// checked there.
  int admissible_points = 0;
  /// max |h - Hessian_FD(Phi)| / (1 + |h|_max)
  Scalar metric_error = 0;
  /// max |det_closed - det(h)| / |det(h)|
  Scalar det_error = 0;
  /// max |h h^{-1}_closed - I|
  Scalar inverse_error = 0;
  /// Points where "h positive definite" and "indicator < 0" disagree.
  int positivity_mismatches = 0;
  Scalar min_eigenvalue = std::numeric_limits<Scalar>::infinity();
};

template <typename Scalar>
GeometrySweep<Scalar> geometry_sweep(const Profile<Scalar>& profile, const std::vector<DomainPoint<Scalar>>& grid,
                                     const FdOptions<Scalar>& fd = {}) {
  GeometrySweep<Scalar> out;
  for (const auto& p : grid) {
    ++out.points;
    const auto h = metric_closed_form(p, profile);
    const auto numeric = potential_hessian_numeric(p, profile, fd);
    out.metric_error = std::max(out.metric_error, max_abs_diff(h, numeric) / (1 + h.max_abs()));
    out.min_eigenvalue = std::min(out.min_eigenvalue, h.min_eigenvalue());

    const bool admissible = kahler_indicator(profile, p.radial()) < 0;
    if (admissible != h.positive_definite()) ++out.positivity_mismatches;
    if (!admissible) continue;
    ++out.admissible_points;

    const Scalar direct = h.matrix().determinant().real();
    out.det_error = std::max(out.det_error, std::abs(det_closed_form(p, profile) - direct) / std::abs(direct));
    const auto inv = inverse_metric_closed_form(p, profile);
    const auto n = p.dim();
    const CMatrix<Scalar> product = h.matrix() * inv.matrix() - CMatrix<Scalar>::Identity(n, n);
    out.inverse_error = std::max(out.inverse_error, product.cwiseAbs().maxCoeff());
  }
  return out;
}

template <typename Scalar>
struct CurvatureSweep {
  int points = 0;
  /// max |Ric_closed - Ric_FD| (absolute)
  Scalar ricci_error = 0;
  /// max |Ric + (n+1) h| (closed form); zero exactly when L == 0
  Scalar einstein_defect = 0;
  /// max |scal - Re tr(h^{-1} Ric)| / (1 + |scal|)
  Scalar contraction_error = 0;
  /// max |rho_0 (closed) - scal|
  Scalar rho0_error = 0;
  /// max |rho_poly - rho_closed| / (1 + |rho_closed|), per component
  Scalar poly_error = 0;
  Scalar max_abs_L = 0;
  /// Per-k extremes of rho_k over the grid.
  RVector<Scalar> rho_min, rho_max;

  Scalar rho_spread(Index k) const { return rho_max(k) - rho_min(k); }
};

template <typename Scalar>
CurvatureSweep<Scalar> curvature_sweep(const Profile<Scalar>& profile, const std::vector<DomainPoint<Scalar>>& grid,
                                       const FdOptions<Scalar>& fd = {}) {
  CurvatureSweep<Scalar> out;
  for (const auto& p : grid) {
    const Index n = p.dim();
    if (out.points == 0) {
      out.rho_min = RVector<Scalar>::Constant(n, std::numeric_limits<Scalar>::infinity());
      out.rho_max = RVector<Scalar>::Constant(n, -std::numeric_limits<Scalar>::infinity());
    }
    ++out.points;
    const auto ric = ricci_closed_form(p, profile);
    const auto h = metric_closed_form(p, profile);
    out.ricci_error = std::max(out.ricci_error, max_abs_diff(ric, ricci_numeric(p, profile, fd)));
    out.einstein_defect = std::max(out.einstein_defect, (ric + Scalar(n + 1) * h).max_abs());

    const Scalar scal = scalar_curvature(p, profile);
    out.contraction_error = std::max(out.contraction_error, std::abs(scal - scalar_curvature_contraction(p, profile)) /
                                                                (1 + std::abs(scal)));
    const auto closed = generalized_scalars_closed(p, profile);
    const auto poly = generalized_scalars_poly(p, profile);
    out.rho0_error = std::max(out.rho0_error, std::abs(closed(0) - scal));
    for (Index k = 0; k < n; ++k) {
      out.poly_error = std::max(out.poly_error, std::abs(poly(k) - closed(k)) / (1 + std::abs(closed(k))));
    }
    out.rho_min = out.rho_min.cwiseMin(closed);
    out.rho_max = out.rho_max.cwiseMax(closed);
    out.max_abs_L = std::max(out.max_abs_L, std::abs(radial_coefficients(profile, p.radial()).L));
  }
  return out;
}

template <typename Scalar>
struct ExtremalSweep {
  int points = 0;
  Scalar max_residual = 0;
  CVector<Scalar> argmax_point;
  /// Points with max_i |z_0 z_i| above the certificate threshold, where a
  /// nonzero residual is a falsification certificate.
  int certificate_points = 0;
  Scalar certificate_residual = 0;
  CVector<Scalar> certificate_point;
  /// max |closed-form gradient of scal - FD gradient|
  Scalar gradient_error = 0;
  /// max |X_closed - X from solving h^T X = grad|
  Scalar field_error = 0;
  bool extremal = false;
};

template <typename Scalar>
Scalar fiber_coupling(const CVector<Scalar>& z) {
  return std::abs(z(0)) * z.tail(z.size() - 1).cwiseAbs().maxCoeff();
}

template <typename Scalar>
ExtremalSweep<Scalar> extremal_sweep(const Profile<Scalar>& profile, const std::vector<DomainPoint<Scalar>>& grid,
                                     Scalar threshold, Scalar certificate_coupling = Scalar(0.05),
                                     const FdOptions<Scalar>& fd = {}) {
  ExtremalSweep<Scalar> out;
  for (const auto& p : grid) {
    ++out.points;
    const auto res = extremal_residual(p, profile, fd);
    if (out.argmax_point.size() == 0 || res.max_abs > out.max_residual) {
      out.max_residual = res.max_abs;
      out.argmax_point = p.coords();
    }
    if (fiber_coupling(p.coords()) > certificate_coupling) {
      ++out.certificate_points;
      if (out.certificate_point.size() == 0 || res.max_abs > out.certificate_residual) {
        out.certificate_residual = res.max_abs;
        out.certificate_point = p.coords();
      }
    }

    auto scal = [&profile](const CVector<Scalar>& z) { return scalar_curvature(DomainPoint<Scalar>(z, profile), profile); };
    const auto grad = scal_conjugate_gradient(p, profile);
    const auto grad_fd = wirtinger_conj_gradient<Scalar>(scal, p.coords(), fd, domain_predicate(profile));
    out.gradient_error = std::max(out.gradient_error, (grad - grad_fd).cwiseAbs().maxCoeff());

    const auto h = metric_closed_form(p, profile);
    const CVector<Scalar> solved = h.matrix().transpose().partialPivLu().solve(grad);
    out.field_error = std::max(out.field_error, (solved - hamiltonian_field(p, profile)).cwiseAbs().maxCoeff());
  }
  out.extremal = out.max_residual <= threshold;
  return out;
}

template <typename Scalar>
struct ReducedScan {
  std::vector<Scalar> x, r1, r2;
  Scalar max_abs_r1 = 0, max_abs_r2 = 0;
  /// max |(Q00 G' + G Q0a) + r1/B| and |(-G' x Q0a + G Raa) - r2/B|
  Scalar identity_error = 0;
};

template <typename Scalar>
ReducedScan<Scalar> reduced_scan(const Profile<Scalar>& profile, const std::vector<Scalar>& xs) {
  ReducedScan<Scalar> out;
  for (Scalar x : xs) {
    const auto [r1, r2] = reduced_conditions(profile, x);
    const auto c = radial_coefficients(profile, x);
    out.x.push_back(x);
    out.r1.push_back(r1);
    out.r2.push_back(r2);
    out.max_abs_r1 = std::max(out.max_abs_r1, std::abs(r1));
    out.max_abs_r2 = std::max(out.max_abs_r2, std::abs(r2));
    const Scalar first = c.Q00 * c.dG + c.G * c.Q0a + r1 / c.B;
    const Scalar second = -c.dG * x * c.Q0a + c.G * c.Raa - r2 / c.B;
    out.identity_error = std::max({out.identity_error, std::abs(first), std::abs(second)});
  }
  return out;
}

}  // namespace hartogs
