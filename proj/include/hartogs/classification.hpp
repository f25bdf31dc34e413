#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "hartogs/curvature.hpp"
#include "hartogs/errors.hpp"
#include "hartogs/geometry.hpp"
#include "hartogs/sampling.hpp"
#include "hartogs/validation.hpp"

namespace hartogs {

/// phi(z) = (z_0 / sqrt(c1/c2), z_1 / sqrt(c1), ..., z_{n-1} / sqrt(c1)),
/// a biholomorphism from D_F with F = c1 - c2 x onto the unit ball, and an
/// isometry g_F = phi^* g_hyp because -log A_F(z) = -log(1 - |phi(z)|^2) - log c1.
template <typename Scalar>
class HyperbolicMap {
 public:
  HyperbolicMap(Scalar c1, Scalar c2) : c1_(c1), c2_(c2) {
    if (!(c1 > 0) || !(c2 > 0)) throw ArgumentError("HyperbolicMap: c1, c2 must be positive");
  }

  Scalar c1() const { return c1_; }
  Scalar c2() const { return c2_; }

  /// Diagonal of the (constant) Jacobian.
  RVector<Scalar> scale(Index n) const {
    RVector<Scalar> s = RVector<Scalar>::Constant(n, 1 / std::sqrt(c1_));
    s(0) = 1 / std::sqrt(c1_ / c2_);
    return s;
  }

  CVector<Scalar> operator()(const CVector<Scalar>& z) const {
    return scale(z.size()).template cast<Complex<Scalar>>().cwiseProduct(z);
  }

 private:
  Scalar c1_;
  Scalar c2_;
};

/// Metric of complex hyperbolic space (potential -log(1 - |w|^2)) at a point
/// of the unit ball.
template <typename Scalar>
HermitianMatrix<Scalar> hyperbolic_metric(const CVector<Scalar>& w) {
  const auto ball = Profile<Scalar>::linear(1, 1);
  if (!inside_domain(w, ball)) throw DomainError("hyperbolic_metric: point outside the unit ball");
  return metric_closed_form(DomainPoint<Scalar>(w, ball), ball);
}

template <typename Scalar>
struct PullbackReport {
  Scalar c1 = 0, c2 = 0;
  Index n = 2;
  int points = 0;
  Scalar max_error = 0;
  bool passed = false;
};

/// Compares J^H g_hyp(phi(z)) J with g_F(z) over an interior grid of D_F,
/// F = c1 - c2 x.
template <typename Scalar>
PullbackReport<Scalar> pullback_check(Scalar c1, Scalar c2, Index n, int grid, Scalar tol, std::uint64_t seed = 0) {
  const HyperbolicMap<Scalar> phi(c1, c2);
  const auto profile = Profile<Scalar>::linear(c1, c2);
  GridSpec<Scalar> spec;
  spec.points = grid;
  spec.seed = seed;
  const CVector<Scalar> jacobian = phi.scale(n).template cast<Complex<Scalar>>();

  PullbackReport<Scalar> report;
  report.c1 = c1;
  report.c2 = c2;
  report.n = n;
  for (const auto& p : interior_grid(profile, n, spec)) {
    const auto g_hyp = hyperbolic_metric<Scalar>(phi(p.coords()));
    const CMatrix<Scalar> pulled = jacobian.asDiagonal() * g_hyp.matrix() * jacobian.asDiagonal();
    const Scalar err = (pulled - metric_closed_form(p, profile).matrix()).cwiseAbs().maxCoeff();
    report.max_error = std::max(report.max_error, err);
    ++report.points;
  }
  report.passed = report.max_error <= tol;
  return report;
}

enum class Classification { hyperbolic, non_constant_curvature, inconsistent };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::hyperbolic: return "HYPERBOLIC";
    case Classification::non_constant_curvature: return "NON_CONSTANT_CURVATURE";
    case Classification::inconsistent: return "INCONSISTENT";
  }
  return "UNKNOWN";
}

template <typename Scalar>
struct ClassifyOptions {
  GridSpec<Scalar> grid;
  int radial_points = 101;
  /// Threshold on max |L| and on the linear-fit residual.
  Scalar tol = Scalar(1e-8);
  Scalar pullback_tol = Scalar(1e-10);
  /// rho_k counts as constant when its grid spread is <= this times 1 + max |rho_k|.
  Scalar rho_constancy_tol = Scalar(1e-8);
  Scalar extremal_threshold = Scalar(1e-5);
  FdOptions<Scalar> fd;
};

template <typename Scalar>
struct ClassificationReport {
  Classification verdict = Classification::inconsistent;
  Scalar max_abs_L = 0;
  Scalar argmax_L_x = 0;
  int radial_points = 0;
  /// Fitted F = c1 - c2 x from value and slope at the left end.
  Scalar c1 = 0, c2 = 0;
  Scalar fit_error = 0;
  std::optional<PullbackReport<Scalar>> pullback;
  RVector<Scalar> rho_spread;
  std::vector<bool> rho_constant;
  ExtremalSweep<Scalar> extremal;
};

/// L == 0 on a radial grid (up to tol) together with an exact linear fit and
/// a passing pullback check gives HYPERBOLIC. Nonzero L gives
/// NON_CONSTANT_CURVATURE. L == 0 without a linear fit (or with a failing
/// pullback) is INCONSISTENT.
template <typename Scalar>
ClassificationReport<Scalar> classify(const Profile<Scalar>& profile, Index n, const ClassifyOptions<Scalar>& opts = {}) {
  ClassificationReport<Scalar> report;
  const auto xs = radial_grid(profile, opts.radial_points, opts.grid);
  report.radial_points = static_cast<int>(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const Scalar l = std::abs(radial_coefficients(profile, xs[j]).L);
    if (j == 0 || l > report.max_abs_L) {
      report.max_abs_L = l;
      report.argmax_L_x = xs[j];
    }
  }

  const auto grid = interior_grid(profile, n, opts.grid);
  const auto curv = curvature_sweep(profile, grid, opts.fd);
  report.rho_spread = curv.rho_max - curv.rho_min;
  for (Index k = 0; k < n; ++k) {
    const Scalar magnitude = std::max(std::abs(curv.rho_max(k)), std::abs(curv.rho_min(k)));
    report.rho_constant.push_back(report.rho_spread(k) <= opts.rho_constancy_tol * (1 + magnitude));
  }
  report.extremal = extremal_sweep(profile, grid, opts.extremal_threshold, Scalar(0.05), opts.fd);

  if (report.max_abs_L > opts.tol) {
    report.verdict = Classification::non_constant_curvature;
    return report;
  }

  const Scalar x_start = profile.x_min();
  report.c1 = profile(x_start) - profile.deriv(1, x_start) * x_start;
  report.c2 = -profile.deriv(1, x_start);
  for (Scalar x : xs) {
    report.fit_error = std::max(report.fit_error, std::abs(profile(x) - (report.c1 - report.c2 * x)));
  }
  if (report.fit_error > opts.tol || !(report.c1 > 0) || !(report.c2 > 0)) {
    report.verdict = Classification::inconsistent;
    return report;
  }
  report.pullback = pullback_check<Scalar>(report.c1, report.c2, n, opts.grid.points, opts.pullback_tol, opts.grid.seed);
  report.verdict = report.pullback->passed ? Classification::hyperbolic : Classification::inconsistent;
  return report;
}

}  // namespace hartogs
