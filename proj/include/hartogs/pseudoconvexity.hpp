#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "hartogs/errors.hpp"
#include "hartogs/geometry.hpp"
#include "hartogs/profile.hpp"

namespace hartogs {

/// rho(z) = |z_1|^2 + ... + |z_{n-1}|^2 - F(|z_0|^2), a global defining
/// function of D_F.
template <typename Scalar>
Scalar defining_function(const CVector<Scalar>& z, const Profile<Scalar>& profile) {
  return -defining_gap(z, profile);
}

/// A point of the boundary piece { rho = 0, |z_0|^2 < x0 } together with
/// d rho / dz = (-F' zbar_0, zbar_1, ..., zbar_{n-1}).
template <typename Scalar>
class BoundaryPoint {
 public:
  BoundaryPoint(CVector<Scalar> coords, const Profile<Scalar>& profile) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw ArgumentError("boundary point needs n >= 2");
    x_ = std::norm(coords_(0));
    if (!profile.contains(x_)) throw DomainError("boundary point: |z_0|^2 outside [0, x0)");
    const auto f = profile.jet(x_);
    if (std::abs(fiber_norm2(coords_) - f[0]) > Scalar(1e-12) * (1 + f[0])) {
      throw DomainError("boundary point: rho(z) != 0");
    }
    gradient_ = coords_.conjugate();
    gradient_(0) = -f[1] * std::conj(coords_(0));
  }

  const CVector<Scalar>& coords() const { return coords_; }
  const CVector<Scalar>& gradient() const { return gradient_; }
  Index dim() const { return coords_.size(); }
  Scalar radial() const { return x_; }

 private:
  CVector<Scalar> coords_;
  CVector<Scalar> gradient_;
  Scalar x_ = 0;
};

/// (z0, sqrt(F(|z0|^2)) * direction / |direction|).
template <typename Scalar>
BoundaryPoint<Scalar> boundary_point(const Profile<Scalar>& profile, Complex<Scalar> z0,
                                     const CVector<Scalar>& direction) {
  const Scalar x = std::norm(z0);
  if (!profile.contains(x)) throw DomainError("boundary_point: |z0|^2 outside [0, x0)");
  if (!(direction.norm() > 0)) throw ArgumentError("boundary_point: direction must be nonzero");
  CVector<Scalar> z(direction.size() + 1);
  z(0) = z0;
  z.tail(direction.size()) = std::sqrt(profile(x)) * direction / direction.norm();
  return BoundaryPoint<Scalar>(std::move(z), profile);
}

/// L(rho, z)(X) = |X_1|^2 + ... + |X_{n-1}|^2 - (F' + F'' |z_0|^2) |X_0|^2.
template <typename Scalar>
Scalar levi_form(const BoundaryPoint<Scalar>& point, const CVector<Scalar>& X, const Profile<Scalar>& profile) {
  const auto f = profile.jet(point.radial());
  const Scalar weight = f[1] + f[2] * point.radial();
  return X.tail(X.size() - 1).squaredNorm() - weight * std::norm(X(0));
}

/// Complex tangent vector with fiber part Y: X_0 solves
/// -F' zbar_0 X_0 + zbar_1 Y_1 + ... + zbar_{n-1} Y_{n-1} = 0.
/// Empty when z_0 = 0 (the tangency condition no longer involves X_0; use
/// the unrestricted Levi form there).
template <typename Scalar>
std::optional<CVector<Scalar>> tangent_vector(const BoundaryPoint<Scalar>& point, const CVector<Scalar>& Y,
                                              const Profile<Scalar>& profile) {
  const auto& z = point.coords();
  if (Y.size() != z.size() - 1) throw ArgumentError("tangent_vector: Y must have n-1 entries");
  if (z(0) == Complex<Scalar>(0)) return std::nullopt;
  const Scalar fp = profile.deriv(1, point.radial());
  if (fp == 0) throw InvalidProfileError("tangent_vector: F' vanishes at |z_0|^2");
  CVector<Scalar> X(z.size());
  X(0) = z.tail(Y.size()).dot(Y) / (fp * std::conj(z(0)));
  X.tail(Y.size()) = Y;
  return X;
}

/// Levi form on the complex tangent space, parametrized by the fiber part Y:
///   |Y|^2 - (F' + F'' x) / (F'^2 x) * |zbar_1 Y_1 + ... + zbar_{n-1} Y_{n-1}|^2.
/// Empty when z_0 = 0.
template <typename Scalar>
std::optional<Scalar> restricted_levi(const BoundaryPoint<Scalar>& point, const CVector<Scalar>& Y,
                                      const Profile<Scalar>& profile) {
  const auto& z = point.coords();
  if (Y.size() != z.size() - 1) throw ArgumentError("restricted_levi: Y must have n-1 entries");
  if (z(0) == Complex<Scalar>(0)) return std::nullopt;
  const Scalar x = point.radial();
  const auto f = profile.jet(x);
  const Scalar weight = (f[1] + f[2] * x) / (f[1] * f[1] * x);
  return Y.squaredNorm() - weight * std::norm(z.tail(Y.size()).dot(Y));
}

enum class EquivalenceVerdict { consistent, inconsistent };

inline const char* to_string(EquivalenceVerdict v) {
  return v == EquivalenceVerdict::consistent ? "CONSISTENT" : "INCONSISTENT";
}

template <typename Scalar>
struct EquivalenceReport {
  int samples = 0;
  std::uint64_t seed = 0;
  Index n = 2;
  /// Smallest restricted Levi value over samples and probe directions.
  Scalar min_levi = std::numeric_limits<Scalar>::infinity();
  CVector<Scalar> argmin_point;
  CVector<Scalar> argmin_direction;
  Scalar argmin_x = 0;
  Scalar max_indicator = -std::numeric_limits<Scalar>::infinity();
  Scalar argmax_indicator_x = 0;
  /// Boundary points whose restricted Levi value is <= 0.
  int flagged = 0;
  /// Samples where sign(indicator < 0) and sign(levi > 0) disagree.
  int pointwise_mismatches = 0;
  /// Smallest unrestricted Levi value on unit vectors at z_0 = 0.
  Scalar origin_min_levi = std::numeric_limits<Scalar>::infinity();
  EquivalenceVerdict verdict = EquivalenceVerdict::consistent;
};

/// Samples boundary points with |z_0|^2 uniform in (eps, x_end - eps) and
/// compares the sign of (x F'/F)' with that of the restricted Levi form.
/// Each point is probed with a random unit tangent direction and with the
/// fiber direction Y = z_fiber / |z_fiber|, where the restricted form is
/// smallest whenever its weight is positive. The verdict is CONSISTENT iff
/// "indicator < 0 at every sample" and "Levi > 0 at every sample" are both
/// true or both false. Sample i draws from its own engine seeded by
/// (seed, i).
template <typename Scalar>
EquivalenceReport<Scalar> equivalence_check(const Profile<Scalar>& profile, Index n, int samples,
                                            std::uint64_t seed, Scalar x_cap = Scalar(5),
                                            Scalar eps = Scalar(1e-3)) {
  if (samples < 1) throw ArgumentError("equivalence_check: samples must be >= 1");
  if (n < 2) throw ArgumentError("equivalence_check: n must be >= 2");
  const Scalar lo = std::max(eps, profile.x_min() + eps);
  const Scalar hi = profile.sampling_end(x_cap) - eps;
  if (!(hi > lo)) throw ArgumentError("equivalence_check: empty radial window");
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;

  EquivalenceReport<Scalar> report;
  report.samples = samples;
  report.seed = seed;
  report.n = n;

  auto unit_vector = [](std::mt19937_64& engine, Index size) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CVector<Scalar> v(size);
    do {
      for (Index k = 0; k < size; ++k) v(k) = Complex<Scalar>(Scalar(normal(engine)), Scalar(normal(engine)));
    } while (!(v.norm() > 0));
    return CVector<Scalar>(v / v.norm());
  };

  for (int i = 0; i < samples; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 engine(seq);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    const Scalar x = lo + Scalar(uniform(engine)) * (hi - lo);
    const Complex<Scalar> z0 = std::polar(std::sqrt(x), two_pi * Scalar(uniform(engine)));
    const CVector<Scalar> fiber_dir = unit_vector(engine, n - 1);
    const CVector<Scalar> tangent = unit_vector(engine, n - 1);
    const auto point = boundary_point(profile, z0, fiber_dir);

    const Scalar indicator = kahler_indicator(profile, x);
    if (indicator > report.max_indicator) {
      report.max_indicator = indicator;
      report.argmax_indicator_x = x;
    }

    Scalar levi = *restricted_levi(point, tangent, profile);
    CVector<Scalar> probe = tangent;
    const Scalar along_fiber = *restricted_levi(point, fiber_dir, profile);
    if (along_fiber < levi) {
      levi = along_fiber;
      probe = fiber_dir;
    }
    if (levi < report.min_levi) {
      report.min_levi = levi;
      report.argmin_point = point.coords();
      report.argmin_direction = probe;
      report.argmin_x = x;
    }
    if (!(levi > 0)) ++report.flagged;
    if ((indicator < 0) != (levi > 0)) ++report.pointwise_mismatches;

    // z_0 = 0 stratum: the Levi form itself, on an unrestricted unit vector.
    const auto origin = boundary_point(profile, Complex<Scalar>(0), fiber_dir);
    const Scalar origin_levi = levi_form(origin, unit_vector(engine, n), profile);
    report.origin_min_levi = std::min(report.origin_min_levi, origin_levi);
  }

  const bool kahler_everywhere = report.max_indicator < 0;
  const bool levi_everywhere = report.min_levi > 0;
  report.verdict = kahler_everywhere == levi_everywhere ? EquivalenceVerdict::consistent
                                                        : EquivalenceVerdict::inconsistent;
  return report;
}

}  // namespace hartogs
