#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "hartogs/errors.hpp"
#include "hartogs/finite_difference.hpp"
#include "hartogs/profile.hpp"
#include "hartogs/types.hpp"

namespace hartogs {

/// Squared norm of the fiber coordinates z_1..z_{n-1}.
template <typename Scalar>
Scalar fiber_norm2(const CVector<Scalar>& z) {
  return z.tail(z.size() - 1).squaredNorm();
}

/// A(z) = F(|z_0|^2) - |z_1|^2 - ... - |z_{n-1}|^2. Throws DomainError when
/// |z_0|^2 is outside the profile domain.
template <typename Scalar>
Scalar defining_gap(const CVector<Scalar>& z, const Profile<Scalar>& profile) {
  return profile(std::norm(z(0))) - fiber_norm2(z);
}

/// True iff z lies strictly inside D_F.
template <typename Scalar>
bool inside_domain(const CVector<Scalar>& z, const Profile<Scalar>& profile) {
  if (z.size() < 2) return false;
  const Scalar x = std::norm(z(0));
  if (!profile.contains(x)) return false;
  return defining_gap(z, profile) > 0;
}

/// A point of D_F with its membership data (x = |z_0|^2, s = fiber norm^2,
/// A = F(x) - s) cached. Construction validates strict interior membership.
template <typename Scalar>
class DomainPoint {
 public:
  DomainPoint(CVector<Scalar> coords, const Profile<Scalar>& profile) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw ArgumentError("Hartogs domains need n >= 2 coordinates");
    x_ = std::norm(coords_(0));
    if (!profile.contains(x_)) {
      throw DomainError("|z_0|^2 = " + std::to_string(double(x_)) + " outside the profile domain");
    }
    s_ = hartogs::fiber_norm2(coords_);
    gap_ = profile(x_) - s_;
    if (!(gap_ > 0)) throw DomainError("point is not strictly inside D_F (A = " + std::to_string(double(gap_)) + ")");
  }

  const CVector<Scalar>& coords() const { return coords_; }
  Complex<Scalar> operator[](Index k) const { return coords_(k); }
  Index dim() const { return coords_.size(); }
  Scalar radial() const { return x_; }
  Scalar fiber_norm2() const { return s_; }
  Scalar gap() const { return gap_; }

 private:
  CVector<Scalar> coords_;
  Scalar x_ = 0;
  Scalar s_ = 0;
  Scalar gap_ = 0;
};

template <typename Scalar>
DomainPredicate<Scalar> domain_predicate(const Profile<Scalar>& profile) {
  return [profile](const CVector<Scalar>& z) { return inside_domain(z, profile); };
}

/// Quantities depending on x = |z_0|^2 only.
///
///   B = F'^2 x - F (F' + F'' x)
///   L = d/dx [ x d/dx log B ]
///   G = -L F / B
///
/// together with the P/Q/R functions that split the inverse metric into
/// z_0-dependent factors and polynomials in the fiber coordinates.
template <typename Scalar>
struct RadialCoefficients {
  Scalar x = 0;
  typename Profile<Scalar>::Jet jet{};
  Scalar B = 0, dB = 0, d2B = 0, d3B = 0;
  Scalar L = 0, dL = 0;
  Scalar G = 0, dG = 0;
  /// F' + F'' x, the Levi-form weight of |X_0|^2.
  Scalar levi_weight = 0;
  Scalar P00 = 0, Q00 = 0;
  Scalar P0a = 0, Q0a = 0;
  Scalar Paa = 0, Qaa = 0, Raa = 0;
  Scalar Pab = 0, Qab = 0;
};

template <typename Scalar>
struct CoefficientBundle : RadialCoefficients<Scalar> {
  /// F(|z_0|^2) - sum |z_k|^2
  Scalar A = 0;
  /// F'^2 x - (F'' x + F') A, numerator of the (0,0) metric entry.
  Scalar C = 0;
};

inline constexpr double singular_B_threshold = 1e-14;

template <typename Scalar>
RadialCoefficients<Scalar> radial_coefficients(const Profile<Scalar>& profile, Scalar x) {
  RadialCoefficients<Scalar> r;
  r.x = x;
  r.jet = profile.jet(x);
  const auto& f = r.jet;
  r.levi_weight = f[1] + f[2] * x;
  r.B = f[1] * f[1] * x - f[0] * r.levi_weight;
  if (!(std::abs(r.B) >= Scalar(singular_B_threshold))) {
    throw SingularCoefficientError("B = F'^2 x - F(F' + F'' x) vanishes at x = " + std::to_string(double(x)));
  }
  r.dB = f[1] * f[2] * x - 2 * f[0] * f[2] - f[0] * f[3] * x;
  r.d2B = f[2] * f[2] * x - f[1] * f[2] - 3 * f[0] * f[3] - f[0] * f[4] * x;
  r.d3B = 2 * f[2] * f[3] * x - 4 * f[1] * f[3] - 4 * f[0] * f[4] - f[1] * f[4] * x - f[0] * f[5] * x;

  const Scalar l1 = r.dB / r.B, l2 = r.d2B / r.B, l3 = r.d3B / r.B;
  r.L = l1 + x * (l2 - l1 * l1);
  r.dL = 2 * (l2 - l1 * l1) + x * (l3 - 3 * l1 * l2 + 2 * l1 * l1 * l1);
  r.G = -r.L * f[0] / r.B;
  r.dG = (-(r.dL * f[0] + r.L * f[1]) + r.L * f[0] * l1) / r.B;

  r.P00 = f[0] * f[0] / r.B;
  r.Q00 = -f[0] / r.B;
  r.P0a = f[1] * f[0] / r.B;
  r.Q0a = -f[1] / r.B;
  r.Qaa = r.levi_weight / r.B;
  r.Raa = r.Qaa;
  r.Pab = f[0] * r.levi_weight / r.B;
  r.Paa = r.Pab - 1;
  r.Qab = -r.Qaa;
  return r;
}

template <typename Scalar>
CoefficientBundle<Scalar> coefficient_bundle(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  CoefficientBundle<Scalar> bundle;
  static_cast<RadialCoefficients<Scalar>&>(bundle) = radial_coefficients(profile, point.radial());
  bundle.A = point.gap();
  const auto& f = bundle.jet;
  bundle.C = f[1] * f[1] * bundle.x - (f[2] * bundle.x + f[1]) * bundle.A;
  return bundle;
}

/// Kähler potential -log A of the metric.
template <typename Scalar>
Scalar potential(const DomainPoint<Scalar>& point, const Profile<Scalar>&) {
  return -std::log(point.gap());
}

template <typename Scalar>
Scalar potential(const CVector<Scalar>& z, const Profile<Scalar>& profile) {
  return potential(DomainPoint<Scalar>(z, profile), profile);
}

/// g_{a bbar} = d^2(-log A)/dz_a dzbar_b in closed form:
///
///          1   | C               -F' zbar_0 z_b       |
///   h  =  --- |                                       |
///         A^2  | -F' z_0 zbar_a   delta_ab A + zbar_a z_b |
///
/// Returned regardless of admissibility so non-Kähler profiles can be probed.
template <typename Scalar>
HermitianMatrix<Scalar> metric_closed_form(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const Index n = point.dim();
  const auto& z = point.coords();
  const Scalar x = point.radial();
  const Scalar a = point.gap();
  const auto f = profile.jet(x);
  const Scalar c = f[1] * f[1] * x - (f[2] * x + f[1]) * a;

  CMatrix<Scalar> m(n, n);
  m(0, 0) = c;
  for (Index b = 1; b < n; ++b) {
    m(0, b) = -f[1] * std::conj(z(0)) * z(b);
    m(b, 0) = -f[1] * z(0) * std::conj(z(b));
  }
  for (Index r = 1; r < n; ++r) {
    for (Index b = 1; b < n; ++b) {
      m(r, b) = std::conj(z(r)) * z(b) + (r == b ? Complex<Scalar>(a) : Complex<Scalar>(0));
    }
  }
  return HermitianMatrix<Scalar>(m / (a * a));
}

/// det h = -(F^2 / A^(n+1)) (x F'/F)' at x = |z_0|^2.
template <typename Scalar>
Scalar det_closed_form(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const Scalar f = profile(point.radial());
  return -f * f / std::pow(point.gap(), Scalar(point.dim() + 1)) * kahler_indicator(profile, point.radial());
}

/// Determinant of the trailing block of A^2 h starting at row/column alpha:
/// A^(n-alpha) + A^(n-alpha-1) (|z_alpha|^2 + ... + |z_{n-1}|^2).
template <typename Scalar>
Scalar principal_minor(const DomainPoint<Scalar>& point, const Profile<Scalar>&, Index alpha) {
  const Index n = point.dim();
  if (alpha < 1 || alpha > n - 1) throw ArgumentError("principal_minor: alpha must lie in 1..n-1");
  const Scalar a = point.gap();
  const Scalar tail = point.coords().tail(n - alpha).squaredNorm();
  return std::pow(a, Scalar(n - alpha)) + std::pow(a, Scalar(n - alpha - 1)) * tail;
}

/// Inverse metric in closed form. Entry (b, a) is g^{b abar}, so that
/// sum_a g^{b abar} g_{a cbar} = delta_bc, i.e. the returned matrix is h^{-1}.
template <typename Scalar>
HermitianMatrix<Scalar> inverse_metric_closed_form(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile) {
  const auto r = radial_coefficients(profile, point.radial());
  const Index n = point.dim();
  const auto& z = point.coords();
  const Scalar ratio = point.gap() / r.B;
  const Scalar fp = r.jet[1];

  CMatrix<Scalar> m(n, n);
  m(0, 0) = r.jet[0];
  for (Index b = 1; b < n; ++b) {
    m(b, 0) = fp * z(0) * std::conj(z(b));
    m(0, b) = fp * std::conj(z(0)) * z(b);
  }
  for (Index b = 1; b < n; ++b) {
    for (Index a = 1; a < n; ++a) {
      m(b, a) = r.levi_weight * z(a) * std::conj(z(b));
      if (a == b) m(b, a) += r.B;
    }
  }
  return HermitianMatrix<Scalar>(ratio * m);
}

/// Finite-difference complex Hessian of the potential, the independent
/// oracle for metric_closed_form.
template <typename Scalar>
HermitianMatrix<Scalar> potential_hessian_numeric(const DomainPoint<Scalar>& point, const Profile<Scalar>& profile,
                                                  const FdOptions<Scalar>& fd = {}) {
  auto phi = [&profile](const CVector<Scalar>& z) { return potential(z, profile); };
  return wirtinger_hessian<Scalar>(phi, point.coords(), fd, domain_predicate(profile));
}

}  // namespace hartogs
