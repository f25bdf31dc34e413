#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hartogs/errors.hpp"

namespace hartogs {

enum class ProfileKind { linear, exponential, power, table, custom };

inline const char* to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::linear: return "linear";
    case ProfileKind::exponential: return "exp";
    case ProfileKind::power: return "power";
    case ProfileKind::table: return "table";
    case ProfileKind::custom: return "custom";
  }
  return "unknown";
}

/// The radial profile F : [0, x0) -> (0, inf) of a Hartogs domain
///
///   D_F = { z in C^n : |z_0|^2 < x0, |z_1|^2 + ... + |z_{n-1}|^2 < F(|z_0|^2) }.
///
/// A profile carries exact derivatives F^(k), k = 0..5. The metric needs
/// F', F''; the Ricci correction L needs F'''' (it is the derivative of
/// x (log B)' with B built from F''); the extremal reductions need G', which
/// differentiates L once more and so needs F^(5).
///
/// Built-in kinds have closed-form derivatives. Table profiles interpolate
/// (x, F) samples with local degree-6 polynomials and are flagged
/// lower-precision. Profiles are immutable values; copies share state.
template <typename Scalar>
class Profile {
 public:
  static constexpr int max_order = 5;
  /// (F, F', F'', F''', F'''', F^(5)) at one abscissa.
  using Jet = std::array<Scalar, max_order + 1>;
  using JetFn = std::function<Jet(Scalar)>;

  /// F(x) = c1 - c2 x on [0, c1/c2). c2 == 0 gives the constant profile
  /// (unbounded, never Kähler), kept for falsification tests.
  static Profile linear(Scalar c1, Scalar c2) {
    if (!(c1 > 0) || c2 < 0) throw InvalidProfileError("linear profile needs c1 > 0, c2 >= 0");
    Scalar x0 = c2 > 0 ? c1 / c2 : infinity();
    return Profile(ProfileKind::linear, "linear", x0, {{"c1", c1}, {"c2", c2}}, [c1, c2](Scalar x) {
      return Jet{c1 - c2 * x, -c2, 0, 0, 0, 0};
    });
  }

  /// F(x) = amplitude * exp(-rate x) on [0, inf).
  static Profile exponential(Scalar amplitude = 1, Scalar rate = 1) {
    if (!(amplitude > 0) || !(rate > 0)) {
      throw InvalidProfileError("exponential profile needs amplitude > 0, rate > 0");
    }
    return Profile(ProfileKind::exponential, "exp", infinity(), {{"amplitude", amplitude}, {"rate", rate}},
                   [amplitude, rate](Scalar x) {
                     Jet jet;
                     Scalar value = amplitude * std::exp(-rate * x);
                     for (auto& d : jet) {
                       d = value;
                       value *= -rate;
                     }
                     return jet;
                   });
  }

  /// F(x) = (1 - x)^p on [0, 1).
  static Profile power(Scalar p) {
    if (!(p > 0)) throw InvalidProfileError("power profile needs p > 0");
    return Profile(ProfileKind::power, "power", Scalar(1), {{"p", p}}, [p](Scalar x) {
      Jet jet;
      Scalar coeff = 1;
      for (int k = 0; k <= max_order; ++k) {
        jet[k] = coeff == 0 ? Scalar(0) : coeff * std::pow(1 - x, p - k);
        coeff *= -(p - k);
      }
      return jet;
    });
  }

  /// Profile from samples (x_i, F_i), x strictly increasing, F > 0. The
  /// domain is [x_front, x_back); derivatives come from the degree-6
  /// polynomial through the 7 nodes nearest to the evaluation point.
  static Profile table(std::vector<Scalar> xs, std::vector<Scalar> fs) {
    if (xs.size() != fs.size()) throw InvalidProfileError("table profile: x and F columns differ in length");
    if (xs.size() < 3) throw InvalidProfileError("table profile needs at least 3 samples");
    if (xs.front() < 0) throw InvalidProfileError("table profile: x must be nonnegative");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0 && !(xs[i] > xs[i - 1])) throw InvalidProfileError("table profile: x must be strictly increasing");
      if (!(fs[i] > 0)) throw InvalidProfileError("table profile: F must be positive");
    }
    auto nodes = std::make_shared<const std::pair<std::vector<Scalar>, std::vector<Scalar>>>(std::move(xs),
                                                                                              std::move(fs));
    Profile profile(ProfileKind::table, "table", nodes->first.back(),
                    {{"samples", Scalar(nodes->first.size())}}, [nodes](Scalar x) {
                      return local_polynomial_jet(nodes->first, nodes->second, x);
                    });
    profile.x_min_ = nodes->first.front();
    profile.lower_precision_ = true;
    return profile;
  }

  /// Arbitrary profile with a caller-supplied jet; used for synthetic test
  /// profiles.
  static Profile custom(std::string name, Scalar x0, JetFn jet, std::map<std::string, Scalar> params = {}) {
    if (!(x0 > 0)) throw InvalidProfileError("profile endpoint x0 must be positive");
    return Profile(ProfileKind::custom, std::move(name), x0, std::move(params), std::move(jet));
  }

  static constexpr Scalar infinity() { return std::numeric_limits<Scalar>::infinity(); }

  ProfileKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::map<std::string, Scalar>& params() const { return params_; }
  Scalar x0() const { return x0_; }
  bool unbounded() const { return std::isinf(x0_); }
  bool lower_precision() const { return lower_precision_; }
  /// Left end of the evaluation domain (0 except for tables starting later).
  Scalar x_min() const { return x_min_; }

  /// Right end used when sampling: x0, or x_cap for unbounded profiles.
  Scalar sampling_end(Scalar x_cap) const { return unbounded() ? x_cap : std::min(x0_, x_cap); }

  bool contains(Scalar x) const { return x >= x_min_ && x < x0_; }

  Jet jet(Scalar x) const {
    if (!contains(x)) {
      throw DomainError("profile '" + name_ + "' evaluated at x = " + std::to_string(double(x)) +
                        " outside [" + std::to_string(double(x_min_)) + ", " + std::to_string(double(x0_)) + ")");
    }
    Jet j = jet_(x);
    for (auto& d : j) d *= scale_;
    return j;
  }

  Scalar deriv(int k, Scalar x) const {
    if (k < 0 || k > max_order) throw ArgumentError("derivative order out of range 0..5");
    return jet(x)[k];
  }

  Scalar operator()(Scalar x) const { return deriv(0, x); }

  /// lambda * F, same domain.
  Profile scaled(Scalar lambda) const {
    if (!(lambda > 0)) throw ArgumentError("profile scale must be positive");
    Profile copy = *this;
    copy.scale_ *= lambda;
    copy.params_["scale"] = copy.scale_;
    return copy;
  }

 private:
  Profile(ProfileKind kind, std::string name, Scalar x0, std::map<std::string, Scalar> params, JetFn jet)
      : kind_(kind), name_(std::move(name)), params_(std::move(params)), x0_(x0), jet_(std::move(jet)) {}

  static Jet local_polynomial_jet(const std::vector<Scalar>& xs, const std::vector<Scalar>& fs, Scalar x) {
    const int count = static_cast<int>(xs.size());
    const int width = std::min(count, 7);
    // Window of `width` nodes centred on x as far as the ends allow.
    int hi = static_cast<int>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    int start = std::clamp(hi - width / 2, 0, count - width);
    const Scalar centre = x;
    const Scalar half_span = (xs[start + width - 1] - xs[start]) / 2;

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vandermonde(width, width);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs(width);
    for (int i = 0; i < width; ++i) {
      Scalar t = (xs[start + i] - centre) / half_span;
      Scalar power = 1;
      for (int k = 0; k < width; ++k) {
        vandermonde(i, k) = power;
        power *= t;
      }
      rhs(i) = fs[start + i];
    }
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> coeffs = vandermonde.fullPivLu().solve(rhs);

    Jet jet{};
    Scalar factorial = 1;
    Scalar scale = 1;
    for (int k = 0; k <= max_order && k < width; ++k) {
      if (k > 0) factorial *= k;
      jet[k] = factorial * coeffs(k) / scale;
      scale *= half_span;
    }
    return jet;
  }

  ProfileKind kind_;
  std::string name_;
  std::map<std::string, Scalar> params_;
  Scalar x0_;
  Scalar x_min_ = 0;
  Scalar scale_ = 1;
  bool lower_precision_ = false;
  JetFn jet_;
};

/// d/dx [x F'(x) / F(x)]. The profile defines a Kähler metric on D_F iff
/// this is negative on [0, x0).
template <typename Scalar>
Scalar kahler_indicator(const Profile<Scalar>& profile, Scalar x) {
  if (x < 0) throw DomainError("kahler_indicator: x must be nonnegative");
  const auto f = profile.jet(x);
  if (!(f[0] > 0)) throw InvalidProfileError("kahler_indicator: F(x) <= 0");
  return (f[1] + x * f[2]) / f[0] - x * f[1] * f[1] / (f[0] * f[0]);
}

/// Largest normalized mismatch between each supplied derivative F^(k),
/// k = 1..5, and the five-point central difference of F^(k-1):
///
///   |FD(F^(k-1)) - F^(k)| / (1 + |FD(F^(k-1))|).
///
/// Validates a profile's derivative chain, e.g. for hand-written profiles.
template <typename Scalar>
Scalar derivative_consistency(const Profile<Scalar>& profile, Scalar x, Scalar step) {
  if (!(step > 0)) throw ArgumentError("derivative_consistency: step must be positive");
  if (!(x - 2 * step > profile.x_min()) || !(x + 2 * step < profile.x0()) || !(x - 2 * step > 0)) {
    throw DomainError("derivative_consistency: stencil x +- 2*step leaves (0, x0)");
  }
  const auto m2 = profile.jet(x - 2 * step);
  const auto m1 = profile.jet(x - step);
  const auto p1 = profile.jet(x + step);
  const auto p2 = profile.jet(x + 2 * step);
  const auto at = profile.jet(x);
  Scalar worst = 0;
  for (int k = 1; k <= Profile<Scalar>::max_order; ++k) {
    Scalar estimate = (m2[k - 1] - 8 * m1[k - 1] + 8 * p1[k - 1] - p2[k - 1]) / (12 * step);
    worst = std::max(worst, std::abs(estimate - at[k]) / (1 + std::abs(estimate)));
  }
  return worst;
}

}  // namespace hartogs
