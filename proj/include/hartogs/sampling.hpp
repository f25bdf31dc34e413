#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hartogs/errors.hpp"
#include "hartogs/geometry.hpp"

namespace hartogs {

/// Van der Corput radical inverse of `index` in `base`.
inline double radical_inverse(std::uint64_t index, unsigned base) {
  double inv_base = 1.0 / base;
  double factor = inv_base;
  double result = 0.0;
  while (index > 0) {
    result += factor * static_cast<double>(index % base);
    index /= base;
    factor *= inv_base;
  }
  return result;
}

/// Halton sequence with a Cranley-Patterson rotation derived from `seed`
/// (seed 0 leaves the sequence unrotated). Starts at index 1.
class HaltonSequence {
 public:
  HaltonSequence(int dims, std::uint64_t seed) : shift_(dims, 0.0) {
    static constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    if (dims < 1 || dims > static_cast<int>(std::size(primes))) throw ArgumentError("Halton: unsupported dimension");
    bases_.assign(primes, primes + dims);
    if (seed != 0) {
      std::mt19937_64 engine(seed);
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      for (auto& s : shift_) s = uniform(engine);
    }
  }

  std::vector<double> next() {
    ++index_;
    std::vector<double> u(bases_.size());
    for (std::size_t d = 0; d < bases_.size(); ++d) {
      double v = radical_inverse(index_, bases_[d]) + shift_[d];
      u[d] = v - std::floor(v);
    }
    return u;
  }

 private:
  std::vector<unsigned> bases_;
  std::vector<double> shift_;
  std::uint64_t index_ = 0;
};

template <typename Scalar>
struct GridSpec {
  int points = 200;
  std::uint64_t seed = 0;
  /// Reject points with A < a_margin * F(0); also the relative margin kept
  /// from the x-endpoint.
  Scalar a_margin = Scalar(0.05);
  /// Sampling cap for unbounded profiles.
  Scalar x_cap = Scalar(5);
};

/// Radial window [lo, hi] for sampling x = |z_0|^2. Table profiles also
/// keep away from their left end.
template <typename Scalar>
std::pair<Scalar, Scalar> radial_window(const Profile<Scalar>& profile, const GridSpec<Scalar>& spec) {
  const Scalar end = profile.sampling_end(spec.x_cap);
  const Scalar margin = spec.a_margin * (end - profile.x_min());
  const Scalar lo = profile.kind() == ProfileKind::table ? profile.x_min() + margin : profile.x_min();
  return {lo, end - margin};
}

/// Quasi-random interior points in polar form: |z_0|^2 uniform in the radial
/// window, phase of z_0 uniform, fiber radius^2 uniform in [0, F - delta],
/// fiber direction from Box-Muller complex Gaussians. Points with
/// F(|z_0|^2) <= delta are skipped, so every point has A >= delta with
/// delta = a_margin * F(x_lo).
template <typename Scalar>
std::vector<DomainPoint<Scalar>> interior_grid(const Profile<Scalar>& profile, Index n, const GridSpec<Scalar>& spec) {
  if (n < 2) throw ArgumentError("interior_grid: n must be >= 2");
  if (spec.points < 1) throw ArgumentError("interior_grid: need at least one point");
  const auto [lo, hi] = radial_window(profile, spec);
  const Scalar delta = spec.a_margin * profile(lo);
  HaltonSequence halton(static_cast<int>(2 * n + 1), spec.seed);
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;

  std::vector<DomainPoint<Scalar>> points;
  points.reserve(spec.points);
  const long max_draws = 1000L * spec.points;
  for (long draw = 0; draw < max_draws && static_cast<int>(points.size()) < spec.points; ++draw) {
    const auto u = halton.next();
    const Scalar x = lo + Scalar(u[0]) * (hi - lo);
    const Scalar room = profile(x) - delta;
    if (!(room > 0)) continue;
    const Scalar s = Scalar(u[1]) * room;

    CVector<Scalar> dir(n - 1);
    bool ok = true;
    for (Index k = 0; k < n - 1; ++k) {
      const double radius_u = u[3 + 2 * k];
      if (radius_u <= 0.0) ok = false;
      const Scalar radius = ok ? std::sqrt(-2 * std::log(Scalar(radius_u))) : Scalar(0);
      dir(k) = std::polar(radius, two_pi * Scalar(u[4 + 2 * k]));
    }
    if (!ok || !(dir.norm() > 0)) continue;
    dir /= dir.norm();

    CVector<Scalar> z(n);
    z(0) = std::polar(std::sqrt(x), two_pi * Scalar(u[2]));
    z.tail(n - 1) = std::sqrt(s) * dir;
    if (!inside_domain(z, profile)) continue;
    points.emplace_back(std::move(z), profile);
  }
  if (static_cast<int>(points.size()) < spec.points) {
    throw NumericFailureError("interior_grid: could not place the requested number of points");
  }
  return points;
}

/// `count` evenly spaced abscissae covering the radial window (endpoints
/// included).
template <typename Scalar>
std::vector<Scalar> radial_grid(const Profile<Scalar>& profile, int count, const GridSpec<Scalar>& spec) {
  if (count < 2) throw ArgumentError("radial_grid: need at least two abscissae");
  const auto [lo, hi] = radial_window(profile, spec);
  std::vector<Scalar> xs(count);
  for (int j = 0; j < count; ++j) xs[j] = lo + (hi - lo) * Scalar(j) / Scalar(count - 1);
  return xs;
}

}  // namespace hartogs
