#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "hartogs/hartogs.hpp"

namespace testing {

using namespace hartogs;
using P = Profile<double>;
using cd = std::complex<double>;
using Vec = CVector<double>;

inline std::vector<P> builtin_profiles() {
  return {P::linear(1, 1), P::linear(2, 0.5), P::exponential(), P::power(2)};
}

/// F = exp(g), g = -x/(1+x). (x F'/F)' = -(1-x)/(1+x)^3 changes sign at x = 1,
/// so D_F is Kähler exactly over x < 1.
inline P bump_profile() {
  return P::custom("bump", P::infinity(), [](double x) {
    const double u = 1 + x;
    const double g1 = -1 / (u * u), g2 = 2 / (u * u * u), g3 = -6 / std::pow(u, 4), g4 = 24 / std::pow(u, 5),
                 g5 = -120 / std::pow(u, 6);
    const double f = std::exp(-x / u);
    return P::Jet{f,
                  f * g1,
                  f * (g2 + g1 * g1),
                  f * (g3 + 3 * g1 * g2 + g1 * g1 * g1),
                  f * (g4 + 4 * g1 * g3 + 3 * g2 * g2 + 6 * g1 * g1 * g2 + std::pow(g1, 4)),
                  f * (g5 + 5 * g1 * g4 + 10 * g2 * g3 + 10 * g1 * g1 * g3 + 15 * g1 * g2 * g2 +
                       10 * std::pow(g1, 3) * g2 + std::pow(g1, 5))};
  });
}

/// exp(-x) with a wrong F''.
inline P corrupted_profile() {
  return P::custom("corrupted", P::infinity(), [](double x) {
    const double f = std::exp(-x);
    return P::Jet{f, -f, 2 * f, -f, f, -f};
  });
}

inline Vec point(std::initializer_list<cd> entries) {
  Vec z(static_cast<Index>(entries.size()));
  Index k = 0;
  for (const auto& e : entries) z(k++) = e;
  return z;
}

inline std::vector<DomainPoint<double>> grid(const P& profile, Index n, int points = 40, std::uint64_t seed = 7) {
  GridSpec<double> spec;
  spec.points = points;
  spec.seed = seed;
  return interior_grid(profile, n, spec);
}

}  // namespace testing
