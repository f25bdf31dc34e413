// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "hartogs/hartogs.hpp"
#include "pipelines.hpp"

using namespace hartogs;
using P = Profile<double>;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("[%s] AC%d %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Case {
  std::string name;
  P profile;
  bool linear;
};

std::vector<Case> cases() {
  return {{"linear(1,1)", P::linear(1, 1), true},
          {"linear(2,0.5)", P::linear(2, 0.5), true},
          {"exp", P::exponential(), false},
          {"power(2)", P::power(2), false}};
}

const Index dims[] = {2, 3, 4};

P bump() {
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

}  // namespace

int main() {
  const GridSpec<double> spec;  // 200 points, A >= 0.05 F

  // AC1-3: metric, determinant and inverse on the shared grids.
  {
    const auto start = Clock::now();
    double metric = 0, det = 0, inverse = 0;
    int points = 0;
    for (const auto& c : cases()) {
      for (Index n : dims) {
        const auto s = geometry_sweep(c.profile, interior_grid(c.profile, n, spec));
        metric = std::max(metric, s.metric_error);
        det = std::max(det, s.det_error);
        inverse = std::max(inverse, s.inverse_error);
        points += s.admissible_points;
      }
    }
    const double elapsed = seconds_since(start);
    report(1, metric <= 1e-5 && elapsed < 5,
           fmt("metric oracle: max |h - Hess Phi|/(1+|h|) = %.3g (tol 1e-5), %.2f s (limit 5 s)", metric, elapsed));
    report(2, det <= 1e-8 && points == 12 * spec.points,
           fmt("determinant identity: max rel error %.3g (tol 1e-8) over %g points", det, points));
    report(3, inverse <= 1e-8, fmt("inverse identity: max |h h^-1 - I| = %.3g (tol 1e-8)", inverse));
  }

  // AC4-6: curvature.
  {
    double ricci = 0, einstein = 0, linear_scal = 0, poly = 0, rho0 = 0;
    for (const auto& c : cases()) {
      for (Index n : dims) {
        const auto grid = interior_grid(c.profile, n, spec);
        const auto s = curvature_sweep(c.profile, grid);
        ricci = std::max(ricci, s.ricci_error);
        poly = std::max(poly, s.poly_error);
        rho0 = std::max(rho0, s.rho0_error);
        if (!c.linear) continue;
        einstein = std::max(einstein, s.einstein_defect);
        for (const auto& p : grid) {
          linear_scal = std::max(linear_scal, std::abs(scalar_curvature(p, c.profile) + double(n * (n + 1))));
        }
      }
    }
    report(4, ricci <= 1e-4 && einstein <= 1e-10,
           fmt("Ricci oracle: max |Ric - Ric_FD| = %.3g (tol 1e-4); Einstein defect (linear) %.3g (tol 1e-10)", ricci,
               einstein));

    const auto e = P::exponential();
    const DomainPoint<double> at(CVector<double>::Unit(2, 0), e);
    const double s_exp = scalar_curvature(at, e);
    const double s_trace = scalar_curvature_contraction(at, e);
    report(5, linear_scal <= 1e-12 && std::abs(s_exp + 4) <= 1e-8 && std::abs(s_trace + 4) <= 1e-8,
           fmt("scalar curvature: linear max |scal + n(n+1)| = %.3g (tol 1e-12); exp scal(1,0) = %.12g, trace = %.12g",
               linear_scal, s_exp, s_trace));

    const auto ball = P::linear(1, 1);
    CVector<double> z2(2), z3(3);
    z2 << 0.3, std::complex<double>(0.1, 0.2);
    z3 << std::complex<double>(0.2, -0.1), 0.3, std::complex<double>(0, 0.4);
    const auto h2 = generalized_scalars_closed(DomainPoint<double>(z2, ball), ball);
    const auto h3 = generalized_scalars_closed(DomainPoint<double>(z3, ball), ball);
    const auto p3 = generalized_scalars_poly(DomainPoint<double>(z3, ball), ball);
    RVector<double> want2(2), want3(3);
    want2 << -6, 9;
    want3 << -12, 48, -64;
    const double hyp = std::max({(h2 - want2).cwiseAbs().maxCoeff(), (h3 - want3).cwiseAbs().maxCoeff(),
                                 ((p3 - want3).cwiseAbs().array() / (1 + want3.cwiseAbs().array())).maxCoeff()});
    report(6, poly <= 1e-8 && rho0 <= 1e-12 && hyp <= 1e-8,
           fmt("generalized curvatures: poly vs closed %.3g (tol 1e-8, rel. 1+|rho|); rho_0 - scal %.3g (tol 1e-12); "
               "hyperbolic vectors off by %.3g",
               poly, rho0, hyp));
  }

  // AC7: extremality.
  {
    double linear_max = 0, nonlinear_min = INFINITY;
    int certificate_points = 0;
    for (const auto& c : cases()) {
      for (Index n : dims) {
        const auto s = extremal_sweep(c.profile, interior_grid(c.profile, n, spec), 1e-5);
        if (c.linear) {
          linear_max = std::max(linear_max, s.max_residual);
        } else {
          nonlinear_min = std::min(nonlinear_min, s.certificate_residual);
          certificate_points += s.certificate_points;
        }
      }
    }
    double r1 = 0, r2 = 0;
    for (int j = 0; j <= 100; ++j) {
      const auto [a, b] = reduced_conditions(P::exponential(), 0.1 + 2.9 * j / 100.0);
      r1 = std::max(r1, std::abs(a));
      r2 = std::max(r2, std::abs(b + 2));
    }
    report(7, linear_max <= 1e-5 && nonlinear_min >= 1e-3 && certificate_points > 0 && r1 <= 1e-10 && r2 <= 1e-8,
           fmt("extremality: linear max residual %.3g (tol 1e-5); exp/power min certified residual %.3g (>= 1e-3); "
               "exp |r1| %.3g",
               linear_max, nonlinear_min, r1) +
               fmt(", |r2 + 2| %.3g", r2));
  }

  // AC8: pseudoconvexity equivalence.
  {
    bool consistent = true;
    for (const auto& f : {P::linear(1, 1), P::linear(2, 0.5), P::exponential()}) {
      for (Index n : dims) {
        consistent = consistent && equivalence_check(f, n, 500, 1).verdict == EquivalenceVerdict::consistent;
      }
    }
    const auto b = equivalence_check(bump(), 2, 500, 1);
    const bool located = b.flagged > 0 && b.argmin_x > 1 && kahler_indicator(bump(), b.argmin_x) > 0;
    report(8, consistent && located,
           fmt("pseudoconvexity: linear/exp CONSISTENT; synthetic profile flagged %g points, worst at x = %.4g "
               "(violating interval x > 1)",
               b.flagged, b.argmin_x));
  }

  // AC9: classification and full suite.
  {
    bool exact = true;
    double pullback = 0;
    for (const auto& c : cases()) {
      for (Index n : dims) {
        const auto r = classify(c.profile, n);
        exact = exact && (r.verdict == Classification::hyperbolic) == c.linear;
        if (r.pullback) pullback = std::max(pullback, r.pullback->max_error);
      }
    }
    const auto start = Clock::now();
    const auto suite = app::execute(app::parse_config("command = full-suite\n"));
    const double elapsed = seconds_since(start);
    report(9, exact && pullback <= 1e-10 && suite.verdict == "PASS" && elapsed < 60,
           fmt("classification: HYPERBOLIC exactly for linear built-ins, pullback max error %.3g (tol 1e-10); "
               "full suite %.2f s (limit 60 s)",
               pullback, elapsed) +
               " verdict " + suite.verdict);
  }

  return failures == 0 ? 0 : 1;
}
