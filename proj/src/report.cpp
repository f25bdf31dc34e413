#include "report.hpp"

#include <cmath>
#include <sstream>

namespace hartogs::app {

json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json complex_vector(const CVector<double>& v) {
  json out = json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back({v(k).real(), v(k).imag()});
  return out;
}

json hermitian(const HermitianMatrix<double>& m) {
  json out = json::array();
  for (Index r = 0; r < m.size(); ++r) {
    for (Index c = 0; c < m.size(); ++c) out.push_back({m(r, c).real(), m(r, c).imag()});
  }
  return out;
}

json to_json(const RunConfig& c) {
  json profile = {{"kind", c.profile.kind}, {"params", c.profile.params}};
  if (!c.profile.table.empty()) profile["table"] = c.profile.table;
  return {
      {"command", to_string(c.command)},
      {"profile", profile},
      {"n", c.n},
      {"grid",
       {{"points", c.grid.points},
        {"seed", c.grid.seed},
        {"A_margin", c.grid.a_margin},
        {"x_cap", c.grid.x_cap},
        {"radial_points", c.radial_points}}},
      {"samples", c.samples},
      {"fd", {{"step", c.fd_step}, {"levels", c.fd_levels}}},
      {"tolerances",
       {{"oracle", c.tolerances.oracle}, {"extremal", c.tolerances.extremal}, {"classify", c.tolerances.classify}}},
      {"output", c.output_path},
      {"csv", c.csv_path},
      {"plot", {{"L", c.plot_L_path}, {"scal", c.plot_scal_path}}},
      {"expect", c.expect ? json(*c.expect) : json(nullptr)},
      {"suite", {{"dims", c.suite_dims}}},
  };
}

json to_json(const ProfileSpec& spec, const Profile<double>& profile) {
  json params = json::object();
  for (const auto& [k, v] : profile.params()) params[k] = v;
  json out = {{"kind", spec.kind},
              {"params", params},
              {"x0", number(profile.x0())},
              {"lower_precision", profile.lower_precision()}};
  if (!spec.table.empty()) out["table"] = spec.table;
  return out;
}

json to_json(const CurvatureRecord<double>& r) {
  return {{"point", complex_vector(r.point)},
          {"ricci", hermitian(r.ricci)},
          {"scal", r.scal},
          {"rho", std::vector<double>(r.rho.data(), r.rho.data() + r.rho.size())}};
}

json to_json(const GeometrySweep<double>& s) {
  return {{"points", s.points},
          {"admissible_points", s.admissible_points},
          {"metric_error", s.metric_error},
          {"det_error", s.det_error},
          {"inverse_error", s.inverse_error},
          {"positivity_mismatches", s.positivity_mismatches},
          {"min_eigenvalue", number(s.min_eigenvalue)}};
}

json to_json(const CurvatureSweep<double>& s) {
  json spread = json::array();
  for (Index k = 0; k < s.rho_min.size(); ++k) {
    spread.push_back({{"k", k}, {"min", s.rho_min(k)}, {"max", s.rho_max(k)}, {"spread", s.rho_spread(k)}});
  }
  return {{"points", s.points},
          {"ricci_error", s.ricci_error},
          {"einstein_defect", s.einstein_defect},
          {"contraction_error", s.contraction_error},
          {"rho0_error", s.rho0_error},
          {"poly_error", s.poly_error},
          {"max_abs_L", s.max_abs_L},
          {"rho", spread}};
}

json to_json(const ExtremalSweep<double>& s) {
  return {{"points", s.points},
          {"max_residual", s.max_residual},
          {"argmax_point", complex_vector(s.argmax_point)},
          {"certificate_points", s.certificate_points},
          {"certificate_residual", s.certificate_residual},
          {"certificate_point", complex_vector(s.certificate_point)},
          {"gradient_error", s.gradient_error},
          {"field_error", s.field_error},
          {"extremal", s.extremal}};
}

json to_json(const ReducedScan<double>& s) {
  return {{"x", s.x},
          {"r1", s.r1},
          {"r2", s.r2},
          {"max_abs_r1", s.max_abs_r1},
          {"max_abs_r2", s.max_abs_r2},
          {"identity_error", s.identity_error}};
}

json to_json(const EquivalenceReport<double>& r) {
  return {{"samples", r.samples},
          {"seed", r.seed},
          {"n", r.n},
          {"min_levi", number(r.min_levi)},
          {"argmin_point", complex_vector(r.argmin_point)},
          {"argmin_direction", complex_vector(r.argmin_direction)},
          {"argmin_x", r.argmin_x},
          {"max_indicator", number(r.max_indicator)},
          {"argmax_indicator_x", r.argmax_indicator_x},
          {"flagged", r.flagged},
          {"pointwise_mismatches", r.pointwise_mismatches},
          {"origin_min_levi", number(r.origin_min_levi)},
          {"verdict", to_string(r.verdict)}};
}

json to_json(const PullbackReport<double>& r) {
  return {{"c1", r.c1}, {"c2", r.c2}, {"n", r.n}, {"points", r.points}, {"max_error", r.max_error},
          {"passed", r.passed}};
}

json to_json(const ClassificationReport<double>& r) {
  json rho = json::array();
  for (Index k = 0; k < r.rho_spread.size(); ++k) {
    rho.push_back({{"k", k}, {"spread", r.rho_spread(k)}, {"constant", bool(r.rho_constant[k])}});
  }
  return {{"verdict", to_string(r.verdict)},
          {"L_grid", {{"points", r.radial_points}, {"max_abs_L", r.max_abs_L}, {"argmax_x", r.argmax_L_x}}},
          {"fit", {{"c1", r.c1}, {"c2", r.c2}, {"max_error", r.fit_error}}},
          {"pullback", r.pullback ? to_json(*r.pullback) : json(nullptr)},
          {"rho", rho},
          {"extremal", to_json(r.extremal)}};
}

std::string grid_csv(const Profile<double>& profile, const std::vector<DomainPoint<double>>& grid) {
  std::ostringstream out;
  out.precision(17);
  const Index n = grid.empty() ? 0 : grid.front().dim();
  for (Index k = 0; k < n; ++k) out << "z" << k << "_re,z" << k << "_im,";
  out << "A,B,C,L,G,det,min_eig\n";
  for (const auto& p : grid) {
    for (Index k = 0; k < n; ++k) out << p[k].real() << ',' << p[k].imag() << ',';
    out << p.gap() << ',';
    try {
      const auto b = coefficient_bundle(p, profile);
      out << b.B << ',' << b.C << ',' << b.L << ',' << b.G << ',';
    } catch (const SingularCoefficientError&) {
      out << "nan,nan,nan,nan,";
    }
    out << det_closed_form(p, profile) << ',' << metric_closed_form(p, profile).min_eigenvalue() << '\n';
  }
  return out.str();
}

std::string curve_csv(const std::string& name, const std::vector<double>& xs, const std::vector<double>& ys) {
  std::ostringstream out;
  out.precision(17);
  out << "x," << name << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) out << xs[i] << ',' << ys[i] << '\n';
  return out.str();
}

}  // namespace hartogs::app
