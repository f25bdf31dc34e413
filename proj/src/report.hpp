#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "config.hpp"
#include "hartogs/classification.hpp"
#include "hartogs/curvature.hpp"
#include "hartogs/pseudoconvexity.hpp"
#include "hartogs/validation.hpp"

namespace hartogs::app {

using json = nlohmann::json;

inline constexpr int report_schema = 1;

/// Finite doubles pass through; +-inf become the strings "inf" / "-inf".
json number(double v);

/// [[re, im], ...]
json complex_vector(const CVector<double>& v);
/// Row-major [[re, im], ...] of all n*n entries.
json hermitian(const HermitianMatrix<double>& m);

json to_json(const RunConfig& config);
json to_json(const ProfileSpec& spec, const Profile<double>& profile);
json to_json(const CurvatureRecord<double>& record);
json to_json(const GeometrySweep<double>& sweep);
json to_json(const CurvatureSweep<double>& sweep);
json to_json(const ExtremalSweep<double>& sweep);
json to_json(const ReducedScan<double>& scan);
json to_json(const EquivalenceReport<double>& report);
json to_json(const PullbackReport<double>& report);
json to_json(const ClassificationReport<double>& report);

/// Grid dump, one row per point. Columns, in order:
///   z0_re, z0_im, ..., z{n-1}_re, z{n-1}_im, A, B, C, L, G, det, min_eig
/// B, C, L, G are "nan" where B is singular.
std::string grid_csv(const Profile<double>& profile, const std::vector<DomainPoint<double>>& grid);

/// Two-column CSV with header "x,<name>".
std::string curve_csv(const std::string& name, const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace hartogs::app
