#pragma once

#include "hartogs/classification.hpp"
#include "hartogs/curvature.hpp"
#include "hartogs/errors.hpp"
#include "hartogs/extremal.hpp"
#include "hartogs/finite_difference.hpp"
#include "hartogs/geometry.hpp"
#include "hartogs/profile.hpp"
#include "hartogs/pseudoconvexity.hpp"
#include "hartogs/sampling.hpp"
#include "hartogs/types.hpp"
#include "hartogs/validation.hpp"
