#pragma once

#include "fuzzyqm/core/calculus.hpp"
#include "fuzzyqm/core/error.hpp"
#include "fuzzyqm/core/field.hpp"
#include "fuzzyqm/core/grid.hpp"
#include "fuzzyqm/core/scales.hpp"
#include "fuzzyqm/core/tridiagonal.hpp"

#include "fuzzyqm/classical/action.hpp"
#include "fuzzyqm/classical/hamilton_jacobi.hpp"
#include "fuzzyqm/classical/path.hpp"
#include "fuzzyqm/classical/potential.hpp"

#include "fuzzyqm/quantum/dispersion.hpp"
#include "fuzzyqm/quantum/evolve.hpp"
#include "fuzzyqm/quantum/log_transform.hpp"
#include "fuzzyqm/quantum/residuals.hpp"
#include "fuzzyqm/quantum/wave_function.hpp"

#include "fuzzyqm/slit/gaussian_slit.hpp"

#include "fuzzyqm/fuzzy/membership.hpp"
#include "fuzzyqm/fuzzy/simplex.hpp"
#include "fuzzyqm/fuzzy/subsethood.hpp"

#include "fuzzyqm/experiments/dimensionless.hpp"
#include "fuzzyqm/experiments/ehrenfest.hpp"
#include "fuzzyqm/experiments/quantum_hj.hpp"
