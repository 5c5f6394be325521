#pragma once

// Self-similar root approximants: nested fractional-power interpolants
// between small- and large-variable asymptotic expansions, with two-point
// Pade baselines, quadrature-backed reference functions, and a case registry.

#include "rootapprox/approximant.hpp"
#include "rootapprox/config.hpp"
#include "rootapprox/errors.hpp"
#include "rootapprox/oracles.hpp"
#include "rootapprox/pade.hpp"
#include "rootapprox/quadrature.hpp"
#include "rootapprox/rational.hpp"
#include "rootapprox/registry.hpp"
#include "rootapprox/report.hpp"
#include "rootapprox/series.hpp"
#include "rootapprox/solve.hpp"
