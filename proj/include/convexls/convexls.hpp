#pragma once

// Convex 1-d line search with certified optimality regions, plus the descent
// drivers and benchmark harness built on it.

#include "convexls/geometry.hpp"   // IWYU pragma: export
#include "convexls/region.hpp"     // IWYU pragma: export
#include "convexls/solvers1d.hpp"  // IWYU pragma: export
#include "convexls/linesearch.hpp" // IWYU pragma: export
#include "convexls/descent.hpp"    // IWYU pragma: export
#include "convexls/rng.hpp"        // IWYU pragma: export
#include "convexls/objectives.hpp" // IWYU pragma: export
#include "convexls/bench.hpp"      // IWYU pragma: export
