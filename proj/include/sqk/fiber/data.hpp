#pragma once

// Committed curve data. Each is re-derived from its defining properties by a
// search in the test suite.

#include "sqk/fiber/curve.hpp"

namespace sqk::fiber {

// One O–I arc in sextants 0 and 3: a single circle crossing no sextant line.
NormalMultiCurve base_curve_V0();

// The ρ-invariant circle whose mapping torus is T: arcs O–I, O–L_s and
// I–L_{s+1} in every sextant (12 annulus arcs).
NormalMultiCurve twist_curve_gamma();

}  // namespace sqk::fiber
