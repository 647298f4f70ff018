// Independent cross-checks for the test suite.  Everything here is computed
// along a different code path than the library: closed-form interface
// algebra instead of the linear solve, an integral-equation march instead of
// ODE matching, and fixed-step contour sums instead of adaptive refinement.
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "core/types.hpp"

namespace oracle {

using gamow::Complex;
using gamow::PotentialSpec;

struct ClosedFormCoefficients {
    Complex chiB, dchiB;   // matched solution and slope at r = b
    Complex cIn, cOut;     // incoming/outgoing amplitudes beyond b
    Complex jMinus;        // -2i cIn, normalized to 1 for the free case
};

// Interface algebra written out by hand: propagate (chi, chi') across the
// barrier with the standard cosine/sine fundamental pair and read the
// amplitudes off the r = b interface directly.
ClosedFormCoefficients closed_form(const PotentialSpec& pot, Complex k);

// Integral-equation value of the function whose zeros are the resonance
// momenta.  Solves the outgoing-wave Volterra equation by trapezoid
// marching from r = b down to r = a with Richardson extrapolation in the
// step count; `n` is the base subinterval count.
Complex volterra_jminus(const PotentialSpec& pot, Complex k, int n = 20000);

// Winding number of f around the rectangle, fixed uniform sampling with no
// adaptivity.  Caller picks `perEdge` dense enough for the region.
long fixed_step_winding(const std::function<Complex(Complex)>& f, double reLo, double reHi,
                        double imLo, double imHi, int perEdge);

// Adaptive Simpson quadrature on [lo, hi] for complex-valued integrands.
Complex adaptive_simpson(const std::function<Complex(double)>& f, double lo, double hi,
                         double tol = 1e-12, int maxDepth = 48);

}  // namespace oracle
