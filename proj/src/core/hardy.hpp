// Half-line test functions, Fourier transforms, and sampled diagnostics for
// membership in the Hardy classes of the upper/lower half planes.
//
// Conventions fixed here and relied on everywhere else:
//   FT:       fhat(E) = (1/sqrt(2pi)) integral f(t) e^{-iEt} dt
//   inverse:  f(t)    = (1/sqrt(2pi)) integral fhat(E) e^{+iEt} dE
// With this kernel, support in t <= 0 gives boundary data of a function
// analytic and square-integrable in the upper half plane, and support in
// t >= 0 pairs with the lower half plane.  The pairing is verified by test,
// not assumed.
#pragma once

#include <vector>

#include "sampled.hpp"

namespace gamow {

enum class HalfPlane { Upper, Lower };

// Smooth compactly supported test function on a declared half-line.
// Profile: exp(-1/((t-t0)(t1-t))) times u^degree (u the affine map of the
// support onto [-1,1]) times e^{i freq t}, normalized to unit L2 norm on
// the sampling grid.
struct BumpSpec {
    double t0 = 0.0, t1 = 0.0;  // support interval, t0 < t1
    int side = +1;              // +1: support inside (0, inf); -1: inside (-inf, 0)
    int degree = 0;             // polynomial modulation, >= 0
    double freq = 0.0;          // frequency shift of the modulating phase
};

SampledFunction make_bump(const BumpSpec& spec, const std::vector<double>& grid);

// Forward transform onto a symmetric uniform energy grid containing 0.
// The auto variant expands the window until the transform has decayed below
// 1e-10 of its peak near the edges.
SampledFunction fourier_transform(const SampledFunction& f);
SampledFunction fourier_transform(const SampledFunction& f, double eMax, double eStep);

// Inverse transform of energy-line boundary data onto a uniform time grid,
// trimmed to the numerically detected support.  Used by the diagnostics and
// by the evolution module to continue boundary data off the real axis.
SampledFunction to_time_side(const SampledFunction& fhat);

// fhat(z) for complex z via the defining integral over the time side.
// Errors: Divergent when z lies on the half-plane side where e^{-izt} grows
// on the support; TailDominated when the truncated tail is not negligible.
Complex evaluate_halfplane(const SampledFunction& f, Complex z);

struct XWindow {
    double lo = -160.0, hi = 160.0;
    std::size_t points = 6401;
};

// integral |fhat(x+iy)|^2 dx over the window, plus an exponential-fit tail
// bound.  f must be time-line data; the weighted transform is formed
// directly, so no analyticity assumption enters.
double hardy_norm_on_line(const SampledFunction& f, double y, const XWindow& window = {});

struct LineNorm {
    double y = 0.0;
    double value = 0.0;       // window integral + tail bound
    double tailEstimate = 0.0;
    bool divergent = false;   // weighted integrand blew up; value not usable
};

struct HardyReport {
    HalfPlane plane = HalfPlane::Upper;
    double boundaryNormSq = 0.0;
    std::vector<LineNorm> lines;  // sorted by |y| increasing
    double worstRatio = 0.0;      // max line value / boundary norm (inf if divergent)
    bool monotone = false;
    bool pass = false;
};

const std::vector<double>& default_y_samples();

// Sampled Paley-Wiener diagnostic.  PASS iff every line norm stays within
// (1+tol) of the boundary norm and the norms are nonincreasing in |y|.
// Accepts time-line data directly or energy-line boundary data (inverted
// internally).  Never throws on a divergent line; it is recorded and fails
// the verdict.
HardyReport is_hardy(const SampledFunction& f, HalfPlane plane,
                     const std::vector<double>& ySamples = default_y_samples(),
                     double tol = 1e-6);

// Restriction of energy-line data to E >= 0 (the boundary node at 0 is
// kept so trapezoid norms split exactly).  The discarded negative-energy
// part remains determined by the retained data in principle; only the
// samples are dropped.
SampledFunction restrict_positive(const SampledFunction& fhat);

}  // namespace gamow
