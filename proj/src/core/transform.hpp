// Unitary maps between position functions on [0, rCutoff] and energy
// functions on (0, eCutoff], built from the scattering kets.  The kernel is
// K(E, r) = normConstant * ket(E, r, sign) / sqrt(k): the 1/sqrt(k) converts
// momentum-density to energy-density normalization and normConstant absorbs
// the delta-normalization constant, calibrated once by Parseval on the free
// kernel and frozen in the plan.
//
// Energy quadrature runs on a midpoint ladder uniform in k = sqrt(E) with
// weights dk * 2k.  The substitution makes the inverse integrand smooth at
// threshold, and the half-step offset keeps every node away from both k = 0
// and the k^2 = v0 basis degeneracy.
#pragma once

#include "sampled.hpp"
#include "shell.hpp"

namespace gamow {

struct PlanOptions {
    double rCutoff = 40.0;
    double eCutoff = 400.0;
    std::size_t rPoints = 1281;  // spacing 1/32 divides both shell radii
    std::size_t ePoints = 1280;
};

struct TransformPlan {
    PotentialSpec pot;
    int sign = +1;
    PlanOptions opts;
    std::vector<double> rGrid, rWeights;
    std::vector<double> kGrid;
    std::vector<double> eGrid, eWeights;
    double normConstant = 0.0;
    // kernel[j] is the row at energy eGrid[j], sampled on rGrid
    std::vector<std::vector<Complex>> kernel;
};

TransformPlan make_plan(const PotentialSpec& pot, int sign, const PlanOptions& opts = {});

// Norm squared of energy-side data under the plan's energy quadrature.
// (Plain trapezoid on the E grid would disagree with the calibrated
// weights at second order in the ladder spacing.)
double energy_norm_sq(const TransformPlan& plan, const SampledFunction& g);

// Forward map: f(r) on the plan's position grid to fhat(E) on its energy
// grid.  Requires the input to have decayed before rCutoff.
SampledFunction to_energy(const TransformPlan& plan, const SampledFunction& f);

// Inverse map with the conjugate kernel, energy grid to position grid.
SampledFunction to_position(const TransformPlan& plan, const SampledFunction& g);

// Wave-operator application: analyze with the free kernel on the same
// grids, synthesize with the plan's interacting kernel.  Free rows are
// generated on the fly; nothing extra is stored in the plan.
SampledFunction moller_apply(const TransformPlan& plan, const SampledFunction& fFree);

struct IntertwiningReport {
    double defect = 0.0;        // ||U(Hf) - E.(Uf)|| / ||Hf||, plan quadratures
    double hNormSq = 0.0;       // ||Hf||^2
    bool touchesShell = false;  // f support reaches the potential steps
};

// Diagonalization defect for a smooth compactly supported f on its own
// uniform position grid; H is applied by centered finite differences, so
// the defect shrinks at second order in that grid's spacing.
IntertwiningReport intertwining_check(const TransformPlan& plan, const SampledFunction& f);

}  // namespace gamow
