// Semigroup evolution on energy-side data and the resonance functionals
// built from it.  Evolution itself is pointwise multiplication by a
// unimodular factor; everything interesting happens in which half-plane
// the evolved data stays Hardy, and in the continuation values at poles.
#pragma once

#include "hardy.hpp"
#include "sampled.hpp"
#include "shell.hpp"

namespace gamow {

// Multiply samples by e^{sign * i E t}.  Norms are preserved exactly at the
// sample points.  Minus-sign evolution with t >= 0 preserves the lower
// Hardy class; plus-sign the upper.
SampledFunction evolve(const SampledFunction& fhat, double t, int sign);

struct EvolutionReport {
    int sign = -1;
    std::vector<double> tValues;
    std::vector<double> ySamples;
    // lineNorms[i][j]: Hardy line norm at tValues[i], ySamples[j];
    // infinity marks a line whose window integral diverged
    std::vector<std::vector<double>> lineNorms;
    std::vector<bool> verdicts;
};

// Evolve Hardy boundary data through each listed time and rerun the
// half-plane diagnostic.  The input must pass the diagnostic at t = 0;
// negative times are legal inputs precisely so the report can show them
// failing.
EvolutionReport semigroup_asymmetry(const SampledFunction& fhat, int sign,
                                    const std::vector<double>& tList,
                                    const std::vector<double>& ySamples = default_y_samples(),
                                    double tol = 1e-6);

// Pairing of lower-class boundary data with a resonance pole: the analytic
// continuation of the data to z = pole.zR in the lower half-plane, computed
// through the time-side representation.  Normalization is the raw
// continuation value; consumers should work with ratios.
Complex gamow_functional(const GamowPole& pole, const SampledFunction& psiHat);

// amplitude(t) = gamow_functional(pole, evolve(psiHat, t, -1)) for each
// t in tList.  Times must be nonnegative (semigroup domain).
std::vector<Complex> decay_law(const GamowPole& pole, const SampledFunction& psiHat,
                               const std::vector<double>& tList);

}  // namespace gamow
