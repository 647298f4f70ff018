// Measurement of continued-wavefunction growth against the closed-form
// upper bound shape |z|^{1/4} r / (1 + |z|^{1/2} r) * e^{|Im sqrt(z)| r}.
// The audit records actual values, the C=1 bound, and their ratio; the
// single empirical constant is the max ratio over certified samples.  No
// verdict beyond internal consistency is encoded here: the point of the
// report is to show what the kernel actually does where the bound blows up.
#pragma once

#include <functional>

#include "sampled.hpp"
#include "shell.hpp"

namespace gamow {

enum class SampleStatus {
    Ok,
    Degenerate,   // r = 0: actual and bound both vanish identically
    SkippedPole,  // |jMinus| below the pole-proximity floor; not certified
    Divergent,    // quadrature failed to settle or value not finite
};

struct BoundSample {
    Complex z;
    double param = 0.0;  // r for kernel audits, s for ray profiles
    double actual = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    double jostAbs = 0.0;  // |jMinus| at the continued momentum
    SampleStatus status = SampleStatus::Ok;
};

struct BoundReport {
    std::vector<BoundSample> samples;
    double cEmpirical = 0.0;  // max ratio over certified samples
    bool verdict = false;     // every certified ratio finite
    std::size_t skipped = 0;
};

// Evaluate |continued_ket(z, r)| against the bound shape on a grid of
// complex energies and radii.  Samples closer than 1e-8 in |jMinus| to a
// resonance zero are skipped and counted, not certified.
BoundReport kernel_bound_audit(const PotentialSpec& pot, const std::vector<Complex>& zGrid,
                               const std::vector<double>& rList, Sheet sheet = Sheet::Second);

struct RaySpec {
    Complex origin;     // z(0)
    Complex direction;  // z(s) = origin + s * direction
    Sheet sheet = Sheet::Second;
    std::vector<double> sValues;
};

// Continue phi against the kets along a ray: each row holds
// |integral of phi(r) * continued_ket(z(s), r) dr| next to the bound with
// A = supportRadius.  Quadrature is certified by two grid-doublings; a row
// whose value keeps growing by more than 10% per doubling is flagged, not
// extrapolated.
BoundReport wavefunction_growth_profile(const PotentialSpec& pot,
                                        const std::function<Complex(double)>& phi,
                                        double supportRadius, const RaySpec& ray,
                                        std::size_t basePoints = 513);

}  // namespace gamow
