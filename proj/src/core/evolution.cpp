#include "evolution.hpp"

#include <cmath>
#include <limits>

namespace gamow {

SampledFunction evolve(const SampledFunction& fhat, double t, int sign) {
    fhat.validate();
    if (sign != 1 && sign != -1) fail(Errc::InvalidArgument, "evolution sign must be +1 or -1");
    if (fhat.tag != DomainTag::EnergyLine && fhat.tag != DomainTag::PositiveEnergyHalfline) {
        fail(Errc::InvalidArgument, "evolve expects energy-side input");
    }
    if (!std::isfinite(t)) fail(Errc::InvalidArgument, "evolution time must be finite");

    SampledFunction out = fhat;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double phase = sign * fhat.grid[i] * t;
        out.values[i] *= Complex(std::cos(phase), std::sin(phase));
    }
    return out;
}

EvolutionReport semigroup_asymmetry(const SampledFunction& fhat, int sign,
                                    const std::vector<double>& tList,
                                    const std::vector<double>& ySamples, double tol) {
    if (sign != 1 && sign != -1) fail(Errc::InvalidArgument, "evolution sign must be +1 or -1");
    const HalfPlane plane = sign > 0 ? HalfPlane::Upper : HalfPlane::Lower;

    const HardyReport initial = is_hardy(fhat, plane, ySamples, tol);
    if (!initial.pass) {
        fail(Errc::Precondition,
             "semigroup_asymmetry: input does not pass the Hardy diagnostic for its half-plane");
    }

    EvolutionReport report;
    report.sign = sign;
    report.tValues = tList;
    report.ySamples = ySamples;
    report.lineNorms.reserve(tList.size());
    report.verdicts.reserve(tList.size());
    for (double t : tList) {
        const SampledFunction moved = evolve(fhat, t, sign);
        const HardyReport rep = is_hardy(moved, plane, ySamples, tol);
        std::vector<double> norms;
        norms.reserve(rep.lines.size());
        for (const LineNorm& ln : rep.lines) {
            norms.push_back(ln.divergent ? std::numeric_limits<double>::infinity() : ln.value);
        }
        report.lineNorms.push_back(std::move(norms));
        report.verdicts.push_back(rep.pass);
    }
    return report;
}

Complex gamow_functional(const GamowPole& pole, const SampledFunction& psiHat) {
    if (pole.zR.imag() >= 0.0) {
        fail(Errc::InvalidArgument,
             "gamow_functional: pole lies in the upper half-plane; lower-class data "
             "continues downward only");
    }
    if (psiHat.tag != DomainTag::EnergyLine) {
        fail(Errc::InvalidArgument, "gamow_functional expects energy-line boundary data");
    }
    const SampledFunction timeSide = to_time_side(psiHat);
    return evaluate_halfplane(timeSide, pole.zR);
}

std::vector<Complex> decay_law(const GamowPole& pole, const SampledFunction& psiHat,
                               const std::vector<double>& tList) {
    for (double t : tList) {
        if (!(t >= 0.0)) {
            fail(Errc::InvalidArgument, "decay_law: times must be nonnegative (semigroup domain)");
        }
    }
    std::vector<Complex> amplitudes;
    amplitudes.reserve(tList.size());
    for (double t : tList) {
        amplitudes.push_back(gamow_functional(pole, evolve(psiHat, t, -1)));
    }
    return amplitudes;
}

}  // namespace gamow
