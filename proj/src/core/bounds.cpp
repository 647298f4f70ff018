#include "bounds.hpp"

#include <algorithm>
#include <cmath>

namespace gamow {
namespace {

constexpr double kPoleSkipFloor = 1e-8;
constexpr double kRatioFloor = 1e-300;

double bound_shape(const Complex& z, const Complex& k, double r) {
    const double za = std::abs(z);
    return std::pow(za, 0.25) * r / (1.0 + std::sqrt(za) * r) *
           std::exp(std::abs(k.imag()) * r);
}

void finalize(BoundReport& report) {
    report.cEmpirical = 0.0;
    report.verdict = true;
    report.skipped = 0;
    for (const BoundSample& s : report.samples) {
        switch (s.status) {
            case SampleStatus::Ok:
            case SampleStatus::Degenerate:
                if (!std::isfinite(s.ratio)) report.verdict = false;
                report.cEmpirical = std::max(report.cEmpirical, s.ratio);
                break;
            case SampleStatus::SkippedPole:
                ++report.skipped;
                break;
            case SampleStatus::Divergent:
                report.verdict = false;
                break;
        }
    }
}

}  // namespace

BoundReport kernel_bound_audit(const PotentialSpec& pot, const std::vector<Complex>& zGrid,
                               const std::vector<double>& rList, Sheet sheet) {
    for (double r : rList) {
        if (!(r >= 0.0)) fail(Errc::InvalidArgument, "kernel_bound_audit radii must be >= 0");
    }
    BoundReport report;
    report.samples.reserve(zGrid.size() * rList.size());
    for (const Complex& z : zGrid) {
        const ComplexMomentum km = momentum_from_energy(z, sheet);
        const JostData jost = jost_function(pot, km.k);
        const double jAbs = std::abs(jost.jMinus);
        for (double r : rList) {
            BoundSample s;
            s.z = z;
            s.param = r;
            s.jostAbs = jAbs;
            if (jAbs < kPoleSkipFloor) {
                s.status = SampleStatus::SkippedPole;
            } else if (r == 0.0) {
                s.status = SampleStatus::Degenerate;
                s.actual = 0.0;
                s.bound = 0.0;
                s.ratio = 0.0;
            } else {
                s.actual = std::abs(continued_ket(pot, z, sheet, r));
                s.bound = bound_shape(z, km.k, r);
                s.ratio = s.actual / std::max(s.bound, kRatioFloor);
                if (!std::isfinite(s.actual)) s.status = SampleStatus::Divergent;
            }
            report.samples.push_back(s);
        }
    }
    finalize(report);
    return report;
}

BoundReport wavefunction_growth_profile(const PotentialSpec& pot,
                                        const std::function<Complex(double)>& phi,
                                        double supportRadius, const RaySpec& ray,
                                        std::size_t basePoints) {
    if (!(supportRadius > 0.0) || !std::isfinite(supportRadius)) {
        fail(Errc::InvalidArgument, "growth profile needs a positive finite support radius");
    }
    if (basePoints < 9) fail(Errc::InvalidArgument, "growth profile base grid is too coarse");

    BoundReport report;
    report.samples.reserve(ray.sValues.size());
    for (double s : ray.sValues) {
        const Complex z = ray.origin + s * ray.direction;
        BoundSample row;
        row.z = z;
        row.param = s;
        try {
            const ComplexMomentum km = momentum_from_energy(z, ray.sheet);
            const JostData jost = jost_function(pot, km.k);
            row.jostAbs = std::abs(jost.jMinus);
            if (row.jostAbs < kPoleSkipFloor) {
                row.status = SampleStatus::SkippedPole;
                report.samples.push_back(row);
                continue;
            }
            // Trapezoid at n, 2n-1, 4n-3 points; the finest value stands
            // unless both doublings grew it by more than 10%.
            double mags[3] = {0.0, 0.0, 0.0};
            Complex finest = 0.0;
            std::size_t n = basePoints;
            for (int level = 0; level < 3; ++level) {
                const double h = supportRadius / static_cast<double>(n - 1);
                Complex acc = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    const double r = static_cast<double>(i) * h;
                    const double w = (i == 0 || i + 1 == n) ? 0.5 * h : h;
                    acc += w * phi(r) * continued_ket(pot, z, ray.sheet, r);
                }
                mags[level] = std::abs(acc);
                finest = acc;
                n = 2 * n - 1;
            }
            row.actual = std::abs(finest);
            row.bound = bound_shape(z, km.k, supportRadius);
            row.ratio = row.actual / std::max(row.bound, kRatioFloor);
            const bool grewTwice = mags[1] > 1.1 * mags[0] && mags[2] > 1.1 * mags[1];
            if (grewTwice || !std::isfinite(row.actual)) row.status = SampleStatus::Divergent;
        } catch (const Error&) {
            row.status = SampleStatus::Divergent;
        }
        report.samples.push_back(row);
    }
    finalize(report);
    return report;
}

}  // namespace gamow
