#include "transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace gamow {
namespace {

constexpr double kGridMatchTol = 1e-12;
constexpr double kDenominatorFloor = 1e-13;

void require_same_grid(const std::vector<double>& got, const std::vector<double>& want,
                       const char* what) {
    if (got.size() != want.size()) {
        fail(Errc::InvalidArgument, std::string(what) + ": grid size does not match the plan");
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (std::abs(got[i] - want[i]) > kGridMatchTol * (1.0 + std::abs(want[i]))) {
            fail(Errc::InvalidArgument, std::string(what) + ": grid does not match the plan");
        }
    }
}

// One kernel row at momentum k, sampled on rGrid and scaled by
// scale / (normalizing coefficient * sqrt(k)).
std::vector<Complex> ket_row(const PotentialSpec& pot, double k, int sign,
                             const std::vector<double>& rGrid, double scale) {
    const RegionSolution sol = match_coefficients(pot, Complex(k, 0.0));
    const Complex denom = sign > 0 ? sol.cIn : sol.cOut;
    if (std::abs(denom) < kDenominatorFloor) {
        fail(Errc::PoleEncountered, "scattering ket undefined: vanishing asymptotic coefficient");
    }
    const Complex pref = scale / (denom * std::sqrt(k));
    std::vector<Complex> row(rGrid.size());
    for (std::size_t i = 0; i < rGrid.size(); ++i) {
        row[i] = pref * sol.eval(rGrid[i]);
    }
    return row;
}

Complex dot_row(const std::vector<Complex>& row, const std::vector<double>& w,
                const std::vector<Complex>& v) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        acc += w[i] * row[i] * v[i];
    }
    return acc;
}

void check_decayed_tail(const SampledFunction& f, const char* what, const char* cutoffName) {
    double peak = 0.0;
    for (const Complex& v : f.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return;
    const std::size_t n = f.size();
    const std::size_t tailStart = n - std::max<std::size_t>(2, n / 20);
    for (std::size_t i = tailStart; i < n; ++i) {
        if (std::abs(f.values[i]) > 1e-4 * peak) {
            fail(Errc::TailDominated, std::string(what) + ": input has not decayed before the " +
                                          cutoffName + " cutoff");
        }
    }
}

}  // namespace

TransformPlan make_plan(const PotentialSpec& pot, int sign, const PlanOptions& opts) {
    if (sign != 1 && sign != -1) fail(Errc::InvalidArgument, "plan sign must be +1 or -1");
    if (!(opts.rCutoff > pot.b) || !std::isfinite(opts.rCutoff)) {
        fail(Errc::InvalidArgument, "position cutoff must be finite and beyond the shell");
    }
    if (!(opts.eCutoff > 0.0) || !std::isfinite(opts.eCutoff)) {
        fail(Errc::InvalidArgument, "energy cutoff must be finite and positive");
    }
    if (opts.rPoints < 9 || opts.ePoints < 16) {
        fail(Errc::InvalidArgument, "plan grids are too coarse");
    }

    TransformPlan plan;
    plan.pot = pot;
    plan.sign = sign;
    plan.opts = opts;
    plan.rGrid = uniform_grid(0.0, opts.rCutoff, opts.rPoints);
    plan.rWeights = trapezoid_weights(plan.rGrid);

    // Midpoint ladder in k: nodes at (j + 1/2) dk never land on k = 0 or on
    // the interior degeneracy k^2 = v0, and the half-step offset costs no
    // accuracy because the transformed densities are even in k.
    const double kMax = std::sqrt(opts.eCutoff);
    const double dk = kMax / static_cast<double>(opts.ePoints);
    plan.kGrid.resize(opts.ePoints);
    plan.eGrid.resize(opts.ePoints);
    plan.eWeights.resize(opts.ePoints);
    for (std::size_t j = 0; j < opts.ePoints; ++j) {
        const double k = (static_cast<double>(j) + 0.5) * dk;
        plan.kGrid[j] = k;
        plan.eGrid[j] = k * k;
        plan.eWeights[j] = dk * 2.0 * k;
    }

    // Calibrate the overall constant by Parseval on the free kernel, using a
    // reference function that has died out well before the cutoff.
    const PotentialSpec freeSpec{pot.a, pot.b, 0.0};
    std::vector<Complex> fRef(plan.rGrid.size());
    double refNormSq = 0.0;
    for (std::size_t i = 0; i < plan.rGrid.size(); ++i) {
        const double r = plan.rGrid[i];
        fRef[i] = r * std::exp(-r * r);
        refNormSq += plan.rWeights[i] * std::norm(fRef[i]);
    }
    double rawNormSq = 0.0;
    for (std::size_t j = 0; j < opts.ePoints; ++j) {
        const std::vector<Complex> row = ket_row(freeSpec, plan.kGrid[j], sign, plan.rGrid, 1.0);
        rawNormSq += plan.eWeights[j] * std::norm(dot_row(row, plan.rWeights, fRef));
    }
    plan.normConstant = std::sqrt(refNormSq / rawNormSq);

    plan.kernel.resize(opts.ePoints);
    for (std::size_t j = 0; j < opts.ePoints; ++j) {
        plan.kernel[j] = ket_row(pot, plan.kGrid[j], sign, plan.rGrid, plan.normConstant);
    }
    return plan;
}

double energy_norm_sq(const TransformPlan& plan, const SampledFunction& g) {
    require_same_grid(g.grid, plan.eGrid, "energy_norm_sq");
    double acc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        acc += plan.eWeights[j] * std::norm(g.values[j]);
    }
    return acc;
}

SampledFunction to_energy(const TransformPlan& plan, const SampledFunction& f) {
    f.validate();
    if (f.tag != DomainTag::PositionLine) {
        fail(Errc::InvalidArgument, "to_energy expects position-line input");
    }
    require_same_grid(f.grid, plan.rGrid, "to_energy");
    check_decayed_tail(f, "to_energy", "position");

    SampledFunction g;
    g.grid = plan.eGrid;
    g.values.resize(plan.eGrid.size());
    g.tag = DomainTag::PositiveEnergyHalfline;
    g.tail = {TailModel::Rapid, 0.0};
    for (std::size_t j = 0; j < plan.kernel.size(); ++j) {
        g.values[j] = dot_row(plan.kernel[j], plan.rWeights, f.values);
    }
    return g;
}

SampledFunction to_position(const TransformPlan& plan, const SampledFunction& g) {
    g.validate();
    if (g.tag != DomainTag::PositiveEnergyHalfline) {
        fail(Errc::InvalidArgument, "to_position expects positive-energy input");
    }
    require_same_grid(g.grid, plan.eGrid, "to_position");
    // Energy data from the interacting kernels carries an algebraic tail
    // (the kernel's curvature jumps at the shell), so gate on the relative
    // L2 mass in the last stretch of the ladder instead of raw amplitude.
    {
        double total = 0.0, tail = 0.0;
        const std::size_t tailStart = g.size() - std::max<std::size_t>(2, g.size() / 20);
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double m = plan.eWeights[j] * std::norm(g.values[j]);
            total += m;
            if (j >= tailStart) tail += m;
        }
        if (total > 0.0 && tail > 1e-4 * total) {
            fail(Errc::TailDominated, "to_position: input has not decayed before the energy cutoff");
        }
    }

    SampledFunction f;
    f.grid = plan.rGrid;
    f.values.assign(plan.rGrid.size(), Complex(0.0, 0.0));
    f.tag = DomainTag::PositionLine;
    f.tail = {TailModel::Rapid, 0.0};
    for (std::size_t j = 0; j < plan.kernel.size(); ++j) {
        const Complex c = plan.eWeights[j] * g.values[j];
        const std::vector<Complex>& row = plan.kernel[j];
        for (std::size_t i = 0; i < row.size(); ++i) {
            f.values[i] += c * std::conj(row[i]);
        }
    }
    return f;
}

SampledFunction moller_apply(const TransformPlan& plan, const SampledFunction& fFree) {
    fFree.validate();
    if (fFree.tag != DomainTag::PositionLine) {
        fail(Errc::InvalidArgument, "moller_apply expects position-line input");
    }
    require_same_grid(fFree.grid, plan.rGrid, "moller_apply");
    check_decayed_tail(fFree, "moller_apply", "position");

    const PotentialSpec freeSpec{plan.pot.a, plan.pot.b, 0.0};
    SampledFunction g;
    g.grid = plan.eGrid;
    g.values.resize(plan.eGrid.size());
    g.tag = DomainTag::PositiveEnergyHalfline;
    g.tail = {TailModel::Rapid, 0.0};
    for (std::size_t j = 0; j < plan.eGrid.size(); ++j) {
        const std::vector<Complex> row =
            ket_row(freeSpec, plan.kGrid[j], plan.sign, plan.rGrid, plan.normConstant);
        g.values[j] = dot_row(row, plan.rWeights, fFree.values);
    }
    return to_position(plan, g);
}

IntertwiningReport intertwining_check(const TransformPlan& plan, const SampledFunction& f) {
    f.validate();
    if (f.tag != DomainTag::PositionLine) {
        fail(Errc::InvalidArgument, "intertwining_check expects position-line input");
    }
    const std::size_t n = f.size();
    if (n < 9) fail(Errc::InvalidArgument, "intertwining_check needs at least 9 samples");
    if (f.grid.front() < -kGridMatchTol || f.grid.back() > plan.opts.rCutoff + kGridMatchTol) {
        fail(Errc::InvalidArgument, "intertwining_check input leaves the plan's position range");
    }
    const double h = f.grid[1] - f.grid[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (std::abs((f.grid[i + 1] - f.grid[i]) - h) > 1e-9 * h) {
            fail(Errc::InvalidArgument, "intertwining_check needs a uniform grid");
        }
    }
    double peak = 0.0;
    for (const Complex& v : f.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) fail(Errc::InvalidArgument, "intertwining_check input is identically zero");
    if (std::abs(f.values.front()) > 1e-8 * peak || std::abs(f.values.back()) > 1e-8 * peak) {
        fail(Errc::Precondition, "intertwining_check input must vanish at its grid ends");
    }

    const PotentialSpec& pot = plan.pot;
    // Centered second difference plus the multiplication operator.  A node
    // sitting exactly on a potential step takes the midpoint value.
    std::vector<double> hGrid(f.grid.begin() + 1, f.grid.end() - 1);
    std::vector<Complex> hVals(n - 2);
    bool touches = false;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double r = f.grid[i];
        double v = 0.0;
        if (std::abs(r - pot.a) < 1e-6 * h || std::abs(r - pot.b) < 1e-6 * h) {
            v = 0.5 * pot.v0;
        } else if (r > pot.a && r < pot.b) {
            v = pot.v0;
        }
        if (v != 0.0 && std::abs(f.values[i]) > 1e-12 * peak) touches = true;
        hVals[i - 1] = -(f.values[i + 1] - 2.0 * f.values[i] + f.values[i - 1]) / (h * h) +
                       v * f.values[i];
    }

    const std::vector<double> wF = trapezoid_weights(f.grid);
    const std::vector<double> wH = trapezoid_weights(hGrid);
    double hNormSq = 0.0;
    for (std::size_t i = 0; i < hVals.size(); ++i) hNormSq += wH[i] * std::norm(hVals[i]);
    if (hNormSq <= 0.0) fail(Errc::Precondition, "intertwining_check: Hf vanishes");

    // Transform f and Hf with kernel rows sampled on f's own grid, then
    // compare against multiplication by E on the energy side.
    double defectSq = 0.0;
    for (std::size_t j = 0; j < plan.eGrid.size(); ++j) {
        const std::vector<Complex> rowF =
            ket_row(pot, plan.kGrid[j], plan.sign, f.grid, plan.normConstant);
        const std::vector<Complex> rowH(rowF.begin() + 1, rowF.end() - 1);
        const Complex uf = dot_row(rowF, wF, f.values);
        const Complex uhf = dot_row(rowH, wH, hVals);
        defectSq += plan.eWeights[j] * std::norm(uhf - plan.eGrid[j] * uf);
    }

    IntertwiningReport report;
    report.defect = std::sqrt(defectSq / hNormSq);
    report.hNormSq = hNormSq;
    report.touchesShell = touches;
    return report;
}

}  // namespace gamow
