#include "hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gamow {

namespace {

const Complex kI(0.0, 1.0);
constexpr double kInvSqrt2Pi = 0.39894228040143268;

// sum_j wv_j e^{i sign x t_j} on the uniform grid x_m = x0 + m dx.  The
// inner loop advances the phase multiplicatively and refreshes it from
// std::polar every 128 steps so drift stays below 1e-13.
std::vector<Complex> weighted_exp_sum(const std::vector<double>& nodes,
                                      const std::vector<Complex>& wv, double x0, double dx,
                                      std::size_t nx, double sign) {
    std::vector<Complex> out(nx, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const Complex c = wv[j];
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        const double tj = nodes[j];
        const Complex step = std::polar(1.0, sign * dx * tj);
        Complex phase = std::polar(1.0, sign * x0 * tj);
        for (std::size_t m = 0; m < nx; ++m) {
            if ((m & 127u) == 0u && m != 0u)
                phase = std::polar(1.0, sign * (x0 + dx * static_cast<double>(m)) * tj);
            out[m] += c * phase;
            phase *= step;
        }
    }
    return out;
}

// Single-point transform value, used for window probing.
Complex ft_at(const SampledFunction& f, const std::vector<double>& w, double e) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < f.size(); ++j)
        acc += w[j] * f.values[j] * std::polar(1.0, -e * f.grid[j]);
    return kInvSqrt2Pi * acc;
}

void require_tag(const SampledFunction& f, DomainTag tag, const char* what) {
    if (f.tag != tag) fail(Errc::InvalidArgument, what);
}

// Truncation-error guard for transforms of time-line data.  A sampled
// function is zero outside its window by convention; the Compact tag
// promises that is exact.  Other tail models admit mass beyond the window,
// so an edge the data decays toward is checked for truncated-tail mass.
// An edge the data jumps up at is a support boundary, not a truncation.
void check_time_tails(const SampledFunction& f) {
    if (f.tail.model == TailModel::Compact) return;
    double peak = 0.0;
    for (const Complex& v : f.values) peak = std::max(peak, std::abs(v));
    if (peak == 0.0) return;
    const double l2 = l2_norm_sq(f);
    const std::size_t step = std::max<std::size_t>(3, f.size() / 10);

    const auto edge_bad = [&](std::size_t edgeIdx, std::size_t inIdx) {
        const double edge = std::abs(f.values[edgeIdx]);
        if (edge <= 1e-8 * peak) return false;
        const double inner = std::abs(f.values[inIdx]);
        if (inner <= edge) return false;  // rising toward the interior: boundary jump
        double rate = f.tail.rate;
        if (!(f.tail.model == TailModel::Exponential && rate > 0.0))
            rate = std::log(inner / edge) / std::abs(f.grid[inIdx] - f.grid[edgeIdx]);
        return edge * edge / (2.0 * rate) > 1e-8 * l2;
    };
    if (edge_bad(0, step) || edge_bad(f.size() - 1, f.size() - 1 - step))
        fail(Errc::TailDominated, "truncated tail mass at the time-window edge is not negligible");
}

}  // namespace

SampledFunction make_bump(const BumpSpec& spec, const std::vector<double>& grid) {
    if (!(spec.t1 > spec.t0)) fail(Errc::InvalidArgument, "bump support must have t0 < t1");
    if (spec.degree < 0) fail(Errc::InvalidArgument, "bump degree must be nonnegative");
    if (spec.side == +1) {
        if (!(spec.t0 > 0.0))
            fail(Errc::InvalidArgument, "bump support must sit strictly inside (0, inf)");
    } else if (spec.side == -1) {
        if (!(spec.t1 < 0.0))
            fail(Errc::InvalidArgument, "bump support must sit strictly inside (-inf, 0)");
    } else {
        fail(Errc::InvalidArgument, "bump side must be +1 or -1");
    }
    if (grid.size() < 16 || grid.front() > spec.t0 || grid.back() < spec.t1)
        fail(Errc::InvalidArgument, "grid does not cover the bump support");

    SampledFunction f;
    f.grid = grid;
    f.values.assign(grid.size(), Complex(0.0, 0.0));
    f.tag = DomainTag::TimeLine;
    f.tail = {TailModel::Compact, 0.0};

    std::size_t inside = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        if (t <= spec.t0 || t >= spec.t1) continue;
        ++inside;
        const double p = (t - spec.t0) * (spec.t1 - t);
        const double core = std::exp(-1.0 / p);
        const double u = (2.0 * t - spec.t0 - spec.t1) / (spec.t1 - spec.t0);
        f.values[i] = core * std::pow(u, spec.degree) * std::polar(1.0, spec.freq * t);
    }
    if (inside < 64)
        fail(Errc::InvalidArgument, "grid resolves the bump support with fewer than 64 points");

    const double n2 = l2_norm_sq(f);
    if (!(n2 > 0.0)) fail(Errc::InvalidArgument, "bump vanished on this grid");
    const double scale = 1.0 / std::sqrt(n2);
    for (Complex& v : f.values) v *= scale;
    return f;
}

SampledFunction fourier_transform(const SampledFunction& f, double eMax, double eStep) {
    f.validate();
    require_tag(f, DomainTag::TimeLine, "fourier_transform expects time-line data");
    if (!(eMax > 0.0) || !(eStep > 0.0) || eStep > eMax)
        fail(Errc::InvalidArgument, "fourier_transform: bad energy window");
    check_time_tails(f);

    const auto w = trapezoid_weights(f.grid);
    const SupportRange sr = numeric_support(f, 1e-14);
    std::vector<double> nodes;
    std::vector<Complex> wv;
    if (!sr.empty()) {
        for (std::ptrdiff_t j = sr.first; j <= sr.last; ++j) {
            nodes.push_back(f.grid[static_cast<std::size_t>(j)]);
            wv.push_back(w[static_cast<std::size_t>(j)] * f.values[static_cast<std::size_t>(j)]);
        }
    }

    const auto half = static_cast<std::size_t>(std::lround(eMax / eStep));
    const std::size_t n = 2 * half + 1;
    const double e0 = -static_cast<double>(half) * eStep;

    SampledFunction out;
    out.grid.resize(n);
    for (std::size_t m = 0; m < n; ++m) out.grid[m] = e0 + eStep * static_cast<double>(m);
    out.values = weighted_exp_sum(nodes, wv, e0, eStep, n, -1.0);
    for (Complex& v : out.values) v *= kInvSqrt2Pi;
    out.tag = DomainTag::EnergyLine;
    out.tail = {TailModel::Rapid, 0.0};
    return out;
}

SampledFunction fourier_transform(const SampledFunction& f) {
    f.validate();
    require_tag(f, DomainTag::TimeLine, "fourier_transform expects time-line data");
    check_time_tails(f);

    const SupportRange sr = numeric_support(f, 1e-14);
    double tExtent = 1.0;
    if (!sr.empty())
        tExtent = std::max(std::abs(f.grid[static_cast<std::size_t>(sr.first)]),
                           std::abs(f.grid[static_cast<std::size_t>(sr.last)]));
    const double eStep = std::min(0.05, kPi / (4.0 * (tExtent + 4.0)));

    const auto w = trapezoid_weights(f.grid);
    double peak = 0.0;
    for (double e : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        peak = std::max(peak, std::abs(ft_at(f, w, e)));
        peak = std::max(peak, std::abs(ft_at(f, w, -e)));
    }
    if (peak == 0.0) return fourier_transform(f, 48.0, eStep);

    double eMax = 48.0;
    while (true) {
        double edge = 0.0;
        for (double frac : {0.9, 0.95, 1.0}) {
            edge = std::max(edge, std::abs(ft_at(f, w, frac * eMax)));
            edge = std::max(edge, std::abs(ft_at(f, w, -frac * eMax)));
        }
        if (edge < 1e-10 * peak) break;
        eMax *= 1.5;
        if (eMax > 4096.0)
            fail(Errc::TailDominated, "transform window would exceed the supported range");
    }
    return fourier_transform(f, eMax, eStep);
}

SampledFunction to_time_side(const SampledFunction& fhat) {
    fhat.validate();
    require_tag(fhat, DomainTag::EnergyLine, "to_time_side expects energy-line data");

    const auto w = trapezoid_weights(fhat.grid);
    std::vector<Complex> wv(fhat.size());
    for (std::size_t j = 0; j < fhat.size(); ++j) wv[j] = w[j] * fhat.values[j];

    constexpr double dt = 0.005;
    constexpr double tMax = 16.0;
    const auto half = static_cast<std::size_t>(std::lround(tMax / dt));
    const std::size_t n = 2 * half + 1;
    const double t0 = -static_cast<double>(half) * dt;

    SampledFunction full;
    full.grid.resize(n);
    for (std::size_t m = 0; m < n; ++m) full.grid[m] = t0 + dt * static_cast<double>(m);
    full.values = weighted_exp_sum(fhat.grid, wv, t0, dt, n, +1.0);
    for (Complex& v : full.values) v *= kInvSqrt2Pi;
    full.tag = DomainTag::TimeLine;

    const SupportRange sr = numeric_support(full, 1e-10);
    if (sr.empty()) {
        full.tail = {TailModel::Compact, 0.0};
        return full;
    }
    auto lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, sr.first - 4));
    auto hi = static_cast<std::size_t>(
        std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, sr.last + 4));
    while (hi - lo + 1 < 16) {  // keep the result a valid SampledFunction
        if (lo > 0) --lo;
        if (hi + 1 < n) ++hi;
    }
    SampledFunction out;
    out.grid.assign(full.grid.begin() + static_cast<std::ptrdiff_t>(lo),
                    full.grid.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    out.values.assign(full.values.begin() + static_cast<std::ptrdiff_t>(lo),
                      full.values.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    out.tag = DomainTag::TimeLine;
    const bool interior = sr.first > 0 && sr.last + 1 < static_cast<std::ptrdiff_t>(n);
    out.tail = {interior ? TailModel::Compact : TailModel::Rapid, 0.0};
    return out;
}

Complex evaluate_halfplane(const SampledFunction& f, Complex z) {
    f.validate();
    require_tag(f, DomainTag::TimeLine, "evaluate_halfplane expects time-line data");
    const SupportRange sr = numeric_support(f, 1e-12);
    if (sr.empty()) return {0.0, 0.0};

    const double tFirst = f.grid[static_cast<std::size_t>(sr.first)];
    const double tLast = f.grid[static_cast<std::size_t>(sr.last)];
    const double y = z.imag();
    if (tLast > 1e-12 && y > 1e-9)
        fail(Errc::Divergent, "e^{-izt} grows on the positive-time part of the support");
    if (tFirst < -1e-12 && y < -1e-9)
        fail(Errc::Divergent, "e^{-izt} grows on the negative-time part of the support");

    const auto w = trapezoid_weights(f.grid);
    Complex acc(0.0, 0.0);
    double maxMag = 0.0;
    for (std::ptrdiff_t j = sr.first; j <= sr.last; ++j) {
        const auto i = static_cast<std::size_t>(j);
        const Complex term = f.values[i] * std::exp(-kI * z * f.grid[i]);
        maxMag = std::max(maxMag, std::abs(term));
        acc += w[i] * term;
    }
    const Complex value = kInvSqrt2Pi * acc;

    // Truncation accounting: if a weighted endpoint is not negligible, fit
    // the local decay and require the extrapolated tail to stay below 1e-6.
    const auto tail_ok = [&](std::ptrdiff_t endIdx, std::ptrdiff_t inwardIdx) {
        const double edge =
            std::abs(f.values[static_cast<std::size_t>(endIdx)]) *
            std::exp(y * f.grid[static_cast<std::size_t>(endIdx)]);
        if (edge <= 1e-12 * maxMag) return true;
        const double inner =
            std::abs(f.values[static_cast<std::size_t>(inwardIdx)]) *
            std::exp(y * f.grid[static_cast<std::size_t>(inwardIdx)]);
        const double span = std::abs(f.grid[static_cast<std::size_t>(endIdx)] -
                                     f.grid[static_cast<std::size_t>(inwardIdx)]);
        if (!(inner > edge) || span == 0.0) return false;  // not decaying outward
        const double rate = std::log(inner / edge) / span;
        const double est = edge / rate;
        return est <= 1e-6 * std::max(std::abs(value), 1e-300);
    };
    const std::ptrdiff_t width = std::max<std::ptrdiff_t>(3, (sr.last - sr.first) / 10);
    if (sr.last - sr.first >= 6) {
        if (!tail_ok(sr.last, sr.last - width) || !tail_ok(sr.first, sr.first + width))
            fail(Errc::TailDominated, "truncated tail dominates the requested evaluation");
    }
    return value;
}

namespace {

double hardy_norm_impl(const SampledFunction& f, double y, const XWindow& window,
                       double* tailOut, double tailGate) {
    f.validate();
    if (f.tag != DomainTag::TimeLine)
        fail(Errc::InvalidArgument, "hardy_norm_on_line expects time-line data");
    if (window.points < 16 || !(window.hi > window.lo))
        fail(Errc::InvalidArgument, "hardy_norm_on_line: bad x window");

    const SupportRange sr = numeric_support(f, 1e-13);
    if (tailOut) *tailOut = 0.0;
    if (sr.empty()) return 0.0;

    const auto w = trapezoid_weights(f.grid);
    std::vector<double> nodes;
    std::vector<Complex> wv;
    std::vector<double> mag, raw;
    nodes.reserve(static_cast<std::size_t>(sr.last - sr.first + 1));
    for (std::ptrdiff_t j = sr.first; j <= sr.last; ++j) {
        const auto i = static_cast<std::size_t>(j);
        const double boost = std::exp(y * f.grid[i]);
        nodes.push_back(f.grid[i]);
        wv.push_back(w[i] * f.values[i] * boost);
        raw.push_back(std::abs(f.values[i]));
        mag.push_back(raw.back() * boost);
    }
    // Divergence guard: a window edge the raw data decays toward is a
    // truncated tail; if the e^{yt} weight re-inflates it so the weighted
    // integrand grows outward there, the cut mass dominates the true norm.
    // An edge where the raw data is large (a support-boundary jump) is fine.
    const double magPeak = *std::max_element(mag.begin(), mag.end());
    if (magPeak > 0.0 && mag.size() >= 8) {
        const std::size_t step = std::max<std::size_t>(3, mag.size() / 10);
        const std::size_t rIn = mag.size() - 1 - step;
        const bool rightBad = mag.back() > 1e-8 * magPeak && mag.back() >= mag[rIn] &&
                              raw.back() < 0.5 * raw[rIn];
        const bool leftBad = mag.front() > 1e-8 * magPeak && mag.front() >= mag[step] &&
                             raw.front() < 0.5 * raw[step];
        if (rightBad || leftBad)
            fail(Errc::TailDominated, "weighted integrand grows at the sample window edge");
    }

    const double dx = (window.hi - window.lo) / static_cast<double>(window.points - 1);
    std::vector<Complex> line = weighted_exp_sum(nodes, wv, window.lo, dx, window.points, -1.0);
    for (Complex& v : line) v *= kInvSqrt2Pi;

    double acc = 0.0;
    for (std::size_t m = 0; m < line.size(); ++m) {
        const double cell = (m == 0 || m + 1 == line.size()) ? 0.5 * dx : dx;
        acc += cell * std::norm(line[m]);
    }

    // Tail bound per side from a least-squares exponential fit on the outer
    // ten percent of the window.
    const double span = window.hi - window.lo;
    const std::size_t nfit = std::max<std::size_t>(6, window.points / 20);
    const auto side_tail = [&](bool rightSide) -> double {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (std::size_t i = 0; i < nfit; ++i) {
            const std::size_t idx = rightSide ? line.size() - nfit + i : i;
            const double xv = window.lo + dx * static_cast<double>(idx);
            const double lv = std::log(std::max(std::abs(line[idx]), 1e-300));
            sx += xv;
            sy += lv;
            sxx += xv * xv;
            sxy += xv * lv;
        }
        const double nf = static_cast<double>(nfit);
        const double slope = (nf * sxy - sx * sy) / (nf * sxx - sx * sx);
        const double beta = rightSide ? -slope : slope;  // decay away from the window
        const double edge2 = std::norm(rightSide ? line.back() : line.front());
        if (beta > 1e-12) return edge2 / (2.0 * beta);
        if (edge2 * span <= 1e-8 * std::max(acc, 1e-300)) return edge2 * span;
        fail(Errc::TailDominated, "x window too small for the requested line");
    };
    const double tail = side_tail(true) + side_tail(false);
    if (tail > tailGate * std::max(acc, 1e-300))
        fail(Errc::TailDominated, "x window tail is not negligible");
    if (tailOut) *tailOut = tail;
    return acc + tail;
}

}  // namespace

double hardy_norm_on_line(const SampledFunction& f, double y, const XWindow& window) {
    return hardy_norm_impl(f, y, window, nullptr, 1e-6);
}

const std::vector<double>& default_y_samples() {
    static const std::vector<double> ys = {0.25, 0.5, 1.0, 2.0, 4.0};
    return ys;
}

HardyReport is_hardy(const SampledFunction& f, HalfPlane plane,
                     const std::vector<double>& ySamples, double tol) {
    f.validate();
    if (ySamples.empty()) fail(Errc::InvalidArgument, "is_hardy: need at least one line");

    SampledFunction timeSide;
    XWindow window;
    if (f.tag == DomainTag::TimeLine) {
        timeSide = f;
    } else if (f.tag == DomainTag::EnergyLine) {
        timeSide = to_time_side(f);
        window.lo = f.grid.front();
        window.hi = f.grid.back();
        window.points = f.size();
    } else {
        fail(Errc::InvalidArgument, "is_hardy expects time-line or energy-line data");
    }

    HardyReport report;
    report.plane = plane;
    report.boundaryNormSq = l2_norm_sq(f);  // Parseval: same for either representation

    std::vector<double> ys = ySamples;
    std::sort(ys.begin(), ys.end(),
              [](double a, double b) { return std::abs(a) < std::abs(b); });

    bool anyDivergent = false;
    for (double yRaw : ys) {
        const double mag = std::abs(yRaw);
        if (!(mag > 0.0)) fail(Errc::InvalidArgument, "is_hardy: line offsets must be nonzero");
        const double y = (plane == HalfPlane::Upper) ? mag : -mag;
        LineNorm ln;
        ln.y = y;
        try {
            // The window-tail gate scales with the requested tolerance so
            // slowly decaying boundary data stays diagnosable at loose tol.
            ln.value = hardy_norm_impl(timeSide, y, window, &ln.tailEstimate,
                                       std::max(1e-6, tol));
        } catch (const Error&) {
            ln.divergent = true;
            ln.value = std::numeric_limits<double>::infinity();
            anyDivergent = true;
        }
        report.lines.push_back(ln);
    }

    const double boundary = std::max(report.boundaryNormSq, 1e-300);
    report.worstRatio = 0.0;
    for (const LineNorm& ln : report.lines)
        report.worstRatio = std::max(report.worstRatio, ln.value / boundary);

    report.monotone = true;
    for (std::size_t i = 0; i + 1 < report.lines.size(); ++i) {
        if (report.lines[i].divergent || report.lines[i + 1].divergent) {
            report.monotone = false;
            break;
        }
        if (report.lines[i + 1].value >
            report.lines[i].value * (1.0 + tol) + tol * boundary) {
            report.monotone = false;
            break;
        }
    }
    report.pass = !anyDivergent && report.monotone && report.worstRatio <= 1.0 + tol;
    return report;
}

SampledFunction restrict_positive(const SampledFunction& fhat) {
    fhat.validate();
    if (fhat.tag != DomainTag::EnergyLine)
        fail(Errc::InvalidArgument, "restrict_positive expects energy-line data");
    if (!(fhat.grid.front() < 0.0) || !(fhat.grid.back() > 0.0))
        fail(Errc::InvalidArgument, "restrict_positive: grid must straddle 0");

    std::vector<double> grid = fhat.grid;
    std::vector<Complex> values = fhat.values;
    std::size_t z = 0;
    bool found = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i]) <= 1e-12) {
            z = i;
            found = true;
            break;
        }
    }
    if (!found) {
        // insert an interpolated node at 0 so the trapezoid split is exact
        std::size_t j = 0;
        while (grid[j + 1] < 0.0) ++j;
        const double t = -grid[j] / (grid[j + 1] - grid[j]);
        const Complex v0 = values[j] + t * (values[j + 1] - values[j]);
        grid.insert(grid.begin() + static_cast<std::ptrdiff_t>(j) + 1, 0.0);
        values.insert(values.begin() + static_cast<std::ptrdiff_t>(j) + 1, v0);
        z = j + 1;
    }

    SampledFunction out;
    out.grid.assign(grid.begin() + static_cast<std::ptrdiff_t>(z), grid.end());
    out.values.assign(values.begin() + static_cast<std::ptrdiff_t>(z), values.end());
    out.tag = DomainTag::PositiveEnergyHalfline;
    out.tail = fhat.tail;
    if (out.size() < 16)
        fail(Errc::InvalidArgument, "restrict_positive: too few nonnegative-energy samples");
    return out;
}

}  // namespace gamow
