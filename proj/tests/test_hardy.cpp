// Half-plane diagnostics tests.  The transform and continuation values are
// checked against adaptive quadrature of the continuum bump formula, and the
// line norms against two closed forms: the weighted time-side Parseval
// identity and the exact norms of the model boundary data 1/(E - z0).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/hardy.hpp"
#include "oracles.hpp"

using namespace gamow;

namespace {

const Complex kIm(0.0, 1.0);

// Continuum value of the unnormalized bump profile.
Complex bump_value(const BumpSpec& spec, double t) {
    if (t <= spec.t0 || t >= spec.t1) return Complex(0.0, 0.0);
    double p = (t - spec.t0) * (spec.t1 - t);
    double u = (2.0 * t - spec.t0 - spec.t1) / (spec.t1 - spec.t0);
    return std::exp(-1.0 / p) * std::pow(u, spec.degree) * std::polar(1.0, spec.freq * t);
}

// The criterion-grade test shape: smooth bump on the negative axis.
const BumpSpec kSpec{-3.8, -2.6, -1, 2, 1.7};

SampledFunction standard_bump() { return make_bump(kSpec, uniform_grid(-4.5, 0.0, 1025)); }

}  // namespace

TEST_CASE("bump construction: unit norm, declared support, typed rejections") {
    SampledFunction f = standard_bump();
    f.validate();
    CHECK(l2_norm_sq(f) == doctest::Approx(1.0).epsilon(1e-14));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f.grid[i] <= kSpec.t0 || f.grid[i] >= kSpec.t1) CHECK(std::abs(f.values[i]) == 0.0);

    CHECK_THROWS_AS(make_bump({2.0, 1.0, +1, 0, 0.0}, uniform_grid(0.0, 3.0, 257)), Error);
    CHECK_THROWS_AS(make_bump({-2.0, 1.0, -1, 0, 0.0}, uniform_grid(-3.0, 2.0, 257)), Error);
    CHECK_THROWS_AS(make_bump({1.0, 2.0, +1, 0, 0.0}, uniform_grid(0.0, 1.5, 257)), Error);
    // 16 nodes across the support is below the resolution floor
    CHECK_THROWS_AS(make_bump({1.0, 2.0, +1, 0, 0.0}, uniform_grid(0.0, 40.0, 600)), Error);
}

TEST_CASE("transform is unitary and inverts back to the time side") {
    SampledFunction f = standard_bump();
    SampledFunction fhat = fourier_transform(f);
    CHECK(fhat.tag == DomainTag::EnergyLine);
    CHECK(std::abs(l2_norm_sq(fhat) - 1.0) < 1e-8);

    SampledFunction back = to_time_side(fhat);
    CHECK(back.tag == DomainTag::TimeLine);
    CHECK(std::abs(l2_norm_sq(back) - 1.0) < 1e-7);
    // support was trimmed to the numerically live part of the bump
    CHECK(back.grid.front() >= kSpec.t0 - 0.5);
    CHECK(back.grid.back() <= kSpec.t1 + 0.5);
}

TEST_CASE("half-plane continuation matches adaptive quadrature of the continuum bump") {
    SampledFunction f = standard_bump();
    double n2raw = oracle::adaptive_simpson(
                       [&](double t) { return Complex(std::norm(bump_value(kSpec, t)), 0.0); },
                       kSpec.t0, kSpec.t1, 1e-16)
                       .real();
    for (Complex z : {Complex(0.3, 0.0), Complex(0.0, 1.0), Complex(2.0, 0.5)}) {
        CAPTURE(z.real());
        CAPTURE(z.imag());
        Complex direct = oracle::adaptive_simpson(
            [&](double t) { return bump_value(kSpec, t) * std::exp(-kIm * z * t); }, kSpec.t0,
            kSpec.t1, 1e-14);
        Complex expected = direct / std::sqrt(n2raw) * 0.39894228040143268;
        CHECK(std::abs(evaluate_halfplane(f, z) - expected) < 1e-10);
    }
}

TEST_CASE("continuation is linear and continuous up to the boundary") {
    SampledFunction f = standard_bump();
    BumpSpec other{-3.2, -1.1, -1, 0, -0.8};
    SampledFunction g = make_bump(other, f.grid);
    SampledFunction combo = f;
    const Complex ca(0.7, -0.4), cb(-1.3, 0.2);
    for (std::size_t i = 0; i < combo.size(); ++i)
        combo.values[i] = ca * f.values[i] + cb * g.values[i];
    for (Complex z : {Complex(0.5, 0.8), Complex(-1.0, 2.0)}) {
        Complex lhs = evaluate_halfplane(combo, z);
        Complex rhs = ca * evaluate_halfplane(f, z) + cb * evaluate_halfplane(g, z);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
    // approaching the real axis reproduces the boundary transform
    SampledFunction fhat = fourier_transform(f);
    std::size_t mid = fhat.size() / 2;
    double x0 = fhat.grid[mid];
    CHECK(std::abs(evaluate_halfplane(f, Complex(x0, 1e-8)) - fhat.values[mid]) < 1e-6);
}

TEST_CASE("continuation into the growing half-plane is rejected") {
    SampledFunction f = standard_bump();  // support in t < 0: analytic upstairs
    try {
        evaluate_halfplane(f, Complex(0.0, -1.0));
        FAIL("expected a divergence error");
    } catch (const Error& e) {
        CHECK(e.code == Errc::Divergent);
    }
}

TEST_CASE("negative-axis bump is Hardy upstairs and fails hard downstairs") {
    SampledFunction fhat = fourier_transform(standard_bump());
    HardyReport up = is_hardy(fhat, HalfPlane::Upper);
    CHECK(up.pass);
    CHECK(up.monotone);
    CHECK(up.worstRatio < 1.0 + 1e-6);
    REQUIRE(up.lines.size() == default_y_samples().size());
    for (std::size_t i = 1; i < up.lines.size(); ++i)
        CHECK(up.lines[i].value <= up.lines[i - 1].value * (1.0 + 1e-12));

    HardyReport down = is_hardy(fhat, HalfPlane::Lower);
    CHECK(!down.pass);
    // |y| = 2 is the fourth default sample; the growth floor there is
    // e^{4 |t1|} times the mass fraction near the inner support edge.
    CHECK(down.lines[3].value / down.boundaryNormSq > 1e3);
}

TEST_CASE("line norms obey the weighted time-side Parseval identity") {
    SampledFunction f = standard_bump();
    for (double y : {0.5, 1.0}) {
        double viaLine = hardy_norm_on_line(f, y);
        double direct = 0.0;
        std::vector<double> w = trapezoid_weights(f.grid);
        for (std::size_t i = 0; i < f.size(); ++i)
            direct += w[i] * std::norm(f.values[i] * std::exp(y * f.grid[i]));
        CHECK(viaLine == doctest::Approx(direct).epsilon(1e-6));
    }
}

TEST_CASE("model boundary data 1/(E - z0) reproduces its exact line norms") {
    const Complex z0(0.7, 1.0);
    SampledFunction ts;  // time side: i sqrt(2pi) e^{i z0 t} on t >= 0
    ts.grid = uniform_grid(0.0, 24.0, 4801);
    ts.values.resize(ts.grid.size());
    const double s2pi = std::sqrt(2.0 * kPi);
    for (std::size_t i = 0; i < ts.grid.size(); ++i)
        ts.values[i] = Complex(0.0, s2pi) * std::exp(kIm * z0 * ts.grid[i]);
    ts.tag = DomainTag::TimeLine;
    ts.tail = {TailModel::Exponential, z0.imag()};

    // The trapezoid transform carries an O((E dt)^2) phase-quadrature error
    // that peaks at the window edge; check the limit by halving the step.
    auto ft_dev = [&](std::size_t npts) {
        SampledFunction tsn = ts;
        tsn.grid = uniform_grid(0.0, 24.0, npts);
        tsn.values.resize(npts);
        for (std::size_t i = 0; i < npts; ++i)
            tsn.values[i] = Complex(0.0, s2pi) * std::exp(kIm * z0 * tsn.grid[i]);
        SampledFunction md = fourier_transform(tsn, 60.0, 0.05);
        double worst = 0.0;
        for (std::size_t i = 0; i < md.size(); ++i)
            worst = std::max(worst, std::abs(md.values[i] - 1.0 / (md.grid[i] - z0)));
        return worst;
    };
    double devH = ft_dev(4801), devH2 = ft_dev(9601);
    CHECK(devH < 2.5e-4);
    CHECK(devH / devH2 == doctest::Approx(4.0).epsilon(0.15));

    HardyReport low = is_hardy(ts, HalfPlane::Lower, {0.25, 0.5, 1.0, 2.0}, 1e-2);
    CHECK(low.pass);
    for (const LineNorm& ln : low.lines) {
        double expect = kPi / (z0.imag() - ln.y);
        CHECK(ln.value == doctest::Approx(expect).epsilon(1e-2));
    }
    HardyReport upR = is_hardy(ts, HalfPlane::Upper, {0.25, 0.5, 1.0, 2.0}, 1e-2);
    CHECK(!upR.pass);
}

TEST_CASE("positive-energy restriction splits the norm exactly") {
    SampledFunction fhat = fourier_transform(standard_bump());
    SampledFunction pos = restrict_positive(fhat);
    CHECK(pos.tag == DomainTag::PositiveEnergyHalfline);
    CHECK(pos.grid.front() == 0.0);

    SampledFunction neg;
    std::size_t z = 0;
    while (std::abs(fhat.grid[z]) > 1e-12) ++z;
    neg.grid.assign(fhat.grid.begin(), fhat.grid.begin() + z + 1);
    neg.values.assign(fhat.values.begin(), fhat.values.begin() + z + 1);
    neg.tag = DomainTag::EnergyLine;
    CHECK(l2_norm_sq(pos) + l2_norm_sq(neg) ==
          doctest::Approx(l2_norm_sq(fhat)).epsilon(1e-12));
}

TEST_CASE("smooth compact bumps transform with rapid spectral decay") {
    SampledFunction f = standard_bump();
    SampledFunction fhat = fourier_transform(f, 100.0, 0.05);
    auto band_max = [&](double lo, double hi) {
        double m = 0.0;
        for (std::size_t i = 0; i < fhat.size(); ++i)
            if (std::abs(fhat.grid[i]) >= lo && std::abs(fhat.grid[i]) <= hi)
                m = std::max(m, std::abs(fhat.values[i]));
        return m;
    };
    // sub-exponential decay exp(-c sqrt|E|), c ~ 1.3 for this support width:
    // three orders over one decade plus strictly falling band maxima
    double b1 = band_max(8.0, 10.0), b2 = band_max(20.0, 25.0);
    double b3 = band_max(40.0, 50.0), b4 = band_max(80.0, 100.0);
    CHECK(b2 < b1);
    CHECK(b3 < b2);
    CHECK(b4 < b3);
    CHECK(b4 < b1 * 1e-3);
}

TEST_CASE("randomized support draws pair with their half-plane") {
    std::mt19937_64 rng(0xba5eba11ULL);
    std::uniform_real_distribution<double> edge(2.4, 3.5), width(0.8, 2.5), fr(-3.0, 3.0);
    std::uniform_int_distribution<int> deg(0, 3), coin(0, 1);
    for (int trial = 0; trial < 6; ++trial) {
        BumpSpec spec;
        spec.side = coin(rng) ? +1 : -1;
        double inner = edge(rng), outer = inner + width(rng);
        spec.t0 = (spec.side > 0) ? inner : -outer;
        spec.t1 = (spec.side > 0) ? outer : -inner;
        spec.degree = deg(rng);
        spec.freq = fr(rng);
        CAPTURE(spec.t0);
        CAPTURE(spec.t1);
        CAPTURE(spec.side);
        double lo = std::min(spec.t0, 0.0) - 0.5, hi = std::max(spec.t1, 0.0) + 0.5;
        std::size_t n = static_cast<std::size_t>(std::lround((hi - lo) * 256)) + 1;
        SampledFunction fhat = fourier_transform(make_bump(spec, uniform_grid(lo, hi, n)));
        HalfPlane good = (spec.side < 0) ? HalfPlane::Upper : HalfPlane::Lower;
        HalfPlane bad = (spec.side < 0) ? HalfPlane::Lower : HalfPlane::Upper;
        HardyReport pass = is_hardy(fhat, good);
        HardyReport failRep = is_hardy(fhat, bad);
        CHECK(pass.pass);
        CHECK(!failRep.pass);
        CHECK(failRep.lines[3].value / failRep.boundaryNormSq > 1e3);
    }
}
