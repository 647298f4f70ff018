#include "sampled.hpp"

#include <cmath>

namespace gamow {

void SampledFunction::validate() const {
    if (grid.size() != values.size())
        fail(Errc::InvalidArgument, "sampled function: grid/value length mismatch");
    if (grid.size() < 16)
        fail(Errc::InvalidArgument, "sampled function: need at least 16 samples");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            fail(Errc::InvalidArgument, "sampled function: grid must be strictly increasing");
    for (const Complex& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(Errc::InvalidArgument, "sampled function: non-finite sample");
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) fail(Errc::InvalidArgument, "uniform_grid: bad range");
    std::vector<double> g(n);
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) g[i] = lo + h * static_cast<double>(i);
    g.back() = hi;  // avoid accumulated rounding at the far end
    return g;
}

std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
    const std::size_t n = grid.size();
    if (n < 2) fail(Errc::InvalidArgument, "trapezoid_weights: need >= 2 nodes");
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double half = 0.5 * (grid[i + 1] - grid[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

double l2_norm_sq(const SampledFunction& f) {
    f.validate();
    const auto w = trapezoid_weights(f.grid);
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += w[i] * std::norm(f.values[i]);
    return acc;
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
    f.validate();
    g.validate();
    if (f.grid != g.grid)
        fail(Errc::InvalidArgument, "inner_product: functions sampled on different grids");
    const auto w = trapezoid_weights(f.grid);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        acc += w[i] * std::conj(f.values[i]) * g.values[i];
    return acc;
}

SupportRange numeric_support(const SampledFunction& f, double rel) {
    double peak = 0.0;
    for (const Complex& v : f.values) peak = std::max(peak, std::abs(v));
    SupportRange r;
    if (peak == 0.0) return r;
    const double cut = rel * peak;
    std::ptrdiff_t first = -1, last = -1;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(f.size()); ++i) {
        if (std::abs(f.values[static_cast<std::size_t>(i)]) > cut) {
            if (first < 0) first = i;
            last = i;
        }
    }
    r.first = first;
    r.last = last;
    return r;
}

}  // namespace gamow
