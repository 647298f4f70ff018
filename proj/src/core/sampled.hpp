// Complex-valued functions sampled on one-dimensional grids, plus the small
// quadrature helpers shared by every module that integrates over them.
#pragma once

#include <vector>

#include "types.hpp"

namespace gamow {

// Which axis the samples live on.  Grids are real in every case; complex
// rays elsewhere are parametrized by a real arc parameter.
enum class DomainTag {
    TimeLine,                // t on the real line
    EnergyLine,              // E on the real line
    PositiveEnergyHalfline,  // E in [0, inf), restriction output
    PositionLine,            // r in [0, inf)
};

// How the function decays beyond the sampled window.  Used for truncation
// error accounting; Compact promises exact vanishing outside the grid.
enum class TailModel { Compact, Rapid, Exponential, Gaussian };

struct TailInfo {
    TailModel model = TailModel::Compact;
    double rate = 0.0;  // e^{-rate*|x|} scale for Exponential, unused otherwise
};

struct SampledFunction {
    std::vector<double> grid;     // strictly increasing abscissae
    std::vector<Complex> values;  // same length as grid
    DomainTag tag = DomainTag::TimeLine;
    TailInfo tail;

    std::size_t size() const { return grid.size(); }
    // Throws InvalidArgument unless the invariants hold: >= 16 nodes,
    // strictly increasing grid, finite values, matching lengths.
    void validate() const;
};

std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

// Composite trapezoid weights for an arbitrary strictly increasing grid.
std::vector<double> trapezoid_weights(const std::vector<double>& grid);

double l2_norm_sq(const SampledFunction& f);

// Trapezoid inner product <f, g> = integral of conj(f) g; grids must agree
// node for node.
Complex inner_product(const SampledFunction& f, const SampledFunction& g);

// Index range [first, last] of samples with |value| > rel * max|value|.
// Returns {0, -1} when all samples vanish.
struct SupportRange {
    std::ptrdiff_t first = 0;
    std::ptrdiff_t last = -1;
    bool empty() const { return last < first; }
};
SupportRange numeric_support(const SampledFunction& f, double rel = 1e-12);

}  // namespace gamow
