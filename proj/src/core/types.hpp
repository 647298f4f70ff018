#pragma once
// Shared scalar types and the error taxonomy used across the library.

#include <complex>
#include <stdexcept>
#include <string>

namespace gamow {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Spherical shell potential for the s-wave radial problem (units with
// hbar = 2m = 1, so E = k^2): hard wall at the origin, free well on
// [0, a], constant barrier of height v0 on [a, b], free space beyond b.
struct PotentialSpec {
    double a = 1.0;
    double b = 2.0;
    double v0 = 1.0;

    bool is_free() const { return v0 == 0.0; }
};

// Sheet of the two-sheeted energy surface z = k^2.  The first sheet
// maps to Im k > 0, the second to Im k < 0; the boundary E > 0 carries
// k = +sqrt(E) on both.
enum class Sheet { First, Second };

enum class Errc {
    InvalidArgument,
    DegenerateThreshold,  // k = 0: the matching system loses rank
    SingularMatrix,       // region-II exponential basis degenerates (k^2 = v0)
    PoleEncountered,      // evaluation lands on a zero of the Jost function
    Divergent,            // integrand grows along the requested direction
    TailDominated,        // truncation window too small for the data
    NotConverged,
    Precondition,
    ParseFailure,
};

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
    Errc code;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace gamow
