#include "shell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace gamow {

namespace {

constexpr double kZeroMomentumTol = 1e-9;
constexpr double kDegenerateKappaTol = 1e-9;
constexpr double kPoleDetectTol = 1e-13;

void validate(const PotentialSpec& pot) {
    if (!(pot.a > 0.0) || !(pot.b > pot.a) || !(pot.v0 >= 0.0))
        fail(Errc::InvalidArgument, "potential requires 0 < a < b and v0 >= 0");
}

// cos(q rho) and sin(q rho)/q as entire functions of w = q^2.  Both are
// even in q, so no branch of the square root is ever selected; the
// series keeps full precision through the w -> 0 crossover.
struct Osc {
    Complex c, s;
};

Osc osc_pair(Complex w, double rho) {
    Complex x = w * rho * rho;  // (q rho)^2
    if (std::abs(x) < 1e-8) {
        Complex c = 1.0 - x / 2.0 * (1.0 - x / 12.0 * (1.0 - x / 30.0));
        Complex s = rho * (1.0 - x / 6.0 * (1.0 - x / 20.0 * (1.0 - x / 42.0)));
        return {c, s};
    }
    Complex q = std::sqrt(w);
    return {std::cos(q * rho), std::sin(q * rho) / q};
}

// In-place LU with partial pivoting for the 4x4 matching system.
struct Lu4 {
    std::array<std::array<Complex, 4>, 4> m{};
    std::array<int, 4> piv{0, 1, 2, 3};

    void factor() {
        double scale = 0.0;
        for (const auto& row : m)
            for (const auto& v : row) scale = std::max(scale, std::abs(v));
        const double tol = 64.0 * std::numeric_limits<double>::epsilon() * scale;
        for (int c = 0; c < 4; ++c) {
            int p = c;
            for (int r = c + 1; r < 4; ++r)
                if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
            if (std::abs(m[p][c]) <= tol)
                fail(Errc::SingularMatrix, "matching matrix is numerically singular");
            if (p != c) {
                std::swap(m[p], m[c]);
                std::swap(piv[p], piv[c]);
            }
            for (int r = c + 1; r < 4; ++r) {
                m[r][c] /= m[c][c];
                for (int j = c + 1; j < 4; ++j) m[r][j] -= m[r][c] * m[c][j];
            }
        }
    }

    std::array<Complex, 4> solve(const std::array<Complex, 4>& rhs) const {
        std::array<Complex, 4> x;
        for (int r = 0; r < 4; ++r) x[r] = rhs[piv[r]];
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < r; ++c) x[r] -= m[r][c] * x[c];
        for (int r = 3; r >= 0; --r) {
            for (int c = r + 1; c < 4; ++c) x[r] -= m[r][c] * x[c];
            x[r] /= m[r][r];
        }
        return x;
    }
};

// Entries of the matching system and, on request, their k-derivatives.
// Unknowns are (aII, bII, cIn, cOut); the right-hand side carries the
// region-I solution sin(k r) across r = a.  The factored matrix backs only
// the momentum-derivative solve: the amplitudes themselves come from the
// anchored recursion in fill_solution, which stays well scaled far from the
// real axis where the matrix entries overflow their pivots.
struct MatchSystem {
    Complex k, kappa, kappa2;
    Complex e1, e2, e3, e4;  // exp(+-i kappa a), exp(+-i kappa b)
    Complex f1, f2;          // exp(-+i k b)
    Complex sa, ca;          // sin(k a), cos(k a)
    Lu4 lu;

    void build(const PotentialSpec& pot, Complex kIn) {
        k = kIn;
        kappa2 = k * k - pot.v0;
        kappa = std::sqrt(kappa2);
        const Complex i(0.0, 1.0);
        e1 = std::exp(i * kappa * pot.a);
        e2 = std::exp(-i * kappa * pot.a);
        e3 = std::exp(i * kappa * pot.b);
        e4 = std::exp(-i * kappa * pot.b);
        f1 = std::exp(-i * k * pot.b);
        f2 = std::exp(i * k * pot.b);
        sa = std::sin(k * pot.a);
        ca = std::cos(k * pot.a);

        lu.m = {{{e1, e2, 0.0, 0.0},
                 {i * kappa * e1, -i * kappa * e2, 0.0, 0.0},
                 {e3, e4, -f1, -f2},
                 {i * kappa * e3, -i * kappa * e4, i * k * f1, -i * k * f2}}};
        lu.factor();
    }

    std::array<Complex, 4> derivative(const PotentialSpec& pot,
                                      const std::array<Complex, 4>& x) const {
        const Complex i(0.0, 1.0);
        const Complex dkap = k / kappa;  // d kappa / dk
        const Complex de1 = i * pot.a * dkap * e1;
        const Complex de2 = -i * pot.a * dkap * e2;
        const Complex de3 = i * pot.b * dkap * e3;
        const Complex de4 = -i * pot.b * dkap * e4;
        const Complex df1 = -i * pot.b * f1;
        const Complex df2 = i * pot.b * f2;

        const std::array<std::array<Complex, 4>, 4> dm = {
            {{de1, de2, 0.0, 0.0},
             {i * (dkap * e1 + kappa * de1), -i * (dkap * e2 + kappa * de2), 0.0, 0.0},
             {de3, de4, -df1, -df2},
             {i * (dkap * e3 + kappa * de3), -i * (dkap * e4 + kappa * de4),
              i * (f1 + k * df1), -i * (f2 + k * df2)}}};
        const std::array<Complex, 4> drhs = {pot.a * ca, ca - k * pot.a * sa, 0.0, 0.0};

        std::array<Complex, 4> rhs2;
        for (int r = 0; r < 4; ++r) {
            Complex acc = drhs[r];
            for (int c = 0; c < 4; ++c) acc -= dm[r][c] * x[c];
            rhs2[r] = acc;
        }
        return lu.solve(rhs2);
    }
};

void check_momentum(const PotentialSpec& pot, Complex k) {
    validate(pot);
    if (std::abs(k) < kZeroMomentumTol)
        fail(Errc::DegenerateThreshold, "k = 0: threshold matching is rank deficient");
    if (std::abs(k * k - pot.v0) < kDegenerateKappaTol * kDegenerateKappaTol)
        fail(Errc::SingularMatrix, "k^2 = v0: region-II exponential basis degenerates");
}

// Propagates the region-I solution sin(k r) across both interfaces and reads
// the basis amplitudes off the boundary values.  Splitting chi at r = a into
// exp(+-i kappa r) and chi at r = b into exp(-+i k r) needs only the value
// and slope there, so each amplitude is a two-term product with no
// cancellation between large exponentials; the 4x4 solve computes the same
// numbers but loses its pivots once exp(|Im k| b) spreads the entries.
RegionSolution fill_solution(const PotentialSpec& pot, Complex k) {
    RegionSolution sol;
    sol.pot = pot;
    sol.k = k;
    sol.kappaSq = k * k - pot.v0;
    sol.kappa = std::sqrt(sol.kappaSq);
    sol.chiA = std::sin(k * pot.a);
    sol.dchiA = k * std::cos(k * pot.a);
    const Osc o = osc_pair(sol.kappaSq, pot.b - pot.a);
    sol.chiB = sol.chiA * o.c + sol.dchiA * o.s;
    sol.dchiB = -sol.kappaSq * o.s * sol.chiA + o.c * sol.dchiA;

    const Complex i(0.0, 1.0);
    const Complex ea = std::exp(i * sol.kappa * pot.a);
    sol.aII = 0.5 * (sol.chiA + sol.dchiA / (i * sol.kappa)) / ea;
    sol.bII = 0.5 * (sol.chiA - sol.dchiA / (i * sol.kappa)) * ea;
    const Complex eb = std::exp(i * k * pot.b);
    sol.cIn = 0.5 * eb * (sol.chiB - sol.dchiB / (i * k));
    sol.cOut = 0.5 * (sol.chiB + sol.dchiB / (i * k)) / eb;
    return sol;
}

Complex jminus_from(const RegionSolution& sol) {
    // Free case: chi = sin(kr) has cIn = i/2, so this scaling gives 1.
    return Complex(0.0, -2.0) * sol.cIn;
}

}  // namespace

ComplexMomentum momentum_from_energy(Complex z, Sheet sheet) {
    Complex k0 = std::sqrt(z);  // principal branch, Re k0 >= 0
    Complex k;
    if (sheet == Sheet::First)
        k = (k0.imag() >= 0.0) ? k0 : -k0;
    else
        k = (k0.imag() <= 0.0) ? k0 : -k0;
    return {k, sheet};
}

RegionSolution match_coefficients(const PotentialSpec& pot, Complex k) {
    check_momentum(pot, k);
    return fill_solution(pot, k);
}

MatchDerivative match_with_derivative(const PotentialSpec& pot, Complex k) {
    check_momentum(pot, k);
    RegionSolution sol = fill_solution(pot, k);
    MatchSystem sys;
    sys.build(pot, k);
    const auto dx = sys.derivative(pot, {sol.aII, sol.bII, sol.cIn, sol.cOut});
    return {sol, dx[0], dx[1], dx[2], dx[3]};
}

Complex RegionSolution::eval(double r) const {
    if (r < 0.0) fail(Errc::InvalidArgument, "radius must be nonnegative");
    if (r <= pot.a) return alpha * std::sin(k * r);
    if (r <= pot.b) {
        const Osc o = osc_pair(kappaSq, r - pot.a);
        return chiA * o.c + dchiA * o.s;
    }
    const Osc o = osc_pair(k * k, r - pot.b);
    return chiB * o.c + dchiB * o.s;
}

Complex RegionSolution::evalDeriv(double r) const {
    if (r < 0.0) fail(Errc::InvalidArgument, "radius must be nonnegative");
    if (r <= pot.a) return alpha * k * std::cos(k * r);
    if (r <= pot.b) {
        const Osc o = osc_pair(kappaSq, r - pot.a);
        return -kappaSq * o.s * chiA + o.c * dchiA;
    }
    const Osc o = osc_pair(k * k, r - pot.b);
    return -k * k * o.s * chiB + o.c * dchiB;
}

Complex RegionSolution::evalAmplitude(double r) const {
    if (r < 0.0) fail(Errc::InvalidArgument, "radius must be nonnegative");
    const Complex i(0.0, 1.0);
    if (r <= pot.a) return alpha * std::sin(k * r);
    if (r <= pot.b) return aII * std::exp(i * kappa * r) + bII * std::exp(-i * kappa * r);
    return cIn * std::exp(-i * k * r) + cOut * std::exp(i * k * r);
}

Complex RegionSolution::evalAmplitudeDeriv(double r) const {
    if (r < 0.0) fail(Errc::InvalidArgument, "radius must be nonnegative");
    const Complex i(0.0, 1.0);
    if (r <= pot.a) return alpha * k * std::cos(k * r);
    if (r <= pot.b)
        return i * kappa * (aII * std::exp(i * kappa * r) - bII * std::exp(-i * kappa * r));
    return i * k * (-cIn * std::exp(-i * k * r) + cOut * std::exp(i * k * r));
}

JostData jost_function(const PotentialSpec& pot, Complex k) {
    const RegionSolution plus = match_coefficients(pot, k);
    const RegionSolution minus = match_coefficients(pot, -k);
    return {k, jminus_from(plus), jminus_from(minus)};
}

Complex jost_derivative(const PotentialSpec& pot, Complex k) {
    const MatchDerivative md = match_with_derivative(pot, k);
    return Complex(0.0, -2.0) * md.dCIn;
}

Complex s_matrix_at_k(const PotentialSpec& pot, Complex k) {
    const JostData j = jost_function(pot, k);
    if (std::abs(j.jMinus) < kPoleDetectTol * std::max(1.0, std::abs(j.jPlus)))
        fail(Errc::PoleEncountered,
             "S-matrix pole: Jost function vanishes at the requested momentum");
    return j.jPlus / j.jMinus;
}

Complex s_matrix(const PotentialSpec& pot, Complex z, Sheet sheet) {
    return s_matrix_at_k(pot, momentum_from_energy(z, sheet).k);
}

Complex ls_ket(const PotentialSpec& pot, double energy, double r, int sign) {
    if (!(energy > 0.0))
        fail(Errc::InvalidArgument, "scattering kets require energy > 0");
    if (sign != 1 && sign != -1) fail(Errc::InvalidArgument, "sign must be +1 or -1");
    const double k = std::sqrt(energy);
    const RegionSolution sol = match_coefficients(pot, k);
    const Complex denom = (sign > 0) ? sol.cIn : sol.cOut;
    if (std::abs(denom) < kPoleDetectTol)
        fail(Errc::PoleEncountered, "ket normalization vanishes at this energy");
    return sol.eval(r) / denom;
}

Complex continued_ket(const PotentialSpec& pot, Complex z, Sheet sheet, double r, int sign) {
    if (sign != 1 && sign != -1) fail(Errc::InvalidArgument, "sign must be +1 or -1");
    const ComplexMomentum km = momentum_from_energy(z, sheet);
    const RegionSolution sol = match_coefficients(pot, km.k);
    const Complex denom = (sign > 0) ? sol.cIn : sol.cOut;
    if (std::abs(denom) < kPoleDetectTol * std::max(1.0, std::abs(sign > 0 ? sol.cOut : sol.cIn)))
        fail(Errc::PoleEncountered, "continued ket hits a Jost zero");
    return sol.eval(r) / denom;
}

// ---------------------------------------------------------------------------
// Pole search
// ---------------------------------------------------------------------------

namespace {

struct Rect {
    double re0, re1, im0, im1;

    double width() const { return re1 - re0; }
    double height() const { return im1 - im0; }
    Complex center() const { return {0.5 * (re0 + re1), 0.5 * (im0 + im1)}; }
    bool contains(Complex k, double pad) const {
        return k.real() >= re0 - pad && k.real() <= re1 + pad && k.imag() >= im0 - pad &&
               k.imag() <= im1 + pad;
    }
};

struct ContourZero {};  // signal: a Jost zero (or degeneracy) sits on the contour

Complex jost_checked(const PotentialSpec& pot, Complex k, double scaleHint) {
    Complex j;
    try {
        j = jminus_from(match_coefficients(pot, k));
    } catch (const Error&) {
        throw ContourZero{};
    }
    if (!std::isfinite(j.real()) || !std::isfinite(j.imag())) throw ContourZero{};
    if (std::abs(j) < 1e-12 * scaleHint) throw ContourZero{};
    return j;
}

// Phase advance along the segment [p, q], refining until each step turns
// by less than pi/2 so the unwrapped argument is unambiguous.
double phase_advance(const PotentialSpec& pot, Complex p, Complex jp, Complex q, Complex jq,
                     int depth) {
    const double d = std::arg(jq / jp);
    if (std::abs(d) < 0.5 * kPi) return d;
    if (depth > 40 || std::abs(q - p) < 1e-13) throw ContourZero{};
    const Complex mid = 0.5 * (p + q);
    const Complex jm = jost_checked(pot, mid, 1.0);
    return phase_advance(pot, p, jp, mid, jm, depth + 1) +
           phase_advance(pot, mid, jm, q, jq, depth + 1);
}

// Contour-certified winding number of jMinus around the rectangle.
long winding_number(const PotentialSpec& pot, const Rect& rc, int samplesPerEdge) {
    const std::array<Complex, 4> corner = {Complex(rc.re0, rc.im0), Complex(rc.re1, rc.im0),
                                           Complex(rc.re1, rc.im1), Complex(rc.re0, rc.im1)};
    std::vector<Complex> pts;
    pts.reserve(4 * static_cast<size_t>(samplesPerEdge));
    for (int e = 0; e < 4; ++e) {
        const Complex p0 = corner[e], p1 = corner[(e + 1) % 4];
        for (int i = 0; i < samplesPerEdge; ++i)
            pts.push_back(p0 + (p1 - p0) * (static_cast<double>(i) / samplesPerEdge));
    }
    double total = 0.0;
    Complex prev = pts.front();
    Complex jprev = jost_checked(pot, prev, 1.0);
    for (size_t i = 1; i <= pts.size(); ++i) {
        const Complex cur = pts[i % pts.size()];
        const Complex jcur = jost_checked(pot, cur, 1.0);
        total += phase_advance(pot, prev, jprev, cur, jcur, 0);
        prev = cur;
        jprev = jcur;
    }
    const double w = total / (2.0 * kPi);
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.1) throw ContourZero{};
    return static_cast<long>(rounded);
}

Complex newton_polish(const PotentialSpec& pot, Complex start, const Rect& cell,
                      const PoleSearchOptions& opts, bool& ok) {
    Complex k = start;
    const double span = std::max(cell.width(), cell.height());
    for (int it = 0; it < opts.maxNewtonIterations; ++it) {
        MatchDerivative md;
        try {
            md = match_with_derivative(pot, k);
        } catch (const Error&) {
            ok = false;
            return k;
        }
        const Complex j = jminus_from(md.sol);
        if (std::abs(j) < opts.newtonTol) {
            ok = true;
            return k;
        }
        const Complex dj = Complex(0.0, -2.0) * md.dCIn;
        if (std::abs(dj) == 0.0) {
            ok = false;
            return k;
        }
        Complex step = j / dj;
        if (std::abs(step) > span) step *= span / std::abs(step);  // damp wild first steps
        k -= step;
        if (!cell.contains(k, 2.0 * span)) {
            ok = false;
            return k;
        }
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(k))) {
            ok = std::abs(j) < 1e4 * opts.newtonTol;
            return k;
        }
    }
    ok = false;
    return k;
}

// Best starting point inside a cell: minimum |jMinus| on a coarse probe.
Complex probe_minimum(const PotentialSpec& pot, const Rect& rc) {
    Complex best = rc.center();
    double bestAbs = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 6; ++i) {
        for (int j = 1; j < 6; ++j) {
            const Complex k(rc.re0 + rc.width() * i / 6.0, rc.im0 + rc.height() * j / 6.0);
            try {
                const double v = std::abs(jminus_from(match_coefficients(pot, k)));
                if (v < bestAbs) {
                    bestAbs = v;
                    best = k;
                }
            } catch (const Error&) {
            }
        }
    }
    return best;
}

void search_rect(const PotentialSpec& pot, const Rect& rc, const PoleSearchOptions& opts,
                 int depth, std::vector<Complex>& zeros) {
    if (depth > opts.maxSubdivisionDepth)
        fail(Errc::NotConverged, "pole search exceeded the subdivision budget");

    // ContourZero from this cell's own boundary propagates to the caller,
    // which reacts by nudging its split line away from the offending zero.
    const long w = winding_number(pot, rc, std::max(32, opts.samplesPerEdge / 4));
    if (w == 0) return;

    if (w == 1) {
        // The contour certifies exactly one zero inside; only accept a
        // Newton limit that actually lands in this cell.
        const double pad = 1e-6 * std::max(rc.width(), rc.height());
        bool ok = false;
        Complex z = newton_polish(pot, rc.center(), rc, opts, ok);
        if (!(ok && rc.contains(z, pad))) {
            z = newton_polish(pot, probe_minimum(pot, rc), rc, opts, ok);
            ok = ok && rc.contains(z, pad);
        }
        if (ok) {
            zeros.push_back(z);
            return;
        }
        // fall through to subdivision: the cell still brackets the zero
    }

    // A zero close to a cut line spoils the child contour; nudge the split.
    static constexpr double fractions[] = {0.5, 0.55, 0.45, 0.6, 0.4};
    for (double frac : fractions) {
        Rect lo = rc, hi = rc;
        if (rc.width() >= rc.height()) {
            const double cut = rc.re0 + frac * rc.width();
            lo.re1 = cut;
            hi.re0 = cut;
        } else {
            const double cut = rc.im0 + frac * rc.height();
            lo.im1 = cut;
            hi.im0 = cut;
        }
        try {
            std::vector<Complex> sub;
            search_rect(pot, lo, opts, depth + 1, sub);
            search_rect(pot, hi, opts, depth + 1, sub);
            zeros.insert(zeros.end(), sub.begin(), sub.end());
            return;
        } catch (ContourZero&) {
            continue;  // try the next split fraction
        }
    }
    fail(Errc::NotConverged, "pole search could not isolate a zero");
}

}  // namespace

PoleSearchReport find_poles_certified(const PotentialSpec& pot, double reLo, double reHi,
                                      double imLo, double imHi,
                                      const PoleSearchOptions& opts) {
    validate(pot);
    if (!(reHi > reLo) || !(imHi > imLo))
        fail(Errc::InvalidArgument, "pole search region must have positive area");

    PoleSearchReport report;
    const Rect requested{reLo, reHi, imLo, imHi};

    if (pot.is_free()) return report;  // jMinus == 1 identically

    // The requested rectangle may touch k = 0 or the real axis; expand it
    // outward by a deterministic schedule until the contour is clean.
    static constexpr double bumps[] = {0.0, 1e-6, 3.1e-6, 1.07e-5, 4.3e-5};
    const double diag = std::hypot(reHi - reLo, imHi - imLo);
    bool done = false;
    for (double bump : bumps) {
        const double d = bump * diag;
        Rect rc{reLo - d, reHi + d, imLo - d, imHi + d};
        try {
            report.winding = winding_number(pot, rc, opts.samplesPerEdge);
            std::vector<Complex> zeros;
            search_rect(pot, rc, opts, 0, zeros);
            if (static_cast<long>(zeros.size()) != report.winding)
                fail(Errc::NotConverged, "refined zero count disagrees with the winding count");

            std::sort(zeros.begin(), zeros.end(), [](Complex x, Complex y) {
                return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
            });
            std::vector<Complex> unique;
            for (const Complex& z : zeros) {
                if (!unique.empty() && std::abs(z - unique.back()) < opts.dedupTol) continue;
                unique.push_back(z);
            }
            for (const Complex& z : unique) {
                if (!requested.contains(z, 1e-9 * (1.0 + diag))) continue;
                GamowPole p;
                p.kPole = z;
                p.zR = z * z;
                p.eR = p.zR.real();
                p.gamma = -2.0 * p.zR.imag();
                report.poles.push_back(p);
            }
            done = true;
            break;
        } catch (ContourZero&) {
            ++report.retries;
        }
    }
    if (!done)
        fail(Errc::NotConverged, "a Jost zero sits on every perturbed search contour");
    return report;
}

std::vector<GamowPole> find_poles(const PotentialSpec& pot, double reLo, double reHi,
                                  double imLo, double imHi, const PoleSearchOptions& opts) {
    return find_poles_certified(pot, reLo, reHi, imLo, imHi, opts).poles;
}

} // namespace gamow
