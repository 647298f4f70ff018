#pragma once
// Closed-form radial solutions, Jost function, S-matrix and resonance
// pole search for the spherical shell potential (s-wave).

#include "types.hpp"

#include <vector>

namespace gamow {

struct ComplexMomentum {
    Complex k;
    Sheet sheet;

    Complex energy() const { return k * k; }
};

// Momentum on the requested sheet: Im k > 0 on the first, Im k < 0 on
// the second, with the shared boundary value +sqrt(E) for real E > 0.
ComplexMomentum momentum_from_energy(Complex z, Sheet sheet);

// Matched radial solution chi with chi(0) = 0, normalized to unit
// region-I amplitude:
//   region I   (0 <= r <= a): alpha * sin(k r)
//   region II  (a <= r <= b): aII * exp(+i kappa r) + bII * exp(-i kappa r)
//   region III (r >= b):      cIn * exp(-i k r)    + cOut * exp(+i k r)
// with kappa = sqrt(k^2 - v0).  eval() uses fundamental solutions
// anchored at the interface just crossed, which keeps the value and
// slope exactly continuous in floating point.  The amplitudes come from
// the 4x4 matching solve; evalAmplitude() evaluates that representation
// directly so tests can measure the residual of the linear solve.
struct RegionSolution {
    PotentialSpec pot;
    Complex k;
    Complex kappa;
    Complex kappaSq;  // k^2 - v0 as computed once; eval paths reuse these bits
    Complex alpha{1.0, 0.0};
    Complex aII, bII;
    Complex cIn, cOut;
    Complex chiA, dchiA;  // chi, chi' at r = a
    Complex chiB, dchiB;  // chi, chi' at r = b

    Complex eval(double r) const;
    Complex evalDeriv(double r) const;
    Complex evalAmplitude(double r) const;
    Complex evalAmplitudeDeriv(double r) const;
};

RegionSolution match_coefficients(const PotentialSpec& pot, Complex k);

// Matching solution together with the k-derivatives of its amplitudes,
// obtained by differentiating the 4x4 system entry by entry and reusing
// the factorization.  Feeds the Newton pole polisher.
struct MatchDerivative {
    RegionSolution sol;
    Complex dAII, dBII, dCIn, dCOut;
};
MatchDerivative match_with_derivative(const PotentialSpec& pot, Complex k);

// jMinus is the coefficient of exp(-i k r) in region III of the matched
// solution, scaled so the free potential gives exactly 1.  Its zeros in
// the lower half k-plane are the resonance poles of the S-matrix.
// jPlus = jMinus(-k); on the real axis jPlus = conj(jMinus).
struct JostData {
    Complex k;
    Complex jMinus;
    Complex jPlus;
};
JostData jost_function(const PotentialSpec& pot, Complex k);

// Jost derivative d jMinus / dk, from the differentiated matching solve.
Complex jost_derivative(const PotentialSpec& pot, Complex k);

// S(k) = jMinus(-k) / jMinus(k).  Unimodular for real k, poles at the
// Jost zeros in the lower half plane.
Complex s_matrix_at_k(const PotentialSpec& pot, Complex k);
Complex s_matrix(const PotentialSpec& pot, Complex z, Sheet sheet);

// Scattering kets normalized to the asymptotic form
//   <r|E+> ~ exp(-i k r) - S(E) exp(+i k r)
// with <r|E-> = conj(<r|E+>) for real E > 0.  sign is +1 or -1.
Complex ls_ket(const PotentialSpec& pot, double energy, double r, int sign);

// The same closed form evaluated at complex energy z on the requested
// sheet.  Agrees with ls_ket on the positive real axis.
Complex continued_ket(const PotentialSpec& pot, Complex z, Sheet sheet, double r,
                      int sign = +1);

struct GamowPole {
    Complex kPole;  // Jost zero, Im kPole < 0
    Complex zR;     // kPole^2: resonance position on the second sheet
    double eR;      // Re zR
    double gamma;   // -2 Im zR, width of the decaying state
};

struct PoleSearchOptions {
    int samplesPerEdge = 256;
    double newtonTol = 1e-13;     // target |jMinus| at a refined zero
    int maxNewtonIterations = 60;
    int maxSubdivisionDepth = 48;
    double dedupTol = 1e-8;
};

struct PoleSearchReport {
    std::vector<GamowPole> poles;  // sorted by Re k, then Im k
    long winding = 0;              // contour-certified zero count
    int retries = 0;               // contour perturbations that were needed
};

// Argument-principle search over the closed rectangle
// [reLo, reHi] x [imLo, imHi] in the k-plane: certified winding count,
// recursive subdivision to one zero per cell, Newton refinement.
PoleSearchReport find_poles_certified(const PotentialSpec& pot,
                                      double reLo, double reHi,
                                      double imLo, double imHi,
                                      const PoleSearchOptions& opts = {});

std::vector<GamowPole> find_poles(const PotentialSpec& pot,
                                  double reLo, double reHi,
                                  double imLo, double imHi,
                                  const PoleSearchOptions& opts = {});

} // namespace gamow
