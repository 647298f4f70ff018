// CSV and JSON writers and readers for the sampled-function and report
// types.  Every floating-point field is printed with 17 significant digits,
// which is enough to reproduce an IEEE double exactly, so write-then-read
// returns the original bits.  JSON has no representation for infinities;
// writers emit null where a report carries one, and the CSV writers fall
// back to "inf"/"nan" literals.
#pragma once

#include <string>
#include <vector>

#include "bounds.hpp"
#include "evolution.hpp"
#include "hardy.hpp"
#include "sampled.hpp"
#include "shell.hpp"

namespace gamow {

// "%.17g" rendering used by every writer in this file.
std::string format_double(double v);

// Columns: abscissa, re, im.  A "# domain:" comment line carries the tag so
// the reader can restore it; the tail model is advisory and not part of the
// interchange format (readers default it to Compact).
std::string to_csv(const SampledFunction& f);
SampledFunction sampled_from_csv(const std::string& text);

// Object with keys grid, re, im, domainTag.
std::string to_json(const SampledFunction& f);
SampledFunction sampled_from_json(const std::string& text);

// Keys: plane, boundaryNormSq, lines (array of {y, value, tailEstimate,
// divergent}), worstRatio, monotone, verdict ("PASS"/"FAIL").  Non-finite
// values (divergent lines, infinite worstRatio) serialize as null.
std::string to_json(const HardyReport& report);

// Keys: sign, tValues, ySamples, lineNorms (one array per t, null where a
// line diverged), verdicts.
std::string to_json(const EvolutionReport& report);

// Columns: re z, im z, param, actual, bound, ratio; param holds r for
// kernel audits and s for ray profiles.  Skipped and divergent samples keep
// their rows so the sample count is visible in either format.
std::string to_csv(const BoundReport& report);

// cEmpirical, verdict and skipped lead the object; samples follow with
// status and |jMinus| per row, which the CSV omits.
std::string to_json(const BoundReport& report);

// Array of {k: [re, im], z: [re, im], eR, gamma}.
std::string to_json(const std::vector<GamowPole>& poles);

}  // namespace gamow
