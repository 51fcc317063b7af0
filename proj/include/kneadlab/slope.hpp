#pragma once

#include <gmpxx.h>

#include "kneadlab/interval.hpp"
#include "kneadlab/kneading.hpp"

namespace kneadlab {

// A slope window inside (1, 2] on which the first `verified_symbols` symbols
// of the critical itinerary provably equal `target`. Both endpoints carry a
// rigorously checked itinerary; the symbols of every interior slope agree by
// monotonicity of tent-map kneading data in the slope.
struct SlopeEnclosure {
  Interval a;
  long long verified_symbols = 0;
  mpfr_prec_t precision_bits = 0;
  KneadingSequence target;
};

// Bisection on the slope against the parity-lexicographic order of itinerary
// prefixes. `width` bounds the returned window (strict); comparisons that a
// precision doubling cannot resolve raise PrecisionExhausted, a collapsed
// bracket without a match raises NotRealizable.
SlopeEnclosure solve_slope(const KneadingSequence& kappa, const mpq_class& width,
                           mpfr_prec_t max_precision = 1 << 20);

// Sign of the itinerary of a point slope against the target prefix in
// parity-lexicographic order: -1 below, 0 all symbols match, +1 above.
int compare_itinerary(const BigFloat& a, const KneadingSequence& kappa,
                      mpfr_prec_t prec, mpfr_prec_t max_precision);

}  // namespace kneadlab
