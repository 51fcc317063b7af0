#include "kneadlab/slope.hpp"

#include <algorithm>

namespace kneadlab {

namespace {

struct AmbiguousSymbol {
  long long n;
};

// Itinerary comparison at a fixed working precision; throws AmbiguousSymbol
// when an orbit enclosure straddles 1/2.
int compare_once(const BigFloat& a, const KneadingSequence& kappa,
                 mpfr_prec_t prec) {
  Interval slope = Interval::point(a).rounded_to(prec);
  BigFloat half(prec);
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  Interval x = Interval::point(half);
  bool ones_even = true;  // parity of target 1s before the current symbol
  for (long long n = 1; n <= kappa.length(); ++n) {
    x = clamp01(tent_step(slope, x));
    const int sym = x.strict_symbol();
    if (sym < 0) throw AmbiguousSymbol{n};
    const int t = kappa.at(n);
    if (sym != t) {
      const int natural = sym > t ? +1 : -1;
      return ones_even ? natural : -natural;
    }
    if (t == 1) ones_even = !ones_even;
  }
  return 0;
}

}  // namespace

int compare_itinerary(const BigFloat& a, const KneadingSequence& kappa,
                      mpfr_prec_t prec, mpfr_prec_t max_precision) {
  for (mpfr_prec_t p = prec; p <= max_precision; p *= 2) {
    try {
      return compare_once(a, kappa, p);
    } catch (const AmbiguousSymbol&) {
      continue;
    }
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "itinerary comparison unresolved at max precision (the slope "
              "may hit the turning point exactly)");
}

SlopeEnclosure solve_slope(const KneadingSequence& kappa, const mpq_class& width,
                           mpfr_prec_t max_precision) {
  if (kappa.length() < 1) throw Error(ErrorCode::BadInput, "empty target prefix");
  if (width <= 0) throw Error(ErrorCode::BadInput, "width must be positive");
  if (kappa.at(1) != 1)
    throw Error(ErrorCode::NotRealizable, "itineraries start with symbol 1");

  const long long n_sym = kappa.length();
  BigFloat wf = BigFloat::from_mpq(width, 64, MPFR_RNDD);
  if (wf.sign() <= 0)
    throw Error(ErrorCode::BadInput, "width underflows the working precision");
  const long long wbits = std::max<long long>(8, 2 - mpfr_get_exp(wf.raw()));
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(
      192, std::max<mpfr_prec_t>(n_sym + 160, wbits + 96));
  if (prec > max_precision)
    throw Error(ErrorCode::PrecisionExhausted,
                "requested symbols/width exceed the precision cap");

  BigFloat lo(prec), hi(prec);
  mpfr_set_ui(hi.raw(), 2, MPFR_RNDN);
  mpfr_set_d(lo.raw(), 1.0 + 1.52587890625e-05, MPFR_RNDN);  // 1 + 2^-16

  auto cmp = [&](const BigFloat& x) {
    return compare_itinerary(x, kappa, prec, max_precision);
  };
  // Probe that treats an unresolvable point (exactly precritical slope) as a
  // non-match instead of failing.
  auto matches = [&](const BigFloat& x) {
    try {
      return cmp(x) == 0;
    } catch (const Error&) {
      return false;
    }
  };

  const int cmp_lo = cmp(lo);
  const int cmp_hi = cmp(hi);
  if (cmp_lo > 0 || cmp_hi < 0)
    throw Error(ErrorCode::NotRealizable,
                "target prefix lies outside the (1, 2] slope family");

  // Locate a matching witness by bisection; on an unresolvable midpoint try a
  // few other interior fractions before giving up.
  BigFloat mid(prec);
  int cmp_mid = -2;
  if (cmp_lo == 0) {
    mid = lo;
    cmp_mid = 0;
  } else if (cmp_hi == 0) {
    mid = hi;
    cmp_mid = 0;
  }
  static const unsigned kFractions[] = {8, 7, 9, 5, 11, 3, 13, 1, 15};
  size_t frac = 0;
  while (cmp_mid != 0) {
    BigFloat gap(prec);
    mpfr_sub(gap.raw(), hi.raw(), lo.raw(), MPFR_RNDN);
    mpfr_mul_ui(gap.raw(), gap.raw(), kFractions[frac], MPFR_RNDN);
    mpfr_div_2ui(gap.raw(), gap.raw(), 4, MPFR_RNDN);
    mpfr_add(mid.raw(), lo.raw(), gap.raw(), MPFR_RNDN);
    if (mpfr_cmp(mid.raw(), lo.raw()) <= 0 || mpfr_cmp(mid.raw(), hi.raw()) >= 0)
      throw Error(ErrorCode::NotRealizable,
                  "bisection bracket collapsed without matching the target");
    try {
      cmp_mid = cmp(mid);
      frac = 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted || frac + 1 >= std::size(kFractions))
        throw;
      ++frac;
      cmp_mid = -2;
      continue;
    }
    if (cmp_mid < 0)
      mpfr_set(lo.raw(), mid.raw(), MPFR_RNDN);
    else if (cmp_mid > 0)
      mpfr_set(hi.raw(), mid.raw(), MPFR_RNDN);
  }

  // Expand around the witness to a window of at most width/2, preferring to
  // anchor the top at a verified endpoint (a = 2 for the full family stays in).
  BigFloat half_w(prec);
  mpfr_set(half_w.raw(), wf.raw(), MPFR_RNDD);
  mpfr_div_2ui(half_w.raw(), half_w.raw(), 1, MPFR_RNDD);

  BigFloat match_lo = mid, match_hi = mid;
  if (cmp_hi == 0) {
    match_hi = hi;
  } else {
    BigFloat cand(prec);
    mpfr_add(cand.raw(), mid.raw(), half_w.raw(), MPFR_RNDD);
    if (mpfr_cmp(cand.raw(), hi.raw()) < 0 && mpfr_cmp(cand.raw(), mid.raw()) > 0 &&
        matches(cand))
      match_hi = cand;
  }
  {
    BigFloat cand(prec);
    mpfr_sub(cand.raw(), match_hi.raw(), half_w.raw(), MPFR_RNDU);
    if (mpfr_cmp(cand.raw(), mid.raw()) >= 0) {
      match_lo = cand;  // between the witness and match_hi: matches by monotonicity
    } else if (mpfr_cmp_ui(cand.raw(), 1) > 0 && matches(cand)) {
      match_lo = cand;
    }
  }
  if (mpfr_cmp(match_lo.raw(), match_hi.raw()) > 0) match_lo = match_hi;

  SlopeEnclosure out;
  out.a = Interval(match_lo, match_hi);
  out.verified_symbols = n_sym;
  out.precision_bits = prec;
  out.target = kappa;
  return out;
}

}  // namespace kneadlab
