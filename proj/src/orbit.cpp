#include "kneadlab/orbit.hpp"

#include <algorithm>

namespace kneadlab {

OrbitTable::OrbitTable(Interval slope, std::vector<Interval> points,
                       std::vector<int> symbols)
    : slope_(std::move(slope)),
      points_(std::move(points)),
      symbols_(std::move(symbols)) {
  if (points_.empty() || points_.size() != symbols_.size())
    throw Error(ErrorCode::BadInput, "malformed orbit table");
}

const Interval& OrbitTable::point(long long n) const {
  if (n < 0 || n > length())
    throw Error(ErrorCode::IndexOutOfRange,
                "orbit index out of range: " + std::to_string(n));
  return points_[static_cast<size_t>(n)];
}

int OrbitTable::symbol(long long n) const {
  if (n < 1 || n > length())
    throw Error(ErrorCode::IndexOutOfRange,
                "orbit symbol out of range: " + std::to_string(n));
  return symbols_[static_cast<size_t>(n)];
}

OrbitTable OrbitTable::with_point_replaced(long long n, Interval enc) const {
  OrbitTable copy = *this;
  copy.points_.at(static_cast<size_t>(n)) = std::move(enc);
  return copy;
}

OrbitTable critical_orbit(const SlopeEnclosure& slope, long long n,
                          mpfr_prec_t max_precision) {
  if (n < 1) throw Error(ErrorCode::BadInput, "orbit length must be >= 1");
  if (slope.verified_symbols < n - 1)
    throw Error(ErrorCode::BadInput,
                "slope enclosure verifies too few symbols for this orbit");
  for (mpfr_prec_t prec = std::max<mpfr_prec_t>(slope.precision_bits, 192);
       prec <= max_precision; prec *= 2) {
    Interval a = slope.a.rounded_to(prec);
    std::vector<Interval> pts;
    std::vector<int> syms;
    pts.reserve(static_cast<size_t>(n) + 1);
    BigFloat half(prec);
    mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
    pts.push_back(Interval::point(half));
    syms.push_back(-1);
    bool ambiguous = false;
    for (long long i = 1; i <= n; ++i) {
      Interval next = clamp01(tent_step(a, pts.back()));
      const int sym = next.strict_symbol();
      // Every point but the last must have a certified side; the last one
      // only feeds endpoint arithmetic.
      if (sym < 0 && i < n) {
        ambiguous = true;
        break;
      }
      pts.push_back(std::move(next));
      syms.push_back(sym);
    }
    if (!ambiguous) return OrbitTable(std::move(a), std::move(pts), std::move(syms));
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "critical orbit has an unresolved side; solve the slope with "
              "more symbols or a tighter width");
}

Level level(const OrbitTable& orbit, const CuttingTimes& s, long long n) {
  if (n < 1 || n > orbit.length())
    throw Error(ErrorCode::IndexOutOfRange,
                "level index out of range: " + std::to_string(n));
  Level out;
  out.n = n;
  if (n == 1) {
    // Base level: both central branch domains of T map onto [0, c_1].
    out.beta_index = 0;
    BigFloat zero(orbit.point(1).precision());
    mpfr_set_zero(zero.raw(), 1);
    out.enc = Interval::hull(Interval::point(zero), orbit.point(1));
    return out;
  }
  const mpz_class b = beta(to_mpz(n), s);
  if (!b.fits_slong_p())
    throw Error(ErrorCode::IndexOutOfRange, "beta index out of range");
  out.beta_index = b.get_si();
  out.enc = Interval::hull(orbit.point(n), orbit.point(out.beta_index));
  return out;
}

PrecriticalPair closest_precritical(const OrbitTable& orbit,
                                    const CuttingTimes& s, long long k) {
  const mpz_class& sk_z = s.at(k);
  if (!sk_z.fits_slong_p())
    throw Error(ErrorCode::IndexOutOfRange, "cutting time too large");
  const long long sk = sk_z.get_si();
  if (orbit.length() < sk)
    throw Error(ErrorCode::BadInput,
                "orbit too short to certify the precritical point");
  const mpfr_prec_t prec = orbit.precision_bits();
  const Interval& a = orbit.slope();
  BigFloat half(prec);
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  // Pull 1/2 backwards through the branches prescribed by the itinerary: the
  // preimage on the side of symbol kappa_j contracts by 1/a each step, and the
  // intermediate points must share the side of c_j for the branch to be
  // monotone over (z_k, c).
  Interval y = Interval::point(half);
  for (long long j = sk - 1; j >= 1; --j) {
    const int side = orbit.symbol(j);
    Interval pre = Interval::div_pos(y, a);
    if (side == 1) pre = Interval::one_minus(pre);
    y = clamp01(pre);
    const int got = y.strict_symbol();
    if (got < 0)
      throw Error(ErrorCode::PrecisionExhausted,
                  "precritical pullback lost the branch side");
    if (got != side)
      throw Error(ErrorCode::PrecisionExhausted,
                  "precritical pullback left its monotone branch");
  }
  Interval z = clamp01(Interval::div_pos(y, a));  // final step on the left side
  if (z.strict_symbol() != 0)
    throw Error(ErrorCode::PrecisionExhausted,
                "precritical point not certified left of the turning point");
  PrecriticalPair out;
  out.k = k;
  out.z = z;
  out.zhat = Interval::one_minus(z);
  return out;
}

Interval project(const ECode& e, const OrbitTable& orbit, const CuttingTimes& s,
                 int count) {
  if (e.kind == ECode::Kind::Finite) {
    const mpz_class n = decode(e, s);
    if (n > to_mpz(orbit.length()))
      throw Error(ErrorCode::IndexOutOfRange,
                  "orbit too short to project this code");
    return orbit.point(n.get_si());
  }
  const auto b = nest_indices(e, count, s);
  if (b.back() > to_mpz(orbit.length()))
    throw Error(ErrorCode::IndexOutOfRange,
                "orbit too short for the requested nest depth");
  Interval acc = level(orbit, s, b.front().get_si()).enc;
  for (size_t i = 1; i < b.size(); ++i) {
    const auto next = level(orbit, s, b[i].get_si()).enc;
    auto meet = Interval::intersect(acc, next);
    if (!meet)
      throw Error(ErrorCode::EmptyIntersection,
                  "nested levels failed to intersect; numerics or input are "
                  "inconsistent");
    acc = *meet;
  }
  return acc;
}

bool nesting_holds(const OrbitTable& orbit, const CuttingTimes& s, long long n) {
  if (n < 2) throw Error(ErrorCode::BadInput, "nesting starts at n = 2");
  const Level inner = level(orbit, s, n);
  const Level outer = level(orbit, s, inner.beta_index >= 1 ? inner.beta_index : 1);
  // Fatten by the endpoint enclosure widths: the true intervals nest exactly,
  // so a certified violation must exceed the combined uncertainty.
  const mpfr_prec_t prec = orbit.precision_bits();
  BigFloat fat(prec);
  mpfr_add(fat.raw(), inner.enc.width().raw(), outer.enc.width().raw(), MPFR_RNDU);
  BigFloat lo_ok(prec), hi_ok(prec);
  mpfr_sub(lo_ok.raw(), outer.enc.lo().raw(), fat.raw(), MPFR_RNDD);
  mpfr_add(hi_ok.raw(), outer.enc.hi().raw(), fat.raw(), MPFR_RNDU);
  if (mpfr_cmp(inner.enc.lo().raw(), lo_ok.raw()) < 0) return false;
  if (mpfr_cmp(inner.enc.hi().raw(), hi_ok.raw()) > 0) return false;
  // Shared endpoint: c_{beta(n)} is an endpoint of both levels by
  // construction; the enclosures agree on it up to their widths, which the
  // hull-based construction guarantees. Check the index relation instead.
  const mpz_class bb = beta(to_mpz(n), s);
  return bb == to_mpz(inner.beta_index);
}

}  // namespace kneadlab
