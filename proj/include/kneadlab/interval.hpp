#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

namespace kneadlab {

// Thin RAII wrapper around mpfr_t. Every operation that could round takes an
// explicit rounding mode; nothing here rounds silently.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static BigFloat from_ui(unsigned long x, mpfr_prec_t prec);
  static BigFloat from_mpz(const mpz_class& x, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat from_mpq(const mpq_class& x, mpfr_prec_t prec, mpfr_rnd_t rnd);
  // Parses a decimal string produced by to_decimal(); exact round-trip at the
  // same precision.
  static BigFloat from_decimal(const std::string& s, mpfr_prec_t prec);

  // Decimal form with enough digits that from_decimal() recovers the exact
  // binary value.
  std::string to_decimal() const;

  int cmp(const BigFloat& other) const { return mpfr_cmp(v_, other.v_); }
  int cmp_d(double d) const { return mpfr_cmp_d(v_, d); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Closed enclosure [lo, hi] with outward rounding. The tent-map pipeline only
// needs nonnegative operands, so the multiplication/division rules assume
// lo >= 0 and assert it.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(BigFloat lo, BigFloat hi);

  static Interval point_ui(unsigned long x, mpfr_prec_t prec);
  static Interval point(const BigFloat& x);
  static Interval from_mpq(const mpq_class& x, mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  BigFloat width() const;  // hi - lo, rounded up
  bool valid() const;      // lo <= hi

  Interval rounded_to(mpfr_prec_t prec) const;  // outward re-rounding

  static Interval add(const Interval& a, const Interval& b);
  static Interval sub(const Interval& a, const Interval& b);
  static Interval mul_nonneg(const Interval& a, const Interval& b);
  static Interval div_pos(const Interval& x, const Interval& a);  // a.lo > 0
  static Interval one_minus(const Interval& x);
  static Interval hull(const Interval& a, const Interval& b);
  static std::optional<Interval> intersect(const Interval& a, const Interval& b);

  // Certified order: true only when every point of a relates to every point
  // of b as stated.
  static bool certainly_less(const Interval& a, const Interval& b);
  static bool certainly_greater(const Interval& a, const Interval& b);
  static bool disjoint(const Interval& a, const Interval& b);
  // b's enclosure lies inside a's enclosure (enclosure-level containment).
  static bool encloses(const Interval& a, const Interval& b);

  bool contains_point_ui(unsigned long x) const;

  // Branch selector against the critical point 1/2:
  //   -1 : hi <= 1/2 (increasing branch applies)
  //   +1 : lo >= 1/2 (decreasing branch applies)
  //    0 : straddles ambiguously
  int branch_side() const;

  // Strict symbol against 1/2: 0 if hi < 1/2, 1 if lo > 1/2, -1 unresolved.
  int strict_symbol() const;

  std::string to_string() const;

  BigFloat& lo_mut() { return lo_; }
  BigFloat& hi_mut() { return hi_; }

 private:
  BigFloat lo_, hi_;
};

// One tent-map step y = min(a*x, a*(1-x)) on enclosures. Handles enclosures
// that straddle the critical point (the image hull is then [a*min(x.lo, 1-x.hi), a/2]).
Interval tent_step(const Interval& slope, const Interval& x);

// Intersects with [0, 1]; outward rounding can push tent images marginally
// past the unit interval, the true values never leave it.
Interval clamp01(const Interval& x);

}  // namespace kneadlab
