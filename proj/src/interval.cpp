#include "kneadlab/interval.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace kneadlab {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, 2);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_ui(unsigned long x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_mpz(const mpz_class& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
  return r;
}

BigFloat BigFloat::from_mpq(const mpq_class& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, x.get_mpq_t(), rnd);
  return r;
}

BigFloat BigFloat::from_decimal(const std::string& s, mpfr_prec_t prec) {
  BigFloat r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("unparsable decimal float: " + s);
  return r;
}

std::string BigFloat::to_decimal() const {
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t exp = 0;
  // n = 0 requests enough digits for an exact nearest-rounding round-trip.
  char* digits = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
  if (digits == nullptr) throw std::runtime_error("mpfr_get_str failed");
  std::string d(digits);
  mpfr_free_str(digits);
  std::string sign;
  if (!d.empty() && d[0] == '-') {
    sign = "-";
    d.erase(d.begin());
  }
  // mpfr's exponent is relative to 0.d1d2..., convert to d1.d2...e(exp-1).
  std::string out = sign + d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e" + std::to_string(static_cast<long long>(exp) - 1);
  return out;
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  assert(valid());
}

Interval Interval::point_ui(unsigned long x, mpfr_prec_t prec) {
  return point(BigFloat::from_ui(x, prec));
}

Interval Interval::point(const BigFloat& x) { return Interval(x, x); }

Interval Interval::from_mpq(const mpq_class& x, mpfr_prec_t prec) {
  return Interval(BigFloat::from_mpq(x, prec, MPFR_RNDD),
                  BigFloat::from_mpq(x, prec, MPFR_RNDU));
}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

bool Interval::valid() const { return mpfr_cmp(lo_.raw(), hi_.raw()) <= 0; }

Interval Interval::rounded_to(mpfr_prec_t prec) const {
  Interval r(prec);
  mpfr_set(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_set(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::add(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::sub(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::mul_nonneg(const Interval& a, const Interval& b) {
  assert(a.lo_.sign() >= 0 && b.lo_.sign() >= 0);
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_mul(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_mul(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::div_pos(const Interval& x, const Interval& a) {
  assert(x.lo_.sign() >= 0 && a.lo_.sign() > 0);
  Interval r(std::max(x.precision(), a.precision()));
  mpfr_div(r.lo_.raw(), x.lo_.raw(), a.hi_.raw(), MPFR_RNDD);
  mpfr_div(r.hi_.raw(), x.hi_.raw(), a.lo_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::one_minus(const Interval& x) {
  Interval r(x.precision());
  mpfr_ui_sub(r.lo_.raw(), 1, x.hi_.raw(), MPFR_RNDD);
  mpfr_ui_sub(r.hi_.raw(), 1, x.lo_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_max(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  return r;
}

std::optional<Interval> Interval::intersect(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_min(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  if (!r.valid()) return std::nullopt;
  return r;
}

bool Interval::certainly_less(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.hi_.raw(), b.lo_.raw()) < 0;
}

bool Interval::certainly_greater(const Interval& a, const Interval& b) {
  return certainly_less(b, a);
}

bool Interval::disjoint(const Interval& a, const Interval& b) {
  return certainly_less(a, b) || certainly_less(b, a);
}

bool Interval::encloses(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.lo_.raw(), b.lo_.raw()) <= 0 &&
         mpfr_cmp(b.hi_.raw(), a.hi_.raw()) <= 0;
}

bool Interval::contains_point_ui(unsigned long x) const {
  return mpfr_cmp_ui(lo_.raw(), x) <= 0 && mpfr_cmp_ui(hi_.raw(), x) >= 0;
}

int Interval::branch_side() const {
  if (hi_.cmp_d(0.5) <= 0) return -1;
  if (lo_.cmp_d(0.5) >= 0) return +1;
  return 0;
}

int Interval::strict_symbol() const {
  if (hi_.cmp_d(0.5) < 0) return 0;
  if (lo_.cmp_d(0.5) > 0) return 1;
  return -1;
}

std::string Interval::to_string() const {
  return "[" + lo_.to_decimal() + ", " + hi_.to_decimal() + "]";
}

Interval tent_step(const Interval& slope, const Interval& x) {
  const int side = x.branch_side();
  if (side < 0) return Interval::mul_nonneg(slope, x);
  if (side > 0) return Interval::mul_nonneg(slope, Interval::one_minus(x));
  // Straddling enclosure: the image is [a*min(x.lo, 1-x.hi), a/2].
  const mpfr_prec_t prec = std::max(slope.precision(), x.precision());
  Interval left = Interval::mul_nonneg(slope, Interval::point(x.lo()));
  Interval right =
      Interval::mul_nonneg(slope, Interval::one_minus(Interval::point(x.hi())));
  BigFloat half(prec);
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  Interval peak = Interval::mul_nonneg(slope, Interval::point(half));
  BigFloat lo(prec);
  mpfr_min(lo.raw(), left.lo().raw(), right.lo().raw(), MPFR_RNDD);
  return Interval(std::move(lo), peak.hi());
}

Interval clamp01(const Interval& x) {
  Interval r(x.precision());
  mpfr_set(r.lo_mut().raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_set(r.hi_mut().raw(), x.hi().raw(), MPFR_RNDU);
  if (mpfr_sgn(r.lo_mut().raw()) < 0) mpfr_set_zero(r.lo_mut().raw(), 1);
  if (mpfr_cmp_ui(r.hi_mut().raw(), 1) > 0)
    mpfr_set_ui(r.hi_mut().raw(), 1, MPFR_RNDN);
  if (mpfr_cmp_ui(r.lo_mut().raw(), 1) > 0) mpfr_set_ui(r.lo_mut().raw(), 1, MPFR_RNDN);
  if (mpfr_sgn(r.hi_mut().raw()) < 0) mpfr_set_zero(r.hi_mut().raw(), 1);
  return r;
}

}  // namespace kneadlab
