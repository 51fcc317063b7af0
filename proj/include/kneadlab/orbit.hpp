#pragma once

#include <vector>

#include "kneadlab/interval.hpp"
#include "kneadlab/kneading.hpp"
#include "kneadlab/number_system.hpp"
#include "kneadlab/slope.hpp"

namespace kneadlab {

// Enclosures of the critical orbit c_0 = 1/2, c_n = T^n(c) under every slope
// of the enclosure. symbol(n) is the certified side of c_n relative to 1/2.
class OrbitTable {
 public:
  OrbitTable(Interval slope, std::vector<Interval> points,
             std::vector<int> symbols);

  const Interval& slope() const { return slope_; }
  long long length() const { return static_cast<long long>(points_.size()) - 1; }
  const Interval& point(long long n) const;
  int symbol(long long n) const;  // 0/1; -1 when last point is unresolved
  mpfr_prec_t precision_bits() const { return slope_.precision(); }

  // Test/serialization hook: replaces one enclosure (symbols are kept).
  OrbitTable with_point_replaced(long long n, Interval enc) const;

 private:
  Interval slope_;
  std::vector<Interval> points_;
  std::vector<int> symbols_;
};

// Iterates the slope enclosure n times with outward rounding, doubling the
// working precision until no enclosure before index n straddles 1/2
// ambiguously. Requires slope.verified_symbols >= n - 1.
OrbitTable critical_orbit(const SlopeEnclosure& slope, long long n,
                          mpfr_prec_t max_precision = 1 << 16);

// Tower level D_n = [c_n, c_{beta(n)}] for n >= 2; D_1 = [0, c_1].
struct Level {
  long long n = 0;
  long long beta_index = 0;  // the shared-endpoint index beta(n); 0 for D_1
  Interval enc;

  Level() : enc(64) {}
};

Level level(const OrbitTable& orbit, const CuttingTimes& s, long long n);

// Closest precritical points: T^{S_k}(z_k) = T^{S_k}(zhat_k) = 1/2 with
// monotone intermediate branches, zhat_k = 1 - z_k.
struct PrecriticalPair {
  long long k = 0;
  Interval z, zhat;

  PrecriticalPair() : z(64), zhat(64) {}
};

PrecriticalPair closest_precritical(const OrbitTable& orbit,
                                    const CuttingTimes& s, long long k);

// Projection of a code onto the interval: c_n for finite codes, the
// intersection of the nested levels D_{b(0)}, ..., D_{b(count-1)} for
// truncated ones.
Interval project(const ECode& e, const OrbitTable& orbit, const CuttingTimes& s,
                 int count);

// Nesting check D_n inside D_{beta(n)} up to enclosure fattening, with the
// shared endpoint agreeing up to enclosure widths. Returns false only on a
// certified violation beyond the fattening allowance.
bool nesting_holds(const OrbitTable& orbit, const CuttingTimes& s, long long n);

}  // namespace kneadlab
