#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "kneadlab/kneading_map.hpp"

namespace kneadlab {

// gmpxx has no long long overloads; on LP64 long is wide enough.
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

// The increasing sequence S_0 = 1, S_1 = 2, S_k = S_{k-1} + S_{Q(k)}.
// Arbitrary precision: the values grow exponentially in k.
struct CuttingTimes {
  std::vector<mpz_class> s;

  long long count() const { return static_cast<long long>(s.size()) - 1; }
  const mpz_class& at(long long k) const;

  // max{i : S_i < n}; -1 when no cutting time is below n (i.e. n <= 1).
  long long index_below(const mpz_class& n) const;
  // The k with n in (S_{k-1}, S_k]; requires 1 <= n <= S_max. For n = 1 this
  // returns 0 (with the convention that the block below S_0 starts at 0).
  long long block_of(const mpz_class& n) const;
};

CuttingTimes cutting_times(const KneadingMap& q, long long count);

// Symbols kappa_1..kappa_N over {0,1}; the turning-point symbol never occurs
// for maps generated from a kneading map (the critical orbit is aperiodic).
struct KneadingSequence {
  std::vector<uint8_t> symbols;  // symbols[i] = kappa_{i+1}

  long long length() const { return static_cast<long long>(symbols.size()); }
  int at(long long n) const;  // 1-based
  std::string to_string() const;
};

// Builds kappa_1..kappa_length by block appending: the prefix of length S_k is
// the prefix of length S_{k-1} followed by the prefix of length S_{Q(k)} with
// its last symbol flipped.
KneadingSequence kneading_sequence(const KneadingMap& q, long long length);

// tau(n) = min{m > 0 : kappa_m != kappa_{m+n}}; nullopt when no disagreement
// is visible within the available symbols.
std::optional<long long> tau(const KneadingSequence& kappa, long long n);

}  // namespace kneadlab
