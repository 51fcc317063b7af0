#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kneadlab/check_report.hpp"
#include "kneadlab/kneading.hpp"

namespace kneadlab {

// An element of the cutting-time number system: the increasing index set of
// its nonzero entries. Finite codes are exact integer codings; truncated codes
// describe the window [0, depth) of an infinite sequence, entries at indices
// >= depth being unspecified.
struct ECode {
  enum class Kind { Finite, Truncated };

  std::vector<long long> indices;
  Kind kind = Kind::Finite;
  long long depth = 0;  // meaningful for truncated codes only

  bool is_zero() const { return indices.empty() && kind == Kind::Finite; }

  // Membership rule: index i present forces every j with Q(i+1) <= j < i
  // absent. Throws InvalidKneadingMap-flavoured errors on violation.
  void validate(const KneadingMap& q) const;

  // Text form `i0,i1,...` for finite codes and `i0,i1,...@depth` for
  // truncated ones; `@depth` alone denotes a truncated zero code.
  std::string to_string() const;
  static ECode parse(const std::string& text);
};

// Greedy canonical coding of n as a sum of cutting times. Requires n <= S_max
// for the supplied table.
ECode encode(const mpz_class& n, const CuttingTimes& s);

// Sum of the coded cutting times; finite codes only.
mpz_class decode(const ECode& e, const CuttingTimes& s);

// Add-and-carry successor. For truncated codes whose carry escapes the window
// the result is nullopt (the carry-to-infinity signature); finite codes always
// advance. Cutting times are needed only for validation hooks and may cover
// less than the carry reach.
std::optional<ECode> add_one(const ECode& e, const KneadingMap& q);

// Two-sided inverse of add_one away from the zero code. For a truncated zero
// code the unique surviving preimage chain is returned when there is exactly
// one; otherwise NoPredecessor is raised.
ECode predecessor(const ECode& e, const KneadingMap& q, const CuttingTimes& s);

// beta(n) = n - S_{k-1} for n in (S_{k-1}, S_k]; equivalently the coding of n
// with its top nonzero entry cleared. beta(1) = 0.
mpz_class beta(const mpz_class& n, const CuttingTimes& s);

// Partial sums b(i) = sum_{j <= q_i} e_j S_j for the first `count` nonzero
// indices of e.
std::vector<mpz_class> nest_indices(const ECode& e, int count,
                                    const CuttingTimes& s);

// A candidate preimage chain of the zero code: q_0 with Q(q_0+1) = 0 extended
// by the forced relation Q(q_j+1) = q_{j-1}+1.
struct PreimageChain {
  std::vector<long long> elements;
  long long depth_verified = 0;
  bool may_continue = true;  // some continuation exists past the window
};

// All chains alive at the given depth (branching on every solution of the
// forced relation).
std::vector<PreimageChain> zero_preimages(const KneadingMap& q, long long depth);

// Searches for an index sequence {k_i} such that for every k_i and all
// k_i < k <= horizon either Q(k) >= k_i, or Q(k) < k_i and only finitely many
// l > k ever iterate onto k under Q. Also requires Q(k) -> infinity.
CheckReport check_invertibility_hypotheses(const KneadingMap& q,
                                           long long horizon);

}  // namespace kneadlab
