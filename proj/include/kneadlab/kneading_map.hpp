#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kneadlab {

// Error taxonomy shared by the whole toolkit.
enum class ErrorCode {
  InvalidKneadingMap,
  InvalidPrefix,
  InsufficientCuttingTimes,
  NotFinite,
  NoPredecessor,
  NotEnoughIndices,
  IndexOutOfRange,
  PrecisionExhausted,
  NotRealizable,
  EmptyIntersection,
  BadInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Tail rules: the only admitted infinite descriptions of Q beyond the finite
// prefix table. Values are Q(k) for k past the prefix.
struct ConstantTail {
  long long value = 0;
};

// Q(k) = max(0, k - offset).
struct LinearOffsetTail {
  long long offset = 0;
};

// Q(k) = k-4 when k > threshold and k-4 is special, k-3 when k > threshold and
// k-5 is special, k-2 otherwise; the special indices form the arithmetic
// progression ks_start, ks_start + ks_step, ...
struct Example1Tail {
  long long threshold = 0;
  long long ks_start = 0;
  long long ks_step = 0;
};

// Block construction driven by the index sequence k_1, k_2 = k_1+1,
// k_{i} = 2k_{i-1} - k_{i-2} + 1: the map doubles at each k_i and replays the
// previous block in between. Values are materialized into a table up to the
// configured horizon.
struct Section5Tail {
  long long k1 = 0;
};

using Tail = std::variant<ConstantTail, LinearOffsetTail, Example1Tail, Section5Tail>;

// Finitely-described kneading map: a prefix table Q(1..n0) plus a tail rule.
// Q(k) < k is enforced for every queried k; Q(0) is defined as 0 so that
// iterated compositions are total.
class KneadingMap {
 public:
  static constexpr long long kDefaultHorizon = 1 << 16;

  KneadingMap(std::vector<long long> prefix, Tail tail,
              long long horizon = kDefaultHorizon);

  long long q(long long k) const;
  // Q applied `times` times.
  long long q_iter(long long k, int times) const;

  long long horizon() const { return horizon_; }
  const std::vector<long long>& prefix() const { return prefix_; }
  const Tail& tail() const { return tail_; }

  bool is_section5() const { return std::holds_alternative<Section5Tail>(tail_); }
  bool is_example1() const { return std::holds_alternative<Example1Tail>(tail_); }

  // Whether Q(k) -> infinity, decided from the tail rule.
  bool q_tends_to_infinity() const;

  // The distinguished index sequence of the tail rule: the special indices of
  // an example1 tail, or the block indices k_i of a section5 tail. Throws for
  // other tails.
  std::vector<long long> special_indices(int count) const;

  // All x in [lo, hi] with Q(x) = value.
  std::vector<long long> preimages_in_range(long long value, long long lo,
                                            long long hi) const;
  // Whether some x > bound has Q(x) = value, decided symbolically from the
  // tail rule.
  bool has_preimage_beyond(long long value, long long bound) const;

  // Text form `prefix=[...];tail=...` used by the CLI and JSON reports.
  std::string serialize() const;
  static KneadingMap parse(const std::string& text,
                           long long horizon = kDefaultHorizon);

 private:
  void validate() const;
  long long tail_value(long long k) const;

  std::vector<long long> prefix_;
  Tail tail_;
  long long horizon_;
  std::vector<long long> section5_table_;  // Q(1..horizon) for section5 tails
  std::vector<long long> section5_blocks_;
};

}  // namespace kneadlab
