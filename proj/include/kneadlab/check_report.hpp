#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace kneadlab {

enum class Verdict { Holds, Fails, HorizonLimited };

std::string to_string(Verdict v);

// Result of a combinatorial or numeric predicate check. A Fails verdict
// always carries a reproducible witness; HorizonLimited means the predicate
// quantifies over all k and the window ran out before a decision.
struct CheckReport {
  std::string predicate;
  Verdict verdict = Verdict::Holds;
  long long horizon = 0;
  std::map<std::string, std::string> witness;  // empty unless Fails/limited
  std::string note;
  std::string margin;  // smallest certified gap, for interval checks

  bool holds() const { return verdict == Verdict::Holds; }

  static CheckReport pass(std::string predicate, long long horizon,
                          std::string note = {});
  static CheckReport fail(std::string predicate, long long horizon,
                          std::map<std::string, std::string> witness,
                          std::string note = {});
  static CheckReport limited(std::string predicate, long long horizon,
                             std::string note = {});
};

}  // namespace kneadlab
