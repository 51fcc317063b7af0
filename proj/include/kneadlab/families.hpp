#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kneadlab/kneading_map.hpp"

namespace kneadlab {

// Per-family defaults used by the certificate pipeline and the CLI.
struct FamilyDefaults {
  long long strong_from_k = 1;     // first k for the strict inequality check
  long long strong_horizon = 0;    // 0: use the caller's horizon
  bool cover_construction = false; // certificate runs the cover/claims route
};

// Builds a section5 kneading map. The prefix must supply Q(1..k1+1) and is
// gated: admissibility up to k2+2 and the strict inequality on (k2, k2+2]
// must hold, otherwise InvalidPrefix is raised. With no prefix given the
// lexicographically smallest valid one is used.
KneadingMap section5_map(long long k1,
                         std::optional<std::vector<long long>> prefix = {},
                         long long horizon = KneadingMap::kDefaultHorizon);

// Lexicographically smallest prefix passing the section5 gate.
std::vector<long long> default_section5_prefix(long long k1);

// Lexicographically smallest prefix table for the example1 tail that passes
// the full odometer-route bundle (admissibility, strict inequality from
// threshold+10, carry separation, invertibility) at a validation horizon.
std::vector<long long> default_example1_prefix(long long threshold,
                                               long long ks_start,
                                               long long ks_step);

// Family mini-language:
//   const:C, offset:D, double (= offset:1), table:[q1,q2,...],
//   example1[:K=..,ks=START+STEP], section5:k1=N[,prefix=[...]]
// plus the full serialized form prefix=[...];tail=... . Defaults come from a
// config file when KNEADLAB_CONFIG points at one, otherwise from the built-in
// searches (both agree; a test pins this).
KneadingMap parse_family(const std::string& desc,
                         long long horizon = KneadingMap::kDefaultHorizon);

FamilyDefaults family_defaults(const KneadingMap& q);

}  // namespace kneadlab
