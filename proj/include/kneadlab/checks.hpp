#pragma once

#include "kneadlab/check_report.hpp"
#include "kneadlab/kneading_map.hpp"

namespace kneadlab {

// Lexicographic admissibility: {Q(k+j)}_{j>=1} >= {Q(Q^2(k)+j)}_{j>=1} for
// every k <= horizon. Each k is compared on a window of length horizon; ties
// that survive the window are resolved symbolically from the tail rule where
// possible and reported HorizonLimited otherwise.
CheckReport check_admissible(const KneadingMap& q, long long horizon);

// Strict inequality Q(k+1) > Q(Q^2(k)+1) + 1 for all from_k <= k <= horizon.
CheckReport check_strong_admissible(const KneadingMap& q, long long horizon,
                                    long long from_k);

// Carry-separation: whenever Q(s+1) = Q(s+1~) for s != s~, distinct iterates
// stay distinct one more step. Enumerated exhaustively for 1 <= s < s~ <=
// horizon over the descending Q-chains of s and s~.
CheckReport check_stop_carry(const KneadingMap& q, long long horizon);

// Period-S_k renormalization test: Q(k+1) = k and Q(k+j) >= k for all j >= 1,
// the tail quantifier decided symbolically (window of length horizon plus the
// tail rule).
CheckReport is_renormalizable_at(const KneadingMap& q, long long k,
                                 long long horizon);

}  // namespace kneadlab
