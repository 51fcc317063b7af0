#pragma once

#include <string>
#include <vector>

#include "kneadlab/checks.hpp"
#include "kneadlab/families.hpp"
#include "kneadlab/orbit.hpp"

namespace kneadlab {

// Everything the cover/claim checks need about one solved map.
struct CoverContext {
  KneadingMap map;
  CuttingTimes cut;
  KneadingSequence kappa;
  SlopeEnclosure slope;
  OrbitTable orbit;
  std::vector<long long> block_indices;  // k_1, k_2, ... of the tail rule

  long long s_at(long long k) const;  // S_k as long long (cover scale)
};

// Solves the slope and iterates the orbit far enough to build covers for
// i <= i_max (pieces up to S_{k_{i_max+1}} plus successors).
CoverContext make_cover_context(const KneadingMap& map, long long i_max,
                                mpfr_prec_t max_precision = 1 << 16);

// The union of levels D_n for n in (S_{k_i - 1}, S_{k_i}].
struct DeltaCover {
  long long i = 0;
  long long k_i = 0;
  std::vector<Level> pieces;
};

DeltaCover build_cover(const CoverContext& ctx, long long i);

// Cover claims, i-indexed as in the block construction. Unresolvable interval
// comparisons raise PrecisionExhausted rather than guessing.
CheckReport verify_claim1(const CoverContext& ctx, long long i);
CheckReport verify_claim2(const CoverContext& ctx, long long i);
CheckReport verify_claim3(const CoverContext& ctx, const DeltaCover& cover);
CheckReport verify_claim4(const CoverContext& ctx, long long i);
CheckReport verify_claim5(const CoverContext& ctx, const DeltaCover& cover_i,
                          const DeltaCover& cover_next);
CheckReport verify_injectivity(const CoverContext& ctx, const DeltaCover& cover);

// Probe of the no-shared-interior property: no level D_{S_r + S_t}
// (r < Q(t+1)) whose interior holds both c_{S_k} and a closest precritical
// point of generation Q(k+1)-1, for k at or above some threshold; reports the
// smallest threshold that scans clean.
CheckReport check_overlap_lemma(const CoverContext& ctx, long long horizon);

enum class CertVerdict { CertifiedAtDepth, Refuted, Inconclusive };

std::string to_string(CertVerdict v);

struct CheckRecord {
  std::string name;
  CheckReport report;
  bool gating = true;
};

struct Certificate {
  std::string map_description;
  std::string route;  // cover_construction | odometer_conjugacy
  long long i_max = 0;
  long long horizon = 0;
  long long depth = 0;
  std::string slope_lo, slope_hi;
  long long slope_verified_symbols = 0;
  long long precision_bits = 0;
  std::vector<CheckRecord> checks;
  CertVerdict overall = CertVerdict::Inconclusive;

  const CheckRecord* first_failing() const;
};

struct CertifyOptions {
  long long i_max = 3;
  long long horizon = 200;
  long long depth = 60;           // zero-preimage window (odometer route)
  mpfr_prec_t max_precision = 512;
  long long from_k = 0;           // 0: family default
  bool with_claims = false;       // run cover claims on odometer-route maps
};

Certificate build_certificate(const KneadingMap& map,
                              const std::string& description,
                              const CertifyOptions& opts);

}  // namespace kneadlab
