#pragma once

#include <string>

#include "json.hpp"
#include "kneadlab/certify.hpp"
#include "kneadlab/orbit.hpp"

namespace kneadlab {

// Stable key order everywhere: reports are diffed byte-for-byte in tests.
using Json = nlohmann::ordered_json;

Json check_report_json(const CheckReport& rep);

// Orbit enclosures as decimal strings with exact round-trip at
// precision_bits.
Json orbit_json(const OrbitTable& orbit);
OrbitTable orbit_from_json(const Json& j);

Json level_json(const Level& lv);
Json cover_json(const DeltaCover& cover);

// generated_at is the single timestamp field; pass an empty string to omit
// time-dependent content entirely.
Json certificate_json(const Certificate& cert, const std::string& generated_at);

std::string verdict_exit_note(Verdict v);

}  // namespace kneadlab
