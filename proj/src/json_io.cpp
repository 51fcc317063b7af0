#include "kneadlab/json_io.hpp"

namespace kneadlab {

Json check_report_json(const CheckReport& rep) {
  Json j;
  j["predicate"] = rep.predicate;
  j["verdict"] = to_string(rep.verdict);
  j["horizon"] = rep.horizon;
  if (!rep.witness.empty()) {
    Json w;
    for (const auto& [k, v] : rep.witness) w[k] = v;
    j["witness"] = w;
  }
  if (!rep.margin.empty()) j["margin"] = rep.margin;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

Json orbit_json(const OrbitTable& orbit) {
  Json j;
  j["precision_bits"] = static_cast<long long>(orbit.precision_bits());
  j["slope"] = {orbit.slope().lo().to_decimal(), orbit.slope().hi().to_decimal()};
  Json pts = Json::array();
  std::string syms;
  for (long long n = 0; n <= orbit.length(); ++n) {
    pts.push_back({orbit.point(n).lo().to_decimal(),
                   orbit.point(n).hi().to_decimal()});
    if (n >= 1) {
      const int s = orbit.symbol(n);
      syms.push_back(s < 0 ? '?' : (s ? '1' : '0'));
    }
  }
  j["points"] = std::move(pts);
  j["symbols"] = syms;
  return j;
}

OrbitTable orbit_from_json(const Json& j) {
  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(j.at("precision_bits").get<long long>());
  Interval slope(
      BigFloat::from_decimal(j.at("slope").at(0).get<std::string>(), prec),
      BigFloat::from_decimal(j.at("slope").at(1).get<std::string>(), prec));
  std::vector<Interval> pts;
  for (const auto& p : j.at("points"))
    pts.emplace_back(
        BigFloat::from_decimal(p.at(0).get<std::string>(), prec),
        BigFloat::from_decimal(p.at(1).get<std::string>(), prec));
  const std::string syms = j.at("symbols").get<std::string>();
  std::vector<int> symbols(pts.size(), -1);
  for (size_t i = 0; i < syms.size() && i + 1 < symbols.size(); ++i)
    symbols[i + 1] = syms[i] == '?' ? -1 : (syms[i] == '1' ? 1 : 0);
  return OrbitTable(std::move(slope), std::move(pts), std::move(symbols));
}

Json level_json(const Level& lv) {
  Json j;
  j["n"] = lv.n;
  j["beta"] = lv.beta_index;
  j["lo"] = lv.enc.lo().to_decimal();
  j["hi"] = lv.enc.hi().to_decimal();
  return j;
}

Json cover_json(const DeltaCover& cover) {
  Json j;
  j["i"] = cover.i;
  j["k_i"] = cover.k_i;
  Json pieces = Json::array();
  for (const auto& p : cover.pieces) pieces.push_back(level_json(p));
  j["pieces"] = std::move(pieces);
  return j;
}

Json certificate_json(const Certificate& cert, const std::string& generated_at) {
  Json j;
  j["toolkit"] = {{"name", "kneadlab"}, {"version", "0.1.0"}};
  if (!generated_at.empty()) j["generated_at"] = generated_at;
  j["map"] = cert.map_description;
  j["route"] = cert.route;
  j["parameters"] = {{"i_max", cert.i_max},
                     {"horizon", cert.horizon},
                     {"depth", cert.depth},
                     {"precision_bits", cert.precision_bits}};
  if (!cert.slope_lo.empty())
    j["slope"] = {{"lo", cert.slope_lo},
                  {"hi", cert.slope_hi},
                  {"verified_symbols", cert.slope_verified_symbols}};
  Json checks = Json::array();
  for (const auto& rec : cert.checks) {
    Json c = check_report_json(rec.report);
    c["name"] = rec.name;
    c["gating"] = rec.gating;
    // keep name first for readability
    Json ordered;
    ordered["name"] = c["name"];
    ordered["gating"] = c["gating"];
    for (auto& [k, v] : c.items())
      if (k != "name" && k != "gating") ordered[k] = v;
    checks.push_back(std::move(ordered));
  }
  j["checks"] = std::move(checks);
  j["overall"] = to_string(cert.overall);
  return j;
}

std::string verdict_exit_note(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::HorizonLimited: return "horizon_limited";
  }
  return "?";
}

}  // namespace kneadlab
