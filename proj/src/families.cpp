#include "kneadlab/families.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>

#include "kneadlab/checks.hpp"
#include "kneadlab/number_system.hpp"

#include "json.hpp"

namespace kneadlab {

namespace {

constexpr long long kExample1DefaultK = 12;
constexpr long long kExample1DefaultStart = 20;
constexpr long long kExample1DefaultStep = 11;

bool section5_prefix_ok(long long k1, const std::vector<long long>& prefix) {
  const long long k2 = k1 + 1;
  try {
    KneadingMap m(prefix, Section5Tail{k1}, 4 * (k2 + 2) + 64);
    if (!check_admissible(m, k2 + 2).holds()) return false;
    if (!check_strong_admissible(m, k2 + 2, k2 + 1).holds()) return false;
  } catch (const Error&) {
    return false;
  }
  return true;
}

// Lexicographic DFS over prefix tables; `partial_ok` prunes on partial
// assignments, `accept` sees complete candidates.
template <typename Accept, typename PartialOk>
std::optional<std::vector<long long>> lex_smallest_prefix(long long size,
                                                          Accept accept,
                                                          PartialOk partial_ok) {
  std::vector<long long> cur;
  std::function<bool()> go = [&]() -> bool {
    if (static_cast<long long>(cur.size()) == size) return accept(cur);
    const long long k = static_cast<long long>(cur.size()) + 1;
    for (long long v = 0; v < k; ++v) {
      cur.push_back(v);
      if (partial_ok(cur) && go()) return true;
      cur.pop_back();
    }
    return false;
  };
  if (go()) return cur;
  return std::nullopt;
}

// Necessary carry-separation condition on a prefix fragment: equal values at
// s+1 and s~+1 force distinct chain successors. Chains stay inside the
// assigned region, so this is exact on the fragment.
bool stop_carry_fragment_ok(const std::vector<long long>& table) {
  const long long n = static_cast<long long>(table.size());
  auto value = [&](long long k) { return k <= 0 ? 0 : table[static_cast<size_t>(k - 1)]; };
  auto chain = [&](long long s) {
    std::vector<long long> c;
    for (long long v = s; v >= 1; v = value(v)) c.push_back(v);
    return c;
  };
  for (long long s = 1; s + 1 <= n; ++s) {
    for (long long t = s + 1; t + 1 <= n; ++t) {
      if (value(s + 1) != value(t + 1)) continue;
      const auto ca = chain(s), cb = chain(t);
      for (long long a : ca)
        for (long long b : cb)
          if (a != b && value(a) == value(b)) return false;
    }
  }
  return true;
}

std::map<std::string, std::vector<long long>>& config_prefixes() {
  static std::map<std::string, std::vector<long long>> cache;
  static std::once_flag once;
  std::call_once(once, []() {
    const char* path = std::getenv("KNEADLAB_CONFIG");
    if (!path) return;
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json j;
    in >> j;
    for (auto& [key, val] : j.value("prefixes", nlohmann::json::object()).items())
      cache[key] = val.get<std::vector<long long>>();
  });
  return cache;
}

std::optional<std::vector<long long>> configured_prefix(const std::string& key) {
  auto& c = config_prefixes();
  auto it = c.find(key);
  if (it == c.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::vector<long long> default_section5_prefix(long long k1) {
  if (auto p = configured_prefix("section5:k1=" + std::to_string(k1))) return *p;
  auto found = lex_smallest_prefix(
      k1 + 1,
      [&](const std::vector<long long>& p) { return section5_prefix_ok(k1, p); },
      [](const std::vector<long long>&) { return true; });
  if (!found)
    throw Error(ErrorCode::InvalidPrefix,
                "no admissible section5 prefix exists for k1=" +
                    std::to_string(k1));
  return *found;
}

KneadingMap section5_map(long long k1, std::optional<std::vector<long long>> prefix,
                         long long horizon) {
  if (k1 < 2) throw Error(ErrorCode::BadInput, "section5 requires k1 >= 2");
  std::vector<long long> p = prefix ? *prefix : default_section5_prefix(k1);
  if (!section5_prefix_ok(k1, p)) {
    // Identify the violated predicate for the error message.
    KneadingMap m(p, Section5Tail{k1}, 4 * (k1 + 3) + 64);
    const long long k2 = k1 + 1;
    auto adm = check_admissible(m, k2 + 2);
    if (!adm.holds())
      throw Error(ErrorCode::InvalidPrefix,
                  "prefix violates admissibility at k=" + adm.witness["k"]);
    auto strong = check_strong_admissible(m, k2 + 2, k2 + 1);
    throw Error(ErrorCode::InvalidPrefix,
                "prefix violates the strict inequality at k=" +
                    strong.witness["k"]);
  }
  return KneadingMap(std::move(p), Section5Tail{k1}, horizon);
}

std::vector<long long> default_example1_prefix(long long threshold,
                                               long long ks_start,
                                               long long ks_step) {
  const std::string key = "example1:K=" + std::to_string(threshold) + ",ks=" +
                          std::to_string(ks_start) + "+" +
                          std::to_string(ks_step);
  if (auto p = configured_prefix(key)) return *p;
  const long long vh = threshold + 28;  // validation horizon past two zones
  auto bundle_ok = [&](const std::vector<long long>& p) {
    try {
      KneadingMap m(p, Example1Tail{threshold, ks_start, ks_step}, 8 * vh + 64);
      if (!check_admissible(m, vh).holds()) return false;
      if (!check_strong_admissible(m, vh, threshold + 10).holds()) return false;
      if (!check_stop_carry(m, vh).holds()) return false;
      if (!check_invertibility_hypotheses(m, vh).holds()) return false;
    } catch (const Error&) {
      return false;
    }
    return true;
  };
  auto found = lex_smallest_prefix(threshold, bundle_ok, stop_carry_fragment_ok);
  if (!found)
    throw Error(ErrorCode::InvalidPrefix,
                "no prefix satisfies the hypothesis bundle for " + key);
  return *found;
}

KneadingMap parse_family(const std::string& desc, long long horizon) {
  auto starts = [&](const char* p) { return desc.rfind(p, 0) == 0; };
  if (starts("prefix=[")) return KneadingMap::parse(desc, horizon);
  if (starts("const:"))
    return KneadingMap({}, ConstantTail{std::stoll(desc.substr(6))}, horizon);
  if (desc == "double") return KneadingMap({}, LinearOffsetTail{1}, horizon);
  if (starts("offset:")) {
    const long long d = std::stoll(desc.substr(7));
    if (d < 1)
      throw Error(ErrorCode::InvalidKneadingMap,
                  "offset:" + std::to_string(d) + " violates Q(k) < k");
    return KneadingMap({}, LinearOffsetTail{d}, horizon);
  }
  if (starts("table:[")) {
    const auto close = desc.find(']');
    if (close == std::string::npos)
      throw Error(ErrorCode::BadInput, "unterminated table: " + desc);
    return KneadingMap::parse("prefix=[" + desc.substr(7, close - 7) +
                                  "];tail=const:0",
                              horizon);
  }
  if (starts("example1")) {
    long long K = kExample1DefaultK;
    long long start = kExample1DefaultStart, step = kExample1DefaultStep;
    if (desc.size() > 8 && desc[8] == ':') {
      const std::string body = desc.substr(9);
      const auto kpos = body.find("K=");
      if (kpos != std::string::npos) K = std::stoll(body.substr(kpos + 2));
      const auto kspos = body.find("ks=");
      if (kspos != std::string::npos) {
        const auto plus = body.find('+', kspos);
        if (plus == std::string::npos)
          throw Error(ErrorCode::BadInput, "example1 needs ks=START+STEP");
        start = std::stoll(body.substr(kspos + 3));
        step = std::stoll(body.substr(plus + 1));
      }
    }
    auto prefix = default_example1_prefix(K, start, step);
    return KneadingMap(std::move(prefix), Example1Tail{K, start, step}, horizon);
  }
  if (starts("section5:k1=")) {
    const std::string body = desc.substr(12);
    const auto comma = body.find(",prefix=[");
    const long long k1 = std::stoll(body);
    std::optional<std::vector<long long>> prefix;
    if (comma != std::string::npos) {
      const auto open = body.find('[', comma);
      const auto close = body.find(']', comma);
      if (close == std::string::npos)
        throw Error(ErrorCode::BadInput, "unterminated prefix: " + desc);
      std::vector<long long> p;
      std::string cur;
      for (char ch : body.substr(open + 1, close - open - 1) + ",") {
        if (ch == ',') {
          if (!cur.empty()) p.push_back(std::stoll(cur));
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      prefix = std::move(p);
    }
    return section5_map(k1, prefix, horizon);
  }
  throw Error(ErrorCode::BadInput, "unknown family: " + desc);
}

FamilyDefaults family_defaults(const KneadingMap& q) {
  FamilyDefaults d;
  if (q.is_section5()) {
    const long long k2 = std::get<Section5Tail>(q.tail()).k1 + 1;
    d.strong_from_k = k2 + 1;
    d.strong_horizon = k2 + 2;
    d.cover_construction = true;
    return d;
  }
  if (q.is_example1()) {
    d.strong_from_k = std::get<Example1Tail>(q.tail()).threshold + 10;
    return d;
  }
  if (auto* o = std::get_if<LinearOffsetTail>(&q.tail())) {
    d.strong_from_k = 2 * o->offset + 2;
    return d;
  }
  return d;  // constant / table maps: from_k = 1 (fails honestly)
}

}  // namespace kneadlab
