#include "kneadlab/kneading_map.hpp"

#include <algorithm>
#include <sstream>

namespace kneadlab {

namespace {

bool is_special(const Example1Tail& t, long long x) {
  if (x < t.ks_start) return false;
  return (x - t.ks_start) % t.ks_step == 0;
}

}  // namespace

KneadingMap::KneadingMap(std::vector<long long> prefix, Tail tail, long long horizon)
    : prefix_(std::move(prefix)), tail_(std::move(tail)), horizon_(horizon) {
  if (horizon_ < 8) horizon_ = 8;
  validate();
  if (auto* s5 = std::get_if<Section5Tail>(&tail_)) {
    const long long k1 = s5->k1;
    if (k1 < 2)
      throw Error(ErrorCode::InvalidKneadingMap, "section5 requires k1 >= 2");
    if (static_cast<long long>(prefix_.size()) != k1 + 1)
      throw Error(ErrorCode::InvalidPrefix,
                  "section5 prefix must supply Q(1..k1+1)");
    // Block indices: k2 = k1+1, k_i = 2k_{i-1} - k_{i-2} + 1.
    section5_blocks_ = {k1, k1 + 1};
    while (section5_blocks_.back() <= horizon_ + 2) {
      const size_t n = section5_blocks_.size();
      section5_blocks_.push_back(2 * section5_blocks_[n - 1] -
                                 section5_blocks_[n - 2] + 1);
    }
    section5_table_.assign(static_cast<size_t>(horizon_) + 1, 0);
    for (long long k = 1; k <= static_cast<long long>(prefix_.size()); ++k)
      section5_table_[static_cast<size_t>(k)] = prefix_[static_cast<size_t>(k - 1)];
    // Fill block i (i >= 3, 1-based position in section5_blocks_ is i-1):
    // Q(k_i) = k_i - 1, then Q(k_i + j) = Q(k_{i-1} + j - 1) for
    // 1 <= j < k_{i+1} - k_i. The i = 2 block contributes only the copied
    // positions after k_2.
    for (size_t bi = 1; bi + 1 < section5_blocks_.size(); ++bi) {
      const long long ki = section5_blocks_[bi];
      const long long knext = section5_blocks_[bi + 1];
      const long long kprev = section5_blocks_[bi - 1];
      if (bi >= 2 && ki <= horizon_)
        section5_table_[static_cast<size_t>(ki)] = ki - 1;
      for (long long j = 1; j < knext - ki; ++j) {
        const long long pos = ki + j;
        if (pos > horizon_) break;
        section5_table_[static_cast<size_t>(pos)] =
            section5_table_[static_cast<size_t>(kprev + j - 1)];
      }
    }
  }
}

void KneadingMap::validate() const {
  for (size_t i = 0; i < prefix_.size(); ++i) {
    const long long k = static_cast<long long>(i) + 1;
    if (prefix_[i] < 0 || prefix_[i] >= k)
      throw Error(ErrorCode::InvalidKneadingMap,
                  "prefix violates Q(k) < k at k=" + std::to_string(k));
  }
  if (auto* c = std::get_if<ConstantTail>(&tail_)) {
    if (c->value < 0 ||
        c->value > static_cast<long long>(prefix_.size()))
      throw Error(ErrorCode::InvalidKneadingMap,
                  "constant tail value violates Q(k) < k");
  } else if (auto* o = std::get_if<LinearOffsetTail>(&tail_)) {
    if (o->offset < 1)
      throw Error(ErrorCode::InvalidKneadingMap,
                  "offset tail requires offset >= 1 (Q(k) < k)");
  } else if (auto* e = std::get_if<Example1Tail>(&tail_)) {
    if (e->ks_step <= 10)
      throw Error(ErrorCode::InvalidKneadingMap,
                  "example1 special indices need gaps > 10");
    if (e->ks_start <= e->threshold)
      throw Error(ErrorCode::InvalidKneadingMap,
                  "example1 special indices must start past the threshold");
    if (static_cast<long long>(prefix_.size()) < e->threshold)
      throw Error(ErrorCode::InvalidPrefix,
                  "example1 prefix must supply Q(1..threshold)");
  }
}

long long KneadingMap::tail_value(long long k) const {
  if (auto* c = std::get_if<ConstantTail>(&tail_)) return c->value;
  if (auto* o = std::get_if<LinearOffsetTail>(&tail_))
    return std::max(0LL, k - o->offset);
  if (auto* e = std::get_if<Example1Tail>(&tail_)) {
    if (k > e->threshold) {
      if (is_special(*e, k - 4)) return k - 4;
      if (is_special(*e, k - 5)) return k - 3;
    }
    return k - 2;
  }
  throw Error(ErrorCode::IndexOutOfRange,
              "section5 query beyond materialized horizon");
}

long long KneadingMap::q(long long k) const {
  if (k <= 0) return 0;
  if (k <= static_cast<long long>(prefix_.size()))
    return prefix_[static_cast<size_t>(k - 1)];
  long long v;
  if (is_section5()) {
    if (k > horizon_)
      throw Error(ErrorCode::IndexOutOfRange,
                  "section5 query beyond horizon " + std::to_string(horizon_));
    v = section5_table_[static_cast<size_t>(k)];
  } else {
    v = tail_value(k);
  }
  if (v < 0 || v >= k)
    throw Error(ErrorCode::InvalidKneadingMap,
                "Q(k) < k violated at k=" + std::to_string(k));
  return v;
}

long long KneadingMap::q_iter(long long k, int times) const {
  long long v = k;
  for (int i = 0; i < times; ++i) v = q(v);
  return v;
}

bool KneadingMap::q_tends_to_infinity() const {
  if (std::holds_alternative<LinearOffsetTail>(tail_)) return true;
  if (std::holds_alternative<Example1Tail>(tail_)) return true;
  // Constant tails are bounded; section5 maps replay small prefix values in
  // every block.
  return false;
}

std::vector<long long> KneadingMap::special_indices(int count) const {
  std::vector<long long> out;
  if (auto* e = std::get_if<Example1Tail>(&tail_)) {
    for (int i = 0; i < count; ++i) out.push_back(e->ks_start + e->ks_step * i);
    return out;
  }
  if (is_section5()) {
    for (int i = 0; i < count && i < static_cast<int>(section5_blocks_.size()); ++i)
      out.push_back(section5_blocks_[static_cast<size_t>(i)]);
    if (static_cast<int>(out.size()) < count)
      throw Error(ErrorCode::IndexOutOfRange,
                  "section5 horizon too small for requested block count");
    return out;
  }
  throw Error(ErrorCode::BadInput, "map has no distinguished index sequence");
}

std::vector<long long> KneadingMap::preimages_in_range(long long value,
                                                       long long lo,
                                                       long long hi) const {
  std::vector<long long> out;
  const long long top = is_section5() ? std::min(hi, horizon_) : hi;
  for (long long x = std::max(1LL, lo); x <= top; ++x)
    if (q(x) == value) out.push_back(x);
  return out;
}

bool KneadingMap::has_preimage_beyond(long long value, long long bound) const {
  const long long pe = static_cast<long long>(prefix_.size());
  for (long long x = bound + 1; x <= pe; ++x)
    if (q(x) == value) return true;
  if (auto* c = std::get_if<ConstantTail>(&tail_)) {
    // Beyond the prefix every position has value c; preimages of anything
    // else are confined to the prefix.
    return c->value == value;
  }
  if (std::holds_alternative<LinearOffsetTail>(tail_)) {
    const long long d = std::get<LinearOffsetTail>(tail_).offset;
    if (value == 0) return std::max(bound, pe) < d;  // Q(x) = 0 for x <= d
    const long long x = value + d;
    return x > bound && x > pe;
  }
  if (auto* e = std::get_if<Example1Tail>(&tail_)) {
    // Tail preimage candidates are value+2, value+3, value+4; if none of them
    // works above the bound there are none at all.
    for (long long x = value + 2; x <= value + 4; ++x)
      if (x > bound && x > pe && x > e->threshold && tail_value(x) == value)
        return true;
    return false;
  }
  // Section5: def1 values k_i - 1 and the two replayed prefix values recur in
  // every later block; everything else dies with the table.
  if (is_section5()) {
    const long long k1 = std::get<Section5Tail>(tail_).k1;
    if (value == q(k1) || value == q(k1 + 1)) return true;
    for (size_t bi = 2; bi < section5_blocks_.size(); ++bi)
      if (value == section5_blocks_[bi] - 1) return true;
    return false;
  }
  return false;
}

std::string KneadingMap::serialize() const {
  std::ostringstream os;
  os << "prefix=[";
  for (size_t i = 0; i < prefix_.size(); ++i) {
    if (i) os << ",";
    os << prefix_[i];
  }
  os << "];tail=";
  if (auto* c = std::get_if<ConstantTail>(&tail_))
    os << "const:" << c->value;
  else if (auto* o = std::get_if<LinearOffsetTail>(&tail_))
    os << "offset:" << o->offset;
  else if (auto* e = std::get_if<Example1Tail>(&tail_))
    os << "example1:K=" << e->threshold << ",ks=" << e->ks_start << "+"
       << e->ks_step;
  else if (auto* s = std::get_if<Section5Tail>(&tail_))
    os << "section5:k1=" << s->k1;
  return os.str();
}

namespace {

std::vector<long long> parse_int_list(const std::string& body) {
  std::vector<long long> out;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::stoll(cur));
  return out;
}

}  // namespace

KneadingMap KneadingMap::parse(const std::string& text, long long horizon) {
  const auto semi = text.find(";tail=");
  if (text.rfind("prefix=[", 0) != 0 || semi == std::string::npos)
    throw Error(ErrorCode::BadInput, "expected prefix=[...];tail=...: " + text);
  const auto close = text.find(']');
  if (close == std::string::npos || close > semi)
    throw Error(ErrorCode::BadInput, "unterminated prefix list: " + text);
  std::vector<long long> prefix =
      parse_int_list(text.substr(8, close - 8));
  const std::string tail = text.substr(semi + 6);
  auto starts = [&](const char* p) { return tail.rfind(p, 0) == 0; };
  if (starts("const:"))
    return KneadingMap(std::move(prefix), ConstantTail{std::stoll(tail.substr(6))},
                       horizon);
  if (starts("offset:"))
    return KneadingMap(std::move(prefix),
                       LinearOffsetTail{std::stoll(tail.substr(7))}, horizon);
  if (starts("example1:")) {
    Example1Tail t;
    const std::string body = tail.substr(9);
    const auto kpos = body.find("K=");
    const auto kspos = body.find("ks=");
    const auto plus = body.find('+', kspos);
    if (kpos == std::string::npos || kspos == std::string::npos ||
        plus == std::string::npos)
      throw Error(ErrorCode::BadInput, "example1 tail needs K=..,ks=a+b");
    t.threshold = std::stoll(body.substr(kpos + 2));
    t.ks_start = std::stoll(body.substr(kspos + 3));
    t.ks_step = std::stoll(body.substr(plus + 1));
    return KneadingMap(std::move(prefix), t, horizon);
  }
  if (starts("section5:k1="))
    return KneadingMap(std::move(prefix),
                       Section5Tail{std::stoll(tail.substr(12))}, horizon);
  throw Error(ErrorCode::BadInput, "unknown tail rule: " + tail);
}

}  // namespace kneadlab
