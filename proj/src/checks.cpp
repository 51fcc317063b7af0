#include "kneadlab/checks.hpp"

#include <algorithm>
#include <vector>

namespace kneadlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::HorizonLimited: return "horizon_limited";
  }
  return "?";
}

CheckReport CheckReport::pass(std::string predicate, long long horizon,
                              std::string note) {
  CheckReport r;
  r.predicate = std::move(predicate);
  r.verdict = Verdict::Holds;
  r.horizon = horizon;
  r.note = std::move(note);
  return r;
}

CheckReport CheckReport::fail(std::string predicate, long long horizon,
                              std::map<std::string, std::string> witness,
                              std::string note) {
  CheckReport r;
  r.predicate = std::move(predicate);
  r.verdict = Verdict::Fails;
  r.horizon = horizon;
  r.witness = std::move(witness);
  r.note = std::move(note);
  return r;
}

CheckReport CheckReport::limited(std::string predicate, long long horizon,
                                 std::string note) {
  CheckReport r;
  r.predicate = std::move(predicate);
  r.verdict = Verdict::HorizonLimited;
  r.horizon = horizon;
  r.note = std::move(note);
  return r;
}

namespace {

// Decides the tail of the comparison {Q(a+j)} vs {Q(b+j)} (a > b) after an
// all-equal window: +1 eventually strictly greater, 0 equal forever,
// -1 undecidable here.
int tail_order_after_tie(const KneadingMap& q, long long a, long long b,
                         long long window) {
  const long long pe = static_cast<long long>(q.prefix().size());
  if (std::holds_alternative<ConstantTail>(q.tail())) {
    // Once both arguments are past the prefix the values agree forever, so a
    // tie over a window covering the prefix is an exact tie.
    return (b + window > pe) ? 0 : -1;
  }
  if (std::holds_alternative<LinearOffsetTail>(q.tail())) {
    const long long d = std::get<LinearOffsetTail>(q.tail()).offset;
    // Values max(0, x-d) with a > b: the first j where Q(a+j) turns positive
    // gives a strict >. The window must cover the prefix region.
    if (b + window <= std::max(pe, d)) return -1;
    return 1;
  }
  if (q.is_example1()) {
    const auto& t = std::get<Example1Tail>(q.tail());
    if (b + window <= std::max(pe, t.threshold + 5)) return -1;
    // Both argument streams follow x-2 with deviations in {0,1,2} that repeat
    // with period ks_step; scan one full period for the first difference.
    for (long long j = window + 1; j <= window + 2 * t.ks_step + 10; ++j) {
      const long long va = q.q(a + j), vb = q.q(b + j);
      if (va != vb) return va > vb ? 1 : -2;  // -2: strictly smaller
    }
    return 0;
  }
  return -1;  // section5 and friends: undecided beyond the window
}

}  // namespace

CheckReport check_admissible(const KneadingMap& q, long long horizon) {
  const char* name = "admissible";
  if (horizon < 1) throw Error(ErrorCode::BadInput, "horizon must be >= 1");
  bool limited = false;
  long long limited_k = 0;
  for (long long k = 1; k <= horizon; ++k) {
    const long long kk = q.q_iter(k, 2);
    if (kk == k) continue;  // identical streams
    const long long a = k, b = kk;
    long long j = 1;
    int decided = 0;
    for (; j <= horizon; ++j) {
      const long long va = q.q(a + j), vb = q.q(b + j);
      if (va != vb) {
        decided = va > vb ? 1 : -1;
        break;
      }
    }
    if (decided == -1)
      return CheckReport::fail(
          name, horizon,
          {{"k", std::to_string(k)}, {"j", std::to_string(j)}},
          "lexicographic order violated");
    if (decided == 1) continue;
    // Window exhausted with equality.
    const int tail = tail_order_after_tie(q, a, b, horizon);
    if (tail == -2)
      return CheckReport::fail(
          name, horizon,
          {{"k", std::to_string(k)}, {"j", std::to_string(horizon + 1)}},
          "lexicographic order violated past the window");
    if (tail < 0) {
      limited = true;
      if (!limited_k) limited_k = k;
    }
  }
  if (limited)
    return CheckReport::limited(
        name, horizon,
        "tie not resolvable within the window, first at k=" +
            std::to_string(limited_k));
  return CheckReport::pass(name, horizon);
}

CheckReport check_strong_admissible(const KneadingMap& q, long long horizon,
                                    long long from_k) {
  const char* name = "strong_admissible";
  if (from_k < 1) throw Error(ErrorCode::BadInput, "from_k must be >= 1");
  for (long long k = from_k; k <= horizon; ++k) {
    const long long lhs = q.q(k + 1);
    const long long rhs = q.q(q.q_iter(k, 2) + 1) + 1;
    if (!(lhs > rhs))
      return CheckReport::fail(
          name, horizon,
          {{"k", std::to_string(k)},
           {"lhs", std::to_string(lhs)},
           {"rhs", std::to_string(rhs)}},
          "Q(k+1) > Q(Q^2(k)+1) + 1 violated");
  }
  return CheckReport::pass(name, horizon,
                           "checked k in [" + std::to_string(from_k) + ", " +
                               std::to_string(horizon) + "]");
}

CheckReport check_stop_carry(const KneadingMap& q, long long horizon) {
  const char* name = "stop_carry";
  if (horizon < 2) throw Error(ErrorCode::BadInput, "horizon must be >= 2");
  // Descending chains s, Q(s), Q^2(s), ... restricted to values >= 1.
  auto chain = [&](long long s) {
    std::vector<long long> c;
    for (long long v = s; v >= 1; v = q.q(v)) c.push_back(v);
    return c;
  };
  for (long long s = 1; s <= horizon; ++s) {
    for (long long t = s + 1; t <= horizon; ++t) {
      if (q.q(s + 1) != q.q(t + 1)) continue;
      const auto ca = chain(s), cb = chain(t);
      for (size_t n = 0; n < ca.size(); ++n) {
        for (size_t m = 0; m < cb.size(); ++m) {
          if (ca[n] == cb[m]) continue;
          if (q.q(ca[n]) == q.q(cb[m]))
            return CheckReport::fail(
                name, horizon,
                {{"s", std::to_string(s)},
                 {"s_tilde", std::to_string(t)},
                 {"n", std::to_string(n)},
                 {"n_tilde", std::to_string(m)}},
                "distinct chain values merged after one step");
        }
      }
    }
  }
  return CheckReport::pass(name, horizon);
}

CheckReport is_renormalizable_at(const KneadingMap& q, long long k,
                                 long long horizon) {
  const char* name = "renormalizable_at";
  if (k < 1) throw Error(ErrorCode::BadInput, "k must be >= 1");
  if (q.q(k + 1) != k)
    return CheckReport::fail(name, horizon,
                             {{"k", std::to_string(k)},
                              {"j", "1"},
                              {"value", std::to_string(q.q(k + 1))}},
                             "Q(k+1) != k");
  if (q.is_section5()) horizon = std::min(horizon, q.horizon() - k);
  for (long long j = 1; j <= horizon; ++j) {
    if (q.q(k + j) < k)
      return CheckReport::fail(name, horizon,
                               {{"k", std::to_string(k)},
                                {"j", std::to_string(j)},
                                {"value", std::to_string(q.q(k + j))}},
                               "Q(k+j) < k");
  }
  // Decide the tail quantifier symbolically where the rule allows it.
  const long long pe = static_cast<long long>(q.prefix().size());
  if (std::holds_alternative<ConstantTail>(q.tail())) {
    const long long c = std::get<ConstantTail>(q.tail()).value;
    if (k + horizon > pe && c < k)
      return CheckReport::fail(name, horizon,
                               {{"k", std::to_string(k)}, {"j", "tail"}},
                               "constant tail drops below k");
    if (k + horizon > pe) return CheckReport::pass(name, horizon);
    return CheckReport::limited(name, horizon, "window inside prefix");
  }
  if (std::holds_alternative<LinearOffsetTail>(q.tail())) {
    const long long d = std::get<LinearOffsetTail>(q.tail()).offset;
    if (k + horizon <= std::max(pe, d + k))
      return CheckReport::limited(name, horizon, "window too short");
    // Beyond the window Q(k+j) = k+j-d >= k for all larger j once it holds at
    // one of them.
    return d <= horizon
               ? CheckReport::pass(name, horizon)
               : CheckReport::limited(name, horizon, "window too short");
  }
  if (q.is_example1()) {
    // Q(x) >= x-4 beyond the threshold, so Q(k+j) >= k for all j > 4 once the
    // window clears the threshold.
    const long long thr = std::get<Example1Tail>(q.tail()).threshold;
    if (k + horizon > thr + 5 && horizon >= 5)
      return CheckReport::pass(name, horizon);
    return CheckReport::limited(name, horizon, "window too short");
  }
  // Section5: the replayed prefix values recur in every block, so the window
  // verdict is decisive once it covers one full block.
  return CheckReport::pass(name, horizon);
}

}  // namespace kneadlab
