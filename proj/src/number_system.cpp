#include "kneadlab/number_system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kneadlab {

void ECode::validate(const KneadingMap& q) const {
  for (size_t j = 1; j < indices.size(); ++j)
    if (indices[j] <= indices[j - 1])
      throw Error(ErrorCode::BadInput, "code indices must increase strictly");
  if (!indices.empty() && indices.front() < 0)
    throw Error(ErrorCode::BadInput, "negative code index");
  for (size_t j = 1; j < indices.size(); ++j) {
    const long long i = indices[j];
    const long long lower = q.q(i + 1);
    if (indices[j - 1] >= lower)
      throw Error(ErrorCode::BadInput,
                  "membership rule violated between indices " +
                      std::to_string(indices[j - 1]) + " and " +
                      std::to_string(i));
  }
  if (kind == Kind::Truncated) {
    if (depth <= 0) throw Error(ErrorCode::BadInput, "truncated code needs depth > 0");
    if (!indices.empty() && indices.back() >= depth)
      throw Error(ErrorCode::BadInput, "code index beyond its depth window");
  }
}

std::string ECode::to_string() const {
  std::ostringstream os;
  for (size_t j = 0; j < indices.size(); ++j) {
    if (j) os << ",";
    os << indices[j];
  }
  if (kind == Kind::Truncated) os << "@" << depth;
  return os.str();
}

ECode ECode::parse(const std::string& text) {
  ECode e;
  std::string body = text;
  const auto at = text.find('@');
  if (at != std::string::npos) {
    e.kind = Kind::Truncated;
    e.depth = std::stoll(text.substr(at + 1));
    body = text.substr(0, at);
  }
  std::string cur;
  for (char ch : body + ",") {
    if (ch == ',') {
      if (!cur.empty()) e.indices.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  return e;
}

ECode encode(const mpz_class& n, const CuttingTimes& s) {
  if (n < 0) throw Error(ErrorCode::BadInput, "encode requires n >= 0");
  if (n > s.s.back())
    throw Error(ErrorCode::InsufficientCuttingTimes,
                "n exceeds the largest available cutting time");
  ECode e;
  mpz_class rest = n;
  while (rest > 0) {
    const long long i = s.index_below(rest + 1);  // max{j : S_j <= rest}
    e.indices.push_back(i);
    rest -= s.at(i);
  }
  std::reverse(e.indices.begin(), e.indices.end());
  return e;
}

mpz_class decode(const ECode& e, const CuttingTimes& s) {
  if (e.kind != ECode::Kind::Finite)
    throw Error(ErrorCode::NotFinite, "decode requires a finite code");
  mpz_class n = 0;
  for (long long i : e.indices) n += s.at(i);
  return n;
}

std::optional<ECode> add_one(const ECode& e, const KneadingMap& q) {
  e.validate(q);
  std::vector<long long> set(e.indices);
  long long carry = 0;
  // The carry invariant: no set element lies below the carry position, and
  // whenever the carry meets resistance the exact merge identity applies
  // (S_m + S_i = S_{i+1} exactly when Q(i+1) = m).
  for (;;) {
    if (e.kind == ECode::Kind::Truncated && carry >= e.depth) return std::nullopt;
    auto it = std::lower_bound(set.begin(), set.end(), carry);
    if (it != set.end() && *it == carry) {
      set.erase(it);
      carry += 1;
      continue;
    }
    if (it != set.end()) {
      const long long next = *it;
      const long long lower = q.q(next + 1);
      if (lower <= carry) {
        if (lower != carry)
          throw Error(ErrorCode::BadInput,
                      "carry met a non-canonical configuration");
        set.erase(it);
        carry = next + 1;
        continue;
      }
    }
    // Placing the carry here is only sound for a truncated code if no
    // completion can interact with it: a tail index x-1 >= depth with
    // Q(x) = carry would consume it and keep carrying. Window indices above
    // the carry shield it (any compatible tail must clear them).
    if (e.kind == ECode::Kind::Truncated) {
      const bool shielded = it != set.end();
      if (!shielded && q.has_preimage_beyond(carry, e.depth))
        return std::nullopt;
    }
    set.insert(std::lower_bound(set.begin(), set.end(), carry), carry);
    break;
  }
  ECode out;
  out.indices = std::move(set);
  out.kind = e.kind;
  out.depth = e.depth;
  if (out.kind == ECode::Kind::Truncated && !out.indices.empty() &&
      out.indices.back() >= out.depth)
    return std::nullopt;
  return out;
}

ECode predecessor(const ECode& e, const KneadingMap& q, const CuttingTimes& s) {
  e.validate(q);
  if (e.is_zero())
    throw Error(ErrorCode::NoPredecessor, "the zero code has no predecessor");
  if (e.indices.empty()) {
    // Truncated zero code: its preimages are the carry chains; only a unique
    // one can be returned.
    auto chains = zero_preimages(q, e.depth);
    if (chains.size() != 1)
      throw Error(ErrorCode::NoPredecessor,
                  "zero code has " + std::to_string(chains.size()) +
                      " candidate preimage chains at this depth");
    ECode out;
    out.indices = chains.front().elements;
    out.kind = ECode::Kind::Truncated;
    out.depth = e.depth;
    return out;
  }
  const long long q0 = e.indices.front();
  ECode out;
  if (q0 == 0) {
    out.indices.assign(e.indices.begin() + 1, e.indices.end());
  } else {
    // n - 1 = (S_{q0} - 1) + rest; the small part re-encodes greedily and its
    // top index stays below q0, so the concatenation is canonical.
    ECode low = encode(s.at(q0) - 1, s);
    out.indices = low.indices;
    out.indices.insert(out.indices.end(), e.indices.begin() + 1,
                       e.indices.end());
  }
  out.kind = e.kind;
  out.depth = e.depth;
  out.validate(q);
  return out;
}

mpz_class beta(const mpz_class& n, const CuttingTimes& s) {
  if (n < 1) throw Error(ErrorCode::BadInput, "beta requires n >= 1");
  if (n == 1) return 0;
  const long long k = s.block_of(n);  // n in (S_{k-1}, S_k]
  return n - s.at(k - 1);
}

std::vector<mpz_class> nest_indices(const ECode& e, int count,
                                    const CuttingTimes& s) {
  if (count < 1) throw Error(ErrorCode::BadInput, "count must be >= 1");
  if (static_cast<size_t>(count) > e.indices.size())
    throw Error(ErrorCode::NotEnoughIndices,
                "code has fewer nonzero indices than requested");
  std::vector<mpz_class> b;
  mpz_class acc = 0;
  for (int i = 0; i < count; ++i) {
    acc += s.at(e.indices[static_cast<size_t>(i)]);
    b.push_back(acc);
  }
  return b;
}

namespace {

// Whether some continuation of the forced relation starting from value
// `last` survives to `limit` (or provably continues past it). Bounded DFS
// over the solutions of Q(x+1) = v+1 in (v, limit]; at the edge the tail
// rule decides existence.
bool chain_survives_to(const KneadingMap& q, long long last, long long limit) {
  std::vector<long long> stack = {last};
  while (!stack.empty()) {
    const long long v = stack.back();
    stack.pop_back();
    if (v >= limit) return true;
    const long long target = v + 1;
    bool any = false;
    for (long long x : q.preimages_in_range(target, v + 2, limit + 1)) {
      any = true;
      stack.push_back(x - 1);
    }
    if (!any && q.has_preimage_beyond(target, limit + 1)) return true;
  }
  return false;
}

}  // namespace

std::vector<PreimageChain> zero_preimages(const KneadingMap& q, long long depth) {
  if (depth < 1) throw Error(ErrorCode::BadInput, "depth must be >= 1");
  // Verification margin past the window: long enough that a branch doomed by
  // the tail rule (an example1 fork dies within one special-index gap) shows
  // its death.
  long long margin = 16;
  if (q.is_example1())
    margin = 2 * std::get<Example1Tail>(q.tail()).ks_step + 12;
  std::vector<PreimageChain> alive;
  // Depth-first branching over every solution of the forced successor
  // relation Q(q_j + 1) = q_{j-1} + 1 inside the window.
  struct Frame {
    std::vector<long long> elements;
  };
  std::vector<Frame> stack;
  for (long long q0 = 0; q0 < depth; ++q0)
    if (q.q(q0 + 1) == 0) stack.push_back({{q0}});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const long long last = f.elements.back();
    const long long target = last + 1;
    std::vector<long long> nexts;
    for (long long x = last + 1; x < depth; ++x)
      if (q.q(x + 1) == target) nexts.push_back(x);
    if (nexts.empty()) {
      if (chain_survives_to(q, last, depth + margin)) {
        PreimageChain c;
        c.elements = std::move(f.elements);
        c.depth_verified = depth;
        c.may_continue = true;
        alive.push_back(std::move(c));
      }
      continue;
    }
    for (long long x : nexts) {
      Frame g = f;
      g.elements.push_back(x);
      stack.push_back(std::move(g));
    }
  }
  std::sort(alive.begin(), alive.end(),
            [](const PreimageChain& a, const PreimageChain& b) {
              return a.elements < b.elements;
            });
  return alive;
}

namespace {

// Whether only finitely many l > k satisfy Q^n(l) = k for some n, expanding
// the preimage tree of k upward; `true` only when the whole tree provably
// dies. `false` may mean genuinely infinite or merely unresolved within the
// exploration bound.
bool preimage_tree_finite(const KneadingMap& q, long long k, long long bound) {
  std::vector<long long> frontier = {k};
  std::set<long long> seen;
  while (!frontier.empty()) {
    const long long v = frontier.back();
    frontier.pop_back();
    if (!seen.insert(v).second) continue;
    if (q.has_preimage_beyond(v, bound)) return false;
    for (long long x : q.preimages_in_range(v, v + 1, bound))
      frontier.push_back(x);
  }
  return true;
}

}  // namespace

CheckReport check_invertibility_hypotheses(const KneadingMap& q,
                                           long long horizon) {
  const char* name = "invertibility_hypotheses";
  if (!q.q_tends_to_infinity())
    return CheckReport::fail(name, horizon, {{"reason", "q_bounded"}},
                             "Q(k) does not tend to infinity");
  const long long bound = 4 * horizon + 64;
  std::vector<int> finite_memo(static_cast<size_t>(horizon) + 1, -1);
  auto tree_finite = [&](long long k) {
    int& m = finite_memo[static_cast<size_t>(k)];
    if (m < 0) m = preimage_tree_finite(q, k, bound) ? 1 : 0;
    return m == 1;
  };
  // Try every candidate k_i and keep the ones whose condition holds for all
  // k in (k_i, horizon]. Candidates too close to the horizon see a vacuous
  // range and prove nothing, so they are excluded.
  const long long ki_top = horizon - 4;
  if (ki_top < 1) throw Error(ErrorCode::BadInput, "horizon too small");
  std::vector<long long> found;
  long long first_bad_k = 0, first_bad_ki = 0;
  for (long long ki = 1; ki <= ki_top; ++ki) {
    bool ok = true;
    for (long long k = ki + 1; k <= horizon; ++k) {
      if (q.q(k) >= ki) continue;
      if (tree_finite(k)) continue;
      ok = false;
      if (!first_bad_k) {
        first_bad_k = k;
        first_bad_ki = ki;
      }
      break;
    }
    if (ok) found.push_back(ki);
  }
  if (found.empty())
    return CheckReport::fail(
        name, horizon,
        {{"k_i", std::to_string(first_bad_ki)},
         {"k", std::to_string(first_bad_k)}},
        "no valid index sequence up to the horizon");
  // An infinite sequence needs arbitrarily large members; within the window we
  // ask for several candidates with one reaching the horizon region.
  if (found.size() < 2 || found.back() < horizon / 2 - 4)
    return CheckReport::limited(name, horizon,
                                "candidates stop at " +
                                    std::to_string(found.back()));
  std::ostringstream os;
  for (size_t i = 0; i < std::min<size_t>(found.size(), 8); ++i)
    os << (i ? "," : "") << found[i];
  return CheckReport::pass(name, horizon, "k_i candidates: " + os.str() +
                                              (found.size() > 8 ? ",..." : ""));
}

}  // namespace kneadlab
