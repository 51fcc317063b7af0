#include "kneadlab/kneading.hpp"

#include <algorithm>

namespace kneadlab {

const mpz_class& CuttingTimes::at(long long k) const {
  if (k < 0 || k >= static_cast<long long>(s.size()))
    throw Error(ErrorCode::InsufficientCuttingTimes,
                "cutting time index " + std::to_string(k) + " not available");
  return s[static_cast<size_t>(k)];
}

long long CuttingTimes::index_below(const mpz_class& n) const {
  // s is strictly increasing; find the last entry < n.
  auto it = std::lower_bound(s.begin(), s.end(), n);
  return static_cast<long long>(it - s.begin()) - 1;
}

long long CuttingTimes::block_of(const mpz_class& n) const {
  if (n < 1) throw Error(ErrorCode::BadInput, "block_of requires n >= 1");
  if (n > s.back())
    throw Error(ErrorCode::InsufficientCuttingTimes,
                "n exceeds the available cutting times");
  // Smallest k with S_k >= n.
  auto it = std::lower_bound(s.begin(), s.end(), n);
  return static_cast<long long>(it - s.begin());
}

CuttingTimes cutting_times(const KneadingMap& q, long long count) {
  if (count < 1) throw Error(ErrorCode::BadInput, "count must be >= 1");
  CuttingTimes out;
  out.s.reserve(static_cast<size_t>(count) + 1);
  out.s.push_back(1);
  out.s.push_back(2);
  for (long long k = 2; k <= count; ++k) {
    const long long qk = q.q(k);  // throws InvalidKneadingMap if Q(k) >= k
    out.s.push_back(out.s[static_cast<size_t>(k - 1)] +
                    out.s[static_cast<size_t>(qk)]);
  }
  return out;
}

int KneadingSequence::at(long long n) const {
  if (n < 1 || n > length())
    throw Error(ErrorCode::IndexOutOfRange,
                "kneading symbol index out of range: " + std::to_string(n));
  return symbols[static_cast<size_t>(n - 1)];
}

std::string KneadingSequence::to_string() const {
  std::string out;
  out.reserve(symbols.size());
  for (uint8_t b : symbols) out.push_back(b ? '1' : '0');
  return out;
}

KneadingSequence kneading_sequence(const KneadingMap& q, long long length) {
  if (length < 1) throw Error(ErrorCode::BadInput, "length must be >= 1");
  KneadingSequence kappa;
  kappa.symbols.reserve(static_cast<size_t>(length));
  kappa.symbols.push_back(1);  // kappa_1 = 1
  // Grow block by block: append the prefix of length S_{Q(k)} with the last
  // symbol flipped, until the requested length is covered. The appended block
  // may be truncated at the requested length; the flip position then lies
  // beyond it and is dropped with the rest.
  std::vector<mpz_class> s = {1, 2};
  long long k = 1;
  while (static_cast<long long>(kappa.symbols.size()) < length) {
    const mpz_class& block = s[static_cast<size_t>(q.q(k))];
    const long long remaining =
        length - static_cast<long long>(kappa.symbols.size());
    const bool truncated =
        mpz_cmp_si(block.get_mpz_t(), static_cast<long>(remaining)) > 0;
    const long long append = truncated ? remaining : block.get_si();
    for (long long i = 0; i < append; ++i) {
      uint8_t sym = kappa.symbols[static_cast<size_t>(i)];
      if (!truncated && i == append - 1) sym = sym ? 0 : 1;
      kappa.symbols.push_back(sym);
    }
    ++k;
    s.push_back(s.back() + s[static_cast<size_t>(q.q(k))]);
  }
  return kappa;
}

std::optional<long long> tau(const KneadingSequence& kappa, long long n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "tau requires n >= 1");
  for (long long m = 1; m + n <= kappa.length(); ++m)
    if (kappa.at(m) != kappa.at(m + n)) return m;
  return std::nullopt;
}

}  // namespace kneadlab
