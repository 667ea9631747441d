#include "blobcell/weylb.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "blobcell/error.hpp"

namespace blobcell {
namespace {

void checkGenerator(int n, int k) {
  if (k < 0 || k >= n) throw Error(Errc::IndexOutOfRange, "generator s_" + std::to_string(k) + " not in W_" + std::to_string(n));
}

// Ends in a reduced factor s_x s_y s_x that the definition of W_b forbids.
bool endsInForbiddenFactor(const SignedPermutation& u) {
  for (int x = 1; x < u.n(); ++x) {
    if (!u.hasRightDescent(x)) continue;
    const SignedPermutation a = u.timesGenerator(x);
    for (int y : {x - 1, x + 1}) {
      if (y < 0 || y >= u.n() || !a.hasRightDescent(y)) continue;
      if (a.timesGenerator(y).hasRightDescent(x)) return true;
    }
  }
  return false;
}

bool longestDecreasingAtMostTwo(const std::vector<int>& word) {
  // Patience-style: track the smallest possible last value of decreasing runs of length 1 and 2.
  const int kNone = std::numeric_limits<int>::min();
  int best1 = kNone, best2 = kNone;
  for (int x : word) {
    if (best2 != kNone && x < best2) return false;
    if (best1 != kNone && x < best1) best2 = std::max(best2, x);
    best1 = std::max(best1, x);
  }
  return true;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : window_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
      throw Error(Errc::InvalidArgument, "window is not a signed permutation");
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::fromWord(int n, const CoxeterWord& word) {
  SignedPermutation w = identity(n);
  for (int k : word) w = w.timesGenerator(k);
  return w;
}

SignedPermutation SignedPermutation::timesGenerator(int k) const {
  checkGenerator(n(), k);
  SignedPermutation out = *this;
  if (k == 0)
    out.window_[0] = -out.window_[0];
  else
    std::swap(out.window_[static_cast<std::size_t>(k - 1)], out.window_[static_cast<std::size_t>(k)]);
  return out;
}

SignedPermutation SignedPermutation::generatorTimes(int k) const {
  checkGenerator(n(), k);
  SignedPermutation out = *this;
  for (int& x : out.window_) {
    const int a = std::abs(x), sign = x > 0 ? 1 : -1;
    if (k == 0 && a == 1)
      x = -x;
    else if (k > 0 && a == k)
      x = sign * (k + 1);
    else if (k > 0 && a == k + 1)
      x = sign * k;
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t k = 0; k < window_.size(); ++k) {
    const int x = window_[k];
    const int pos = static_cast<int>(k) + 1;
    inv[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? pos : -pos;
  }
  return SignedPermutation(std::move(inv));
}

bool SignedPermutation::hasRightDescent(int k) const {
  checkGenerator(n(), k);
  if (k == 0) return window_[0] < 0;
  return window_[static_cast<std::size_t>(k - 1)] > window_[static_cast<std::size_t>(k)];
}

bool SignedPermutation::isIdentity() const noexcept {
  for (std::size_t k = 0; k < window_.size(); ++k)
    if (window_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.n() != v.n()) throw Error(Errc::SizeMismatch, "product of signed permutations of different sizes");
  std::vector<int> w;
  w.reserve(v.window_.size());
  for (int x : v.window_) w.push_back(u(x));
  return SignedPermutation(std::move(w));
}

std::string toString(const SignedPermutation& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.window().size(); ++k) {
    if (k) out += ",";
    out += std::to_string(w.window()[k]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) { return os << toString(w); }

std::string toString(const CoxeterWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (int k : word) out += "s" + std::to_string(k);
  return out;
}

SignedPermutation applyGenerator(const SignedPermutation& w, int k) { return w.timesGenerator(k); }

std::vector<int> rightDescents(const SignedPermutation& w) {
  std::vector<int> out;
  for (int k = 0; k < w.n(); ++k)
    if (w.hasRightDescent(k)) out.push_back(k);
  return out;
}

int length(const SignedPermutation& w) {
  const auto& x = w.window();
  int len = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a] < 0) len -= x[a];
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (x[a] > x[b]) ++len;
  }
  return len;
}

CoxeterWord reducedWord(const SignedPermutation& w) {
  CoxeterWord word;
  SignedPermutation u = w;
  while (!u.isIdentity()) {
    for (int k = 0; k < u.n(); ++k) {
      if (u.hasRightDescent(k)) {
        word.push_back(k);
        u = u.timesGenerator(k);
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool isReducedWord(int n, const CoxeterWord& word) {
  return length(SignedPermutation::fromWord(n, word)) == static_cast<int>(word.size());
}

bool bruhatLeq(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.n() != w.n()) throw Error(Errc::SizeMismatch, "Bruhat comparison across different W_n");
  if (w.isIdentity()) return u.isIdentity();
  int s = 0;
  while (!w.hasRightDescent(s)) ++s;
  const SignedPermutation ws = w.timesGenerator(s);
  const SignedPermutation us = u.timesGenerator(s);
  return bruhatLeq(u.hasRightDescent(s) ? us : u, ws);
}

TypeAPermutation::TypeAPermutation(std::vector<int> oneLine) : oneLine_(std::move(oneLine)) {
  std::vector<bool> seen(oneLine_.size(), false);
  for (int x : oneLine_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)])
      throw Error(Errc::InvalidArgument, "one-line form is not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

TypeAPermutation TypeAPermutation::inverse() const {
  std::vector<int> inv(oneLine_.size());
  for (std::size_t p = 0; p < oneLine_.size(); ++p) inv[static_cast<std::size_t>(oneLine_[p])] = static_cast<int>(p);
  return TypeAPermutation(std::move(inv));
}

TypeAPermutation operator*(const TypeAPermutation& u, const TypeAPermutation& v) {
  if (u.size() != v.size()) throw Error(Errc::SizeMismatch, "product of permutations of different sizes");
  std::vector<int> w;
  for (int x : v.oneLine_) w.push_back(u.oneLine_[static_cast<std::size_t>(x)]);
  return TypeAPermutation(std::move(w));
}

int symbolIndex(int n, int symbol) { return symbol > 0 ? n - 1 + symbol : n + symbol; }
int indexSymbol(int n, int index) { return index >= n ? index - n + 1 : index - n; }

std::vector<int> iotaWord(const SignedPermutation& w) {
  std::vector<int> out;
  for (int k = w.n(); k >= 1; --k) out.push_back(w(-k));
  for (int k = 1; k <= w.n(); ++k) out.push_back(w(k));
  return out;
}

TypeAPermutation iota(const SignedPermutation& w) {
  std::vector<int> out;
  for (int x : iotaWord(w)) out.push_back(symbolIndex(w.n(), x));
  return TypeAPermutation(std::move(out));
}

bool isInWbByAvoidance(const SignedPermutation& w) {
  std::unordered_map<std::uint64_t, bool> memo;
  std::function<bool(const SignedPermutation&)> bad = [&](const SignedPermutation& u) -> bool {
    const std::uint64_t key = rankOf(u);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool result = endsInForbiddenFactor(u);
    for (int k = 0; k < u.n() && !result; ++k)
      if (u.hasRightDescent(k)) result = bad(u.timesGenerator(k));
    memo.emplace(key, result);
    return result;
  };
  return !bad(w);
}

WbTable::WbTable(int n) : n_(n), bad_(groupOrder(n), -1) {
  // Elements of length L only depend on elements of length L - 1.
  std::vector<SignedPermutation> all = allSignedPermutations(n);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return length(a) < length(b); });
  for (const auto& u : all) {
    bool result = endsInForbiddenFactor(u);
    for (int k = 0; k < n && !result; ++k)
      if (u.hasRightDescent(k)) result = bad_[rankOf(u.timesGenerator(k))] != 0;
    bad_[rankOf(u)] = result ? 1 : 0;
  }
}

bool WbTable::contains(const SignedPermutation& w) const {
  if (w.n() != n_) throw Error(Errc::SizeMismatch, "element of a different W_n");
  return bad_[rankOf(w)] == 0;
}

bool isInWbByWords(const SignedPermutation& w) {
  const auto& x = w.window();
  std::vector<int> negatives;  // a_1, ..., a_l in order of occurrence
  std::size_t lastNegative = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] < 0) {
      negatives.push_back(-x[k]);
      lastNegative = k;
    }
  }
  std::vector<int> chain(negatives.rbegin(), negatives.rend());
  if (!negatives.empty())
    for (std::size_t k = 0; k < lastNegative; ++k)
      if (x[k] > 0) chain.push_back(x[k]);
  if (!std::is_sorted(chain.begin(), chain.end())) return false;
  std::vector<int> wl(negatives.rbegin(), negatives.rend());
  for (int v : x)
    if (v > 0) wl.push_back(v);
  return longestDecreasingAtMostTwo(wl);
}

std::uint64_t groupOrder(int n) {
  std::uint64_t order = 1;
  for (int k = 1; k <= n; ++k) order *= 2 * static_cast<std::uint64_t>(k);
  return order;
}

std::uint64_t rankOf(const SignedPermutation& w) {
  const auto& x = w.window();
  const std::size_t n = x.size();
  std::uint64_t permRank = 0;
  std::uint64_t signs = 0;
  for (std::size_t a = 0; a < n; ++a) {
    std::uint64_t smaller = 0;
    for (std::size_t b = a + 1; b < n; ++b)
      if (std::abs(x[b]) < std::abs(x[a])) ++smaller;
    permRank = permRank * (n - a) + smaller;
    if (x[a] < 0) signs |= std::uint64_t{1} << a;
  }
  return (permRank << n) | signs;
}

SignedPermutation unrank(int n, std::uint64_t r) {
  const std::uint64_t signs = r & ((std::uint64_t{1} << n) - 1);
  std::uint64_t permRank = r >> n;
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));
  for (int a = n - 1; a >= 0; --a) {
    const std::uint64_t base = static_cast<std::uint64_t>(n - a);
    digits[static_cast<std::size_t>(a)] = permRank % base;
    permRank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> window;
  for (int a = 0; a < n; ++a) {
    const auto it = pool.begin() + static_cast<std::ptrdiff_t>(digits[static_cast<std::size_t>(a)]);
    const int v = *it;
    pool.erase(it);
    window.push_back((signs >> a) & 1 ? -v : v);
  }
  return SignedPermutation(std::move(window));
}

std::vector<SignedPermutation> allSignedPermutations(int n) {
  std::vector<SignedPermutation> out;
  out.reserve(groupOrder(n));
  for (std::uint64_t r = 0; r < groupOrder(n); ++r) out.push_back(unrank(n, r));
  std::sort(out.begin(), out.end());
  return out;
}

int enumerationBound(int defaultBound) {
  if (const char* env = std::getenv("BLOBCELL_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return defaultBound;
}

std::vector<SignedPermutation> enumerateWb(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative rank");
  if (n > enumerationBound()) throw Error(Errc::BoundExceeded, "n = " + std::to_string(n) + " exceeds the enumeration bound");
  const WbTable table(n);
  std::vector<SignedPermutation> out;
  for (auto& w : allSignedPermutations(n))
    if (table.contains(w)) out.push_back(std::move(w));
  return out;
}

}  // namespace blobcell
