#include "blobcell/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "blobcell/error.hpp"

namespace blobcell {
namespace {

// Beta-numbers of p padded to `length` parts (length >= p.length()).
std::vector<int> betaNumbers(const Partition& p, int length) {
  std::vector<int> beta(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = p.part(i) + (length - 1 - i);
  return beta;
}

Partition fromBeta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < length; ++i) parts.push_back(beta[static_cast<std::size_t>(i)] - (length - 1 - i));
  return Partition(parts);
}

// Partition read off a single abacus runner with bead positions `beads`.
Partition runnerPartition(std::vector<int> beads) { return fromBeta(std::move(beads)); }

int evenLength(const Partition& p) { return p.length() + (p.length() % 2); }

}  // namespace

std::string toString(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
    case Ordering::Incomparable: return "incomparable";
  }
  return "?";
}

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw Error(Errc::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw Error(Errc::InvalidArgument, "partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
}

int Partition::size() const noexcept {
  int s = 0;
  for (int x : parts_) s += x;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; c < part(0); ++c) {
    int h = 0;
    while (part(h) > c) ++h;
    out.push_back(h);
  }
  return Partition(out);
}

std::string toString(const Partition& p) {
  if (p.empty()) return "\xE2\x88\x85";
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << toString(p); }
std::ostream& operator<<(std::ostream& os, const Bipartition& b) { return os << toString(b); }

std::string toString(const Bipartition& b) {
  const auto component = [](const Partition& p) { return p.empty() ? std::string("(\xE2\x88\x85)") : toString(p); };
  if (b.isOneLine()) return component(b.first) + "," + component(b.second);
  return "(" + component(b.first) + "," + component(b.second) + ")";
}

BlobWeight::BlobWeight(int n, int value) : n_(n), value_(value) {
  if (n < 0 || std::abs(value) > n || (n - value) % 2 != 0)
    throw Error(Errc::WeightOutOfRange, std::to_string(value) + " is not in Lambda_" + std::to_string(n));
}

std::vector<BlobWeight> blobWeights(int n) {
  std::vector<BlobWeight> out;
  for (int v = -n; v <= n; v += 2) out.emplace_back(n, v);
  return out;
}

Partition twoCore(const Partition& p) {
  const int length = p.length();
  std::vector<int> beta = betaNumbers(p, length);
  int count[2] = {0, 0};
  for (int b : beta) ++count[b % 2];
  std::vector<int> pushed;
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < count[r]; ++k) pushed.push_back(2 * k + r);
  return fromBeta(pushed);
}

Bipartition twoQuotient(const Partition& p) {
  if (!twoCore(p).empty()) throw Error(Errc::NonEmptyCore, "2-core of " + toString(p) + " is nonempty");
  // Even number of beads: both runners carry the same number of beads. Odd runner -> first.
  const std::vector<int> beta = betaNumbers(p, evenLength(p));
  std::vector<int> odd, even;
  for (int b : beta) (b % 2 ? odd : even).push_back(b / 2);
  return Bipartition{runnerPartition(odd), runnerPartition(even)};
}

Partition twoQuotientInverse(const Bipartition& b) {
  const int k = std::max(b.first.length(), b.second.length());
  std::vector<int> beta;
  for (int j = 0; j < k; ++j) {
    beta.push_back(2 * (b.first.part(j) + (k - 1 - j)) + 1);
    beta.push_back(2 * (b.second.part(j) + (k - 1 - j)));
  }
  return fromBeta(beta);
}

Ordering dominance(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) return Ordering::Incomparable;
  if (p == q) return Ordering::Equal;
  bool pAbove = false, qAbove = false;
  int sp = 0, sq = 0;
  for (int i = 0; i < std::max(p.length(), q.length()); ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp > sq) pAbove = true;
    if (sq > sp) qAbove = true;
  }
  if (pAbove && qAbove) return Ordering::Incomparable;
  return pAbove ? Ordering::Greater : Ordering::Less;
}

Ordering bipOrder(const Bipartition& x, const Bipartition& y) {
  return dominance(twoQuotientInverse(x), twoQuotientInverse(y));
}

BlobWeight blobWeightOf(const Bipartition& b) {
  if (!b.isOneLine()) throw Error(Errc::NotOneLine, toString(b) + " is not a one-line bipartition");
  return BlobWeight(b.size(), b.first.part(0) - b.second.part(0));
}

Bipartition oneLineBipartition(const BlobWeight& w) {
  const int a = (w.n() + w.value()) / 2;
  const int b = (w.n() - w.value()) / 2;
  return Bipartition{Partition({a}), Partition({b})};
}

Ordering qhOrder(const BlobWeight& x, const BlobWeight& y) {
  if (x.n() != y.n()) throw Error(Errc::AmbientMismatch, "weights from different Lambda_n");
  if (x == y) return Ordering::Equal;
  const int ax = std::abs(x.value()), ay = std::abs(y.value());
  if (ax > ay) return Ordering::Less;
  if (ax < ay) return Ordering::Greater;
  return Ordering::Incomparable;
}

std::vector<Partition> partitionsOf(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> bipartitionsOf(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : partitionsOf(k))
      for (const auto& b : partitionsOf(n - k)) out.push_back(Bipartition{a, b});
  return out;
}

}  // namespace blobcell
