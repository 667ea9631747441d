#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace blobcell {

/// Result of comparing two elements under a partial order.
enum class Ordering { Less, Equal, Greater, Incomparable };

std::string toString(Ordering o);

/// Integer partition; parts are weakly decreasing and strictly positive.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros; rejects negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // |p|
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Row length, zero past the last row (rows are 0-based here).
  int part(int row) const noexcept { return row < length() ? parts_[static_cast<std::size_t>(row)] : 0; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string toString(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

struct Bipartition {
  Partition first;
  Partition second;

  int size() const noexcept { return first.size() + second.size(); }
  bool isOneLine() const noexcept { return first.length() <= 1 && second.length() <= 1; }
  const Partition& component(int c) const { return c == 1 ? first : second; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// "(a),(b)" for one-line bipartitions, "((6,3),(1))" otherwise; empty is rendered as the
/// empty-set sign.
std::string toString(const Bipartition& b);
std::ostream& operator<<(std::ostream& os, const Bipartition& b);

/// Element of Lambda_n = {-n, -n+2, ..., n}.
class BlobWeight {
 public:
  BlobWeight(int n, int value);

  int n() const noexcept { return n_; }
  int value() const noexcept { return value_; }

  friend bool operator==(const BlobWeight&, const BlobWeight&) = default;

 private:
  int n_;
  int value_;
};

/// All weights of Lambda_n in increasing order.
std::vector<BlobWeight> blobWeights(int n);

Partition twoCore(const Partition& p);
/// Throws NonEmptyCore when the 2-core is nonempty.
Bipartition twoQuotient(const Partition& p);
Partition twoQuotientInverse(const Bipartition& b);

Ordering dominance(const Partition& p, const Partition& q);
/// The order induced by dominance on the inverse 2-quotients.
Ordering bipOrder(const Bipartition& x, const Bipartition& y);
/// Throws NotOneLine for bipartitions with a component of two or more rows.
BlobWeight blobWeightOf(const Bipartition& b);
/// Inverse of blobWeightOf.
Bipartition oneLineBipartition(const BlobWeight& w);
/// x <_qh y iff |x| > |y|; throws AmbientMismatch on different n.
Ordering qhOrder(const BlobWeight& x, const BlobWeight& y);

/// All partitions of n, in reverse lexicographic order (largest first).
std::vector<Partition> partitionsOf(int n);
/// All bipartitions of total degree n.
std::vector<Bipartition> bipartitionsOf(int n);

}  // namespace blobcell
