#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace blobcell {

/// Generator indices 0..n-1; s_0 changes the sign of the first letter.
using CoxeterWord = std::vector<int>;

/// Element of the type B Weyl group W_n in window form (i_1, ..., i_n).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws InvalidArgument unless {|i_k|} = {1..n}.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// Evaluates s_{k_1} s_{k_2} ... from the identity.
  static SignedPermutation fromWord(int n, const CoxeterWord& word);

  int n() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const noexcept { return window_; }
  /// Image of a nonzero symbol in {-n..n}.
  int operator()(int x) const noexcept {
    return x > 0 ? window_[static_cast<std::size_t>(x - 1)] : -window_[static_cast<std::size_t>(-x - 1)];
  }

  /// w * s_k; throws IndexOutOfRange.
  SignedPermutation timesGenerator(int k) const;
  /// s_k * w.
  SignedPermutation generatorTimes(int k) const;
  SignedPermutation inverse() const;
  bool hasRightDescent(int k) const;
  bool hasLeftDescent(int k) const { return inverse().hasRightDescent(k); }
  bool isIdentity() const noexcept;

  friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> window_;
};

std::string toString(const SignedPermutation& w);
std::string toString(const CoxeterWord& word);
std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

SignedPermutation applyGenerator(const SignedPermutation& w, int k);
std::vector<int> rightDescents(const SignedPermutation& w);
/// inv(window) + sum of |i_k| over negative entries.
int length(const SignedPermutation& w);
CoxeterWord reducedWord(const SignedPermutation& w);
bool isReducedWord(int n, const CoxeterWord& word);
/// Throws SizeMismatch.
bool bruhatLeq(const SignedPermutation& u, const SignedPermutation& w);

/// One-line form of a permutation of I_n; position p holds the index (0-based) of the image of
/// the p-th symbol in the order -n < ... < -1 < 1 < ... < n.
class TypeAPermutation {
 public:
  TypeAPermutation() = default;
  explicit TypeAPermutation(std::vector<int> oneLine);
  int size() const noexcept { return static_cast<int>(oneLine_.size()); }
  const std::vector<int>& oneLine() const noexcept { return oneLine_; }
  TypeAPermutation inverse() const;
  friend TypeAPermutation operator*(const TypeAPermutation& u, const TypeAPermutation& v);
  friend bool operator==(const TypeAPermutation&, const TypeAPermutation&) = default;
  friend auto operator<=>(const TypeAPermutation&, const TypeAPermutation&) = default;

 private:
  std::vector<int> oneLine_;
};

/// Index of a signed symbol in the ordered alphabet I_n.
int symbolIndex(int n, int symbol);
int indexSymbol(int n, int index);

TypeAPermutation iota(const SignedPermutation& w);
/// The signed letters of iota(w) in one-line order: -i_n ... -i_1 i_1 ... i_n.
std::vector<int> iotaWord(const SignedPermutation& w);

bool isInWbByAvoidance(const SignedPermutation& w);

/// Membership in W_b by forbidden factors, precomputed for every element of W_n.
class WbTable {
 public:
  explicit WbTable(int n);
  int n() const noexcept { return n_; }
  bool contains(const SignedPermutation& w) const;

 private:
  int n_;
  std::vector<std::int8_t> bad_;
};
bool isInWbByWords(const SignedPermutation& w);

/// Dense index of w in [0, 2^n n!).
std::uint64_t rankOf(const SignedPermutation& w);
SignedPermutation unrank(int n, std::uint64_t r);
std::uint64_t groupOrder(int n);
/// All of W_n, lexicographic on windows.
std::vector<SignedPermutation> allSignedPermutations(int n);

/// Size limit for exhaustive enumeration; BLOBCELL_MAX_N overrides the default.
int enumerationBound(int defaultBound = 8);
/// W_b(n) sorted lexicographically; throws BoundExceeded above enumerationBound().
std::vector<SignedPermutation> enumerateWb(int n);

}  // namespace blobcell
