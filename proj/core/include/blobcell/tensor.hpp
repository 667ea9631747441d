#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blobcell/laurent.hpp"
#include "blobcell/partitions.hpp"

namespace blobcell {

/// Vector in V^{(x)n} with dim V = 2, in the one-variable ring with q = v^2 and Q = v.
/// Basis words are bit masks: bit k set means slot k (0-based) holds v_2.
class TensorVector {
 public:
  using Word = std::uint32_t;

  TensorVector() = default;
  explicit TensorVector(int n);
  /// Letters in {1, 2}, slot 1 first.
  static TensorVector basis(const std::vector<int>& letters);
  static TensorVector basis(int n, Word word, LaurentPoly coeff = 1);

  int n() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return coeffs_.size(); }
  const LaurentPoly& coeff(Word w) const { return coeffs_[w]; }
  LaurentPoly& coeffRef(Word w) { return coeffs_[w]; }
  bool isZero() const;

  TensorVector& operator+=(const TensorVector& rhs);
  TensorVector& operator-=(const TensorVector& rhs);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const LaurentPoly& c, const TensorVector& x);
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

  std::string toString() const;

 private:
  int n_ = 0;
  std::vector<LaurentPoly> coeffs_;
};

std::vector<int> wordLetters(int n, TensorVector::Word w);

/// T_gen acting on x: T_i through the R-matrix at slots i, i+1, and
/// T_0 = T_1^{-1} ... T_{n-1}^{-1} S_{n-1} ... S_1 varpi.
TensorVector tensorAction(int gen, const TensorVector& x);
/// C_gen = T_gen - q_gen.
TensorVector tensorActionC(int gen, const TensorVector& x);
/// The pieces of T_0, exposed for testing.
TensorVector tensorR(int slot, const TensorVector& x);
TensorVector tensorRInverse(int slot, const TensorVector& x);
TensorVector tensorS(int k, const TensorVector& x);
TensorVector tensorVarpi(const TensorVector& x);

/// Basis words of M_n(lambda): #1 - #2 = lambda. Throws WeightOutOfRange.
std::vector<TensorVector::Word> permutationModule(const BlobWeight& lambda);

struct TensorReport {
  int n = 0;
  bool heckeRelations = true;
  bool annihilatesFirstGenerator = true;
  bool annihilatesSecondGenerator = true;
  bool idealVanishIdentity = true;
  bool permutationModulesStable = true;
  std::vector<std::size_t> permutationDimensions;
  bool ok() const {
    return heckeRelations && annihilatesFirstGenerator && annihilatesSecondGenerator && idealVanishIdentity &&
           permutationModulesStable;
  }
};

/// Checks the Hecke relations, the vanishing of both generators of J_n and the stability of every M_n(lambda).
TensorReport checkTensorSpace(int n);

}  // namespace blobcell
