#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blobcell/cyclo.hpp"
#include "blobcell/laurent.hpp"
#include "blobcell/matrix.hpp"
#include "blobcell/partitions.hpp"
#include "blobcell/weylb.hpp"

namespace blobcell {

/// Loop and merge scalars of the diagram calculus.
template <typename Scalar>
struct BlobScalars {
  Scalar deltaPlain;  // -[2]
  Scalar blobLoop;    // [m-1]
  Scalar blobMerge;   // -[m]
};

/// Generic scalars in the blob variable q.
BlobScalars<LaurentPoly> genericBlobScalars(int m);
BlobScalars<CycloNumber> specializedBlobScalars(const BlobParameters& params);

/// A blobbed Temperley-Lieb diagram. Points 0..n-1 run along the top from the left,
/// points n..2n-1 along the bottom from the left.
class BlobDiagram {
 public:
  BlobDiagram() = default;
  /// partner[p] is the other end of the line through p; blobbed[p] must agree on both ends.
  /// Throws InvalidArgument for non-planar input and ExposureViolation for a hidden blob.
  BlobDiagram(int n, std::vector<int> partner, std::vector<bool> blobbed);

  static BlobDiagram identity(int n);
  /// U_0 blobs the leftmost line; U_i joins i-1, i on top and on the bottom.
  static BlobDiagram generator(int n, int i);

  int n() const noexcept { return n_; }
  int partner(int p) const { return partner_.at(static_cast<std::size_t>(p)); }
  bool blobbed(int p) const { return blobbed_.at(static_cast<std::size_t>(p)); }
  bool isPropagating(int p) const { return (p < n_) != (partner(p) < n_); }
  int propagatingCount() const;
  /// Exposure of the line through p.
  bool isExposed(int p) const;

  std::string toString() const;

  friend bool operator==(const BlobDiagram&, const BlobDiagram&) = default;
  friend auto operator<=>(const BlobDiagram&, const BlobDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<int> partner_;
  std::vector<bool> blobbed_;
};

template <typename Scalar>
struct ScaledDiagram {
  Scalar scalar;
  BlobDiagram diagram;
};

/// a stacked on top of b.
ScaledDiagram<LaurentPoly> composeDiagrams(const BlobDiagram& a, const BlobDiagram& b,
                                           const BlobScalars<LaurentPoly>& scalars);

/// The diagram basis of b_n; throws BoundExceeded for n > 8.
std::vector<BlobDiagram> blobDiagramBasis(int n);
std::size_t blobAlgebraDimension(int n);

/// Linear combination of diagrams.
using DiagramVector = std::map<BlobDiagram, LaurentPoly>;
DiagramVector multiply(const DiagramVector& x, const DiagramVector& y, const BlobScalars<LaurentPoly>& scalars);
/// D (x) identity on two extra strands at the right.
BlobDiagram extendRight(const BlobDiagram& d, int extra = 2);

/// Half diagram on n points: partner -1 marks a defect.
class BlobHalfDiagram {
 public:
  BlobHalfDiagram() = default;
  BlobHalfDiagram(int n, std::vector<int> partner, std::vector<bool> blobbed);

  int n() const noexcept { return static_cast<int>(partner_.size()); }
  int partner(int p) const { return partner_.at(static_cast<std::size_t>(p)); }
  bool isDefect(int p) const { return partner(p) < 0; }
  bool blobbed(int p) const { return blobbed_.at(static_cast<std::size_t>(p)); }
  int defectCount() const;
  /// Leftmost defect, or -1.
  int firstDefect() const;
  bool isExposed(int p) const;
  std::string toString() const;

  friend bool operator==(const BlobHalfDiagram&, const BlobHalfDiagram&) = default;
  friend auto operator<=>(const BlobHalfDiagram&, const BlobHalfDiagram&) = default;

 private:
  std::vector<int> partner_;
  std::vector<bool> blobbed_;
};

/// The basis of Delta_n(lambda), sorted.
std::vector<BlobHalfDiagram> halfDiagrams(const BlobWeight& lambda);

template <typename Scalar>
struct BlobModule {
  int n = 0;
  /// Basis labels for printing.
  std::vector<std::string> labels;
  /// Action of U_0..U_{n-1}; column j is the image of basis vector j.
  std::vector<Matrix<Scalar>> generators;
};

/// Delta_n(lambda) over the generic ring; throws WeightOutOfRange.
BlobModule<LaurentPoly> standardModule(const BlobWeight& lambda, int m);
/// The left regular representation on the diagram basis.
BlobModule<LaurentPoly> regularRepresentation(int n, int m);
BlobModule<CycloNumber> specialize(const BlobModule<LaurentPoly>& module, const Specialization& spec);

struct RelationCheck {
  std::string relation;
  /// Number of nonzero entries of the difference of the two sides.
  std::size_t deviation = 0;
};

struct PresentationReport {
  int n = 0;
  std::vector<RelationCheck> relations;
  bool ok() const {
    for (const auto& r : relations)
      if (r.deviation) return false;
    return true;
  }
};

/// Substitutes matrices for U_0..U_{n-1} into every defining relation.
template <typename Scalar>
PresentationReport verifyPresentation(const std::vector<Matrix<Scalar>>& u, const BlobScalars<Scalar>& scalars);

PresentationReport verifyPresentation(const BlobWeight& lambda, int m);
PresentationReport verifyRegularPresentation(int n, int m);

/// Traces of all words in the generators of length at most maxLength, keyed by the word.
template <typename Scalar>
std::map<std::vector<int>, Scalar> wordTraces(const std::vector<Matrix<Scalar>>& u, int maxLength);

struct LocalizationReport {
  int n = 0;
  int lambda = 0;
  /// Rank of e on Delta_n(lambda) and dim Delta_{n-2}(lambda) (0 for lambda = +-n).
  std::size_t dimension = 0;
  std::size_t expectedDimension = 0;
  std::size_t tracesChecked = 0;
  bool tracesMatch = true;
  bool ok() const { return dimension == expectedDimension && tracesMatch; }
};

/// e M for e = -U_{n-1}/[2], with the traces of b_{n-2} words compared against Delta_{n-2}(lambda).
/// Evaluated over F_p at a fixed generic point; throws TwoNotInvertible if [2] vanishes there.
LocalizationReport localize(const BlobWeight& lambda, int m);

struct IdempotentReport {
  int n = 0;
  std::size_t expectedDimension = 0;
  /// Ranks of U b_n U and of U (b_{n-2} (x) 1).
  std::size_t cornerRank = 0;
  std::size_t imageRank = 0;
  /// U(a (x) 1) U(b (x) 1) = -[2] U(ab (x) 1) on diagram pairs.
  std::size_t pairsChecked = 0;
  bool multiplicative = true;
  bool ok() const { return cornerRank == expectedDimension && imageRank == expectedDimension && multiplicative; }
};

/// e b_n e against b_{n-2}; needs n >= 2.
IdempotentReport checkIdempotentTruncation(int n, int m);

struct CellComparison {
  SignedPermutation representative;
  BlobWeight lambda{0, 0};
  std::size_t cellDimension = 0;
  std::size_t standardDimension = 0;
  bool relationsHold = false;
  bool tracesMatch = false;
  /// For the 1-dimensional cells of 1 and s_0: equal matrices.
  bool exact = true;
  bool ok() const { return cellDimension == standardDimension && relationsHold && tracesMatch && exact; }
};

struct CellComparisonReport {
  int n = 0;
  std::vector<CellComparison> cells;
  bool ok() const {
    for (const auto& c : cells)
      if (!c.ok()) return false;
    return !cells.empty();
  }
};

/// Every left cell of W_b against Delta_n(lambda); throws SpecializationInvalid.
CellComparisonReport compareCellToStandard(int n, const BlobParameters& params);

}  // namespace blobcell
