#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "blobcell/cyclo.hpp"
#include "blobcell/laurent.hpp"
#include "blobcell/matrix.hpp"
#include "blobcell/weylb.hpp"

namespace blobcell {

/// A finite Coxeter group given by multiplication tables on dense element ids.
/// Ids are assigned in breadth-first order from the identity, so they are sorted by length.
class CoxeterSystem {
 public:
  using Id = std::uint32_t;

  /// W_n with generators s_0..s_{n-1}; T_0 has parameter v, T_i parameter v^2.
  static std::shared_ptr<const CoxeterSystem> typeB(int n);
  /// S_N with generators sigma_0..sigma_{N-2} (sigma_j swaps j and j+1); all parameters v^2.
  static std::shared_ptr<const CoxeterSystem> typeA(int N);

  bool isTypeB() const noexcept { return typeB_; }
  /// n for type B, N for type A.
  int degree() const noexcept { return degree_; }
  int rank() const noexcept { return static_cast<int>(weights_.size()); }
  std::size_t size() const noexcept { return length_.size(); }
  /// Exponent L(s) with q_s = v^{L(s)}.
  int weight(int s) const { return weights_.at(static_cast<std::size_t>(s)); }
  Id identity() const noexcept { return 0; }
  int length(Id w) const { return length_[w]; }
  Id leftMul(int s, Id w) const { return left_[static_cast<std::size_t>(s)][w]; }
  Id rightMul(int s, Id w) const { return right_[static_cast<std::size_t>(s)][w]; }
  Id inverse(Id w) const { return inverse_[w]; }
  bool hasLeftDescent(int s, Id w) const { return length_[leftMul(s, w)] < length_[w]; }
  bool hasRightDescent(int s, Id w) const { return length_[rightMul(s, w)] < length_[w]; }
  /// Some s with sw < w, or -1 for the identity.
  int firstLeftDescent(Id w) const;
  std::vector<int> reducedWord(Id w) const;
  Id fromWord(const std::vector<int>& word) const;

  /// Window (type B) or 0-based one-line form (type A).
  const std::vector<int>& element(Id w) const { return elements_[w]; }
  /// Throws InvalidArgument if the form is not an element.
  Id idOf(const std::vector<int>& form) const;
  Id idOf(const SignedPermutation& w) const { return idOf(w.window()); }
  SignedPermutation signedPermutation(Id w) const;

 private:
  CoxeterSystem() = default;
  template <typename Step>
  static std::shared_ptr<CoxeterSystem> build(bool typeB, int degree, std::vector<int> identity, std::vector<int> weights,
                                              Step step);

  bool typeB_ = true;
  int degree_ = 0;
  std::vector<int> weights_;
  std::vector<int> length_;
  std::vector<std::vector<Id>> left_;
  std::vector<std::vector<Id>> right_;
  std::vector<Id> inverse_;
  std::vector<std::vector<int>> elements_;
  std::map<std::vector<int>, Id> index_;
};

using CoxeterPtr = std::shared_ptr<const CoxeterSystem>;

/// Element of the Hecke algebra in the T-basis, stored densely over the group.
class HeckeElement {
 public:
  using Id = CoxeterSystem::Id;

  HeckeElement() = default;
  explicit HeckeElement(CoxeterPtr system);

  static HeckeElement T(CoxeterPtr system, Id w, LaurentPoly coeff = 1);
  static HeckeElement one(CoxeterPtr system) { return T(system, 0); }
  /// C_s = T_s - q_s.
  static HeckeElement C(CoxeterPtr system, int s);

  const CoxeterPtr& system() const noexcept { return system_; }
  const LaurentPoly& coeff(Id w) const { return coeffs_[w]; }
  const LaurentPoly& coeff(const SignedPermutation& w) const { return coeffs_[system_->idOf(w)]; }
  LaurentPoly& coeffRef(Id w) { return coeffs_[w]; }
  const std::vector<LaurentPoly>& coefficients() const noexcept { return coeffs_; }
  bool isZero() const;
  std::vector<Id> support() const;

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator-=(const HeckeElement& rhs);
  /// this += c * rhs.
  void addScaled(const LaurentPoly& c, const HeckeElement& rhs);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x);
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) { return multiplyT(x, y); }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.system_ == b.system_ && a.coeffs_ == b.coeffs_;
  }

  /// T_s * this and this * T_s.
  HeckeElement leftT(int s) const;
  HeckeElement rightT(int s) const;
  /// C_s * this and this * C_s.
  HeckeElement leftC(int s) const;
  HeckeElement rightC(int s) const;

  friend HeckeElement multiplyT(const HeckeElement& x, const HeckeElement& y);

 private:
  CoxeterPtr system_;
  std::vector<LaurentPoly> coeffs_;
};

HeckeElement multiplyT(const HeckeElement& x, const HeckeElement& y);
/// Semilinear involution T_w -> T_{w^-1}^{-1}, v -> v^-1.
HeckeElement barInvolution(const HeckeElement& x);

/// Size limit for KL computations in type B; BLOBCELL_KL_MAX_N overrides the default.
int klBound(int defaultBound = 4);

/// The bar-invariant basis C_w with C_w - T_w in the positive part, together with cell data.
class KLBasis {
 public:
  using Id = CoxeterSystem::Id;

  explicit KLBasis(CoxeterPtr system);

  const CoxeterPtr& system() const noexcept { return system_; }
  const HeckeElement& C(Id w) const { return basis_[w]; }
  const HeckeElement& C(const SignedPermutation& w) const { return basis_[system_->idOf(w)]; }

  /// Coordinates of x in the C-basis; nonzero entries only.
  std::vector<std::pair<Id, LaurentPoly>> toCBasis(HeckeElement x) const;
  /// C_s C_w and C_w C_s in the C-basis.
  std::vector<std::pair<Id, LaurentPoly>> leftProduct(int s, Id w) const;
  std::vector<std::pair<Id, LaurentPoly>> rightProduct(int s, Id w) const;

  /// y <=_L w generated by C_y occurring in some C_s C_w. Entry w lists such y.
  const std::vector<std::vector<Id>>& leftCellEdges() const;
  /// Strongly connected components of the left preorder, each sorted, ordered by smallest id.
  const std::vector<std::vector<Id>>& leftCells() const;
  /// Index into leftCells() for every element.
  std::size_t cellOf(Id w) const;
  /// All y with y <=_L w.
  std::vector<Id> leftIdealBelow(Id w) const;

 private:
  CoxeterPtr system_;
  std::vector<HeckeElement> basis_;
  mutable std::vector<std::vector<Id>> edges_;
  mutable std::vector<std::vector<Id>> cells_;
  mutable std::vector<std::size_t> cellIndex_;
};

/// Type B basis for W_n; throws BoundExceeded above klBound().
const KLBasis& computeKLBasis(int n);
/// Equal-parameter basis of S_N, cached.
const KLBasis& computeTypeAKLBasis(int N);

/// Membership in span{C_w : w not in W_b}.
class IdealJn {
 public:
  explicit IdealJn(int n);
  int n() const noexcept { return n_; }
  bool contains(const HeckeElement& x) const;
  /// C_1 C_2 C_1 - C_1 (n >= 3) and C_1 C_0 C_1 - [2]_{Q/q} C_1 (n >= 2).
  std::vector<HeckeElement> generators() const;

 private:
  int n_;
  const KLBasis* basis_;
  std::vector<bool> inWb_;
};

/// The left cell module of w: classes of C_z, z in the cell of w, modulo lower cells.
struct CellModule {
  int n = 0;
  std::vector<SignedPermutation> basis;
  /// Action of C_s; column j is the image of basis[j].
  std::vector<Matrix<LaurentPoly>> action;
  /// The same after v -> Q.
  std::vector<Matrix<CycloNumber>> specialized;
  /// U_0 = C_0 / (i (q - q^-1)) and U_s = C_s.
  std::vector<Matrix<CycloNumber>> blobGenerators;
};

/// Throws NotInWb and SpecializationInvalid.
CellModule cellModule(const KLBasis& basis, const SignedPermutation& w, const BlobParameters& params);

struct IdealReport {
  int n = 0;
  bool closedLeft = true;
  bool closedRight = true;
  bool containsGenerators = true;
  std::size_t rank = 0;
  std::size_t corank = 0;
  std::size_t expectedCorank = 0;
  /// Dimension of the two-sided ideal generated by the two generators, over F_p at a random point.
  std::size_t generatedDimension = 0;
  bool generatedMatchesSpan = true;
  bool ok() const {
    return closedLeft && closedRight && containsGenerators && corank == expectedCorank &&
           generatedDimension == rank && generatedMatchesSpan;
  }
};

IdealReport checkIdealJn(int n);

struct TypeAComparison {
  int n = 0;
  std::size_t pairsChecked = 0;
  /// (w, z) with N_{n-1,w,z} != 0 but the type A constant vanishing.
  std::vector<std::pair<SignedPermutation, SignedPermutation>> violations;
  std::size_t cellsChecked = 0;
  std::vector<std::vector<SignedPermutation>> cellMismatches;
  bool ok() const { return violations.empty() && cellMismatches.empty(); }
};

/// Throws BoundExceeded for n > 3.
TypeAComparison typeAKLCompare(int n);

struct KLBasisReport {
  int n = 0;
  std::size_t elements = 0;
  std::size_t barInvariant = 0;
  /// Leading coefficient 1, other coefficients in vZ[v], support below w in the Bruhat order.
  std::size_t unitriangular = 0;
  /// C_{s1s2s1} = C_1C_2C_1 - C_1 (n >= 3).
  bool braidClosedForm = true;
  /// C_{s1s0s1} = C_1C_0C_1 - [2]_{Q/q} C_1 (n >= 2).
  bool blobClosedForm = true;
  bool ok() const { return barInvariant == elements && unitriangular == elements && braidClosedForm && blobClosedForm; }
};

KLBasisReport checkKLBasis(int n);

}  // namespace blobcell
