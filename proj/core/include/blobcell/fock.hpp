#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blobcell/laurent.hpp"
#include "blobcell/partitions.hpp"

namespace blobcell {

/// Charge s = (s1, s2) together with e.
struct Charge {
  int s1 = 0;
  int s2 = 0;
  int e = 2;

  int component(int c) const { return c == 1 ? s1 : s2; }
  friend bool operator==(const Charge&, const Charge&) = default;
};

/// Node (row, column, component), all 1-based.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 1;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// j - i + s_c.
int chargedContent(const Node& node, const Charge& s);
/// (j - i + s_c) mod e, in [0, e).
int residue(const Node& node, const Charge& s);
/// Larger charged content is larger; on ties the node of the smaller component is larger.
bool nodeLess(const Node& a, const Node& b, const Charge& s);

std::vector<Node> addableNodes(const Bipartition& b);
std::vector<Node> removableNodes(const Bipartition& b);
Bipartition addNode(const Bipartition& b, const Node& node);
Bipartition removeNode(const Bipartition& b, const Node& node);

/// Finitely supported combination of |lambda, s>.
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const Bipartition& b, LaurentPoly coeff = 1);

  const std::map<Bipartition, LaurentPoly>& terms() const noexcept { return terms_; }
  LaurentPoly coeff(const Bipartition& b) const;
  bool isZero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add(const Bipartition& b, const LaurentPoly& c);
  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPoly& c, const FockVector& x);
  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string toString() const;

 private:
  std::map<Bipartition, LaurentPoly> terms_;
};

FockVector fAction(int i, const FockVector& x, const Charge& s);
FockVector eAction(int i, const FockVector& x, const Charge& s);
/// f_i^a / [a]!; throws DividedPowerInexact.
FockVector fDividedPower(int i, int a, const FockVector& x, const Charge& s);

/// Kashiwara operators by the reduced i-signature.
std::optional<Bipartition> crystalF(int i, const Bipartition& b, const Charge& s);
std::optional<Bipartition> crystalE(int i, const Bipartition& b, const Charge& s);
/// Applies the residues right to left, as operators are written.
std::optional<Bipartition> applyCrystalWord(const std::vector<int>& word, const Bipartition& start, const Charge& s);
/// Residues of a path from the empty bipartition, in order of application, removing whole
/// e_i-strings first; nullopt if b is not in the component of the empty bipartition.
std::optional<std::vector<int>> crystalPath(const Bipartition& b, const Charge& s);
/// Bip_e^s(n), sorted.
std::vector<Bipartition> crystalVertices(int n, const Charge& s);

/// G(mu, s) for every mu in Bip_e^s(n); throws NotUnitriangular and BoundExceeded (n > 10 by default).
std::map<Bipartition, FockVector> canonicalBasis(int n, const Charge& s);

/// Infinite dihedral element w_i with length |i|.
struct DihedralElement {
  int index = 0;
  int length() const { return index < 0 ? -index : index; }
  /// Reduced word in s+ and s-, e.g. "s+s-s+".
  std::string word() const;
  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

/// Bruhat order: shorter elements lie below, distinct elements of equal length are incomparable.
bool bruhatLeq(const DihedralElement& x, const DihedralElement& y);

struct AlcoveGeometry {
  int e = 3;
  int m = 2;
  /// Largest p with m + pe <= 0.
  int p = 0;
  int mMinus = 0;
  int mPlus = 0;

  Charge charge() const { return {m + p * e, 0, e}; }
  bool isWall(int lambda) const;
  /// Index i of the alcove A_i containing lambda; throws SingularWeight on a wall.
  int alcoveIndex(int lambda) const;
};

AlcoveGeometry alcoveData(int e, int m);
/// lambda in the orbit of mu under the reflections in the walls.
bool linked(const AlcoveGeometry& geom, int lambda, int mu);
DihedralElement weylElement(const AlcoveGeometry& geom, const BlobWeight& lambda);
/// v^{l(w_mu) - l(w_lambda)} if lambda and mu are linked and w_lambda <= w_mu, else 0.
LaurentPoly decompositionNumber(const AlcoveGeometry& geom, const BlobWeight& lambda, const BlobWeight& mu);
std::vector<BlobWeight> regularWeights(const AlcoveGeometry& geom, int n);

/// Smallest s1 = m mod e with s1 > n - 1 - e.
int asymptoticCharge(int n, int e, int m);
/// Kleshchev bipartition of L_n(lambda); throws NotReachable.
Bipartition kleshchevConvert(int n, int e, int m, const BlobWeight& lambda);

struct DecompositionCheck {
  int n = 0;
  int e = 0;
  int m = 0;
  std::size_t entriesChecked = 0;
  std::vector<std::string> mismatches;
  std::size_t supportsChecked = 0;
  std::vector<std::string> orderViolations;
  bool ok() const { return mismatches.empty() && orderViolations.empty(); }
};

/// Canonical basis coefficients at one-line bipartitions against decompositionNumber, and
/// the support of every G(mu, s) with mu one-line against the order on bipartitions.
DecompositionCheck checkDecompositionNumbers(int n, int e, int m);

}  // namespace blobcell
