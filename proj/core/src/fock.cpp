#include "blobcell/fock.hpp"

#include <algorithm>
#include <set>

#include "blobcell/error.hpp"
#include "blobcell/weylb.hpp"

namespace blobcell {

namespace {

int floorDiv(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }
int floorMod(int a, int b) { return a - b * floorDiv(a, b); }

void checkCharge(const Charge& s) {
  if (s.e < 2) throw Error(Errc::InvalidArgument, "e must be at least 2");
}

void checkResidue(int i, const Charge& s) {
  checkCharge(s);
  if (i < 0 || i >= s.e) throw Error(Errc::IndexOutOfRange, "residue " + std::to_string(i));
}

const Bipartition kEmpty{};

std::vector<int> rowsOf(const Partition& p) { return p.parts(); }

// i-nodes of b, addable and removable, in increasing node order
struct Signed {
  Node node;
  bool addable;
};

std::vector<Signed> iNodes(int i, const Bipartition& b, const Charge& s) {
  std::vector<Signed> out;
  for (const auto& n : addableNodes(b))
    if (residue(n, s) == i) out.push_back({n, true});
  for (const auto& n : removableNodes(b))
    if (residue(n, s) == i) out.push_back({n, false});
  std::sort(out.begin(), out.end(), [&](const Signed& a, const Signed& c) { return nodeLess(a.node, c.node, s); });
  return out;
}

// cancels every removable node immediately followed by an addable one, repeatedly
std::vector<Signed> reducedSignature(int i, const Bipartition& b, const Charge& s) {
  std::vector<Signed> stack;
  for (const auto& x : iNodes(i, b, s)) {
    if (x.addable && !stack.empty() && !stack.back().addable) stack.pop_back();
    else stack.push_back(x);
  }
  return stack;
}

}  // namespace

int chargedContent(const Node& node, const Charge& s) {
  if (node.comp != 1 && node.comp != 2) throw Error(Errc::InvalidArgument, "component must be 1 or 2");
  return node.col - node.row + s.component(node.comp);
}

int residue(const Node& node, const Charge& s) {
  checkCharge(s);
  return floorMod(chargedContent(node, s), s.e);
}

bool nodeLess(const Node& a, const Node& b, const Charge& s) {
  const int ca = chargedContent(a, s), cb = chargedContent(b, s);
  if (ca != cb) return ca < cb;
  return b.comp < a.comp;
}

std::vector<Node> addableNodes(const Bipartition& b) {
  std::vector<Node> out;
  for (int c = 1; c <= 2; ++c) {
    const auto rows = rowsOf(b.component(c));
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      const int len = r < rows.size() ? rows[r] : 0;
      if (r == 0 || rows[r - 1] > len) out.push_back({static_cast<int>(r) + 1, len + 1, c});
    }
  }
  return out;
}

std::vector<Node> removableNodes(const Bipartition& b) {
  std::vector<Node> out;
  for (int c = 1; c <= 2; ++c) {
    const auto rows = rowsOf(b.component(c));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int below = r + 1 < rows.size() ? rows[r + 1] : 0;
      if (rows[r] > below) out.push_back({static_cast<int>(r) + 1, rows[r], c});
    }
  }
  return out;
}

Bipartition addNode(const Bipartition& b, const Node& node) {
  auto rows = rowsOf(b.component(node.comp));
  const auto r = static_cast<std::size_t>(node.row - 1);
  if (r == rows.size()) rows.push_back(0);
  if (r > rows.size() || rows[r] + 1 != node.col) throw Error(Errc::InvalidArgument, "node is not addable");
  ++rows[r];
  Bipartition out = b;
  (node.comp == 1 ? out.first : out.second) = Partition(std::move(rows));
  return out;
}

Bipartition removeNode(const Bipartition& b, const Node& node) {
  auto rows = rowsOf(b.component(node.comp));
  const auto r = static_cast<std::size_t>(node.row - 1);
  if (r >= rows.size() || rows[r] != node.col) throw Error(Errc::InvalidArgument, "node is not removable");
  --rows[r];
  Bipartition out = b;
  (node.comp == 1 ? out.first : out.second) = Partition(std::move(rows));
  return out;
}

// ---- Fock vectors

FockVector FockVector::basis(const Bipartition& b, LaurentPoly coeff) {
  FockVector x;
  x.add(b, coeff);
  return x;
}

LaurentPoly FockVector::coeff(const Bipartition& b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Bipartition& b, const LaurentPoly& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  for (const auto& [b, c] : rhs.terms_) add(b, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  for (const auto& [b, c] : rhs.terms_) add(b, -c);
  return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& x) {
  FockVector out;
  if (c.isZero()) return out;
  for (const auto& [b, d] : x.terms_) out.add(b, c * d);
  return out;
}

std::string FockVector::toString() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.toString() + ")|" + blobcell::toString(b) + ">";
  }
  return out;
}

FockVector fAction(int i, const FockVector& x, const Charge& s) {
  checkResidue(i, s);
  FockVector out;
  for (const auto& [b, c] : x.terms()) {
    const auto nodes = iNodes(i, b, s);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (!nodes[k].addable) continue;
      int above = 0;
      for (std::size_t j = k + 1; j < nodes.size(); ++j) above += nodes[j].addable ? 1 : -1;
      out.add(addNode(b, nodes[k].node), c.shifted(above));
    }
  }
  return out;
}

FockVector eAction(int i, const FockVector& x, const Charge& s) {
  checkResidue(i, s);
  FockVector out;
  for (const auto& [mu, c] : x.terms()) {
    for (const auto& gamma : removableNodes(mu)) {
      if (residue(gamma, s) != i) continue;
      const Bipartition lambda = removeNode(mu, gamma);
      int below = 0;
      for (const auto& n : iNodes(i, lambda, s))
        if (nodeLess(n.node, gamma, s)) below += n.addable ? 1 : -1;
      out.add(lambda, c.shifted(-below));
    }
  }
  return out;
}

FockVector fDividedPower(int i, int a, const FockVector& x, const Charge& s) {
  if (a < 0) throw Error(Errc::InvalidArgument, "negative divided power");
  FockVector y = x;
  for (int k = 0; k < a; ++k) y = fAction(i, y, s);
  const LaurentPoly fact = quantumFactorial(a);
  FockVector out;
  for (const auto& [b, c] : y.terms()) {
    auto q = c.divideExact(fact);
    if (!q) throw Error(Errc::DividedPowerInexact, "f_" + std::to_string(i) + "^(" + std::to_string(a) + ") at " + toString(b));
    out.add(b, *q);
  }
  return out;
}

// ---- crystal

std::optional<Bipartition> crystalF(int i, const Bipartition& b, const Charge& s) {
  checkResidue(i, s);
  const auto sig = reducedSignature(i, b, s);
  for (auto it = sig.rbegin(); it != sig.rend(); ++it)
    if (it->addable) return addNode(b, it->node);
  return std::nullopt;
}

std::optional<Bipartition> crystalE(int i, const Bipartition& b, const Charge& s) {
  checkResidue(i, s);
  for (const auto& x : reducedSignature(i, b, s))
    if (!x.addable) return removeNode(b, x.node);
  return std::nullopt;
}

std::optional<Bipartition> applyCrystalWord(const std::vector<int>& word, const Bipartition& start, const Charge& s) {
  Bipartition b = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = crystalF(*it, b, s);
    if (!next) return std::nullopt;
    b = std::move(*next);
  }
  return b;
}

std::optional<std::vector<int>> crystalPath(const Bipartition& b, const Charge& s) {
  checkCharge(s);
  std::vector<int> reversed;
  Bipartition cur = b;
  while (!(cur == kEmpty)) {
    bool moved = false;
    for (int i = 0; i < s.e && !moved; ++i)
      while (auto prev = crystalE(i, cur, s)) {
        cur = std::move(*prev);
        reversed.push_back(i);
        moved = true;
      }
    if (!moved) return std::nullopt;
  }
  return std::vector<int>(reversed.rbegin(), reversed.rend());
}

std::vector<Bipartition> crystalVertices(int n, const Charge& s) {
  checkCharge(s);
  if (n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  std::set<Bipartition> layer{kEmpty};
  for (int k = 0; k < n; ++k) {
    std::set<Bipartition> next;
    for (const auto& b : layer)
      for (int i = 0; i < s.e; ++i)
        if (auto c = crystalF(i, b, s)) next.insert(std::move(*c));
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

// ---- canonical basis

namespace {

class Llt {
 public:
  explicit Llt(const Charge& s) : s_(s) {}

  const FockVector& G(const Bipartition& mu) {
    if (auto it = done_.find(mu); it != done_.end()) return it->second;
    if (!active_.insert(mu).second) throw Error(Errc::NotUnitriangular, "cyclic elimination at " + toString(mu));
    const auto path = crystalPath(mu, s_);
    if (!path) throw Error(Errc::NotReachable, toString(mu) + " is not in the crystal");

    FockVector x = FockVector::basis(kEmpty);
    for (std::size_t k = 0; k < path->size();) {
      std::size_t j = k;
      while (j < path->size() && (*path)[j] == (*path)[k]) ++j;
      x = fDividedPower((*path)[k], static_cast<int>(j - k), x, s_);
      k = j;
    }
    const LaurentPoly lead = x.coeff(mu);
    if (lead.constantTerm() != 1 || lead.minExponent() < 0)
      throw Error(Errc::NotUnitriangular, "monomial for " + toString(mu) + " has leading coefficient " + lead.toString());

    for (;;) {
      std::vector<Bipartition> offenders;
      bool stray = false;
      for (const auto& [nu, c] : x.terms()) {
        if (nu == mu || c.inPositivePart()) continue;
        if (inCrystal(nu)) offenders.push_back(nu);
        else stray = true;
      }
      if (offenders.empty()) {
        if (stray) throw Error(Errc::NotUnitriangular, "coefficient outside the crystal in G" + toString(mu));
        break;
      }
      std::vector<const FockVector*> gs;
      for (const auto& nu : offenders) gs.push_back(&G(nu));
      // an offender not in the support of any other offender's G
      std::size_t pick = offenders.size();
      for (std::size_t a = 0; a < offenders.size() && pick == offenders.size(); ++a) {
        bool maximal = true;
        for (std::size_t b = 0; b < offenders.size() && maximal; ++b)
          if (a != b && !gs[b]->coeff(offenders[a]).isZero()) maximal = false;
        if (maximal) pick = a;
      }
      if (pick == offenders.size()) throw Error(Errc::NotUnitriangular, "no maximal offender in G" + toString(mu));
      const LaurentPoly c = x.coeff(offenders[pick]);
      const LaurentPoly neg = c.negativePart();
      const LaurentPoly alpha = neg + LaurentPoly(c.constantTerm()) + neg.bar();
      x -= alpha * *gs[pick];
    }
    if (!(x.coeff(mu) == LaurentPoly(1)))
      throw Error(Errc::NotUnitriangular, "leading coefficient of G" + toString(mu) + " is " + x.coeff(mu).toString());
    active_.erase(mu);
    return done_.emplace(mu, std::move(x)).first->second;
  }

 private:
  bool inCrystal(const Bipartition& b) {
    auto it = reachable_.find(b);
    if (it == reachable_.end()) it = reachable_.emplace(b, crystalPath(b, s_).has_value()).first;
    return it->second;
  }

  Charge s_;
  std::map<Bipartition, FockVector> done_;
  std::set<Bipartition> active_;
  std::map<Bipartition, bool> reachable_;
};

void checkFockBound(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative degree");
  if (n > std::max(10, enumerationBound(10)))
    throw Error(Errc::BoundExceeded, "canonical basis needs n <= " + std::to_string(std::max(10, enumerationBound(10))));
}

}  // namespace

std::map<Bipartition, FockVector> canonicalBasis(int n, const Charge& s) {
  checkFockBound(n);
  Llt llt(s);
  std::map<Bipartition, FockVector> out;
  for (const auto& mu : crystalVertices(n, s)) out.emplace(mu, llt.G(mu));
  return out;
}

// ---- alcoves

std::string DihedralElement::word() const {
  if (index == 0) return "1";
  std::string out;
  bool plus = index > 0;
  for (int k = 0; k < length(); ++k, plus = !plus) out += plus ? "s+" : "s-";
  return out;
}

bool bruhatLeq(const DihedralElement& x, const DihedralElement& y) { return x == y || x.length() < y.length(); }

AlcoveGeometry alcoveData(int e, int m) {
  if (e < 2 || m < 1) throw Error(Errc::InvalidArgument, "alcove data needs e >= 2 and m >= 1");
  AlcoveGeometry g;
  g.e = e;
  g.m = m;
  g.p = floorDiv(-m, e);
  if (m + g.p * e == 0) throw Error(Errc::SingularWeight, "0 lies on a wall for m = " + std::to_string(m));
  g.mMinus = -(m + (g.p + 1) * e);
  g.mPlus = g.mMinus + e;
  return g;
}

bool linked(const AlcoveGeometry& geom, int lambda, int mu) {
  // the orbit of mu: translates by 2e and reflections in m_-
  return floorMod(lambda - mu, 2 * geom.e) == 0 || floorMod(lambda + mu - 2 * geom.mMinus, 2 * geom.e) == 0;
}

bool AlcoveGeometry::isWall(int lambda) const { return floorMod(lambda - mMinus, e) == 0; }

int AlcoveGeometry::alcoveIndex(int lambda) const {
  if (isWall(lambda)) throw Error(Errc::SingularWeight, std::to_string(lambda) + " lies on a wall");
  return floorDiv(lambda - mMinus, e);
}

DihedralElement weylElement(const AlcoveGeometry& geom, const BlobWeight& lambda) {
  return {geom.alcoveIndex(lambda.value())};
}

LaurentPoly decompositionNumber(const AlcoveGeometry& geom, const BlobWeight& lambda, const BlobWeight& mu) {
  if (lambda.n() != mu.n()) throw Error(Errc::AmbientMismatch, "weights from different Lambda_n");
  const auto wl = weylElement(geom, lambda), wm = weylElement(geom, mu);
  if (!linked(geom, lambda.value(), mu.value()) || !bruhatLeq(wl, wm)) return {};
  return LaurentPoly::monomial(wm.length() - wl.length());
}

std::vector<BlobWeight> regularWeights(const AlcoveGeometry& geom, int n) {
  std::vector<BlobWeight> out;
  for (int lam = n; lam >= -n; lam -= 2)
    if (!geom.isWall(lam)) out.emplace_back(n, lam);
  return out;
}

int asymptoticCharge(int n, int e, int m) {
  if (e < 2) throw Error(Errc::InvalidArgument, "e must be at least 2");
  const int bound = n - 1 - e;
  return bound + 1 + floorMod(m - (bound + 1), e);
}

Bipartition kleshchevConvert(int n, int e, int m, const BlobWeight& lambda) {
  if (lambda.n() != n) throw Error(Errc::AmbientMismatch, "weight is not in Lambda_" + std::to_string(n));
  const AlcoveGeometry geom = alcoveData(e, m);
  const Bipartition start = oneLineBipartition(lambda);
  const auto path = crystalPath(start, geom.charge());
  if (!path) throw Error(Errc::NotReachable, toString(start) + " is not in the crystal at s1 = " + std::to_string(geom.charge().s1));
  const Charge asymptotic{asymptoticCharge(n, e, m), 0, e};
  Bipartition b = kEmpty;
  for (int i : *path) {
    auto next = crystalF(i, b, asymptotic);
    if (!next) throw Error(Errc::NotReachable, "path breaks at the asymptotic charge");
    b = std::move(*next);
  }
  return b;
}

DecompositionCheck checkDecompositionNumbers(int n, int e, int m) {
  checkFockBound(n);
  DecompositionCheck report;
  report.n = n;
  report.e = e;
  report.m = m;
  const AlcoveGeometry geom = alcoveData(e, m);
  const Charge s = geom.charge();
  Llt llt(s);
  const auto weights = regularWeights(geom, n);
  for (const auto& mu : weights) {
    const Bipartition bmu = oneLineBipartition(mu);
    const FockVector& g = llt.G(bmu);
    for (const auto& lambda : weights) {
      const LaurentPoly got = g.coeff(oneLineBipartition(lambda));
      const LaurentPoly want = decompositionNumber(geom, lambda, mu);
      ++report.entriesChecked;
      if (!(got == want))
        report.mismatches.push_back("d(" + std::to_string(lambda.value()) + "," + std::to_string(mu.value()) +
                                    ") = " + got.toString() + ", expected " + want.toString());
    }
    for (const auto& [nu, c] : g.terms()) {
      if (nu == bmu) continue;
      ++report.supportsChecked;
      if (bipOrder(nu, bmu) != Ordering::Less)
        report.orderViolations.push_back(toString(nu) + " in G" + toString(bmu) + " is " + toString(bipOrder(nu, bmu)));
    }
  }
  return report;
}

}  // namespace blobcell
