#include "blobcell/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>

#include "blobcell/error.hpp"
#include "modp.hpp"

namespace blobcell {

namespace {

LaurentPoly qMinusInverse(int weight) { return LaurentPoly::monomial(weight) - LaurentPoly::monomial(-weight); }

}  // namespace

template <typename Step>
std::shared_ptr<CoxeterSystem> CoxeterSystem::build(bool typeB, int degree, std::vector<int> identity,
                                                    std::vector<int> weights, Step step) {
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  sys->typeB_ = typeB;
  sys->degree_ = degree;
  sys->weights_ = std::move(weights);
  const int r = sys->rank();
  sys->elements_.push_back(identity);
  sys->index_.emplace(std::move(identity), 0);
  sys->length_.push_back(0);
  // breadth-first along right multiplication gives ids sorted by length
  for (std::size_t head = 0; head < sys->elements_.size(); ++head) {
    for (int s = 0; s < r; ++s) {
      auto next = step(sys->elements_[head], s, false);
      if (sys->index_.count(next)) continue;
      sys->index_.emplace(next, static_cast<Id>(sys->elements_.size()));
      sys->elements_.push_back(std::move(next));
      sys->length_.push_back(sys->length_[head] + 1);
    }
  }
  const std::size_t size = sys->elements_.size();
  sys->left_.assign(static_cast<std::size_t>(r), std::vector<Id>(size));
  sys->right_.assign(static_cast<std::size_t>(r), std::vector<Id>(size));
  sys->inverse_.resize(size);
  for (std::size_t w = 0; w < size; ++w) {
    for (int s = 0; s < r; ++s) {
      sys->left_[static_cast<std::size_t>(s)][w] = sys->index_.at(step(sys->elements_[w], s, true));
      sys->right_[static_cast<std::size_t>(s)][w] = sys->index_.at(step(sys->elements_[w], s, false));
    }
  }
  for (std::size_t w = 0; w < size; ++w) {
    // inverse via a reduced word read backwards
    Id x = 0;
    Id cur = static_cast<Id>(w);
    while (cur != 0) {
      const int s = sys->firstLeftDescent(cur);
      cur = sys->leftMul(s, cur);
      x = sys->leftMul(s, x);
    }
    sys->inverse_[w] = x;
  }
  return sys;
}

CoxeterPtr CoxeterSystem::typeB(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "type B rank must be positive");
  static std::mutex mutex;
  static std::map<int, CoxeterPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  std::vector<int> weights(static_cast<std::size_t>(n), 2);
  weights[0] = 1;
  auto sys = build(true, n, id, weights, [](const std::vector<int>& w, int s, bool left) {
    SignedPermutation x(w);
    return (left ? x.generatorTimes(s) : x.timesGenerator(s)).window();
  });
  cache.emplace(n, sys);
  return sys;
}

CoxeterPtr CoxeterSystem::typeA(int N) {
  if (N < 2) throw Error(Errc::InvalidArgument, "type A degree must be at least 2");
  static std::mutex mutex;
  static std::map<int, CoxeterPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  std::vector<int> id(static_cast<std::size_t>(N));
  std::iota(id.begin(), id.end(), 0);
  auto sys = build(false, N, id, std::vector<int>(static_cast<std::size_t>(N - 1), 2),
                   [](std::vector<int> p, int s, bool left) {
                     const auto j = static_cast<std::size_t>(s);
                     if (!left) {
                       std::swap(p[j], p[j + 1]);
                     } else {
                       for (auto& x : p) {
                         if (x == s) x = s + 1;
                         else if (x == s + 1) x = s;
                       }
                     }
                     return p;
                   });
  cache.emplace(N, sys);
  return sys;
}

int CoxeterSystem::firstLeftDescent(Id w) const {
  for (int s = 0; s < rank(); ++s)
    if (hasLeftDescent(s, w)) return s;
  return -1;
}

std::vector<int> CoxeterSystem::reducedWord(Id w) const {
  std::vector<int> word;
  while (w != 0) {
    const int s = firstLeftDescent(w);
    word.push_back(s);
    w = leftMul(s, w);
  }
  return word;
}

CoxeterSystem::Id CoxeterSystem::fromWord(const std::vector<int>& word) const {
  Id w = 0;
  for (int s : word) {
    if (s < 0 || s >= rank()) throw Error(Errc::IndexOutOfRange, "generator " + std::to_string(s));
    w = rightMul(s, w);
  }
  return w;
}

CoxeterSystem::Id CoxeterSystem::idOf(const std::vector<int>& form) const {
  auto it = index_.find(form);
  if (it == index_.end()) throw Error(Errc::InvalidArgument, "not an element of this group");
  return it->second;
}

SignedPermutation CoxeterSystem::signedPermutation(Id w) const {
  if (!typeB_) throw Error(Errc::InvalidArgument, "not a type B system");
  return SignedPermutation(elements_[w]);
}

HeckeElement::HeckeElement(CoxeterPtr system) : system_(std::move(system)), coeffs_(system_->size()) {}

HeckeElement HeckeElement::T(CoxeterPtr system, Id w, LaurentPoly coeff) {
  HeckeElement x(std::move(system));
  x.coeffs_.at(w) = std::move(coeff);
  return x;
}

HeckeElement HeckeElement::C(CoxeterPtr system, int s) {
  const int L = system->weight(s);
  HeckeElement x = T(system, system->leftMul(s, 0));
  x.coeffs_[0] = -LaurentPoly::monomial(L);
  return x;
}

bool HeckeElement::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.isZero(); });
}

std::vector<HeckeElement::Id> HeckeElement::support() const {
  std::vector<Id> out;
  for (std::size_t w = 0; w < coeffs_.size(); ++w)
    if (!coeffs_[w].isZero()) out.push_back(static_cast<Id>(w));
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  if (system_ != rhs.system_) throw Error(Errc::SizeMismatch, "Hecke elements of different algebras");
  for (std::size_t w = 0; w < coeffs_.size(); ++w)
    if (!rhs.coeffs_[w].isZero()) coeffs_[w] += rhs.coeffs_[w];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& rhs) {
  if (system_ != rhs.system_) throw Error(Errc::SizeMismatch, "Hecke elements of different algebras");
  for (std::size_t w = 0; w < coeffs_.size(); ++w)
    if (!rhs.coeffs_[w].isZero()) coeffs_[w] -= rhs.coeffs_[w];
  return *this;
}

void HeckeElement::addScaled(const LaurentPoly& c, const HeckeElement& rhs) {
  if (system_ != rhs.system_) throw Error(Errc::SizeMismatch, "Hecke elements of different algebras");
  if (c.isZero()) return;
  for (std::size_t w = 0; w < coeffs_.size(); ++w)
    if (!rhs.coeffs_[w].isZero()) coeffs_[w] += c * rhs.coeffs_[w];
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x) {
  HeckeElement out(x.system_);
  out.addScaled(c, x);
  return out;
}

HeckeElement HeckeElement::leftT(int s) const {
  HeckeElement out(system_);
  const LaurentPoly d = qMinusInverse(system_->weight(s));
  for (std::size_t w = 0; w < coeffs_.size(); ++w) {
    const auto& c = coeffs_[w];
    if (c.isZero()) continue;
    const Id sw = system_->leftMul(s, static_cast<Id>(w));
    out.coeffs_[sw] += c;
    if (system_->length(sw) < system_->length(static_cast<Id>(w))) out.coeffs_[w] += d * c;
  }
  return out;
}

HeckeElement HeckeElement::rightT(int s) const {
  HeckeElement out(system_);
  const LaurentPoly d = qMinusInverse(system_->weight(s));
  for (std::size_t w = 0; w < coeffs_.size(); ++w) {
    const auto& c = coeffs_[w];
    if (c.isZero()) continue;
    const Id ws = system_->rightMul(s, static_cast<Id>(w));
    out.coeffs_[ws] += c;
    if (system_->length(ws) < system_->length(static_cast<Id>(w))) out.coeffs_[w] += d * c;
  }
  return out;
}

HeckeElement HeckeElement::leftC(int s) const {
  HeckeElement out = leftT(s);
  out.addScaled(-LaurentPoly::monomial(system_->weight(s)), *this);
  return out;
}

HeckeElement HeckeElement::rightC(int s) const {
  HeckeElement out = rightT(s);
  out.addScaled(-LaurentPoly::monomial(system_->weight(s)), *this);
  return out;
}

HeckeElement multiplyT(const HeckeElement& x, const HeckeElement& y) {
  if (x.system_ != y.system_) throw Error(Errc::SizeMismatch, "Hecke elements of different algebras");
  HeckeElement out(x.system_);
  for (std::size_t w = 0; w < x.coeffs_.size(); ++w) {
    if (x.coeffs_[w].isZero()) continue;
    const auto word = x.system_->reducedWord(static_cast<HeckeElement::Id>(w));
    HeckeElement term = y;
    for (auto it = word.rbegin(); it != word.rend(); ++it) term = term.leftT(*it);
    out.addScaled(x.coeffs_[w], term);
  }
  return out;
}

namespace {

// T_s^{-1} h = T_s h - (q_s - q_s^{-1}) h
HeckeElement leftTInverse(const HeckeElement& h, int s) {
  HeckeElement out = h.leftT(s);
  out.addScaled(-qMinusInverse(h.system()->weight(s)), h);
  return out;
}

const std::vector<HeckeElement>& barTable(const CoxeterPtr& sys) {
  static std::mutex mutex;
  static std::map<const CoxeterSystem*, std::pair<CoxeterPtr, std::vector<HeckeElement>>> cache;
  std::lock_guard lock(mutex);
  auto& entry = cache[sys.get()];
  if (entry.first == sys) return entry.second;
  entry.first = sys;
  // bar(T_w) = T_{w^-1}^{-1} = T_{s}^{-1} bar(T_{sw}) for a left descent s of w
  std::vector<HeckeElement> table;
  table.reserve(sys->size());
  table.push_back(HeckeElement::one(sys));
  for (std::size_t w = 1; w < sys->size(); ++w) {
    const auto id = static_cast<CoxeterSystem::Id>(w);
    const int s = sys->firstLeftDescent(id);
    table.push_back(leftTInverse(table[sys->leftMul(s, id)], s));
  }
  entry.second = std::move(table);
  return entry.second;
}

}  // namespace

HeckeElement barInvolution(const HeckeElement& x) {
  const auto& table = barTable(x.system());
  HeckeElement out(x.system());
  for (std::size_t w = 0; w < x.coefficients().size(); ++w) {
    const auto& c = x.coefficients()[w];
    if (!c.isZero()) out.addScaled(c.bar(), table[w]);
  }
  return out;
}

int klBound(int defaultBound) {
  if (const char* env = std::getenv("BLOBCELL_KL_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "BLOBCELL_KL_MAX_N is not an integer");
    }
  }
  return defaultBound;
}

KLBasis::KLBasis(CoxeterPtr system) : system_(std::move(system)) {
  const std::size_t size = system_->size();
  basis_.reserve(size);
  std::vector<std::vector<Id>> supports;
  supports.reserve(size);
  basis_.push_back(HeckeElement::one(system_));
  supports.push_back({0});
  for (std::size_t wi = 1; wi < size; ++wi) {
    const auto w = static_cast<Id>(wi);
    const int s = system_->firstLeftDescent(w);
    HeckeElement d = basis_[system_->leftMul(s, w)].leftC(s);
    // ids are sorted by length, so C_y only touches ids below y
    for (std::size_t yi = wi; yi-- > 0;) {
      const auto& c = d.coeff(static_cast<Id>(yi));
      if (c.inPositivePart()) continue;
      const LaurentPoly neg = c.negativePart();
      const LaurentPoly mu = LaurentPoly(c.constantTerm()) + neg + neg.bar();
      for (Id z : supports[yi]) d.coeffRef(z) -= mu * basis_[yi].coeff(z);
    }
    if (!(d.coeff(w) == LaurentPoly(1)))
      throw Error(Errc::NotUnitriangular, "leading coefficient of C_w is not 1");
    for (std::size_t y = wi + 1; y < size; ++y)
      if (!d.coeff(static_cast<Id>(y)).isZero()) throw Error(Errc::NotUnitriangular, "C_w leaves its Bruhat interval");
    supports.push_back(d.support());
    basis_.push_back(std::move(d));
  }
}

std::vector<std::pair<KLBasis::Id, LaurentPoly>> KLBasis::toCBasis(HeckeElement x) const {
  if (x.system() != system_) throw Error(Errc::SizeMismatch, "element of a different algebra");
  std::vector<std::pair<Id, LaurentPoly>> out;
  for (std::size_t yi = system_->size(); yi-- > 0;) {
    const auto y = static_cast<Id>(yi);
    const LaurentPoly c = x.coeff(y);
    if (c.isZero()) continue;
    out.emplace_back(y, c);
    const auto& cy = basis_[yi].coefficients();
    for (std::size_t z = 0; z <= yi; ++z)
      if (!cy[z].isZero()) x.coeffRef(static_cast<Id>(z)) -= c * cy[z];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<KLBasis::Id, LaurentPoly>> KLBasis::leftProduct(int s, Id w) const {
  return toCBasis(basis_[w].leftC(s));
}

std::vector<std::pair<KLBasis::Id, LaurentPoly>> KLBasis::rightProduct(int s, Id w) const {
  return toCBasis(basis_[w].rightC(s));
}

const std::vector<std::vector<KLBasis::Id>>& KLBasis::leftCellEdges() const {
  if (!edges_.empty()) return edges_;
  std::vector<std::vector<Id>> edges(system_->size());
  for (std::size_t w = 0; w < system_->size(); ++w) {
    std::vector<Id> below;
    for (int s = 0; s < system_->rank(); ++s)
      for (const auto& [y, c] : leftProduct(s, static_cast<Id>(w))) below.push_back(y);
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    edges[w] = std::move(below);
  }
  edges_ = std::move(edges);
  return edges_;
}

std::vector<KLBasis::Id> KLBasis::leftIdealBelow(Id w) const {
  const auto& edges = leftCellEdges();
  std::vector<bool> seen(system_->size(), false);
  std::vector<Id> stack{w}, out;
  seen[w] = true;
  while (!stack.empty()) {
    const Id x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Id y : edges[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::vector<KLBasis::Id>>& KLBasis::leftCells() const {
  if (!cells_.empty()) return cells_;
  const std::size_t size = system_->size();
  std::vector<std::vector<bool>> reach(size);
  for (std::size_t w = 0; w < size; ++w) {
    reach[w].assign(size, false);
    for (Id y : leftIdealBelow(static_cast<Id>(w))) reach[w][y] = true;
  }
  std::vector<std::size_t> index(size, size);
  std::vector<std::vector<Id>> cells;
  for (std::size_t w = 0; w < size; ++w) {
    if (index[w] != size) continue;
    std::vector<Id> cell;
    for (std::size_t y = w; y < size; ++y)
      if (index[y] == size && reach[w][y] && reach[y][w]) {
        index[y] = cells.size();
        cell.push_back(static_cast<Id>(y));
      }
    cells.push_back(std::move(cell));
  }
  cellIndex_ = std::move(index);
  cells_ = std::move(cells);
  return cells_;
}

std::size_t KLBasis::cellOf(Id w) const {
  leftCells();
  return cellIndex_.at(w);
}

const KLBasis& computeKLBasis(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  if (n > klBound()) throw Error(Errc::BoundExceeded, "KL basis for n = " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<KLBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<KLBasis>(CoxeterSystem::typeB(n));
  return *slot;
}

const KLBasis& computeTypeAKLBasis(int N) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<KLBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[N];
  if (!slot) slot = std::make_unique<KLBasis>(CoxeterSystem::typeA(N));
  return *slot;
}

IdealJn::IdealJn(int n) : n_(n), basis_(&computeKLBasis(n)) {
  const auto& sys = *basis_->system();
  const WbTable table(n);
  inWb_.resize(sys.size());
  for (std::size_t w = 0; w < sys.size(); ++w)
    inWb_[w] = table.contains(sys.signedPermutation(static_cast<CoxeterSystem::Id>(w)));
}

bool IdealJn::contains(const HeckeElement& x) const {
  for (const auto& [y, c] : basis_->toCBasis(x))
    if (inWb_[y]) return false;
  return true;
}

std::vector<HeckeElement> IdealJn::generators() const {
  const auto& sys = basis_->system();
  std::vector<HeckeElement> gens;
  const HeckeElement c1 = HeckeElement::C(sys, 1 < sys->rank() ? 1 : 0);
  if (n_ >= 3) gens.push_back(c1.leftC(2).leftC(1) - c1);
  if (n_ >= 2) gens.push_back(c1.leftC(0).leftC(1) - gauss(2, -1) * c1);
  return gens;
}

namespace {

using ModVec = modp::Vec;

ModVec reduceMod(const HeckeElement& x) {
  ModVec out(x.coefficients().size());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = x.coefficients()[w].evalMod(modp::kPoint, modp::kPrime);
  return out;
}

ModVec multiplyMod(const CoxeterSystem& sys, const ModVec& x, int s, bool left) {
  const std::uint64_t q = modp::pow(modp::kPoint, static_cast<std::uint64_t>(sys.weight(s)));
  const std::uint64_t d = modp::sub(q, modp::inv(q));
  ModVec out(x.size(), 0);
  for (std::size_t w = 0; w < x.size(); ++w) {
    if (!x[w]) continue;
    const auto id = static_cast<CoxeterSystem::Id>(w);
    const auto sw = left ? sys.leftMul(s, id) : sys.rightMul(s, id);
    out[sw] = modp::add(out[sw], x[w]);
    if (sys.length(sw) < sys.length(id)) out[w] = modp::add(out[w], modp::mul(d, x[w]));
  }
  return out;
}

}  // namespace

IdealReport checkIdealJn(int n) {
  IdealReport report;
  report.n = n;
  const KLBasis& basis = computeKLBasis(n);
  const auto& sys = *basis.system();
  const WbTable table(n);
  std::vector<bool> inWb(sys.size());
  for (std::size_t w = 0; w < sys.size(); ++w)
    inWb[w] = table.contains(sys.signedPermutation(static_cast<CoxeterSystem::Id>(w)));

  for (std::size_t w = 0; w < sys.size(); ++w) {
    if (inWb[w]) continue;
    ++report.rank;
    for (int s = 0; s < sys.rank(); ++s) {
      for (const auto& [y, c] : basis.leftProduct(s, static_cast<CoxeterSystem::Id>(w)))
        if (inWb[y]) report.closedLeft = false;
      for (const auto& [y, c] : basis.rightProduct(s, static_cast<CoxeterSystem::Id>(w)))
        if (inWb[y]) report.closedRight = false;
    }
  }
  report.corank = sys.size() - report.rank;
  for (int i = 0; i <= n; ++i) {
    std::size_t b = 1;
    for (int j = 1; j <= i; ++j) b = b * static_cast<std::size_t>(n - i + j) / static_cast<std::size_t>(j);
    report.expectedCorank += b * b;
  }

  const IdealJn ideal(n);
  const auto gens = ideal.generators();
  for (const auto& g : gens)
    if (!ideal.contains(g)) report.containsGenerators = false;

  // two-sided closure of the generators under T_s on both sides, over F_p
  modp::EchelonSpan span;
  std::deque<ModVec> queue;
  for (const auto& g : gens) queue.push_back(reduceMod(g));
  while (!queue.empty()) {
    ModVec v = std::move(queue.front());
    queue.pop_front();
    if (!span.insert(v)) continue;
    for (int s = 0; s < sys.rank(); ++s) {
      queue.push_back(multiplyMod(sys, v, s, true));
      queue.push_back(multiplyMod(sys, v, s, false));
    }
  }
  report.generatedDimension = span.dimension();
  for (std::size_t w = 0; w < sys.size(); ++w)
    if (!inWb[w] && !span.contains(reduceMod(basis.C(static_cast<CoxeterSystem::Id>(w)))))
      report.generatedMatchesSpan = false;
  return report;
}

TypeAComparison typeAKLCompare(int n) {
  if (n > 3) throw Error(Errc::BoundExceeded, "type A comparison needs n <= 3");
  TypeAComparison report;
  report.n = n;
  if (n < 2) return report;
  const KLBasis& bBasis = computeKLBasis(n);
  const KLBasis& aBasis = computeTypeAKLBasis(2 * n);
  const auto& bSys = *bBasis.system();
  const auto& aSys = *aBasis.system();
  const WbTable table(n);
  auto iotaId = [&](CoxeterSystem::Id w) { return aSys.idOf(iota(bSys.signedPermutation(w)).oneLine()); };

  // iota(s_{n-1}) is the product of the two commuting generators sigma_{2n-2} and sigma_0
  const int hi = 2 * n - 2;
  const int lo = 0;
  for (std::size_t wi = 0; wi < bSys.size(); ++wi) {
    const auto w = static_cast<CoxeterSystem::Id>(wi);
    const auto sp = bSys.signedPermutation(w);
    if (!table.contains(sp)) continue;
    const auto bProduct = bBasis.leftProduct(n - 1, w);
    const auto aProduct = aBasis.toCBasis(aBasis.C(iotaId(w)).leftC(lo).leftC(hi));
    std::vector<bool> aNonzero(aSys.size(), false);
    for (const auto& [z, c] : aProduct) aNonzero[z] = true;
    for (const auto& [z, c] : bProduct) {
      ++report.pairsChecked;
      if (!aNonzero[iotaId(z)]) report.violations.emplace_back(sp, bSys.signedPermutation(z));
    }
  }

  for (const auto& cell : bBasis.leftCells()) {
    if (!table.contains(bSys.signedPermutation(cell.front()))) continue;
    ++report.cellsChecked;
    const std::size_t target = aBasis.cellOf(iotaId(cell.front()));
    std::vector<CoxeterSystem::Id> pulled;
    for (std::size_t z = 0; z < bSys.size(); ++z)
      if (aBasis.cellOf(iotaId(static_cast<CoxeterSystem::Id>(z))) == target)
        pulled.push_back(static_cast<CoxeterSystem::Id>(z));
    if (pulled != cell) {
      std::vector<SignedPermutation> bad;
      for (auto z : cell) bad.push_back(bSys.signedPermutation(z));
      report.cellMismatches.push_back(std::move(bad));
    }
  }
  return report;
}

CellModule cellModule(const KLBasis& basis, const SignedPermutation& w, const BlobParameters& params) {
  const auto& sys = *basis.system();
  if (!sys.isTypeB()) throw Error(Errc::InvalidArgument, "cell modules need a type B basis");
  if (!params.satisfiesCondition()) throw Error(Errc::SpecializationInvalid, "q = -q^{2m} fails");
  const int n = sys.degree();
  if (!WbTable(n).contains(w)) throw Error(Errc::NotInWb, toString(w));
  const auto& cell = basis.leftCells()[basis.cellOf(sys.idOf(w))];
  std::map<CoxeterSystem::Id, std::size_t> position;
  for (std::size_t k = 0; k < cell.size(); ++k) position.emplace(cell[k], k);

  CellModule out;
  out.n = n;
  for (auto z : cell) out.basis.push_back(sys.signedPermutation(z));
  const std::size_t d = cell.size();
  const Specialization spec = params.hecke();
  const CycloNumber u0Scale = (params.i() * (params.q() - params.q().inverse())).inverse();
  for (int s = 0; s < n; ++s) {
    Matrix<LaurentPoly> m(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [y, c] : basis.leftProduct(s, cell[j]))
        if (auto it = position.find(y); it != position.end()) m(it->second, j) = c;
    auto spec_m = m.map([&](const LaurentPoly& p) { return specialize(p, spec); });
    out.blobGenerators.push_back(s == 0 ? u0Scale * spec_m : spec_m);
    out.specialized.push_back(std::move(spec_m));
    out.action.push_back(std::move(m));
  }
  return out;
}

KLBasisReport checkKLBasis(int n) {
  const auto& basis = computeKLBasis(n);
  const auto& sys = basis.system();
  KLBasisReport r;
  r.n = n;
  r.elements = sys->size();
  for (CoxeterSystem::Id w = 0; w < sys->size(); ++w) {
    const auto& c = basis.C(w);
    if (barInvolution(c) == c) ++r.barInvariant;
    bool tri = c.coeff(w) == LaurentPoly(1);
    const auto top = sys->signedPermutation(w);
    for (CoxeterSystem::Id y = 0; y < sys->size() && tri; ++y) {
      if (y == w || c.coeff(y).isZero()) continue;
      tri = c.coeff(y).inPositivePart() && bruhatLeq(sys->signedPermutation(y), top);
    }
    if (tri) ++r.unitriangular;
  }
  if (n >= 2) {
    const auto c0 = HeckeElement::C(sys, 0), c1 = HeckeElement::C(sys, 1);
    r.blobClosedForm = basis.C(sys->fromWord({1, 0, 1})) == c1 * c0 * c1 - gauss(2, -1) * c1;
  }
  if (n >= 3) {
    const auto c1 = HeckeElement::C(sys, 1), c2 = HeckeElement::C(sys, 2);
    r.braidClosedForm = basis.C(sys->fromWord({1, 2, 1})) == c1 * c2 * c1 - c1;
  }
  return r;
}

}  // namespace blobcell
