#include "blobcell/tensor.hpp"

#include <algorithm>
#include <functional>

#include "blobcell/error.hpp"

namespace blobcell {

namespace {

const LaurentPoly kQ = LaurentPoly::monomial(1);
const LaurentPoly kQInv = LaurentPoly::monomial(-1);
const LaurentPoly kq = LaurentPoly::monomial(2);
const LaurentPoly kqInv = LaurentPoly::monomial(-2);

int letterAt(TensorVector::Word w, int slot) { return (w >> slot) & 1U ? 2 : 1; }

TensorVector::Word swapSlots(TensorVector::Word w, int a, int b) {
  const auto x = (w >> a) & 1U, y = (w >> b) & 1U;
  if (x == y) return w;
  return w ^ ((1U << a) | (1U << b));
}

void checkN(int n) {
  if (n < 1 || n > 20) throw Error(Errc::InvalidArgument, "tensor space size out of range");
}

}  // namespace

TensorVector::TensorVector(int n) : n_(n) {
  checkN(n);
  coeffs_.resize(std::size_t{1} << n);
}

TensorVector TensorVector::basis(const std::vector<int>& letters) {
  Word w = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k] != 1 && letters[k] != 2) throw Error(Errc::InvalidArgument, "tensor letters are 1 or 2");
    if (letters[k] == 2) w |= Word{1} << k;
  }
  return basis(static_cast<int>(letters.size()), w);
}

TensorVector TensorVector::basis(int n, Word word, LaurentPoly coeff) {
  TensorVector x(n);
  x.coeffs_.at(word) = std::move(coeff);
  return x;
}

bool TensorVector::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.isZero(); });
}

TensorVector& TensorVector::operator+=(const TensorVector& rhs) {
  if (n_ != rhs.n_) throw Error(Errc::SizeMismatch, "tensor vectors of different length");
  for (std::size_t w = 0; w < coeffs_.size(); ++w) coeffs_[w] += rhs.coeffs_[w];
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& rhs) {
  if (n_ != rhs.n_) throw Error(Errc::SizeMismatch, "tensor vectors of different length");
  for (std::size_t w = 0; w < coeffs_.size(); ++w) coeffs_[w] -= rhs.coeffs_[w];
  return *this;
}

TensorVector operator*(const LaurentPoly& c, const TensorVector& x) {
  TensorVector out = x;
  for (auto& p : out.coeffs_) p = c * p;
  return out;
}

std::vector<int> wordLetters(int n, TensorVector::Word w) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k) out.push_back(letterAt(w, k));
  return out;
}

std::string TensorVector::toString() const {
  std::string out;
  for (std::size_t w = 0; w < coeffs_.size(); ++w) {
    if (coeffs_[w].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[w].toString() + ") ";
    for (int k = 0; k < n_; ++k) out += (k ? "x" : "") + std::string("v") + std::to_string(letterAt(static_cast<Word>(w), k));
  }
  return out.empty() ? "0" : out;
}

TensorVector tensorR(int slot, const TensorVector& x) {
  // slot is 1-based: R acts on factors slot and slot + 1
  if (slot < 1 || slot >= x.n()) throw Error(Errc::IndexOutOfRange, "R-matrix slot");
  const int a = slot - 1, b = slot;
  TensorVector out(x.n());
  for (TensorVector::Word w = 0; w < x.dimension(); ++w) {
    const auto& c = x.coeff(w);
    if (c.isZero()) continue;
    const int i = letterAt(w, a), j = letterAt(w, b);
    if (i == j) {
      out.coeffRef(w) += kq * c;
    } else if (i == 2) {
      out.coeffRef(swapSlots(w, a, b)) += c;
    } else {
      out.coeffRef(swapSlots(w, a, b)) += c;
      out.coeffRef(w) += (kq - kqInv) * c;
    }
  }
  return out;
}

TensorVector tensorRInverse(int slot, const TensorVector& x) {
  TensorVector out = tensorR(slot, x);
  out -= (kq - kqInv) * x;
  return out;
}

TensorVector tensorS(int k, const TensorVector& x) {
  // S_k acts on factors k and k + 1
  if (k < 1 || k >= x.n()) throw Error(Errc::IndexOutOfRange, "S_k index");
  const int a = k - 1, b = k;
  TensorVector out(x.n());
  for (TensorVector::Word w = 0; w < x.dimension(); ++w) {
    const auto& c = x.coeff(w);
    if (c.isZero()) continue;
    if (letterAt(w, a) == letterAt(w, b)) out.coeffRef(w) += kq * c;
    else out.coeffRef(swapSlots(w, a, b)) += c;
  }
  return out;
}

TensorVector tensorVarpi(const TensorVector& x) {
  TensorVector out(x.n());
  for (TensorVector::Word w = 0; w < x.dimension(); ++w) {
    const auto& c = x.coeff(w);
    if (c.isZero()) continue;
    out.coeffRef(w) = letterAt(w, 0) == 1 ? kQ * c : -(kQInv * c);
  }
  return out;
}

TensorVector tensorAction(int gen, const TensorVector& x) {
  const int n = x.n();
  if (gen < 0 || gen >= n) throw Error(Errc::IndexOutOfRange, "generator " + std::to_string(gen));
  if (gen > 0) return tensorR(gen, x);
  TensorVector y = tensorVarpi(x);
  for (int k = 1; k <= n - 1; ++k) y = tensorS(k, y);
  for (int k = n - 1; k >= 1; --k) y = tensorRInverse(k, y);
  return y;
}

TensorVector tensorActionC(int gen, const TensorVector& x) {
  TensorVector out = tensorAction(gen, x);
  out -= (gen == 0 ? kQ : kq) * x;
  return out;
}

std::vector<TensorVector::Word> permutationModule(const BlobWeight& lambda) {
  const int n = lambda.n();
  checkN(n);
  std::vector<TensorVector::Word> out;
  for (TensorVector::Word w = 0; w < (TensorVector::Word{1} << n); ++w) {
    const int twos = __builtin_popcount(w);
    if ((n - twos) - twos == lambda.value()) out.push_back(w);
  }
  return out;
}

TensorReport checkTensorSpace(int n) {
  checkN(n);
  TensorReport report;
  report.n = n;
  using Op = std::function<TensorVector(const TensorVector&)>;
  auto T = [](int g) -> Op { return [g](const TensorVector& x) { return tensorAction(g, x); }; };
  auto C = [](int g) -> Op { return [g](const TensorVector& x) { return tensorActionC(g, x); }; };
  auto word = [](std::vector<Op> ops) -> Op {
    // rightmost operator acts first
    return [ops](const TensorVector& x) {
      TensorVector y = x;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) y = (*it)(y);
      return y;
    };
  };

  const TensorVector::Word dim = TensorVector::Word{1} << n;
  for (TensorVector::Word w = 0; w < dim; ++w) {
    const TensorVector x = TensorVector::basis(n, w);
    // quadratic relations (T - q_s)(T + q_s^{-1}) = 0
    for (int g = 0; g < n; ++g) {
      const LaurentPoly inv = g == 0 ? kQInv : kqInv;
      const TensorVector y = tensorAction(g, x);
      if (!tensorActionC(g, y + inv * x).isZero()) report.heckeRelations = false;
    }
    if (n >= 2 && !(word({T(0), T(1), T(0), T(1)})(x) == word({T(1), T(0), T(1), T(0)})(x)))
      report.heckeRelations = false;
    for (int i = 2; i < n; ++i)
      if (!(word({T(i), T(i - 1), T(i)})(x) == word({T(i - 1), T(i), T(i - 1)})(x))) report.heckeRelations = false;
    for (int i = 0; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (!(word({T(i), T(j)})(x) == word({T(j), T(i)})(x))) report.heckeRelations = false;

    if (n >= 3) {
      const TensorVector y = word({C(1), C(2), C(1)})(x) - tensorActionC(1, x);
      if (!y.isZero()) report.annihilatesFirstGenerator = false;
    }
    if (n >= 2) {
      const TensorVector y = word({C(1), C(0), C(1)})(x) - gauss(2, -1) * tensorActionC(1, x);
      if (!y.isZero()) report.annihilatesSecondGenerator = false;
    }
  }

  if (n >= 2) {
    // C_1 C_0 (v1 v2 - q v2 v1) v' = [2]_{Q/q} (v1 v2 - q v2 v1) v' for every tail v'
    for (TensorVector::Word tail = 0; tail < (dim >> 2); ++tail) {
      const TensorVector::Word w12 = (tail << 2) | 0b10U;
      const TensorVector::Word w21 = (tail << 2) | 0b01U;
      const TensorVector u = TensorVector::basis(n, w12) - kq * TensorVector::basis(n, w21);
      if (!(word({C(1), C(0)})(u) == gauss(2, -1) * u)) report.idealVanishIdentity = false;
    }
  }

  for (int lam = -n; lam <= n; lam += 2) {
    const auto words = permutationModule(BlobWeight(n, lam));
    report.permutationDimensions.push_back(words.size());
    std::vector<bool> inside(dim, false);
    for (auto w : words) inside[w] = true;
    for (auto w : words)
      for (int g = 0; g < n; ++g) {
        const TensorVector y = tensorAction(g, TensorVector::basis(n, w));
        for (TensorVector::Word z = 0; z < dim; ++z)
          if (!y.coeff(z).isZero() && !inside[z]) report.permutationModulesStable = false;
      }
  }
  return report;
}

}  // namespace blobcell
