#include "blobcell/laurent.hpp"

#include <algorithm>

#include "blobcell/error.hpp"

namespace blobcell {
namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checkedAdd(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "Laurent coefficient addition");
  return out;
}

Coeff checkedMul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "Laurent coefficient product");
  return out;
}

__extension__ typedef unsigned __int128 Wide;

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % p);
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mulMod(result, base, p);
    base = mulMod(base, base, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::fromTerms(const std::vector<std::pair<int, Coeff>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const noexcept {
  if (coeffs_.empty() || exponent < low_ || exponent > maxExponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPoly::termCount() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](Coeff c) { return c != 0; }).base();
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_ = std::vector<Coeff>(first, last);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.isZero()) return *this;
  if (isZero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(maxExponent(), rhs.maxExponent());
  std::vector<Coeff> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(rhs.low_ - lo) + i];
    slot = checkedAdd(slot, rhs.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = checkedMul(c, -1);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.isZero() || b.isZero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      auto& slot = p.coeffs_[i + j];
      slot = checkedAdd(slot, checkedMul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (isZero()) return p;
  p.low_ = -maxExponent();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

LaurentPoly LaurentPoly::positivePart() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms())
    if (e > 0) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::negativePart() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms())
    if (e < 0) p += monomial(e, c);
  return p;
}

LaurentPoly LaurentPoly::substitute(int k) const {
  if (k == 0) {
    Coeff sum = 0;
    for (Coeff c : coeffs_) sum = checkedAdd(sum, c);
    return LaurentPoly(sum);
  }
  LaurentPoly p;
  for (const auto& [e, c] : terms()) p += monomial(e * k, c);
  return p;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly p = *this;
  if (!p.isZero()) p.low_ += shift;
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divideExact(const LaurentPoly& divisor) const {
  if (divisor.isZero()) throw Error(Errc::InvalidArgument, "division by zero Laurent polynomial");
  if (isZero()) return LaurentPoly();
  // Work with ordinary polynomials: remainder coefficients, lowest degree first.
  std::vector<Coeff> rem = coeffs_;
  const std::vector<Coeff>& d = divisor.coeffs_;
  if (rem.size() < d.size()) return std::nullopt;
  const Coeff lead = d.back();
  std::vector<Coeff> quot(rem.size() - d.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Coeff top = rem[k + d.size() - 1];
    if (top % lead != 0) return std::nullopt;
    const Coeff q = top / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = checkedAdd(rem[k + j], checkedMul(-q, d[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](Coeff c) { return c != 0; })) return std::nullopt;
  LaurentPoly q;
  q.low_ = low_ - divisor.low_;
  q.coeffs_ = std::move(quot);
  q.normalize();
  return q;
}

std::uint64_t LaurentPoly::evalMod(std::uint64_t point, std::uint64_t prime) const {
  if (isZero()) return 0;
  const std::uint64_t inv = powMod(point, prime - 2, prime);
  const std::uint64_t base = low_ >= 0 ? powMod(point, static_cast<std::uint64_t>(low_), prime)
                                       : powMod(inv, static_cast<std::uint64_t>(-low_), prime);
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Coeff c = coeffs_[i];
    const std::uint64_t cm = c >= 0 ? static_cast<std::uint64_t>(c) % prime
                                    : (prime - static_cast<std::uint64_t>(-c) % prime) % prime;
    acc = (mulMod(acc, point % prime, prime) + cm) % prime;
  }
  return mulMod(acc, base, prime);
}

std::string LaurentPoly::toString(std::string_view var) const {
  if (isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly gauss(int n, int k) {
  if (n < 0) throw Error(Errc::NegativeN, "gauss: n = " + std::to_string(n));
  LaurentPoly p;
  for (int j = 0; j < n; ++j) p += LaurentPoly::monomial(k * (n - 1 - 2 * j));
  return p;
}

LaurentPoly quantumInteger(int m) { return m >= 0 ? gauss(m) : -gauss(-m); }

LaurentPoly quantumFactorial(int a) {
  if (a < 0) throw Error(Errc::NegativeN, "quantumFactorial: a = " + std::to_string(a));
  LaurentPoly p(1);
  for (int j = 1; j <= a; ++j) p *= gauss(j);
  return p;
}

}  // namespace blobcell
