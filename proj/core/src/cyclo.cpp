#include "blobcell/cyclo.hpp"

#include <numeric>

#include <map>
#include <mutex>

#include "blobcell/error.hpp"

namespace blobcell {
namespace {

std::vector<std::int64_t> polyDivExact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> quot(num.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t q = num[k + den.size() - 1] / den.back();
    quot[k] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
  }
  return quot;
}

}  // namespace

int eulerPhi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomicPolynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto it = cache.find(d);
    if (it == cache.end()) {
      // Compute recursively without holding duplicated state.
      std::vector<std::int64_t> sub(static_cast<std::size_t>(d) + 1, 0);
      sub.front() = -1;
      sub.back() = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) sub = polyDivExact(sub, cache.at(e));
      it = cache.emplace(d, sub).first;
    }
    poly = polyDivExact(poly, it->second);
  }
  return cache.emplace(n, poly).first->second;
}

CycloNumber::CycloNumber(std::int64_t value) : conductor_(1), coeffs_{Rational(value)} {}

CycloNumber::CycloNumber(const Rational& value) : conductor_(1), coeffs_{value} {}

CycloNumber::CycloNumber(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycloNumber CycloNumber::reduce(int conductor, std::vector<Rational> raw) {
  const auto& phi = cyclotomicPolynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > deg;) {
    const Rational top = raw[k];
    if (top == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) raw[k - deg + j] -= top * phi[j];
  }
  raw.resize(deg, Rational(0));
  return CycloNumber(conductor, std::move(raw));
}

CycloNumber CycloNumber::zeta(int conductor, int k, int bound) {
  if (conductor < 1) throw Error(Errc::InvalidArgument, "conductor must be positive");
  if (eulerPhi(conductor) > bound)
    throw Error(Errc::ConductorOverflow, "phi(" + std::to_string(conductor) + ") exceeds bound");
  k %= conductor;
  if (k < 0) k += conductor;
  std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
  raw.back() = 1;
  if (conductor == 1) return CycloNumber(1);
  return reduce(conductor, std::move(raw));
}

CycloNumber CycloNumber::liftedTo(int conductor) const {
  if (conductor_ == conductor) return *this;
  if (conductor % conductor_ != 0) throw Error(Errc::InvalidArgument, "conductor does not divide the target field");
  if (eulerPhi(conductor) > kDefaultConductorBound)
    throw Error(Errc::ConductorOverflow, "phi(" + std::to_string(conductor) + ") exceeds bound");
  // zeta_a = zeta_N^(N/a)
  const std::size_t step = static_cast<std::size_t>(conductor / conductor_);
  std::vector<Rational> raw(coeffs_.size() * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return reduce(conductor, std::move(raw));
}

bool CycloNumber::isZero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
  const int n = std::lcm(conductor_, rhs.conductor_);
  *this = liftedTo(n);
  const CycloNumber other = rhs.liftedTo(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) { return *this += -rhs; }

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
  const int n = std::lcm(conductor_, rhs.conductor_);
  const CycloNumber a = liftedTo(n);
  const CycloNumber b = rhs.liftedTo(n);
  if (n == 1) return *this = CycloNumber(a.coeffs_[0] * b.coeffs_[0]);
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return *this = reduce(n, std::move(raw));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) { return (a - b).isZero(); }

CycloNumber CycloNumber::inverse() const {
  if (isZero()) throw Error(Errc::NotInvertible, "inverse of zero");
  if (conductor_ == 1) return CycloNumber(Rational(1) / coeffs_[0]);
  // Solve M y = e_0 where M is multiplication by *this on the power basis.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    const CycloNumber col = *this * zeta(conductor_, static_cast<int>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw Error(Errc::NotInvertible, "singular multiplication map");
    std::swap(m[piv], m[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = m[i][d];
  return CycloNumber(conductor_, std::move(y));
}

CycloNumber CycloNumber::pow(int exponent) const {
  CycloNumber base = exponent < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  CycloNumber result(1);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string CycloNumber::toString() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::string c = coeffs_[i].str();
    if (!out.empty()) out += c.front() == '-' ? " - " : " + ";
    else if (c.front() == '-') out += "-";
    if (c.front() == '-') c.erase(0, 1);
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += "z" + std::to_string(conductor_);
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

CycloNumber specialize(const LaurentPoly& p, const Specialization& spec) {
  CycloNumber out(0);
  for (const auto& [e, c] : p.terms())
    out += CycloNumber(c) * CycloNumber::zeta(spec.conductor, spec.zetaPower * e);
  return out;
}

int BlobParameters::conductor() const {
  if (l < 1) throw Error(Errc::InvalidArgument, "l must be positive");
  return std::lcm(4, l);
}

CycloNumber BlobParameters::q() const { return CycloNumber::zeta(conductor(), conductor() / l); }
CycloNumber BlobParameters::i() const { return CycloNumber::zeta(conductor(), conductor() / 4); }
CycloNumber BlobParameters::Q() const { return i() * q().pow(m); }

Specialization BlobParameters::hecke() const {
  const int N = conductor();
  return {N, ((N / 4 + m * (N / l)) % N + N) % N};
}

Specialization BlobParameters::blob() const { return {conductor(), conductor() / l}; }

bool BlobParameters::satisfiesCondition() const {
  const CycloNumber qq = q();
  if (qq == CycloNumber(1) || qq == CycloNumber(-1)) return false;
  if (!(qq.pow(l) == CycloNumber(1))) return false;
  if (!(qq == -qq.pow(2 * m))) return false;
  return Q() * Q() == qq;
}

}  // namespace blobcell
