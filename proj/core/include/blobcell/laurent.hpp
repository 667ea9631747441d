#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blobcell {

/// Integer Laurent polynomial in one variable, stored densely between its
/// lowest and highest nonzero exponent. The zero polynomial has no terms.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT: integers embed as constants

  static LaurentPoly monomial(int exponent, Coeff coeff = 1);
  static LaurentPoly fromTerms(const std::vector<std::pair<int, Coeff>>& terms);

  bool isZero() const noexcept { return coeffs_.empty(); }
  int minExponent() const noexcept { return low_; }
  int maxExponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int exponent) const noexcept;
  Coeff constantTerm() const noexcept { return coeff(0); }
  std::size_t termCount() const noexcept;
  std::vector<std::pair<int, Coeff>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  bool isBarInvariant() const { return *this == bar(); }
  /// Terms with exponent > 0.
  LaurentPoly positivePart() const;
  /// Terms with exponent < 0.
  LaurentPoly negativePart() const;
  /// True iff every term has exponent > 0 (zero included).
  bool inPositivePart() const noexcept { return isZero() || low_ > 0; }
  /// v -> v^k.
  LaurentPoly substitute(int k) const;
  /// v -> v * shift: multiplies by v^shift.
  LaurentPoly shifted(int shift) const;

  /// Exact quotient in Z[v, v^-1], or nullopt if the division leaves a remainder.
  std::optional<LaurentPoly> divideExact(const LaurentPoly& divisor) const;

  /// Evaluation at an integer point modulo a prime (used for generic-rank checks).
  std::uint64_t evalMod(std::uint64_t point, std::uint64_t prime) const;

  /// Printable form, lowest exponent first: "v^-2 + 3 + v".
  std::string toString(std::string_view var = "v") const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Balanced Gaussian integer [n]_x = x^{n-1} + x^{n-3} + ... + x^{1-n} with x = v^k.
LaurentPoly gauss(int n, int k = 1);

/// Quantum integer [m] = (v^m - v^-m)/(v - v^-1) for any integer m, [-m] = -[m].
LaurentPoly quantumInteger(int m);

/// [a]! = [1][2]...[a] in the variable v.
LaurentPoly quantumFactorial(int a);

}  // namespace blobcell
