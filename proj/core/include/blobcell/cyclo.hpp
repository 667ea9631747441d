#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "blobcell/laurent.hpp"

namespace blobcell {

using Rational = boost::multiprecision::cpp_rational;

/// Upper bound on phi(N) accepted for cyclotomic arithmetic.
inline constexpr int kDefaultConductorBound = 120;

/// Euler's totient.
int eulerPhi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomicPolynomial(int n);

/// Exact element of Q(zeta_N), stored in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
/// Conductor 1 is the rational field and mixes freely with any conductor.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(0) {}
  CycloNumber(std::int64_t value);  // NOLINT: integers embed as rationals
  explicit CycloNumber(const Rational& value);

  /// zeta_N^k.
  static CycloNumber zeta(int conductor, int k, int bound = kDefaultConductorBound);

  int conductor() const noexcept { return conductor_; }
  bool isZero() const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  CycloNumber& operator+=(const CycloNumber& rhs);
  CycloNumber& operator-=(const CycloNumber& rhs);
  CycloNumber& operator*=(const CycloNumber& rhs);
  CycloNumber operator-() const;
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  CycloNumber inverse() const;
  CycloNumber pow(int exponent) const;

  std::string toString() const;

 private:
  CycloNumber(int conductor, std::vector<Rational> coeffs);
  static CycloNumber reduce(int conductor, std::vector<Rational> raw);
  CycloNumber liftedTo(int conductor) const;

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

/// Evaluation homomorphism v -> zeta_N^k on integer Laurent polynomials.
struct Specialization {
  int conductor = 12;
  int zetaPower = 7;

  CycloNumber image() const { return CycloNumber::zeta(conductor, zetaPower); }
};

CycloNumber specialize(const LaurentPoly& p, const Specialization& spec);

/// Root of unity data for the blob algebra: q a primitive l-th root of unity and Q = i q^m,
/// all inside Q(zeta_N) with N = lcm(4, l).
struct BlobParameters {
  int m = 2;
  int l = 6;

  int conductor() const;
  CycloNumber q() const;
  CycloNumber Q() const;
  CycloNumber i() const;
  /// Hecke variable v -> Q, so that v^2 -> Q^2.
  Specialization hecke() const;
  /// Blob variable -> q.
  Specialization blob() const;
  /// q != +-1, q^l = 1 and q = -q^{2m}; also Q^2 = q so that the two specializations agree.
  bool satisfiesCondition() const;
};

}  // namespace blobcell
