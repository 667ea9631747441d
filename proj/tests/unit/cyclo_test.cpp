#include "blobcell/cyclo.hpp"

#include <gtest/gtest.h>

#include "blobcell/error.hpp"
#include "support/random.hpp"

namespace blobcell {
namespace {

TEST(Cyclo, CyclotomicPolynomialDegrees) {
  for (int n = 1; n <= 40; ++n) EXPECT_EQ(static_cast<int>(cyclotomicPolynomial(n).size()) - 1, eulerPhi(n)) << n;
  const std::vector<std::int64_t> phi12{1, 0, -1, 0, 1};
  EXPECT_EQ(cyclotomicPolynomial(12), phi12);
}

TEST(Cyclo, RootsOfUnity) {
  for (int n : {1, 2, 3, 4, 6, 12, 15}) {
    const auto z = CycloNumber::zeta(n, 1);
    EXPECT_EQ(z.pow(n), CycloNumber(1)) << n;
    for (int k = 1; k < n; ++k) EXPECT_NE(z.pow(k), CycloNumber(1)) << n << " " << k;
  }
}

TEST(Cyclo, FieldOperations) {
  const auto z = CycloNumber::zeta(12, 1);
  for (int trial = 0; trial < 50; ++trial) {
    CycloNumber a = 0;
    for (int k = 0; k < 4; ++k) a += CycloNumber(testing::uniform(-5, 5)) * z.pow(k);
    if (a.isZero()) continue;
    EXPECT_EQ(a * a.inverse(), CycloNumber(1));
    EXPECT_EQ(a / a, CycloNumber(1));
  }
  EXPECT_THROW(CycloNumber(0).inverse(), Error);
}

TEST(Cyclo, MixedConductorsLift) {
  const auto i = CycloNumber::zeta(4, 1);
  const auto z12 = CycloNumber::zeta(12, 1);
  EXPECT_EQ(i, z12.pow(3));
  EXPECT_EQ(CycloNumber::zeta(3, 1), z12.pow(4));
  EXPECT_EQ(i * i, CycloNumber(-1));
}

TEST(Cyclo, ConductorBound) {
  EXPECT_THROW(CycloNumber::zeta(241, 1), Error);
  EXPECT_NO_THROW(CycloNumber::zeta(241, 1, 300));
}

TEST(Cyclo, SpecializationAtTwelfthRoot) {
  // v -> z12^7: q = v^2 is a primitive 6th root, Q = v satisfies Q = i q^2 and q = -q^4.
  const Specialization spec;
  const auto q = specialize(LaurentPoly::monomial(2), spec);
  const auto Q = specialize(LaurentPoly::monomial(1), spec);
  const auto i = CycloNumber::zeta(4, 1);
  EXPECT_EQ(q.pow(6), CycloNumber(1));
  EXPECT_NE(q.pow(3), CycloNumber(1));
  EXPECT_NE(q.pow(2), CycloNumber(1));
  EXPECT_EQ(Q, i * q.pow(2));
  EXPECT_EQ(q, -q.pow(4));
  EXPECT_EQ(Q * Q, q);
  EXPECT_EQ(specialize(gauss(2, 2), spec), q + q.inverse());
}

TEST(Cyclo, SpecializationIsHomomorphism) {
  const Specialization spec;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::randomLaurent(), b = testing::randomLaurent();
    EXPECT_EQ(specialize(a * b, spec), specialize(a, spec) * specialize(b, spec));
    EXPECT_EQ(specialize(a + b, spec), specialize(a, spec) + specialize(b, spec));
  }
}

}  // namespace
}  // namespace blobcell
