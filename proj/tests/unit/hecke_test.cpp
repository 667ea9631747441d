#include "blobcell/hecke.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "blobcell/domino.hpp"
#include "blobcell/error.hpp"
#include "support/random.hpp"

namespace blobcell {
namespace {

using SP = SignedPermutation;
using testing::randomLaurent;
using testing::uniform;

const LaurentPoly v = LaurentPoly::monomial(1);
const LaurentPoly vInv = LaurentPoly::monomial(-1);
const LaurentPoly q = LaurentPoly::monomial(2);
const LaurentPoly qInv = LaurentPoly::monomial(-2);

HeckeElement T(const CoxeterPtr& sys, const CoxeterWord& word) { return HeckeElement::T(sys, sys->fromWord(word)); }

HeckeElement randomElement(const CoxeterPtr& sys, int terms = 5) {
  HeckeElement x(sys);
  for (int t = 0; t < terms; ++t)
    x.coeffRef(static_cast<CoxeterSystem::Id>(uniform(0, static_cast<int>(sys->size()) - 1))) += randomLaurent(2, 3, 4);
  return x;
}

TEST(Coxeter, GroupOrdersAndLengths) {
  EXPECT_EQ(CoxeterSystem::typeB(3)->size(), 48u);
  EXPECT_EQ(CoxeterSystem::typeB(4)->size(), 384u);
  EXPECT_EQ(CoxeterSystem::typeA(4)->size(), 24u);
  const auto sys = CoxeterSystem::typeB(4);
  for (CoxeterSystem::Id w = 0; w < sys->size(); ++w) {
    const auto sp = sys->signedPermutation(w);
    EXPECT_EQ(sys->length(w), length(sp));
    EXPECT_EQ(sys->idOf(sp), w);
    EXPECT_EQ(sys->signedPermutation(sys->inverse(w)), sp.inverse());
    EXPECT_EQ(sys->fromWord(sys->reducedWord(w)), w);
    if (w > 0) EXPECT_GE(sys->length(w), sys->length(w - 1));
  }
  EXPECT_EQ(sys->signedPermutation(sys->fromWord({0, 1, 2})), SP({2, 3, -1, 4}));
}

TEST(Hecke, QuadraticAndBraidRelations) {
  const auto sys = CoxeterSystem::typeB(3);
  const auto one = HeckeElement::one(sys);
  const auto t0 = T(sys, {0});
  EXPECT_EQ(t0 * t0, one + (v - vInv) * t0);
  const auto t1 = T(sys, {1});
  EXPECT_EQ(t1 * t1, one + (q - qInv) * t1);
  const auto t2 = T(sys, {2});
  EXPECT_EQ(t1 * t0 * t1 * t0, t0 * t1 * t0 * t1);
  EXPECT_EQ(t2 * t1 * t2, t1 * t2 * t1);
  EXPECT_EQ(t0 * t2, t2 * t0);
  const auto w = T(sys, {1, 0, 1, 2});
  EXPECT_EQ(w * one, w);
  EXPECT_EQ(one * w, w);
  EXPECT_EQ(t1 * t0 * t1 * t2, w);

  const auto a = CoxeterSystem::typeA(4);
  const auto s0 = T(a, {0}), s1 = T(a, {1}), s2 = T(a, {2});
  EXPECT_EQ(s0 * s1 * s0, s1 * s0 * s1);
  EXPECT_EQ(s0 * s2, s2 * s0);
  EXPECT_EQ(s0 * s0, HeckeElement::one(a) + (q - qInv) * s0);
}

TEST(Hecke, MultiplicationIsAssociativeAndMatchesOneSidedRules) {
  const auto sys = CoxeterSystem::typeB(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = randomElement(sys), y = randomElement(sys), z = randomElement(sys);
    EXPECT_EQ((x * y) * z, x * (y * z));
    const int s = uniform(0, 2);
    EXPECT_EQ(x.leftT(s), T(sys, {s}) * x);
    EXPECT_EQ(x.rightT(s), x * T(sys, {s}));
  }
}

TEST(Hecke, BarInvolution) {
  const auto sys = CoxeterSystem::typeB(3);
  const auto one = HeckeElement::one(sys);
  EXPECT_EQ(barInvolution(T(sys, {0})), T(sys, {0}) - v * one + vInv * one);
  EXPECT_EQ(barInvolution(T(sys, {1})), T(sys, {1}) - q * one + qInv * one);
  EXPECT_EQ(barInvolution(HeckeElement::C(sys, 0)), HeckeElement::C(sys, 0));
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = randomElement(sys), y = randomElement(sys);
    EXPECT_EQ(barInvolution(barInvolution(x)), x);
    EXPECT_EQ(barInvolution(x * y), barInvolution(x) * barInvolution(y));
  }
}

TEST(KL, SmallClosedForms) {
  const auto& b2 = computeKLBasis(2);
  const auto sys2 = b2.system();
  EXPECT_EQ(b2.C(sys2->fromWord({0})), T(sys2, {0}) - v * HeckeElement::one(sys2));
  const auto c0 = HeckeElement::C(sys2, 0), c1 = HeckeElement::C(sys2, 1);
  EXPECT_EQ(b2.C(sys2->fromWord({1, 0, 1})), c1 * c0 * c1 - gauss(2, -1) * c1);

  const auto& b3 = computeKLBasis(3);
  const auto sys3 = b3.system();
  const auto d0 = HeckeElement::C(sys3, 0), d1 = HeckeElement::C(sys3, 1), d2 = HeckeElement::C(sys3, 2);
  EXPECT_EQ(b3.C(sys3->fromWord({1, 2, 1})), d1 * d2 * d1 - d1);
  EXPECT_EQ(b3.C(sys3->fromWord({1, 0, 1})), d1 * d0 * d1 - gauss(2, -1) * d1);
  // Q q^-1 has negative degree, so C_1 C_0 C_1 is not yet the basis element
  EXPECT_FALSE((d1 * d0 * d1).coeff(sys3->fromWord({1})).inPositivePart());
}

TEST(KL, DefiningConditionsUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    const auto& basis = computeKLBasis(n);
    const auto& sys = *basis.system();
    for (CoxeterSystem::Id w = 0; w < sys.size(); ++w) {
      const auto& c = basis.C(w);
      ASSERT_EQ(barInvolution(c), c) << n << " " << toString(sys.signedPermutation(w));
      ASSERT_EQ(c.coeff(w), LaurentPoly(1));
      for (CoxeterSystem::Id y = 0; y < sys.size(); ++y)
        if (y != w) ASSERT_TRUE(c.coeff(y).inPositivePart());
    }
  }
}

TEST(KL, TypeADefiningConditions) {
  const auto& basis = computeTypeAKLBasis(4);
  for (CoxeterSystem::Id w = 0; w < basis.system()->size(); ++w) {
    EXPECT_EQ(barInvolution(basis.C(w)), basis.C(w));
    for (CoxeterSystem::Id y = 0; y < w; ++y) EXPECT_TRUE(basis.C(w).coeff(y).inPositivePart());
  }
}

TEST(KL, CBasisRoundTrip) {
  const auto& basis = computeKLBasis(3);
  const auto sys = basis.system();
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = randomElement(sys);
    HeckeElement back(sys);
    for (const auto& [y, c] : basis.toCBasis(x)) back.addScaled(c, basis.C(y));
    EXPECT_EQ(back, x);
  }
}

TEST(Cells, TypeALeftCellsAreRobinsonSchenstedFibers) {
  for (int N : {3, 4}) {
    const auto& basis = computeTypeAKLBasis(N);
    const auto& sys = *basis.system();
    std::map<YoungTableau, std::set<CoxeterSystem::Id>> byP, byQ;
    for (CoxeterSystem::Id w = 0; w < sys.size(); ++w) {
      const auto pair = rskTypeA(sys.element(w));
      byP[pair.P].insert(w);
      byQ[pair.Q].insert(w);
    }
    std::set<std::set<CoxeterSystem::Id>> pSets, qSets, cells;
    for (auto& [t, s] : byP) pSets.insert(s);
    for (auto& [t, s] : byQ) qSets.insert(s);
    for (const auto& cell : basis.leftCells()) cells.insert(std::set<CoxeterSystem::Id>(cell.begin(), cell.end()));
    EXPECT_TRUE(cells == pSets || cells == qSets) << N;
  }
}

TEST(Cells, TypeBLeftCellsAreDominoFibers) {
  for (int n = 1; n <= 4; ++n) {
    const auto& basis = computeKLBasis(n);
    const auto& sys = *basis.system();
    std::map<DominoTableau, std::set<CoxeterSystem::Id>> byP, byQ;
    for (CoxeterSystem::Id w = 0; w < sys.size(); ++w) {
      const auto pair = dominoInsert(sys.signedPermutation(w));
      byP[pair.P].insert(w);
      byQ[pair.Q].insert(w);
    }
    std::set<std::set<CoxeterSystem::Id>> pSets, qSets, cells;
    for (auto& [t, s] : byP) pSets.insert(s);
    for (auto& [t, s] : byQ) qSets.insert(s);
    for (const auto& cell : basis.leftCells()) cells.insert(std::set<CoxeterSystem::Id>(cell.begin(), cell.end()));
    EXPECT_TRUE(cells == pSets || cells == qSets) << n;
  }
}

TEST(Cells, RespectWbAndInversion) {
  for (int n = 1; n <= 4; ++n) {
    const auto& basis = computeKLBasis(n);
    const auto& sys = *basis.system();
    const WbTable table(n);
    std::multiset<std::size_t> sizes, inverseSizes;
    for (const auto& cell : basis.leftCells()) {
      const bool first = table.contains(sys.signedPermutation(cell.front()));
      for (auto w : cell) EXPECT_EQ(table.contains(sys.signedPermutation(w)), first);
    }
    for (CoxeterSystem::Id w = 0; w < sys.size(); ++w) {
      sizes.insert(basis.leftCells()[basis.cellOf(w)].size());
      inverseSizes.insert(basis.leftCells()[basis.cellOf(sys.inverse(w))].size());
    }
    EXPECT_EQ(sizes, inverseSizes);
  }
  const auto& b1 = computeKLBasis(1);
  EXPECT_EQ(b1.leftCells().size(), 2u);
}

TEST(Ideal, MembershipExamples) {
  const IdealJn j3(3);
  const auto& basis = computeKLBasis(3);
  const auto sys = basis.system();
  EXPECT_TRUE(j3.contains(basis.C(sys->fromWord({1, 2, 1}))));
  EXPECT_TRUE(j3.contains(HeckeElement(sys)));
  EXPECT_FALSE(j3.contains(basis.C(sys->fromWord({0}))));
  for (const auto& g : j3.generators()) EXPECT_TRUE(j3.contains(g));
  EXPECT_EQ(j3.generators().size(), 2u);
}

TEST(Ideal, SpanOfNonWbIsTheIdealGeneratedByJn) {
  const std::size_t expected[] = {0, 2, 6, 20, 70};
  for (int n = 1; n <= 4; ++n) {
    const auto report = checkIdealJn(n);
    EXPECT_TRUE(report.closedLeft) << n;
    EXPECT_TRUE(report.closedRight) << n;
    EXPECT_TRUE(report.containsGenerators) << n;
    EXPECT_EQ(report.corank, expected[n]);
    EXPECT_EQ(report.expectedCorank, expected[n]);
    EXPECT_EQ(report.generatedDimension, report.rank) << n;
    EXPECT_TRUE(report.generatedMatchesSpan) << n;
    EXPECT_TRUE(report.ok());
  }
}

TEST(TypeA, StructureConstantTransferSmall) {
  EXPECT_EQ(typeAKLCompare(1).pairsChecked, 0u);
  const auto r2 = typeAKLCompare(2);
  EXPECT_GT(r2.pairsChecked, 0u);
  EXPECT_TRUE(r2.violations.empty());
  EXPECT_TRUE(r2.cellMismatches.empty());
  EXPECT_THROW(typeAKLCompare(4), Error);
}

TEST(TypeA, StructureConstantTransferThree) {
  const auto r = typeAKLCompare(3);
  EXPECT_GT(r.pairsChecked, 0u);
  EXPECT_GT(r.cellsChecked, 0u);
  EXPECT_TRUE(r.ok());
}

TEST(CellModule, ActionSatisfiesHeckeQuadratic) {
  const auto& basis = computeKLBasis(3);
  const BlobParameters params;
  const auto cm = cellModule(basis, SP({2, 1, 3}), params);
  ASSERT_EQ(cm.basis.size(), 3u);
  ASSERT_EQ(cm.action.size(), 3u);
  for (int s = 0; s < 3; ++s) {
    const auto& c = cm.action[static_cast<std::size_t>(s)];
    // C_s^2 = -(q_s + q_s^-1) C_s
    const LaurentPoly k = s == 0 ? -(v + vInv) : -(q + qInv);
    EXPECT_EQ(c * c, k * c) << s;
  }
  EXPECT_THROW(cellModule(basis, SP({3, 2, 1}), params), Error);
  BlobParameters bad;
  bad.l = 5;
  EXPECT_THROW(cellModule(basis, SP({1, 2, 3}), bad), Error);
}

TEST(KL, ReportUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = checkKLBasis(n);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_EQ(r.elements, groupOrder(n));
  }
  EXPECT_EQ(checkKLBasis(4).elements, 384u);
}

}  // namespace
}  // namespace blobcell
