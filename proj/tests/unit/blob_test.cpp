#include "blobcell/blob.hpp"

#include <gtest/gtest.h>

#include "blobcell/error.hpp"
#include "blobcell/hecke.hpp"
#include "blobcell/tensor.hpp"

namespace blobcell {
namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return r;
}

using S = ScaledDiagram<LaurentPoly>;

S times(const S& a, const BlobDiagram& b, const BlobScalars<LaurentPoly>& s) {
  auto r = composeDiagrams(a.diagram, b, s);
  return {a.scalar * r.scalar, r.diagram};
}

TEST(BlobDiagram, DefiningRelationsOnDiagrams) {
  const int m = 3;
  const auto s = genericBlobScalars(m);
  const auto u0 = BlobDiagram::generator(3, 0), u1 = BlobDiagram::generator(3, 1), u2 = BlobDiagram::generator(3, 2);

  const auto u0u0 = composeDiagrams(u0, u0, s);
  EXPECT_EQ(u0u0.diagram, u0);
  EXPECT_EQ(u0u0.scalar, -quantumInteger(m));

  const auto u1u0u1 = times(composeDiagrams(u1, u0, s), u1, s);
  EXPECT_EQ(u1u0u1.diagram, u1);
  EXPECT_EQ(u1u0u1.scalar, quantumInteger(m - 1));

  const auto u1u2u1 = times(composeDiagrams(u1, u2, s), u1, s);
  EXPECT_EQ(u1u2u1.diagram, u1);
  EXPECT_EQ(u1u2u1.scalar, LaurentPoly(1));

  const auto u1u1 = composeDiagrams(u1, u1, s);
  EXPECT_EQ(u1u1.scalar, -quantumInteger(2));

  EXPECT_EQ(composeDiagrams(u0, u2, s).diagram, composeDiagrams(u2, u0, s).diagram);
  EXPECT_EQ(composeDiagrams(BlobDiagram::identity(3), u1, s).diagram, u1);
}

TEST(BlobDiagram, RejectsBadInput) {
  // crossing lines
  EXPECT_THROW(BlobDiagram(2, {3, 2, 1, 0}, {false, false, false, false}), Error);
  // blob on the second propagating line
  try {
    BlobDiagram(2, {2, 3, 0, 1}, {false, true, false, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ExposureViolation);
  }
  EXPECT_THROW(BlobDiagram::generator(2, 2), Error);
  EXPECT_THROW(blobDiagramBasis(9), Error);
}

TEST(BlobDiagram, DimensionIsCentralBinomial) {
  const std::size_t expected[] = {1, 2, 6, 20, 70, 252, 924};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(blobAlgebraDimension(n), expected[n]) << n;
}

TEST(BlobDiagram, CompositionIsAssociative) {
  const auto s = genericBlobScalars(2);
  const auto basis = blobDiagramBasis(3);
  for (std::size_t a = 0; a < basis.size(); a += 3)
    for (std::size_t b = 0; b < basis.size(); b += 2)
      for (std::size_t c = 0; c < basis.size(); c += 5) {
        const auto left = times(composeDiagrams(basis[a], basis[b], s), basis[c], s);
        const auto bc = composeDiagrams(basis[b], basis[c], s);
        const auto right = composeDiagrams(basis[a], bc.diagram, s);
        EXPECT_EQ(left.diagram, right.diagram);
        EXPECT_EQ(left.scalar, bc.scalar * right.scalar);
      }
}

TEST(BlobDiagram, GeneratorsSpanTheAlgebra) {
  // every basis diagram is, up to a unit, a word in the generators
  const int n = 3;
  const auto s = genericBlobScalars(2);
  std::map<BlobDiagram, bool> reached{{BlobDiagram::identity(n), true}};
  std::vector<BlobDiagram> frontier{BlobDiagram::identity(n)};
  while (!frontier.empty()) {
    std::vector<BlobDiagram> next;
    for (const auto& d : frontier)
      for (int i = 0; i < n; ++i) {
        const auto r = composeDiagrams(BlobDiagram::generator(n, i), d, s);
        if (reached.emplace(r.diagram, true).second) next.push_back(r.diagram);
      }
    frontier = std::move(next);
  }
  EXPECT_EQ(reached.size(), blobAlgebraDimension(n));
}

TEST(Standard, DimensionsAndSumOfSquares) {
  for (int n = 0; n <= 8; ++n) {
    std::size_t squares = 0;
    for (const auto& lam : blobWeights(n)) {
      const auto basis = halfDiagrams(lam);
      EXPECT_EQ(basis.size(), binomial(n, (n - lam.value()) / 2)) << n << " " << lam.value();
      for (const auto& h : basis) {
        EXPECT_EQ(h.defectCount(), std::abs(lam.value()));
        if (h.firstDefect() >= 0) EXPECT_EQ(h.blobbed(h.firstDefect()), lam.value() < 0);
      }
      squares += basis.size() * basis.size();
      if (n >= 1 && n <= 6) EXPECT_EQ(basis.size(), permutationModule(lam).size());
    }
    if (n <= 6) EXPECT_EQ(squares, blobAlgebraDimension(n));
  }
}

TEST(Standard, ExtremeWeights) {
  const int m = 2;
  for (int n = 1; n <= 4; ++n) {
    const auto top = standardModule(BlobWeight(n, n), m);
    ASSERT_EQ(top.generators.size(), static_cast<std::size_t>(n));
    for (const auto& g : top.generators) {
      ASSERT_EQ(g.rows(), 1u);
      EXPECT_TRUE(g.isZero());
    }
    const auto bottom = standardModule(BlobWeight(n, -n), m);
    EXPECT_EQ(bottom.generators[0](0, 0), -quantumInteger(m));
    for (int i = 1; i < n; ++i) EXPECT_TRUE(bottom.generators[static_cast<std::size_t>(i)].isZero());
  }
  const auto d20 = standardModule(BlobWeight(2, 0), m);
  EXPECT_EQ(d20.labels.size(), 2u);
  EXPECT_THROW(standardModule(BlobWeight(2, 4), m), Error);
}

TEST(Presentation, RegularRepresentation) {
  for (int n = 1; n <= 4; ++n)
    for (int m : {1, 2, 3}) {
      const auto report = verifyRegularPresentation(n, m);
      EXPECT_TRUE(report.ok()) << n << " " << m;
      EXPECT_EQ(report.relations.size(), 6u);
    }
}

TEST(Presentation, StandardModules) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : blobWeights(n))
      for (int m : {2, 3}) {
        const auto report = verifyPresentation(lam, m);
        for (const auto& r : report.relations) EXPECT_EQ(r.deviation, 0u) << n << " " << lam.value() << " " << r.relation;
      }
}

TEST(Presentation, DetectsBrokenMatrices) {
  auto module = standardModule(BlobWeight(3, 1), 2);
  module.generators[1](0, 0) += LaurentPoly(1);
  EXPECT_FALSE(verifyPresentation(module.generators, genericBlobScalars(2)).ok());
}

TEST(Localization, MatchesFunctorDimensions) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lam : blobWeights(n)) {
      const auto r = localize(lam, 2);
      EXPECT_EQ(r.dimension, r.expectedDimension) << n << " " << lam.value();
      EXPECT_TRUE(r.tracesMatch) << n << " " << lam.value();
      if (std::abs(lam.value()) == n) EXPECT_EQ(r.dimension, 0u);
    }
  EXPECT_EQ(localize(BlobWeight(4, 0), 2).dimension, 2u);
  EXPECT_THROW(localize(BlobWeight(1, 1), 2), Error);
}

TEST(Localization, CornerAlgebraIsSmallerBlobAlgebra) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = checkIdempotentTruncation(n, 2);
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_EQ(r.expectedDimension, blobAlgebraDimension(n - 2));
  }
}

TEST(CellCompare, SpecializedCellModulesAreStandard) {
  const BlobParameters params;
  for (int n = 1; n <= 3; ++n) {
    const auto report = compareCellToStandard(n, params);
    for (const auto& c : report.cells) {
      EXPECT_EQ(c.cellDimension, c.standardDimension) << n << " " << toString(c.representative);
      EXPECT_TRUE(c.relationsHold) << n << " " << toString(c.representative);
      EXPECT_TRUE(c.tracesMatch) << n << " " << toString(c.representative);
      EXPECT_TRUE(c.exact) << n << " " << toString(c.representative);
    }
    EXPECT_TRUE(report.ok());
    // each Delta(lambda) occurs dim Delta(lambda) times
    std::size_t total = 0;
    for (const auto& c : report.cells) total += c.cellDimension;
    EXPECT_EQ(total, blobAlgebraDimension(n));
  }
  BlobParameters bad;
  bad.m = 1;
  EXPECT_THROW(compareCellToStandard(2, bad), Error);
}

}  // namespace
}  // namespace blobcell
