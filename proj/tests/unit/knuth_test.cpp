#include "blobcell/knuth.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "blobcell/domino.hpp"

namespace blobcell {
namespace {

using SP = SignedPermutation;

bool hasNeighbor(const SP& w, const SP& z) {
  for (const auto& [move, u] : knuthNeighbors(w))
    if (u == z) return true;
  return false;
}

TEST(Knuth, Relations) {
  EXPECT_TRUE(hasNeighbor(SP({2, 3, 1}), SP({2, 1, 3})));
  EXPECT_TRUE(hasNeighbor(SP({2, 1, 3}), SP({2, 3, 1})));
  EXPECT_TRUE(hasNeighbor(SP({1, 3, 2}), SP({3, 1, 2})));
  EXPECT_TRUE(hasNeighbor(SP({2, -1, 3}), SP({-2, -1, 3})));
  EXPECT_FALSE(hasNeighbor(SP({1, 2, 3}), SP({-1, 2, 3})));
  EXPECT_TRUE(knuthNeighbors(SP({1, 2})).empty());
  EXPECT_TRUE(knuthNeighbors(SP::identity(2)).empty());
}

TEST(Knuth, NeighborRelationIsSymmetric) {
  for (const auto& w : allSignedPermutations(4))
    for (const auto& [move, z] : knuthNeighbors(w)) EXPECT_TRUE(hasNeighbor(z, w)) << toString(w) << " " << toString(z);
}

struct Fibers {
  std::map<DominoTableau, std::vector<SP>> p, q;
};

Fibers fibersOf(int n) {
  Fibers f;
  for (const auto& w : allSignedPermutations(n)) {
    const auto pair = dominoInsert(w);
    f.p[pair.P].push_back(w);
    f.q[pair.Q].push_back(w);
  }
  return f;
}

TEST(Knuth, ClassesLieInsideInsertionFibers) {
  for (int n = 1; n <= 4; ++n) {
    const auto f = fibersOf(n);
    for (const auto& w : allSignedPermutations(n)) {
      const auto pair = dominoInsert(w);
      const auto& pf = f.p.at(pair.P);
      const auto& qf = f.q.at(pair.Q);
      for (const auto& z : placticClass(w)) ASSERT_TRUE(std::binary_search(pf.begin(), pf.end(), z)) << toString(w);
      for (const auto& z : coplacticClass(w)) ASSERT_TRUE(std::binary_search(qf.begin(), qf.end(), z)) << toString(w);
    }
  }
}

TEST(Knuth, ClassesEqualFibersUpToThree) {
  for (int n = 1; n <= 3; ++n) {
    const auto f = fibersOf(n);
    for (const auto& [t, fiber] : f.p)
      for (const auto& w : fiber) ASSERT_EQ(placticClass(w), fiber) << toString(w);
    for (const auto& [t, fiber] : f.q)
      for (const auto& w : fiber) ASSERT_EQ(coplacticClass(w), fiber) << toString(w);
  }
}

// at n = 4 the relations split some fibers
TEST(Knuth, FourLetterClassSizes) {
  std::map<std::size_t, int> classSizes, fiberSizes;
  std::set<SP> seen;
  for (const auto& w : allSignedPermutations(4)) {
    if (seen.count(w)) continue;
    const auto cls = placticClass(w);
    seen.insert(cls.begin(), cls.end());
    ++classSizes[cls.size()];
  }
  for (const auto& [t, fiber] : fibersOf(4).p) ++fiberSizes[fiber.size()];
  EXPECT_EQ(classSizes, (std::map<std::size_t, int>{{1, 4}, {2, 20}, {3, 12}, {4, 16}, {6, 40}}));
  EXPECT_EQ(fiberSizes, (std::map<std::size_t, int>{{1, 4}, {2, 4}, {3, 12}, {4, 16}, {6, 24}, {8, 16}}));
  EXPECT_NE(placticClass(SP({1, 4, 3, 2})), placticClass(SP({1, -4, 3, 2})));
  EXPECT_EQ(dominoInsert(SP({1, 4, 3, 2})).P, dominoInsert(SP({1, -4, 3, 2})).P);
}

TEST(Knuth, WbIsStable) {
  for (int n = 1; n <= 5; ++n) {
    const WbTable table(n);
    for (const auto& w : allSignedPermutations(n)) {
      if (!table.contains(w)) continue;
      for (const auto& [move, z] : knuthNeighbors(w)) EXPECT_TRUE(table.contains(z)) << toString(w) << " -> " << toString(z);
      for (const auto& z : knuthNeighbors(w.inverse())) EXPECT_TRUE(table.contains(z.second.inverse()));
    }
  }
}

TEST(Knuth, ClassBasics) {
  const SP w({3, -1, 2, -4});
  const auto cls = coplacticClass(w);
  EXPECT_TRUE(std::binary_search(cls.begin(), cls.end(), w));
  EXPECT_EQ(cls.size(), placticClass(w.inverse()).size());
  EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
  EXPECT_EQ(placticClass(SP::identity(3)).size(), 1u);
}

}  // namespace
}  // namespace blobcell
