#pragma once

#include <utility>
#include <vector>

#include "blobcell/weylb.hpp"

namespace blobcell {

enum class KnuthKind { K1, K2, K3 };

/// A move at window positions position, position+1 (and position+2 for K1/K2), 0-based.
struct KnuthMove {
  KnuthKind kind;
  int position;
  friend bool operator==(const KnuthMove&, const KnuthMove&) = default;
};

std::vector<std::pair<KnuthMove, SignedPermutation>> knuthNeighbors(const SignedPermutation& w);
/// Sorted lexicographically; throws BoundExceeded above enumerationBound().
std::vector<SignedPermutation> placticClass(const SignedPermutation& w);
std::vector<SignedPermutation> coplacticClass(const SignedPermutation& w);

}  // namespace blobcell
