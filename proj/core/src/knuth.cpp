#include "blobcell/knuth.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "blobcell/error.hpp"

namespace blobcell {

std::vector<std::pair<KnuthMove, SignedPermutation>> knuthNeighbors(const SignedPermutation& w) {
  std::vector<std::pair<KnuthMove, SignedPermutation>> out;
  const auto& x = w.window();
  for (std::size_t p = 0; p + 2 < x.size(); ++p) {
    const int a = x[p], b = x[p + 1], c = x[p + 2];
    // f(2) f(3) f(1) ~ f(2) f(1) f(3): the first letter is the middle value.
    if ((c < a && a < b) || (b < a && a < c)) {
      auto u = x;
      std::swap(u[p + 1], u[p + 2]);
      out.emplace_back(KnuthMove{KnuthKind::K1, static_cast<int>(p)}, SignedPermutation(std::move(u)));
    }
    // f(1) f(3) f(2) ~ f(3) f(1) f(2): the last letter is the middle value.
    if ((a < c && c < b) || (b < c && c < a)) {
      auto u = x;
      std::swap(u[p], u[p + 1]);
      out.emplace_back(KnuthMove{KnuthKind::K2, static_cast<int>(p)}, SignedPermutation(std::move(u)));
    }
  }
  if (x.size() >= 2 && std::abs(x[0]) > std::abs(x[1])) {
    auto u = x;
    u[0] = -u[0];
    out.emplace_back(KnuthMove{KnuthKind::K3, 0}, SignedPermutation(std::move(u)));
  }
  return out;
}

std::vector<SignedPermutation> placticClass(const SignedPermutation& w) {
  if (w.n() > enumerationBound()) throw Error(Errc::BoundExceeded, "plactic class enumeration above the bound");
  std::set<SignedPermutation> seen{w};
  std::vector<SignedPermutation> todo{w};
  while (!todo.empty()) {
    const SignedPermutation u = std::move(todo.back());
    todo.pop_back();
    for (auto& [move, z] : knuthNeighbors(u))
      if (seen.insert(z).second) todo.push_back(std::move(z));
  }
  return {seen.begin(), seen.end()};
}

std::vector<SignedPermutation> coplacticClass(const SignedPermutation& w) {
  std::vector<SignedPermutation> out;
  for (const auto& z : placticClass(w.inverse())) out.push_back(z.inverse());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace blobcell
