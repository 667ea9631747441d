#pragma once

#include <random>

#include "blobcell/laurent.hpp"

namespace blobcell::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eedb10bULL);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline LaurentPoly randomLaurent(int terms = 4, int span = 5, int coeffRange = 6) {
  LaurentPoly p;
  for (int t = 0; t < terms; ++t) p += LaurentPoly::monomial(uniform(-span, span), uniform(-coeffRange, coeffRange));
  return p;
}

}  // namespace blobcell::testing
