#pragma once

#include <string>
#include <vector>

#include "blobcell/domino.hpp"
#include "blobcell/fock.hpp"
#include "blobcell/partitions.hpp"
#include "blobcell/weylb.hpp"

namespace blobcell::cli {

/// Integers separated by commas or given as separate tokens.
std::vector<int> parseIntegers(const std::vector<std::string>& tokens);
SignedPermutation parseWindow(const std::vector<std::string>& tokens);

/// "(6),(4)", "((6,3),(1))", "(∅),(10)"; spaces are ignored.
Bipartition parseBipartition(const std::string& text);

/// Rows separated by '/', labels by ',' or spaces, e.g. "1,1,2/3,3,2".
DominoTableau parseDominoGrid(const std::string& text);

/// "s1,s2".
Charge parseCharge(const std::string& text, int e);

}  // namespace blobcell::cli
