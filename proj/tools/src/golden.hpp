#pragma once

#include <string_view>
#include <vector>

namespace blobcell::cli {

struct GoldenTable {
  int e;
  int m;
  std::string_view text;
};

/// The four ten-node conversion tables, compiled in from tools/golden.
const std::vector<GoldenTable>& goldenTables();

}  // namespace blobcell::cli
