#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blobcell/fock.hpp"
#include "output.hpp"

namespace blobcell::cli {

struct KleshchevTable {
  int n = 0;
  int e = 0;
  int m = 0;
  Charge charge;
  /// One-line bipartition of lambda = n, n-2, ..., -n and its Kleshchev bipartition.
  std::vector<std::pair<Bipartition, Bipartition>> rows;
};

KleshchevTable kleshchevTable(int n, int e, int m);
Output kleshchevOutput(const KleshchevTable& table);

struct TableComparison {
  int e = 0;
  int m = 0;
  std::size_t rows = 0;
  std::size_t matchingRows = 0;
  bool identical = false;
  /// "-golden" / "+computed" line pairs.
  std::vector<std::string> diff;
};

/// Recomputes the four n = 10 tables and compares their pretty form with the golden copies.
std::vector<TableComparison> compareGoldenTables();

}  // namespace blobcell::cli
