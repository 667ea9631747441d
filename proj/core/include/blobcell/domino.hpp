#pragma once

#include <string>
#include <vector>

#include "blobcell/partitions.hpp"
#include "blobcell/weylb.hpp"

namespace blobcell {

/// Row and column, 0-based, row 0 on top.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Two adjacent cells; `first` is the top or left one.
struct Domino {
  Cell first;
  Cell second;

  bool horizontal() const noexcept { return first.row == second.row; }
  bool contains(Cell c) const noexcept { return c == first || c == second; }
  friend bool operator==(const Domino&, const Domino&) = default;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

Domino makeDomino(Cell a, Cell b);

/// Domino tableau with labels 1..n; dominoes()[k] carries label k + 1.
class DominoTableau {
 public:
  DominoTableau() = default;
  /// Throws InvalidArgument unless the dominoes tile a partition shape.
  explicit DominoTableau(std::vector<Domino> dominoes);

  int n() const noexcept { return static_cast<int>(dominoes_.size()); }
  const std::vector<Domino>& dominoes() const noexcept { return dominoes_; }
  const Domino& domino(int label) const { return dominoes_.at(static_cast<std::size_t>(label - 1)); }
  Partition shape() const;
  /// Label grid by rows; every cell of the shape holds its domino's label.
  std::vector<std::vector<int>> grid() const;
  /// Labels increase along rows and down columns.
  bool isStandard() const;

  friend bool operator==(const DominoTableau&, const DominoTableau&) = default;
  friend auto operator<=>(const DominoTableau&, const DominoTableau&) = default;

 private:
  std::vector<Domino> dominoes_;
};

std::string toString(const DominoTableau& t);

struct TableauPair {
  DominoTableau P;
  DominoTableau Q;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

TableauPair dominoInsert(const SignedPermutation& w);
Partition dominoShape(const SignedPermutation& w);
/// Inverse of dominoInsert; throws ShapeMismatch for pairs of different shapes.
SignedPermutation dominoReverse(const TableauPair& pair);

/// All standard domino tableaux of the given shape (empty 2-core required).
std::vector<DominoTableau> standardDominoTableaux(const Partition& shape);

/// Rows of a standard Young tableau.
using YoungTableau = std::vector<std::vector<int>>;

struct YoungPair {
  YoungTableau P;
  YoungTableau Q;
  friend bool operator==(const YoungPair&, const YoungPair&) = default;
};

/// Classical row-insertion Robinson-Schensted; throws DuplicateLetter.
YoungPair rskTypeA(const std::vector<int>& word);
Partition youngShape(const YoungTableau& t);

}  // namespace blobcell
