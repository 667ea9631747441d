#include "blobcell/domino.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blobcell/error.hpp"

namespace blobcell {
namespace {

// Row lengths of the union of the given dominoes (assumed to form a partition).
std::vector<int> rowLengths(const std::vector<Domino>& dominoes) {
  std::vector<int> rows;
  for (const auto& d : dominoes) {
    for (Cell c : {d.first, d.second}) {
      if (static_cast<int>(rows.size()) <= c.row) rows.resize(static_cast<std::size_t>(c.row) + 1, 0);
      rows[static_cast<std::size_t>(c.row)] = std::max(rows[static_cast<std::size_t>(c.row)], c.col + 1);
    }
  }
  return rows;
}

int rowLength(const std::vector<int>& rows, int r) {
  return r < static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(r)] : 0;
}

int columnHeight(const std::vector<int>& rows, int c) {
  int h = 0;
  while (h < static_cast<int>(rows.size()) && rows[static_cast<std::size_t>(h)] > c) ++h;
  return h;
}

int overlap(const Domino& a, const Domino& b) {
  return (b.contains(a.first) ? 1 : 0) + (b.contains(a.second) ? 1 : 0);
}

// The 2x2 box spanned by two dominoes sharing one cell, minus `remove`.
Domino boxMinus(const Domino& a, const Domino& b, const Domino& remove) {
  const int r0 = std::min({a.first.row, b.first.row});
  const int c0 = std::min({a.first.col, b.first.col});
  std::vector<Cell> rest;
  for (int r = r0; r < r0 + 2; ++r)
    for (int c = c0; c < c0 + 2; ++c)
      if (!remove.contains({r, c})) rest.push_back({r, c});
  if (rest.size() != 2) throw Error(Errc::InvalidArgument, "dominoes do not span a 2x2 box");
  return makeDomino(rest[0], rest[1]);
}

// Dominoes with labels < y of a partially built tableau (index = label - 1, possibly unset).
std::vector<Domino> below(const std::vector<Domino>& t, const std::vector<bool>& present, int y) {
  std::vector<Domino> out;
  for (int l = 1; l < y; ++l)
    if (present[static_cast<std::size_t>(l - 1)]) out.push_back(t[static_cast<std::size_t>(l - 1)]);
  return out;
}

struct InsertState {
  std::vector<Domino> dominoes;  // indexed by label - 1
  std::vector<bool> present;
};

// Inserts the signed letter x; returns the cells added to the shape.
Domino insertLetter(InsertState& s, int x) {
  const int a = std::abs(x);
  const auto rows = rowLengths(below(s.dominoes, s.present, a));
  Domino e;
  if (x > 0) {
    const int len = rowLength(rows, 0);
    e = makeDomino({0, len}, {0, len + 1});
  } else {
    const int h = columnHeight(rows, 0);
    e = makeDomino({h, 0}, {h + 1, 0});
  }
  s.dominoes[static_cast<std::size_t>(a - 1)] = e;
  s.present[static_cast<std::size_t>(a - 1)] = true;
  for (int y = a + 1; y <= static_cast<int>(s.dominoes.size()); ++y) {
    if (!s.present[static_cast<std::size_t>(y - 1)]) continue;
    Domino& d = s.dominoes[static_cast<std::size_t>(y - 1)];
    const int k = overlap(d, e);
    if (k == 0) continue;
    if (k == 1) {
      const Domino moved = boxMinus(d, e, e);
      const Domino grown = boxMinus(d, e, d);
      d = moved;
      e = grown;
      continue;
    }
    const auto lower = rowLengths(below(s.dominoes, s.present, y));
    // `lower` already contains e (the cells of d), so the shape it describes is that of T'_{<y}.
    if (d.horizontal()) {
      const int r = d.first.row + 1;
      const int len = rowLength(lower, r);
      d = makeDomino({r, len}, {r, len + 1});
    } else {
      const int c = d.first.col + 1;
      const int h = columnHeight(lower, c);
      d = makeDomino({h, c}, {h + 1, c});
    }
    e = d;
  }
  return e;
}

}  // namespace

Domino makeDomino(Cell a, Cell b) {
  if (b < a) std::swap(a, b);
  const bool adjacent = (a.row == b.row && b.col == a.col + 1) || (a.col == b.col && b.row == a.row + 1);
  if (!adjacent || a.row < 0 || a.col < 0) throw Error(Errc::InvalidArgument, "cells do not form a domino");
  return Domino{a, b};
}

DominoTableau::DominoTableau(std::vector<Domino> dominoes) : dominoes_(std::move(dominoes)) {
  std::set<Cell> cells;
  for (const auto& d : dominoes_) {
    makeDomino(d.first, d.second);
    if (!cells.insert(d.first).second || !cells.insert(d.second).second)
      throw Error(Errc::InvalidArgument, "overlapping dominoes");
  }
  const auto rows = rowLengths(dominoes_);
  std::size_t count = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0 && rows[r] > rows[r - 1]) throw Error(Errc::InvalidArgument, "dominoes do not tile a partition");
    count += static_cast<std::size_t>(rows[r]);
  }
  if (count != cells.size()) throw Error(Errc::InvalidArgument, "dominoes do not tile a partition");
}

Partition DominoTableau::shape() const { return Partition(rowLengths(dominoes_)); }

std::vector<std::vector<int>> DominoTableau::grid() const {
  const auto rows = rowLengths(dominoes_);
  std::vector<std::vector<int>> g;
  for (int len : rows) g.emplace_back(static_cast<std::size_t>(len), 0);
  for (int label = 1; label <= n(); ++label) {
    const auto& d = domino(label);
    g[static_cast<std::size_t>(d.first.row)][static_cast<std::size_t>(d.first.col)] = label;
    g[static_cast<std::size_t>(d.second.row)][static_cast<std::size_t>(d.second.col)] = label;
  }
  return g;
}

bool DominoTableau::isStandard() const {
  const auto g = grid();
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g[r].size(); ++c) {
      if (c + 1 < g[r].size() && g[r][c] > g[r][c + 1]) return false;
      if (r + 1 < g.size() && c < g[r + 1].size() && g[r][c] > g[r + 1][c]) return false;
    }
  }
  return true;
}

std::string toString(const DominoTableau& t) {
  std::string out;
  for (const auto& row : t.grid()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c]);
    }
    out += '\n';
  }
  return out;
}

TableauPair dominoInsert(const SignedPermutation& w) {
  const int n = w.n();
  InsertState s{std::vector<Domino>(static_cast<std::size_t>(n)), std::vector<bool>(static_cast<std::size_t>(n), false)};
  std::vector<Domino> q;
  for (int x : w.window()) q.push_back(insertLetter(s, x));
  return TableauPair{DominoTableau(std::move(s.dominoes)), DominoTableau(std::move(q))};
}

Partition dominoShape(const SignedPermutation& w) { return dominoInsert(w).P.shape(); }

SignedPermutation dominoReverse(const TableauPair& pair) {
  if (pair.P.n() != pair.Q.n() || pair.P.shape() != pair.Q.shape())
    throw Error(Errc::ShapeMismatch, "P and Q have different shapes");
  if (!pair.P.isStandard() || !pair.Q.isStandard()) throw Error(Errc::InvalidArgument, "tableaux must be standard");
  const int n = pair.P.n();
  std::vector<Domino> t = pair.P.dominoes();
  std::vector<bool> present(static_cast<std::size_t>(n), true);
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  for (int k = n; k >= 1; --k) {
    Domino e = pair.Q.domino(k);
    int letter = 0;
    for (int y = n; y >= 1 && letter == 0; --y) {
      if (!present[static_cast<std::size_t>(y - 1)]) continue;
      Domino& d = t[static_cast<std::size_t>(y - 1)];
      const int ov = overlap(d, e);
      if (ov == 0) continue;
      if (ov == 1) {
        const Domino old = boxMinus(d, e, e);
        const Domino before = boxMinus(d, e, d);
        d = old;
        e = before;
        continue;
      }
      if (d.horizontal() && d.first.row == 0) {
        letter = y;
      } else if (!d.horizontal() && d.first.col == 0) {
        letter = -y;
      } else {
        const auto lower = rowLengths(below(t, present, y));
        if (d.horizontal()) {
          const int r = d.first.row - 1;
          const int len = rowLength(lower, r);
          d = makeDomino({r, len - 2}, {r, len - 1});
        } else {
          const int c = d.first.col - 1;
          const int h = columnHeight(lower, c);
          d = makeDomino({h - 2, c}, {h - 1, c});
        }
        e = d;
      }
    }
    if (letter == 0) throw Error(Errc::InvalidArgument, "tableau pair is not in the image of domino insertion");
    present[static_cast<std::size_t>(std::abs(letter) - 1)] = false;
    window[static_cast<std::size_t>(k - 1)] = letter;
  }
  return SignedPermutation(std::move(window));
}

std::vector<DominoTableau> standardDominoTableaux(const Partition& shape) {
  if (shape.size() % 2 != 0 || !twoCore(shape).empty())
    throw Error(Errc::NonEmptyCore, toString(shape) + " cannot be tiled by a standard domino tableau");
  const int n = shape.size() / 2;
  std::vector<DominoTableau> out;
  std::vector<Domino> stack(static_cast<std::size_t>(n));
  std::vector<int> rows = shape.parts();
  // Remove the largest label from an outer corner, recursively.
  const auto rec = [&](auto&& self, int label) -> void {
    if (label == 0) {
      out.emplace_back(stack);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int len = rows[r];
      const int nextLen = r + 1 < rows.size() ? rows[r + 1] : 0;
      if (len - 2 >= nextLen) {
        rows[r] -= 2;
        stack[static_cast<std::size_t>(label - 1)] = makeDomino({static_cast<int>(r), len - 2}, {static_cast<int>(r), len - 1});
        self(self, label - 1);
        rows[r] += 2;
      }
      if (r + 1 < rows.size() && rows[r + 1] == len && len > (r + 2 < rows.size() ? rows[r + 2] : 0)) {
        rows[r] -= 1;
        rows[r + 1] -= 1;
        stack[static_cast<std::size_t>(label - 1)] =
            makeDomino({static_cast<int>(r), len - 1}, {static_cast<int>(r) + 1, len - 1});
        self(self, label - 1);
        rows[r] += 1;
        rows[r + 1] += 1;
      }
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end());
  return out;
}

YoungPair rskTypeA(const std::vector<int>& word) {
  std::set<int> seen;
  YoungPair out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    int x = word[k];
    if (!seen.insert(x).second) throw Error(Errc::DuplicateLetter, "letter " + std::to_string(x) + " repeats");
    std::size_t r = 0;
    for (;; ++r) {
      if (r == out.P.size()) {
        out.P.push_back({x});
        out.Q.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& row = out.P[r];
      const auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        out.Q[r].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return out;
}

Partition youngShape(const YoungTableau& t) {
  std::vector<int> parts;
  for (const auto& row : t) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

}  // namespace blobcell
