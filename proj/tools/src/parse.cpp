#include "parse.hpp"

#include <map>
#include <sstream>

#include "blobcell/error.hpp"

namespace blobcell::cli {
namespace {

std::vector<std::string> split(const std::string& s, const std::string& separators) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (separators.find(c) != std::string::npos) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parseInt(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(Errc::InvalidArgument, "not an integer: '" + s + "'");
  return v;
}

std::string stripSpaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

Partition parsePartitionBody(const std::string& body) {
  std::vector<int> parts;
  if (body != "\xE2\x88\x85")
    for (const auto& t : split(body, ",")) parts.push_back(parseInt(t));
  return Partition(parts);
}

}  // namespace

std::vector<int> parseIntegers(const std::vector<std::string>& tokens) {
  std::vector<int> out;
  for (const auto& token : tokens)
    for (const auto& piece : split(token, ", ")) out.push_back(parseInt(piece));
  return out;
}

SignedPermutation parseWindow(const std::vector<std::string>& tokens) {
  auto window = parseIntegers(tokens);
  if (window.empty()) throw Error(Errc::InvalidArgument, "empty window");
  return SignedPermutation(std::move(window));
}

Bipartition parseBipartition(const std::string& text) {
  std::string s = stripSpaces(text);
  if (s.size() >= 4 && s.compare(0, 2, "((") == 0 && s.compare(s.size() - 2, 2, "))") == 0) s = s.substr(1, s.size() - 2);
  // two groups "(...)" separated by a comma
  std::vector<std::string> groups;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ',' && !groups.empty()) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') break;
    const auto close = s.find(')', pos);
    if (close == std::string::npos) break;
    groups.push_back(s.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  if (pos != s.size() || groups.size() != 2) throw Error(Errc::InvalidArgument, "not a bipartition: '" + text + "'");
  return {parsePartitionBody(groups[0]), parsePartitionBody(groups[1])};
}

DominoTableau parseDominoGrid(const std::string& text) {
  std::map<int, std::vector<Cell>> cells;
  const auto rows = split(text, "/");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto labels = split(rows[r], ", ");
    for (std::size_t c = 0; c < labels.size(); ++c)
      cells[parseInt(labels[c])].push_back({static_cast<int>(r), static_cast<int>(c)});
  }
  std::vector<Domino> dominoes;
  int expected = 1;
  for (const auto& [label, where] : cells) {
    if (label != expected++ || where.size() != 2)
      throw Error(Errc::InvalidArgument, "label " + std::to_string(label) + " does not mark one domino");
    dominoes.push_back(makeDomino(where[0], where[1]));
  }
  return DominoTableau(std::move(dominoes));
}

Charge parseCharge(const std::string& text, int e) {
  const auto v = parseIntegers({text});
  if (v.size() != 2) throw Error(Errc::InvalidArgument, "charge must be s1,s2: '" + text + "'");
  return {v[0], v[1], e};
}

}  // namespace blobcell::cli
