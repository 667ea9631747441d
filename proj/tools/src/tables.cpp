#include "tables.hpp"

#include "golden.hpp"

namespace blobcell::cli {
namespace {

std::vector<std::string> lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

KleshchevTable kleshchevTable(int n, int e, int m) {
  KleshchevTable t{n, e, m, alcoveData(e, m).charge(), {}};
  for (int lambda = n; lambda >= -n; lambda -= 2) {
    const BlobWeight w(n, lambda);
    t.rows.emplace_back(oneLineBipartition(w), kleshchevConvert(n, e, m, w));
  }
  return t;
}

Output kleshchevOutput(const KleshchevTable& t) {
  Output out;
  const std::string bip = "Bip_1(" + std::to_string(t.n) + ")";
  out.title = "e = " + std::to_string(t.e) + ", m = " + std::to_string(t.m) + ", s = (" + std::to_string(t.charge.s1) +
              ", " + std::to_string(t.charge.s2) + ")";
  out.columns = {bip, "K" + bip};
  out.json = {{"n", t.n}, {"e", t.e}, {"m", t.m}, {"charge", {t.charge.s1, t.charge.s2}}};
  out.json["rows"] = nlohmann::json::array();
  for (const auto& [from, to] : t.rows) {
    out.addRow({toString(from), toString(to)});
    out.json["rows"].push_back(
        {{"weight", blobWeightOf(from).value()}, {"bipartition", toString(from)}, {"kleshchev", toString(to)}});
  }
  return out;
}

std::vector<TableComparison> compareGoldenTables() {
  std::vector<TableComparison> result;
  for (const auto& golden : goldenTables()) {
    TableComparison c{golden.e, golden.m, 0, 0, false, {}};
    const std::string computed = renderPretty(kleshchevOutput(kleshchevTable(10, golden.e, golden.m)));
    c.identical = computed == golden.text;
    const auto want = lines(golden.text);
    const auto got = lines(computed);
    for (std::size_t i = 0; i < std::max(want.size(), got.size()); ++i) {
      const std::string a = i < want.size() ? want[i] : "";
      const std::string b = i < got.size() ? got[i] : "";
      // the first two lines are the title and the column header
      if (i >= 2) {
        ++c.rows;
        if (a == b) ++c.matchingRows;
      }
      if (a != b) {
        c.diff.push_back("-" + a);
        c.diff.push_back("+" + b);
      }
    }
    result.push_back(std::move(c));
  }
  return result;
}

}  // namespace blobcell::cli
