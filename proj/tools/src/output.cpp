#include "output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blobcell::cli {

Format parseFormat(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "pretty") return Format::Pretty;
  throw std::invalid_argument("unknown format " + name);
}

std::size_t displayWidth(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string renderPretty(const Output& out) {
  std::ostringstream os;
  if (!out.title.empty()) os << out.title << '\n';
  if (out.plain) {
    os << *out.plain << '\n';
  } else if (!out.columns.empty()) {
    std::vector<std::size_t> width(out.columns.size(), 0);
    auto measure = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], displayWidth(row[c]));
    };
    measure(out.columns);
    for (const auto& row : out.rows) measure(row);
    auto line = [&](const std::vector<std::string>& row) {
      std::string text;
      for (std::size_t c = 0; c < row.size(); ++c) {
        text += row[c];
        if (c + 1 < row.size()) text.append(width[c] + 2 - displayWidth(row[c]), ' ');
      }
      os << text << '\n';
    };
    line(out.columns);
    for (const auto& row : out.rows) line(row);
  }
  for (const auto& note : out.notes) os << note << '\n';
  return os.str();
}

namespace {

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::string renderCsv(const Output& out) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csvField(row[c]);
    os << '\n';
  };
  if (out.plain && out.columns.size() == 1) {
    line(out.columns);
    line({*out.plain});
    return os.str();
  }
  if (out.plain) return *out.plain + "\n";
  line(out.columns);
  for (const auto& row : out.rows) line(row);
  return os.str();
}

std::string render(const Output& out, Format format) {
  switch (format) {
    case Format::Json: return out.json.dump(2) + "\n";
    case Format::Csv: return renderCsv(out);
    case Format::Pretty: return renderPretty(out);
  }
  return {};
}

std::string yesNo(bool b) { return b ? "yes" : "no"; }

}  // namespace blobcell::cli
