#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace blobcell::cli {

enum class Format { Json, Csv, Pretty };

Format parseFormat(const std::string& name);

/// What a subcommand produced. json is printed as is; csv and pretty use the table.
struct Output {
  nlohmann::json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Replaces the table in pretty and csv mode, e.g. a bare count.
  std::optional<std::string> plain;
  std::string title;
  std::vector<std::string> notes;
  /// 1 when a verification failed.
  int exitCode = 0;

  void addRow(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// Width in code points; the empty-set sign counts once.
std::size_t displayWidth(const std::string& s);

std::string renderPretty(const Output& out);
std::string renderCsv(const Output& out);
std::string render(const Output& out, Format format);

std::string yesNo(bool b);

}  // namespace blobcell::cli
