#pragma once

#include <functional>
#include <string>

#include <CLI11.hpp>

#include "output.hpp"

namespace blobcell::cli {

/// The leaf subcommand that parsed stores its work here; main runs it after parsing.
struct Context {
  std::string format = "json";
  std::function<Output()> action;
};

void registerGroupCommands(CLI::App& app, Context& ctx);  // wb, domino, knuth
void registerHeckeCommands(CLI::App& app, Context& ctx);  // klbasis, cells, ideal, tensor, cellcompare
void registerBlobCommands(CLI::App& app, Context& ctx);   // blob
void registerFockCommands(CLI::App& app, Context& ctx);   // fock, decomp, kleshchev, tables

}  // namespace blobcell::cli
