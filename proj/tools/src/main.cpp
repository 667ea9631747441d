#include <iostream>

#include "blobcell/error.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace blobcell::cli;
  CLI::App app{"Computations for the blob algebra, the type B Hecke algebra and level two Fock spaces", "blobcell"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--format", ctx.format, "Output format: json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.footer("Exit status: 0 success, 1 verification mismatch, 2 usage or input error.\n"
             "Negative numbers go after --, e.g. blobcell domino insert -- 2 3 -1.\n"
             "BLOBCELL_MAX_N raises the enumeration caps.");

  registerGroupCommands(app, ctx);
  registerHeckeCommands(app, ctx);
  registerBlobCommands(app, ctx);
  registerFockCommands(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto extra = app.remaining();
    if (e.get_exit_code() != 0 && app.get_subcommands().empty() && !extra.empty()) {
      std::cerr << "unknown subcommand: " << extra.front() << "\nRun with --help for more information.\n";
      return 2;
    }
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (!ctx.action) {
    std::cerr << app.help();
    return 2;
  }
  try {
    const Output out = ctx.action();
    std::cout << render(out, parseFormat(ctx.format));
    return out.exitCode;
  } catch (const blobcell::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
