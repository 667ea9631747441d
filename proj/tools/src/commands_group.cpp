#include <memory>

#include "blobcell/domino.hpp"
#include "blobcell/knuth.hpp"
#include "blobcell/weylb.hpp"
#include "commands.hpp"
#include "parse.hpp"

namespace blobcell::cli {
namespace {

nlohmann::json windowJson(const SignedPermutation& w) { return w.window(); }

std::string gridString(const DominoTableau& t) {
  std::string out;
  for (const auto& row : t.grid()) {
    if (!out.empty()) out += '/';
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + std::to_string(row[c]);
  }
  return out;
}

nlohmann::json gridJson(const DominoTableau& t) { return t.grid(); }

struct WindowArgs {
  std::vector<std::string> window;
};

CLI::Option* addWindow(CLI::App* cmd, WindowArgs& args) {
  return cmd->add_option("window", args.window, "Window entries; put negative entries after --")->required();
}

void registerWb(CLI::App& app, Context& ctx) {
  auto* wb = app.add_subcommand("wb", "The subset W_b of the type B Weyl group")->require_subcommand(1);

  struct EnumArgs {
    int n = 0;
    bool count = false;
  };
  auto en = std::make_shared<EnumArgs>();
  auto* enumerate = wb->add_subcommand("enumerate", "List W_b(n) or count it");
  enumerate->add_option("n", en->n)->required()->check(CLI::Range(1, 64));
  enumerate->add_flag("--count", en->count, "Print only the number of elements");
  enumerate->callback([&ctx, en] {
    ctx.action = [en] {
      const auto elements = enumerateWb(en->n);
      Output out;
      if (en->count) {
        out.json = elements.size();
        out.columns = {"count"};
        out.plain = std::to_string(elements.size());
        return out;
      }
      out.columns = {"window", "reduced_word"};
      out.json = nlohmann::json::array();
      for (const auto& w : elements) {
        out.addRow({toString(w), toString(reducedWord(w))});
        out.json.push_back(windowJson(w));
      }
      return out;
    };
  });

  auto tw = std::make_shared<WindowArgs>();
  auto* test = wb->add_subcommand("test", "Test membership in W_b by all three criteria");
  addWindow(test, *tw);
  test->callback([&ctx, tw] {
    ctx.action = [tw] {
      const auto w = parseWindow(tw->window);
      const bool avoidance = isInWbByAvoidance(w);
      const bool words = isInWbByWords(w);
      const auto shape = dominoShape(w);
      const bool rows = shape.length() <= 2;
      const bool consistent = avoidance == words && words == rows;
      Output out;
      out.json = {{"window", windowJson(w)}, {"avoidance", avoidance}, {"words", words},
                  {"domino_shape", shape.parts()}, {"two_rows", rows}, {"consistent", consistent}};
      out.columns = {"window", "avoidance", "words", "domino_shape", "consistent"};
      out.addRow({toString(w), yesNo(avoidance), yesNo(words), toString(shape), yesNo(consistent)});
      out.exitCode = consistent ? 0 : 1;
      return out;
    };
  });
}

void registerDomino(CLI::App& app, Context& ctx) {
  auto* domino = app.add_subcommand("domino", "Domino insertion")->require_subcommand(1);

  auto ia = std::make_shared<WindowArgs>();
  auto* insert = domino->add_subcommand("insert", "Insert a signed permutation");
  addWindow(insert, *ia);
  insert->callback([&ctx, ia] {
    ctx.action = [ia] {
      const auto w = parseWindow(ia->window);
      const auto pair = dominoInsert(w);
      Output out;
      out.json = {{"window", windowJson(w)}, {"P", gridJson(pair.P)}, {"Q", gridJson(pair.Q)},
                  {"shape", pair.P.shape().parts()}};
      out.columns = {"tableau", "grid"};
      out.addRow({"P", gridString(pair.P)});
      out.addRow({"Q", gridString(pair.Q)});
      out.plain = "P\n" + toString(pair.P) + "Q\n" + toString(pair.Q) + "shape " + toString(pair.P.shape());
      return out;
    };
  });

  struct ReverseArgs {
    std::string p;
    std::string q;
  };
  auto ra = std::make_shared<ReverseArgs>();
  auto* reverse = domino->add_subcommand("reverse", "Recover the signed permutation from (P, Q)");
  reverse->add_option("--P", ra->p, "Rows separated by '/', labels by ','")->required();
  reverse->add_option("--Q", ra->q, "Rows separated by '/', labels by ','")->required();
  reverse->callback([&ctx, ra] {
    ctx.action = [ra] {
      const auto w = dominoReverse({parseDominoGrid(ra->p), parseDominoGrid(ra->q)});
      Output out;
      out.json = {{"window", windowJson(w)}};
      out.columns = {"window"};
      out.plain = toString(w);
      return out;
    };
  });

  auto sa = std::make_shared<WindowArgs>();
  auto* shape = domino->add_subcommand("shape", "Shape of the insertion tableaux");
  addWindow(shape, *sa);
  shape->callback([&ctx, sa] {
    ctx.action = [sa] {
      const auto w = parseWindow(sa->window);
      const auto s = dominoShape(w);
      Output out;
      out.json = {{"window", windowJson(w)}, {"shape", s.parts()}, {"rows", s.length()}};
      out.columns = {"window", "shape", "rows"};
      out.addRow({toString(w), toString(s), std::to_string(s.length())});
      return out;
    };
  });
}

void registerKnuth(CLI::App& app, Context& ctx) {
  auto* knuth = app.add_subcommand("knuth", "Knuth relations")->require_subcommand(1);
  struct ClassArgs {
    WindowArgs w;
    bool coplactic = false;
  };
  auto ca = std::make_shared<ClassArgs>();
  auto* cls = knuth->add_subcommand("class", "Closure of w under the Knuth relations");
  cls->add_flag("--coplactic", ca->coplactic, "Use the relations on the inverse");
  addWindow(cls, ca->w);
  cls->callback([&ctx, ca] {
    ctx.action = [ca] {
      const auto w = parseWindow(ca->w.window);
      const auto members = ca->coplactic ? coplacticClass(w) : placticClass(w);
      // the fiber of the same tableau, for comparison
      const auto key = [&](const SignedPermutation& x) {
        const auto p = dominoInsert(x);
        return ca->coplactic ? p.Q : p.P;
      };
      const auto target = key(w);
      std::size_t fiber = 0;
      for (const auto& x : allSignedPermutations(w.n()))
        if (key(x) == target) ++fiber;
      Output out;
      out.json = {{"window", windowJson(w)},
                  {"kind", ca->coplactic ? "coplactic" : "plactic"},
                  {"size", members.size()},
                  {"fiber_size", fiber}};
      out.json["members"] = nlohmann::json::array();
      out.columns = {"window"};
      for (const auto& x : members) {
        out.json["members"].push_back(windowJson(x));
        out.addRow({toString(x)});
      }
      out.notes.push_back(std::to_string(members.size()) + " elements; tableau fiber has " + std::to_string(fiber));
      return out;
    };
  });
}

}  // namespace

void registerGroupCommands(CLI::App& app, Context& ctx) {
  registerWb(app, ctx);
  registerDomino(app, ctx);
  registerKnuth(app, ctx);
}

}  // namespace blobcell::cli
