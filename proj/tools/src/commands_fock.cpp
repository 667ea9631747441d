#include <memory>

#include "blobcell/error.hpp"
#include "blobcell/fock.hpp"
#include "commands.hpp"
#include "parse.hpp"
#include "tables.hpp"

namespace blobcell::cli {
namespace {

const char* kOrientationNote =
    "orientation: d_{lambda,mu}(v) = v^{l(w_mu) - l(w_lambda)}; the opposite exponent l(w_lambda) - l(w_mu) is <= 0 "
    "whenever w_lambda <= w_mu and contradicts G(mu) = |mu> mod vZ[v], which the canonical basis computation confirms";

struct ChargeArgs {
  int e = 3;
  std::string charge = "-1,0";
};

void addCharge(CLI::App* cmd, ChargeArgs& a) {
  cmd->add_option("--e", a.e, "Quantum characteristic e >= 2")->capture_default_str()->check(CLI::Range(2, 1000));
  cmd->add_option("--charge", a.charge, "s1,s2; write --charge=-1,0 for negative entries")->capture_default_str();
}

void addVector(Output& out, const FockVector& x) {
  out.columns = {"bipartition", "coefficient"};
  out.json = nlohmann::json::array();
  for (const auto& [b, c] : x.terms()) {
    out.addRow({toString(b), c.toString()});
    out.json.push_back({{"bipartition", toString(b)}, {"coefficient", c.toString()}});
  }
}

void registerFock(CLI::App& app, Context& ctx) {
  auto* fock = app.add_subcommand("fock", "Level two Fock space")->require_subcommand(1);

  struct FArgs {
    ChargeArgs charge;
    int i = 0;
    int power = 1;
    std::string bipartition;
  };
  auto fa = std::make_shared<FArgs>();
  auto* f = fock->add_subcommand("f", "Apply the divided power f_i^(a) to a basis vector");
  f->add_option("i", fa->i, "Residue")->required()->check(CLI::Range(0, 64));
  f->add_option("bipartition", fa->bipartition, "e.g. '(6,3),(1)'; defaults to the empty bipartition");
  f->add_option("--power", fa->power, "Divided power a")->capture_default_str()->check(CLI::Range(0, 64));
  addCharge(f, fa->charge);
  f->callback([&ctx, fa] {
    ctx.action = [fa] {
      const auto s = parseCharge(fa->charge.charge, fa->charge.e);
      const auto start = fa->bipartition.empty() ? Bipartition{} : parseBipartition(fa->bipartition);
      Output out;
      addVector(out, fDividedPower(fa->i, fa->power, FockVector::basis(start), s));
      return out;
    };
  });

  struct CrystalArgs {
    ChargeArgs charge;
    std::vector<int> word;
    std::string from;
  };
  auto ca = std::make_shared<CrystalArgs>();
  auto* crystal = fock->add_subcommand("crystal", "Apply Kashiwara operators f~_i, written right to left");
  crystal->add_option("word", ca->word, "Residues of the operators as written, the rightmost acting first")->required();
  crystal->add_option("--from", ca->from, "Starting bipartition; defaults to the empty bipartition");
  addCharge(crystal, ca->charge);
  crystal->callback([&ctx, ca] {
    ctx.action = [ca] {
      const auto s = parseCharge(ca->charge.charge, ca->charge.e);
      const auto start = ca->from.empty() ? Bipartition{} : parseBipartition(ca->from);
      const auto result = applyCrystalWord(ca->word, start, s);
      Output out;
      out.columns = {"result"};
      out.json = {{"word", ca->word}, {"charge", {s.s1, s.s2}}, {"e", s.e}};
      out.json["result"] = result ? nlohmann::json(toString(*result)) : nlohmann::json(nullptr);
      out.plain = result ? toString(*result) : "0";
      return out;
    };
  });

  struct CanonicalArgs {
    ChargeArgs charge;
    int n = 0;
    std::string mu;
  };
  auto na = std::make_shared<CanonicalArgs>();
  auto* canonical = fock->add_subcommand("canonical", "Canonical basis G(mu) of the component of the empty bipartition");
  canonical->add_option("n", na->n, "Degree")->required()->check(CLI::Range(0, 64));
  canonical->add_option("--mu", na->mu, "Print only G(mu)");
  addCharge(canonical, na->charge);
  canonical->callback([&ctx, na] {
    ctx.action = [na] {
      const auto s = parseCharge(na->charge.charge, na->charge.e);
      const auto basis = canonicalBasis(na->n, s);
      Output out;
      if (!na->mu.empty()) {
        const auto mu = parseBipartition(na->mu);
        const auto it = basis.find(mu);
        if (it == basis.end()) throw Error(Errc::NotReachable, toString(mu) + " is not a crystal vertex");
        addVector(out, it->second);
        out.title = "G(" + toString(mu) + ")";
        return out;
      }
      out.columns = {"mu", "bipartition", "coefficient"};
      out.json = nlohmann::json::object();
      for (const auto& [mu, g] : basis) {
        auto terms = nlohmann::json::object();
        for (const auto& [b, c] : g.terms()) {
          out.addRow({toString(mu), toString(b), c.toString()});
          terms[toString(b)] = c.toString();
        }
        out.json[toString(mu)] = terms;
      }
      return out;
    };
  });
}

void registerDecomp(CLI::App& app, Context& ctx) {
  struct Args {
    int n = 0;
    int e = 3;
    int m = 2;
  };
  auto a = std::make_shared<Args>();
  auto* decomp = app.add_subcommand("decomp", "Graded decomposition numbers of b_n from the alcove geometry");
  decomp->add_option("n", a->n)->required()->check(CLI::Range(1, 64));
  decomp->add_option("e", a->e)->required()->check(CLI::Range(2, 1000));
  decomp->add_option("m", a->m, "Put a negative m after --")->required();
  decomp->callback([&ctx, a] {
    ctx.action = [a] {
      const auto geom = alcoveData(a->e, a->m);
      const auto weights = regularWeights(geom, a->n);
      const auto check = checkDecompositionNumbers(a->n, a->e, a->m);
      Output out;
      out.title = "rows lambda, columns mu; e = " + std::to_string(a->e) + ", m = " + std::to_string(a->m);
      out.columns = {"lambda"};
      for (const auto& mu : weights) out.columns.push_back(std::to_string(mu.value()));
      out.json = {{"n", a->n}, {"e", a->e}, {"m", a->m}, {"entries", nlohmann::json::array()}};
      for (const auto& lambda : weights) {
        std::vector<std::string> row{std::to_string(lambda.value())};
        for (const auto& mu : weights) {
          const auto d = decompositionNumber(geom, lambda, mu);
          row.push_back(d.isZero() ? "." : d.toString());
          if (!d.isZero())
            out.json["entries"].push_back({{"lambda", lambda.value()}, {"mu", mu.value()}, {"d", d.toString()}});
        }
        out.addRow(row);
      }
      out.json["llt_agrees"] = check.ok();
      out.json["entries_checked"] = check.entriesChecked;
      out.json["orientation"] = kOrientationNote;
      out.notes.push_back("canonical basis check: " + std::to_string(check.entriesChecked) + " entries, " +
                          std::to_string(check.mismatches.size()) + " mismatches, " +
                          std::to_string(check.orderViolations.size()) + " order violations");
      for (const auto& s : check.mismatches) out.notes.push_back("mismatch " + s);
      for (const auto& s : check.orderViolations) out.notes.push_back("order " + s);
      out.notes.push_back(kOrientationNote);
      out.exitCode = check.ok() ? 0 : 1;
      return out;
    };
  });
}

void registerKleshchev(CLI::App& app, Context& ctx) {
  struct Args {
    int n = 0;
    int e = 3;
    int m = 2;
  };
  auto a = std::make_shared<Args>();
  auto* k = app.add_subcommand("kleshchev", "Kleshchev bipartitions of the simple b_n-modules");
  k->add_option("n", a->n)->required()->check(CLI::Range(0, 64));
  k->add_option("e", a->e)->required()->check(CLI::Range(2, 1000));
  k->add_option("m", a->m, "Put a negative m after --")->required();
  k->callback([&ctx, a] { ctx.action = [a] { return kleshchevOutput(kleshchevTable(a->n, a->e, a->m)); }; });
}

void registerTables(CLI::App& app, Context& ctx) {
  auto golden = std::make_shared<bool>(false);
  auto* t = app.add_subcommand("tables", "Reproduce the four ten-node conversion tables");
  t->add_flag("--paper", *golden, "Compare against the embedded golden copies")->required();
  t->callback([&ctx] {
    ctx.action = [] {
      const auto result = compareGoldenTables();
      Output out;
      out.columns = {"e", "m", "rows", "matching", "identical"};
      out.json = {{"tables", nlohmann::json::array()}};
      std::size_t rows = 0, matching = 0;
      bool identical = true;
      for (const auto& c : result) {
        rows += c.rows;
        matching += c.matchingRows;
        identical = identical && c.identical;
        out.addRow({std::to_string(c.e), std::to_string(c.m), std::to_string(c.rows), std::to_string(c.matchingRows),
                    yesNo(c.identical)});
        out.json["tables"].push_back({{"e", c.e},
                                      {"m", c.m},
                                      {"rows", c.rows},
                                      {"matching_rows", c.matchingRows},
                                      {"identical", c.identical},
                                      {"diff", c.diff}});
        for (const auto& d : c.diff) out.notes.push_back("e=" + std::to_string(c.e) + " " + d);
      }
      const bool ok = identical && matching == rows;
      out.json["rows"] = rows;
      out.json["matching_rows"] = matching;
      out.json["ok"] = ok;
      out.notes.push_back(std::to_string(matching) + "/" + std::to_string(rows) + " rows match");
      out.exitCode = ok ? 0 : 1;
      return out;
    };
  });
}

}  // namespace

void registerFockCommands(CLI::App& app, Context& ctx) {
  registerFock(app, ctx);
  registerDecomp(app, ctx);
  registerKleshchev(app, ctx);
  registerTables(app, ctx);
}

}  // namespace blobcell::cli
