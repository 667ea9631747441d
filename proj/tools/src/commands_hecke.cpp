#include <memory>

#include "blobcell/blob.hpp"
#include "blobcell/error.hpp"
#include "blobcell/hecke.hpp"
#include "blobcell/tensor.hpp"
#include "commands.hpp"
#include "parse.hpp"

namespace blobcell::cli {
namespace {

struct NArgs {
  int n = 0;
};

CLI::Option* addN(CLI::App* cmd, int& n) { return cmd->add_option("n", n, "Rank")->required()->check(CLI::Range(1, 64)); }

std::string sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

void registerKL(CLI::App& app, Context& ctx) {
  struct Args {
    int n = 0;
    std::vector<std::string> window;
  };
  auto a = std::make_shared<Args>();
  auto* kl = app.add_subcommand("klbasis", "Kazhdan-Lusztig basis of the type B Hecke algebra with q = v^2, Q = v");
  addN(kl, a->n);
  kl->add_option("window", a->window, "Print C_w for this element instead of the checks");
  kl->callback([&ctx, a] {
    ctx.action = [a] {
      Output out;
      if (!a->window.empty()) {
        const auto w = parseWindow(a->window);
        if (w.n() != a->n) throw Error(Errc::SizeMismatch, "window has length " + std::to_string(w.n()));
        const auto& basis = computeKLBasis(a->n);
        const auto& sys = basis.system();
        const auto& c = basis.C(w);
        out.columns = {"y", "coefficient"};
        out.json = {{"w", w.window()}, {"terms", nlohmann::json::array()}};
        for (auto y : c.support()) {
          out.addRow({toString(sys->signedPermutation(y)), c.coeff(y).toString()});
          out.json["terms"].push_back({{"y", sys->element(y)}, {"coefficient", c.coeff(y).toString()}});
        }
        out.title = "C_w for w = " + toString(w);
        return out;
      }
      const auto r = checkKLBasis(a->n);
      out.json = {{"n", r.n},
                  {"elements", r.elements},
                  {"bar_invariant", r.barInvariant},
                  {"unitriangular", r.unitriangular},
                  {"c_s1s2s1_closed_form", r.braidClosedForm},
                  {"c_s1s0s1_closed_form", r.blobClosedForm},
                  {"ok", r.ok()}};
      out.columns = {"check", "result"};
      out.addRow({"elements", std::to_string(r.elements)});
      out.addRow({"bar invariant", std::to_string(r.barInvariant)});
      out.addRow({"unitriangular", std::to_string(r.unitriangular)});
      out.addRow({"C_s1s2s1 = C1C2C1 - C1", yesNo(r.braidClosedForm)});
      out.addRow({"C_s1s0s1 = C1C0C1 - [2]C1", yesNo(r.blobClosedForm)});
      out.exitCode = r.ok() ? 0 : 1;
      return out;
    };
  });
}

void registerCells(CLI::App& app, Context& ctx) {
  auto a = std::make_shared<NArgs>();
  auto* cells = app.add_subcommand("cells", "Left cells of the type B Hecke algebra");
  addN(cells, a->n);
  cells->callback([&ctx, a] {
    ctx.action = [a] {
      const auto& basis = computeKLBasis(a->n);
      const auto& sys = basis.system();
      const WbTable wb(a->n);
      Output out;
      out.columns = {"cell", "size", "in_wb", "members"};
      out.json = nlohmann::json::array();
      std::size_t index = 0;
      for (const auto& cell : basis.leftCells()) {
        bool inWb = true;
        std::string members;
        auto list = nlohmann::json::array();
        for (auto y : cell) {
          const auto w = sys->signedPermutation(y);
          inWb = inWb && wb.contains(w);
          members += (members.empty() ? "" : " ") + toString(w);
          list.push_back(w.window());
        }
        out.addRow({std::to_string(index), std::to_string(cell.size()), yesNo(inWb), members});
        out.json.push_back({{"cell", index}, {"size", cell.size()}, {"in_wb", inWb}, {"members", list}});
        ++index;
      }
      return out;
    };
  });
}

void registerIdeal(CLI::App& app, Context& ctx) {
  auto* ideal = app.add_subcommand("ideal", "The ideal spanned by C_w, w not in W_b")->require_subcommand(1);
  auto a = std::make_shared<NArgs>();
  auto* check = ideal->add_subcommand("check", "Two-sidedness, generators and corank");
  addN(check, a->n);
  check->callback([&ctx, a] {
    ctx.action = [a] {
      const auto r = checkIdealJn(a->n);
      Output out;
      out.json = {{"n", r.n},
                  {"closed_left", r.closedLeft},
                  {"closed_right", r.closedRight},
                  {"contains_generators", r.containsGenerators},
                  {"rank", r.rank},
                  {"corank", r.corank},
                  {"expected_corank", r.expectedCorank},
                  {"generated_dimension", r.generatedDimension},
                  {"ok", r.ok()}};
      out.columns = {"check", "result"};
      out.addRow({"closed under left C_s", yesNo(r.closedLeft)});
      out.addRow({"closed under right C_s", yesNo(r.closedRight)});
      out.addRow({"contains both generators", yesNo(r.containsGenerators)});
      out.addRow({"corank", std::to_string(r.corank) + " (expected " + std::to_string(r.expectedCorank) + ")"});
      out.addRow({"generated ideal dimension", std::to_string(r.generatedDimension) + " of " + std::to_string(r.rank)});
      out.exitCode = r.ok() ? 0 : 1;
      return out;
    };
  });
}

void registerTensor(CLI::App& app, Context& ctx) {
  auto* tensor = app.add_subcommand("tensor", "The tensor space V^n")->require_subcommand(1);
  auto a = std::make_shared<NArgs>();
  auto* check = tensor->add_subcommand("check", "Hecke relations, vanishing of J_n and the modules M_n(lambda)");
  addN(check, a->n);
  check->callback([&ctx, a] {
    ctx.action = [a] {
      const auto r = checkTensorSpace(a->n);
      std::vector<std::size_t> blobDims;
      for (const auto& w : blobWeights(a->n)) blobDims.push_back(halfDiagrams(w).size());
      const bool dims = blobDims == r.permutationDimensions;
      Output out;
      out.json = {{"n", r.n},
                  {"hecke_relations", r.heckeRelations},
                  {"annihilates_first_generator", r.annihilatesFirstGenerator},
                  {"annihilates_second_generator", r.annihilatesSecondGenerator},
                  {"ideal_vanish_identity", r.idealVanishIdentity},
                  {"permutation_modules_stable", r.permutationModulesStable},
                  {"permutation_dimensions", r.permutationDimensions},
                  {"standard_dimensions", blobDims},
                  {"ok", r.ok() && dims}};
      out.columns = {"check", "result"};
      out.addRow({"Hecke relations", yesNo(r.heckeRelations)});
      out.addRow({"C1C2C1 - C1 acts as zero", yesNo(r.annihilatesFirstGenerator)});
      out.addRow({"C1C0C1 - [2]C1 acts as zero", yesNo(r.annihilatesSecondGenerator)});
      out.addRow({"vanishing identity", yesNo(r.idealVanishIdentity)});
      out.addRow({"M_n(lambda) stable", yesNo(r.permutationModulesStable)});
      out.addRow({"dim M_n(lambda)", sizes(r.permutationDimensions)});
      out.addRow({"dim Delta_n(lambda)", sizes(blobDims)});
      out.exitCode = r.ok() && dims ? 0 : 1;
      return out;
    };
  });
}

void registerCellCompare(CLI::App& app, Context& ctx) {
  struct Args {
    int n = 0;
    int m = 2;
    int l = 0;
  };
  auto a = std::make_shared<Args>();
  auto* cc = app.add_subcommand("cellcompare", "Cell modules of W_b against standard blob modules at a root of unity");
  addN(cc, a->n);
  cc->add_option("--m", a->m, "Blob parameter m")->capture_default_str();
  cc->add_option("--l", a->l, "Order of q; defaults to 2(2m-1)");
  cc->callback([&ctx, a] {
    ctx.action = [a] {
      const BlobParameters params{a->m, a->l ? a->l : 2 * (2 * a->m - 1)};
      const auto r = compareCellToStandard(a->n, params);
      Output out;
      out.columns = {"representative", "lambda", "dim_cell", "dim_standard", "relations", "traces", "exact"};
      out.json = {{"n", r.n}, {"m", params.m}, {"l", params.l}, {"ok", r.ok()}, {"cells", nlohmann::json::array()}};
      for (const auto& c : r.cells) {
        out.addRow({toString(c.representative), std::to_string(c.lambda.value()), std::to_string(c.cellDimension),
                    std::to_string(c.standardDimension), yesNo(c.relationsHold), yesNo(c.tracesMatch), yesNo(c.exact)});
        out.json["cells"].push_back({{"representative", c.representative.window()},
                                     {"lambda", c.lambda.value()},
                                     {"cell_dimension", c.cellDimension},
                                     {"standard_dimension", c.standardDimension},
                                     {"relations", c.relationsHold},
                                     {"traces", c.tracesMatch},
                                     {"exact", c.exact}});
      }
      out.exitCode = r.ok() ? 0 : 1;
      return out;
    };
  });
}

}  // namespace

void registerHeckeCommands(CLI::App& app, Context& ctx) {
  registerKL(app, ctx);
  registerCells(app, ctx);
  registerIdeal(app, ctx);
  registerTensor(app, ctx);
  registerCellCompare(app, ctx);
}

}  // namespace blobcell::cli
