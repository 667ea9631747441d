#include <memory>

#include "blobcell/blob.hpp"
#include "commands.hpp"

namespace blobcell::cli {
namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return r;
}

std::string matrixText(const Matrix<LaurentPoly>& a) {
  std::vector<std::size_t> width(a.cols(), 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) width[j] = std::max(width[j], a(i, j).toString("q").size());
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out += "  ";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto s = a(i, j).toString("q");
      out += std::string(width[j] - s.size(), ' ') + s + (j + 1 < a.cols() ? "  " : "");
    }
    out += '\n';
  }
  return out;
}

std::string relationSummary(const PresentationReport& r) {
  std::size_t bad = 0;
  for (const auto& c : r.relations) bad += c.deviation != 0;
  return std::to_string(r.relations.size() - bad) + "/" + std::to_string(r.relations.size());
}

void registerDims(CLI::App* blob, Context& ctx) {
  auto n = std::make_shared<int>(0);
  auto* dims = blob->add_subcommand("dims", "dim Delta_n(lambda) for every lambda");
  dims->add_option("n", *n)->required()->check(CLI::Range(0, 64));
  dims->callback([&ctx, n] {
    ctx.action = [n] {
      Output out;
      out.columns = {"lambda", "dim", "binomial"};
      out.json = {{"n", *n}, {"dimensions", nlohmann::json::object()}};
      std::size_t squares = 0;
      bool ok = true;
      for (const auto& w : blobWeights(*n)) {
        const auto d = halfDiagrams(w).size();
        const auto b = binomial(*n, (*n - w.value()) / 2);
        ok = ok && d == b;
        squares += d * d;
        out.addRow({std::to_string(w.value()), std::to_string(d), std::to_string(b)});
        out.json["dimensions"][std::to_string(w.value())] = d;
      }
      out.json["sum_of_squares"] = squares;
      out.json["central_binomial"] = binomial(2 * *n, *n);
      ok = ok && squares == binomial(2 * *n, *n);
      out.json["ok"] = ok;
      out.notes.push_back("sum of squares " + std::to_string(squares) + ", C(2n,n) = " + std::to_string(binomial(2 * *n, *n)));
      out.exitCode = ok ? 0 : 1;
      return out;
    };
  });
}

void registerStandard(CLI::App* blob, Context& ctx) {
  struct Args {
    int n = 0;
    int lambda = 0;
    int m = 2;
  };
  auto a = std::make_shared<Args>();
  auto* standard = blob->add_subcommand("standard", "Basis and generator matrices of Delta_n(lambda)");
  standard->add_option("n", a->n)->required()->check(CLI::Range(0, 64));
  standard->add_option("lambda", a->lambda, "Weight; put a negative weight after --")->required();
  standard->add_option("--m", a->m, "Blob parameter m")->capture_default_str();
  standard->callback([&ctx, a] {
    ctx.action = [a] {
      const auto module = standardModule(BlobWeight(a->n, a->lambda), a->m);
      Output out;
      out.title = "Delta_" + std::to_string(a->n) + "(" + std::to_string(a->lambda) + "), m = " + std::to_string(a->m);
      out.json = {{"n", a->n}, {"lambda", a->lambda}, {"m", a->m}, {"basis", module.labels}};
      out.json["generators"] = nlohmann::json::array();
      out.columns = {"generator", "row", "col", "entry"};
      std::string text = "basis";
      for (const auto& l : module.labels) text += " " + l;
      text += '\n';
      for (std::size_t g = 0; g < module.generators.size(); ++g) {
        const auto& u = module.generators[g];
        auto rows = nlohmann::json::array();
        for (std::size_t i = 0; i < u.rows(); ++i) {
          auto row = nlohmann::json::array();
          for (std::size_t j = 0; j < u.cols(); ++j) {
            row.push_back(u(i, j).toString("q"));
            if (!u(i, j).isZero())
              out.addRow({"U" + std::to_string(g), std::to_string(i), std::to_string(j), u(i, j).toString("q")});
          }
          rows.push_back(row);
        }
        out.json["generators"].push_back(rows);
        text += "U" + std::to_string(g) + "\n" + matrixText(u);
      }
      text.pop_back();
      out.plain = text;
      return out;
    };
  });
}

void registerVerify(CLI::App* blob, Context& ctx) {
  struct Args {
    int n = 0;
    int m = 2;
  };
  auto a = std::make_shared<Args>();
  auto* verify = blob->add_subcommand("verify", "Defining relations on the regular and standard modules, and localization");
  verify->add_option("n", a->n)->required()->check(CLI::Range(1, 64));
  verify->add_option("--m", a->m, "Blob parameter m")->capture_default_str();
  verify->callback([&ctx, a] {
    ctx.action = [a] {
      Output out;
      out.columns = {"module", "relations", "localization"};
      out.json = {{"n", a->n}, {"m", a->m}, {"modules", nlohmann::json::array()}};
      bool ok = true;
      if (a->n <= 4) {
        const auto r = verifyRegularPresentation(a->n, a->m);
        ok = ok && r.ok();
        out.addRow({"regular", relationSummary(r), "-"});
        out.json["regular"] = r.ok();
      }
      for (const auto& w : blobWeights(a->n)) {
        const auto r = verifyPresentation(w, a->m);
        std::string loc = "-";
        bool locOk = true;
        if (a->n >= 2) {
          const auto l = localize(w, a->m);
          locOk = l.ok();
          loc = std::to_string(l.dimension) + "/" + std::to_string(l.expectedDimension) + (l.tracesMatch ? "" : " traces differ");
        }
        ok = ok && r.ok() && locOk;
        out.addRow({"Delta(" + std::to_string(w.value()) + ")", relationSummary(r), loc});
        out.json["modules"].push_back({{"lambda", w.value()}, {"relations", r.ok()}, {"localization", locOk}});
      }
      if (a->n >= 2 && a->n <= 6) {
        const auto t = checkIdempotentTruncation(a->n, a->m);
        ok = ok && t.ok();
        out.addRow({"e b_n e", "-", std::to_string(t.cornerRank) + "/" + std::to_string(t.expectedDimension)});
        out.json["idempotent_truncation"] = t.ok();
      }
      out.json["ok"] = ok;
      out.exitCode = ok ? 0 : 1;
      return out;
    };
  });
}

}  // namespace

void registerBlobCommands(CLI::App& app, Context& ctx) {
  auto* blob = app.add_subcommand("blob", "The blob algebra b_n(q, m)")->require_subcommand(1);
  registerDims(blob, ctx);
  registerStandard(blob, ctx);
  registerVerify(blob, ctx);
}

}  // namespace blobcell::cli
