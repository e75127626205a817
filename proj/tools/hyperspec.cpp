// hyperspec: spectra of general hypergraphs from the command line.
//
//   hyperspec info FILE
//   hyperspec tensor FILE --kind K [--order M] [--exact]
//   hyperspec eig FILE --kind K --type h|z [--seed S] [--restarts R] [--tol T]
//   hyperspec connectivity FILE [--seed S] [--restarts R]
//   hyperspec product FILE_G FILE_H -o OUT
//   hyperspec charpoly FILE --kind K [--order M]
//
// Tables go to stdout; --json prints the JSON report instead, -o/--report
// writes it to a file.  Exit codes: 0 ok, 2 parse, 3 precondition,
// 4 non-convergence.

#include "hyperspec/hyperspec.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace hyperspec;

namespace {

struct Common {
  bool json = false;
  std::string report_path;
  std::string format = "auto";
};

Hypergraph load(const std::string& path, const std::string& format_name) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Format format = Format::Lines;
  if (format_name == "auto") {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) format = Format::Json;
  } else {
    format = *format_from_name(format_name);
  }
  return parse_hypergraph(text, format);
}

std::uint64_t entry_cap() {
  const char* env = std::getenv("HYPERSPEC_CAP");
  if (!env || !*env) return default_entry_cap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Error(ErrorCode::PreconditionFailed, std::string("HYPERSPEC_CAP is not an integer: ") + env);
  return v;
}

TensorKind kind_of(const std::string& name) {
  auto k = kind_from_name(name);
  if (!k) throw Error(ErrorCode::PreconditionFailed, "unknown kind '" + name + "'");
  return *k;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::PreconditionFailed, "cannot write '" + path + "'");
  out << text;
}

/// Runs one command and emits its report.  `body` fills the outcome and the
/// input digest.
template <class Body>
int run(const Common& common, Json command, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    Json digest;
    Outcome out = body(digest);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Json report = make_report(std::move(command), std::move(digest), out, ms);
    if (!common.report_path.empty()) write_file(common.report_path, report.dump(2) + "\n");
    if (common.json) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << out.table;
      for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    }
    return out.status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (common.json) std::cout << error_report(std::move(command), e).dump(2) << "\n";
    return exit_status_for(e);
  }
}

void add_common(CLI::App* sub, Common& common, bool report_short_o = true) {
  sub->add_flag("--json", common.json, "print the JSON report instead of a table");
  if (report_short_o) sub->add_option("-o,--report", common.report_path, "write the JSON report to a file");
  else sub->add_option("--report", common.report_path, "write the JSON report to a file");
  sub->add_option("--format", common.format, "input format")->check(CLI::IsMember({"auto", "lines", "json"}));
}

void add_solver(CLI::App* sub, SolverConfig& cfg, std::optional<double>& gamma) {
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--restarts", cfg.restarts, "random starts in addition to the constant one")
      ->check(CLI::PositiveNumber);
  sub->add_option("--tol", cfg.tol, "convergence tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", cfg.max_iter, "iteration limit per start");
  sub->add_option("--shift", gamma, "fixed SS-HOPM shift (default: automatic)");
  sub->add_option("--perturbation", cfg.perturbation, "power-iteration perturbation epsilon")
      ->check(CLI::NonNegativeNumber);
}

Json echo(const std::string& name, Json args) { return Json{{"name", name}, {"args", std::move(args)}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of general hypergraphs"};
  app.require_subcommand(1);
  Common common;
  SolverConfig cfg;
  std::optional<double> gamma;
  std::string file, file_h, out_path, kind_name = "adjacency", type_name = "h";
  std::optional<std::size_t> order;
  bool exact = false;

  auto* info = app.add_subcommand("info", "vertex/edge counts, degrees, components");
  info->add_option("file", file, "hypergraph file ('-' for stdin)")->required();
  add_common(info, common);

  auto* tensor = app.add_subcommand("tensor", "stream the nonzero hypermatrix entries");
  tensor->add_option("file", file)->required();
  tensor->add_option("--kind", kind_name, "hypermatrix kind");
  tensor->add_option("--order", order, "hypermatrix order (default: maximum edge cardinality)");
  tensor->add_flag("--exact", exact, "print entries as exact fractions");
  add_common(tensor, common);

  auto* eig = app.add_subcommand("eig", "H- or Z-eigenpairs with bound checks");
  eig->add_option("file", file)->required();
  eig->add_option("--kind", kind_name, "hypermatrix kind");
  eig->add_option("--type", type_name, "eigenpair type")->check(CLI::IsMember({"h", "z"}));
  eig->add_option("--order", order, "hypermatrix order");
  add_solver(eig, cfg, gamma);
  add_common(eig, common);

  auto* conn = app.add_subcommand("connectivity", "analytic connectivity");
  conn->add_option("file", file)->required();
  add_solver(conn, cfg, gamma);
  add_common(conn, common);

  auto* product = app.add_subcommand("product", "Cartesian product of two hypergraphs");
  product->add_option("file_g", file)->required();
  product->add_option("file_h", file_h)->required();
  product->add_option("-o,--output", out_path, "file receiving the product hypergraph")->required();
  add_common(product, common, false);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial (n = 2)");
  charpoly_cmd->add_option("file", file)->required();
  charpoly_cmd->add_option("--kind", kind_name, "hypermatrix kind");
  charpoly_cmd->add_option("--order", order, "hypermatrix order");
  add_common(charpoly_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_parse;
  }
  if (gamma) cfg.shift = ShiftPolicy::fixed(*gamma);
  const Json order_json = order ? Json(*order) : Json(nullptr);

  if (*info) {
    return run(common, echo("info", {{"file", file}}), [&](Json& digest) {
      auto h = load(file, common.format);
      digest = hyperspec::digest(h);
      return cmd_info(h);
    });
  }
  if (*tensor) {
    return run(common, echo("tensor", {{"file", file}, {"kind", kind_name}, {"order", order_json}, {"exact", exact}}),
               [&](Json& digest) {
                 auto h = load(file, common.format);
                 digest = hyperspec::digest(h);
                 return cmd_tensor(h, {kind_of(kind_name), order, exact, entry_cap()});
               });
  }
  if (*eig) {
    Json args{{"file", file}, {"kind", kind_name}, {"type", type_name}, {"order", order_json}, {"seed", cfg.seed},
              {"restarts", cfg.restarts}, {"tol", cfg.tol}};
    return run(common, echo("eig", std::move(args)), [&](Json& digest) {
      auto h = load(file, common.format);
      digest = hyperspec::digest(h);
      return cmd_eig(h, {kind_of(kind_name), type_name == "z" ? EigenType::Z : EigenType::H, order, cfg});
    });
  }
  if (*conn) {
    Json args{{"file", file}, {"seed", cfg.seed}, {"restarts", cfg.restarts}, {"tol", cfg.tol}};
    return run(common, echo("connectivity", std::move(args)), [&](Json& digest) {
      auto h = load(file, common.format);
      digest = hyperspec::digest(h);
      return cmd_connectivity(h, cfg);
    });
  }
  if (*product) {
    return run(common, echo("product", {{"file_g", file}, {"file_h", file_h}, {"output", out_path}}),
               [&](Json& digest) {
                 auto g = load(file, common.format);
                 auto h = load(file_h, common.format);
                 digest = Json::array({hyperspec::digest(g), hyperspec::digest(h)});
                 Outcome out = cmd_product(g, h);
                 bool as_json = out_path.size() >= 5 && out_path.compare(out_path.size() - 5, 5, ".json") == 0;
                 auto prod = parse_hypergraph(out.results["hypergraph"].dump(), Format::Json);
                 write_file(out_path, serialize(prod, as_json ? Format::Json : Format::Lines));
                 return out;
               });
  }
  if (*charpoly_cmd) {
    return run(common, echo("charpoly", {{"file", file}, {"kind", kind_name}, {"order", order_json}}),
               [&](Json& digest) {
                 auto h = load(file, common.format);
                 digest = hyperspec::digest(h);
                 return cmd_charpoly(h, {kind_of(kind_name), order});
               });
  }
  return exit_parse;
}
