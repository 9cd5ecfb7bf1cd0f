// vmg: constants, exact moments, density and transform tables, self-check.

#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>

#include <CLI11.hpp>

#include "vmg_cli/commands.hpp"
#include "vmg_cli/verify.hpp"

namespace {

using namespace vmg::cli;

struct Output {
  std::string path;
  std::ostream& open() {
    if (path.empty() || path == "-") return std::cout;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw UsageError("cannot open output file '" + path + "'");
    return *file;
  }
  std::unique_ptr<std::ofstream> file;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"V-monotone Gaussian measure: moments, transform, density"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  Output out;
  std::string format = "csv";
  std::string grid = "linear";
  std::string range;
  app.add_option("-o,--output", out.path, "Output file (default stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  app.add_subcommand("constants", "Named constants");

  auto* moments = app.add_subcommand("moments", "Exact moments m_0..m_N as num/den");
  int n_moments = 12;
  moments->add_option("-N,--N", n_moments, "Highest order (0..200)");

  auto* density = app.add_subcommand("density", "Density samples x,rho,method");
  std::string parametric;
  ParametricOptions popt;
  density->add_option("--count", cfg.grid_count, "Number of points");
  density->add_option("--grid", grid, "linear or log (geometric in the distance to sqrt2)");
  density->add_option("--range", range, "a,b (default the open support)");
  density->add_option("--parametric", parametric, "inner (eta = -pi) or outer (eta = 0) sweep")
      ->check(CLI::IsMember({"inner", "outer"}));
  density->add_option("--xi-min", popt.xi_min, "Parametric sweep start");
  density->add_option("--xi-max", popt.xi_max, "Parametric sweep end");

  auto* curve = app.add_subcommand("curve", "Level curve Gamma_eta as xi,re,im");
  CurveOptions copt;
  curve->add_option("--eta", copt.eta, "Level in [-pi, 0]");
  curve->add_option("--xi-min", copt.xi_min, "First xi");
  curve->add_option("--xi-max", copt.xi_max, "Last xi (< -eta)");
  int curve_count = 400;
  curve->add_option("--count", curve_count, "Number of points");

  auto* transform = app.add_subcommand("transform", "F and G at points read as re,im rows");
  std::string input = "-";
  transform->add_option("-i,--input", input, "Input file, '-' for stdin");

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks, print a JSON report");
  std::string only;
  std::optional<double> tolerance;
  verify->add_option("--only", only, "Run only groups starting with this prefix");
  verify->add_option("--tolerance", tolerance, "Override every numeric tolerance");
  verify->add_option("--panels", cfg.quad_panels, "Quadrature panels");
  verify->add_option("--nodes", cfg.quad_nodes, "Gauss-Legendre nodes per panel");
  verify->add_option("--series-n", cfg.series_n, "MGF series truncation order");
  verify->add_option("--root-tol", cfg.root_tol, "Real inverse stopping tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.format = parse_format(format);
    cfg.spacing = parse_spacing(grid);
    if (density->count("--range") > 0) cfg.range = parse_range(range);
    if (curve->parsed()) cfg.grid_count = curve_count;
    cfg.tolerance_override = tolerance;
    cfg.validate();

    if (verify->parsed()) {
      const VerifyReport report = run_verify(cfg, only);
      out.open() << to_json(report).dump(2) << '\n';
      return report.all_pass() ? kExitPass : kExitFail;
    }

    Table table;
    if (app.got_subcommand("constants")) table = constants_table();
    else if (moments->parsed()) table = moments_table(n_moments);
    else if (density->parsed()) {
      if (!parametric.empty()) {
        popt.branch = parametric == "inner" ? vmg::ParametricBranch::Inner : vmg::ParametricBranch::Outer;
        table = parametric_table(cfg, popt);
      } else {
        table = density_table(cfg);
      }
    } else if (curve->parsed()) table = curve_table(cfg, copt);
    else if (transform->parsed()) {
      if (input == "-") table = transform_table(std::cin);
      else {
        std::ifstream in(input);
        if (!in) throw UsageError("cannot open input file '" + input + "'");
        table = transform_table(in);
      }
    }
    write_table(out.open(), table, cfg.format);
    return kExitPass;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
