#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coilphase/logging.hpp"
#include "coilphase/result_table.hpp"
#include "coilphase/run_config.hpp"
#include "coilphase/runner.hpp"
#include "coilphase/version.hpp"

namespace {

using namespace coilphase;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << payload;
}

struct CommonOptions {
  std::string config_path;
  std::string out_path;
  std::string format;
  long long seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON run configuration")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts.out_path, "output path (default: stdout or output.path)");
  cmd->add_option("--format", opts.format, "csv or json (default: output.format)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opts.seed,
                  "recorded in metadata; reserved for stochastic features");
}

int emit_table(ResultTable table, const RunConfig& cfg, const CommonOptions& opts) {
  table.metadata.emplace_back("seed", std::to_string(opts.seed));
  const std::string format = opts.format.empty() ? cfg.output.format : opts.format;
  const std::string path = opts.out_path.empty() ? cfg.output.path : opts.out_path;
  write_output(path, format == "json" ? to_json_text(table) : to_csv(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric-phase simulator for polarized light in coiled fibers"};
  app.set_version_flag("--version", std::string(version_string));
  app.require_subcommand(1);

  CommonOptions opts;
  std::vector<double> zeta_sweep;

  CLI::App* phases = app.add_subcommand(
      "phases", "per-occupation cyclic phases of both circular polarizations");
  add_common(phases, opts);

  CLI::App* evolve = app.add_subcommand(
      "evolve", "closed-form vs integrated geometric phase per helicity");
  add_common(evolve, opts);

  CLI::App* chiral = app.add_subcommand(
      "chiral", "dispersion roots and precession split over a chirality sweep");
  add_common(chiral, opts);
  chiral->add_option("--zeta-sweep", zeta_sweep,
                     "chirality values in siemens (default: medium.zeta)");

  CLI::App* fock = app.add_subcommand("fock", "occupation phase table");
  add_common(fock, opts);

  CLI::App* validate =
      app.add_subcommand("validate", "run the module invariant suite, exit 0 iff all pass");
  add_common(validate, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig cfg = parse_config(read_file(opts.config_path));
    if (cfg.zeta_warning)
      log_message(LogLevel::warn,
                  "medium.zeta exceeds the small-zeta threshold; first-order split "
                  "formulas lose accuracy");

    if (phases->parsed()) return emit_table(run_phases(cfg), cfg, opts);
    if (evolve->parsed()) return emit_table(run_evolve(cfg), cfg, opts);
    if (chiral->parsed()) return emit_table(run_chiral(cfg, zeta_sweep), cfg, opts);
    if (fock->parsed()) return emit_table(run_fock(cfg), cfg, opts);
    if (validate->parsed()) {
      const ValidationReport report = run_validate(cfg);
      const std::string path = opts.out_path.empty() ? cfg.output.path : opts.out_path;
      write_output(path, to_json_text(report, cfg, opts.seed));
      for (const ValidationItem& item : report.items)
        if (!item.pass)
          log_message(LogLevel::error,
                      "invariant failed: " + item.invariant + " measured " +
                          format_number(item.measured) + " tolerance " +
                          format_number(item.tolerance));
      return report.all_pass() ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    log_message(LogLevel::error, std::string("config: ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    log_message(LogLevel::error, e.what());
    return 1;
  }
  return 0;
}
