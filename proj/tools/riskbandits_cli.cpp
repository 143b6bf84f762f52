#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riskbandits/report.hpp"
#include "riskbandits/svg.hpp"

namespace {

using namespace riskbandits;

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("RISK_BANDITS_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w < 1) throw ConfigError("RISK_BANDITS_WORKERS must be >= 1");
      return w;
    } catch (const std::invalid_argument&) {
      throw ConfigError("RISK_BANDITS_WORKERS must be an integer");
    }
  }
  return 1;
}

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::int64_t seed = -1;
  int replications = 0;
  int workers = 0;
};

RunConfig build_config(const CommonOpts& o) {
  if (o.config_path.empty() == o.preset.empty())
    throw ConfigError("provide exactly one of --config or --preset");
  RunConfig cfg = o.config_path.empty() ? config_from_preset(o.preset)
                                        : load_config_file(o.config_path);
  if (o.seed >= 0) cfg.seed = static_cast<std::uint64_t>(o.seed);
  if (o.replications > 0) cfg.replications = o.replications;
  if (!o.out_dir.empty()) cfg.output_dir = o.out_dir;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out) {
  cmd->add_option("--config", o.config_path, "JSON experiment config");
  cmd->add_option("--preset", o.preset, "named preset (see `presets`)");
  if (with_out) cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--seed", o.seed, "master seed (overrides config)");
  cmd->add_option("--replications", o.replications, "replication count override");
  cmd->add_option("--workers", o.workers, "worker threads (default 1 or env)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Risk-adjusted bandit experiment runner"};
  app.require_subcommand(1);

  CommonOpts run_opts, val_opts;
  std::string plot_dir;

  CLI::App* cmd_run = app.add_subcommand("run", "execute an experiment, write CSV");
  add_common(cmd_run, run_opts, true);
  CLI::App* cmd_presets = app.add_subcommand("presets", "list named presets");
  CLI::App* cmd_plot =
      app.add_subcommand("plot", "render results.csv in a run directory to SVG");
  cmd_plot->add_option("--out", plot_dir, "run directory containing results.csv")
      ->required();
  CLI::App* cmd_validate = app.add_subcommand("validate", "check a config, no run");
  add_common(cmd_validate, val_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_presets->parsed()) {
      for (const auto& name : preset_names()) std::cout << name << '\n';
      return 0;
    }
    if (cmd_run->parsed()) {
      const RunConfig cfg = build_config(run_opts);
      const auto csv = write_run(cfg, resolve_workers(run_opts.workers));
      std::cout << "wrote " << csv.string() << '\n';
      return 0;
    }
    if (cmd_validate->parsed()) {
      const RunConfig cfg = build_config(val_opts);
      (void)cfg;
      std::cout << "config ok\n";
      return 0;
    }
    if (cmd_plot->parsed()) {
      const std::filesystem::path dir(plot_dir);
      std::ifstream in(dir / "results.csv", std::ios::binary);
      if (!in) throw ConfigError("no results.csv in " + dir.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      const RunResult res = parse_csv(buf.str());
      const auto svg_path = dir / "plot.svg";
      std::ofstream out(svg_path, std::ios::binary);
      if (!out) throw NumericError("cannot write " + svg_path.string());
      out << render_svg(res);
      std::cout << "wrote " << svg_path.string() << '\n';
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
