// Command-line front end: loads a system description and runs one analysis.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stpsw/description.hpp"
#include "stpsw/errors.hpp"
#include "stpsw/realization.hpp"
#include "stpsw/report.hpp"

namespace {

struct Cli {
  stpsw::RunRequest req;
  std::string file;
  std::string format = "text";
  std::string durations;
  std::string min_dwell;
  std::string reference;
};

CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help, Cli& cli,
               const std::string& command, const std::string& sub = "") {
  CLI::App* app = parent.add_subcommand(name, help);
  app->add_option("file", cli.file, "system description file")->required()->check(CLI::ExistingFile);
  app->callback([&cli, command, sub] {
    cli.req.command = command;
    if (!sub.empty()) cli.req.subcommand = sub;
  });
  return app;
}

void add_search_flags(CLI::App* app, Cli& cli) {
  app->add_option("--tmax", cli.req.t_max, "longest logical input sequence searched (default n)");
  app->add_flag("--strict", cli.req.strict, "check every initial logical state, not only control attractors");
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"Controllability, observability and switching-signal analysis of switched linear systems "
               "driven by logical networks"};
  app.set_version_flag("--version", std::string(stpsw::kToolVersion));
  app.require_subcommand(1);
  app.add_option("--format", cli.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timestamp", [&cli](std::int64_t) { cli.req.timestamp = false; },
               "omit wall-clock fields so reports are byte-reproducible");
  app.add_option("--max-sequences", cli.req.max_sequences, "enumeration budget");

  CLI::App* analyze = app.add_subcommand("analyze", "check a control property");
  analyze->add_option("property", cli.req.subcommand, "reachability|controllability|observability|reconstructibility|all")
      ->required()
      ->check(CLI::IsMember({"reachability", "controllability", "observability", "reconstructibility", "all"}));
  analyze->add_option("file", cli.file, "system description file")->required()->check(CLI::ExistingFile);
  analyze->callback([&cli] { cli.req.command = "analyze"; });
  add_search_flags(analyze, cli);

  leaf(app, "attractors", "control fixed points, cycles and their basins", cli, "attractors");

  CLI::App* setreach = leaf(app, "setreach", "input-state set reachability", cli, "setreach");
  setreach->add_option("--l", cli.req.ell, "path length")->required();
  setreach->add_option("--omega0", cli.req.omega0, "initial subsets, e.g. \"4,6|1,2\"")->required();
  setreach->add_option("--omegad", cli.req.omegad, "terminal subsets, e.g. \"5,7,8|1,2,3\"")->required();
  setreach->add_flag("--quantitative", cli.req.quantitative, "also count paths");

  CLI::App* realize = app.add_subcommand("realize", "switching-signal realizability");
  realize->require_subcommand(1);
  leaf(*realize, "fot", "fixed operating times", cli, "realize", "fot")
      ->add_option("--durations", cli.durations, "one per signal, 'inf' for unbounded")
      ->required();
  leaf(*realize, "dwell", "minimum dwell times", cli, "realize", "dwell")
      ->add_option("--min", cli.min_dwell, "one per signal")
      ->required();

  CLI::App* track = leaf(app, "track", "reference signal tracking", cli, "track");
  track->add_option("--theta0", cli.req.theta0, "initial logical state")->required();
  track->add_option("--ref", cli.reference, "reference signal sequence, e.g. \"1,2,2\"")->required();

  leaf(app, "graph", "input-state transition graph in DOT", cli, "graph")
      ->add_option("--out", cli.req.out_path, "output path (default: stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->require_subcommand(1);
  add_search_flags(leaf(*oracle, "kalman", "compare verdicts with exhaustive rank tests", cli, "oracle", "kalman"), cli);
  CLI::App* paths = leaf(*oracle, "paths", "count input-state paths by depth-first search", cli, "oracle", "paths");
  paths->add_option("--from", cli.req.from, "source input-state indices")->required();
  paths->add_option("--to", cli.req.to, "target input-state indices")->required();
  paths->add_option("--l", cli.req.ell, "path length")->required();
  CLI::App* seqs = leaf(*oracle, "sequences", "enumerate switching sequences", cli, "oracle", "sequences");
  seqs->add_option("--alpha", cli.req.alpha, "initial logical state")->required();
  seqs->add_option("--T", cli.req.horizon, "horizon")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return stpsw::kInputError;
  }

  try {
    if (!cli.durations.empty()) cli.req.durations = stpsw::parse_index_list(cli.durations, stpsw::FotSpec::infinity);
    if (!cli.min_dwell.empty()) cli.req.min_dwell = stpsw::parse_index_list(cli.min_dwell);
    if (!cli.reference.empty()) cli.req.reference = stpsw::parse_index_list(cli.reference);
    stpsw::SystemDescription d = stpsw::load_description(cli.file);
    stpsw::AnalysisReport report = stpsw::run(cli.req, d);
    std::cout << stpsw::render(report, cli.format == "json" ? stpsw::ReportFormat::Json : stpsw::ReportFormat::Text);
    return report.exit_code;
  } catch (const stpsw::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return stpsw::kBudgetExceeded;
  } catch (const stpsw::SizingError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return stpsw::kBudgetExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return stpsw::kInputError;
  }
}
