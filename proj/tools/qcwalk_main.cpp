#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qcwalk/graph.hpp"
#include "qcwalk/harness.hpp"

namespace {

int run(qcwalk::ExperimentConfig cfg, const std::string& out_path) {
  qcwalk::ExperimentResult res = qcwalk::run_experiment(cfg);
  std::string body = res.body;
  if (!body.empty() && body.back() != '\n') body.push_back('\n');
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << body;
  }
  return res.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  qcwalk::ExperimentConfig cfg;
  std::string out_path, config_path;

  CLI::App app{"unbiased quantized consensus laboratory"};
  app.require_subcommand(0, 1);

  auto field = [&cfg](const char* key) {
    return [&cfg, key](const std::string& v) { cfg.fields[key] = v; };
  };

  app.add_option_function<std::string>("--seed", field("seed"), "rng seed (uint64)");
  app.add_option("--out", out_path, "write the result body to this file instead of stdout");
  app.add_option_function<std::string>("--format", field("format"),
                                       "output format where a subcommand supports both (csv|json)");
  app.add_option_function<std::string>("--tolerance", field("tolerance"),
                                       "numeric tolerance for spectral residual checks");
  app.add_option("--config", config_path, "run an experiment described by a [kind] key=value file");

  auto* graph_cmd = app.add_subcommand("graph", "build a graph and print it (text or json report)");
  graph_cmd->add_option_function<std::string>("--graph", field("graph"), "graph spec, e.g. cycle:8")
      ->required();

  auto* sim_cmd = app.add_subcommand("simulate", "run the quantized protocol to consensus");
  sim_cmd->add_option_function<std::string>("--graph", field("graph"), "graph spec")->required();
  sim_cmd->add_option_function<std::string>(
      "--profile", field("profile"), "initial opinions: x-set:a,b | list:v0,v1,... | a file path");
  sim_cmd->add_option_function<std::string>("--trials", field("trials"), "independent runs");
  sim_cmd->add_option_function<std::string>("--max-steps", field("max_steps"), "per-run step cap");

  auto* walk_cmd = app.add_subcommand("walkers", "Monte Carlo meeting times of the coupled walkers");
  walk_cmd->add_option_function<std::string>("--graph", field("graph"), "graph spec")->required();
  walk_cmd->add_option_function<std::string>("--kind", field("kind"), "original|virtual")
      ->check(CLI::IsMember({"original", "virtual"}));
  walk_cmd->add_option_function<std::string>("--trials", field("trials"), "trials per start pair");
  walk_cmd->add_option_function<std::string>("--start", field("start"),
                                             "single start pair a,b (default: all ordered pairs)");
  walk_cmd->add_option_function<std::string>("--cap", field("cap"), "per-trial step cap");

  auto* exact_cmd = app.add_subcommand("exact", "dense linear-algebra tables");
  exact_cmd->add_option_function<std::string>("--graph", field("graph"), "graph spec")->required();
  exact_cmd
      ->add_option_function<std::string>(
          "--what", field("what"), "hitting|resistance|meeting:original|meeting:virtual|phi")
      ->check(CLI::IsMember({"hitting", "resistance", "meeting:original", "meeting:virtual", "phi"}));

  auto* spec_cmd = app.add_subcommand("spectral", "eigenvalue reports and identities");
  spec_cmd->add_option_function<std::string>("--graph", field("graph"), "graph spec")->required();
  spec_cmd
      ->add_option_function<std::string>(
          "--what", field("what"), "spectrum|random-target|product|lemma7|kbar|contraction")
      ->check(CLI::IsMember(
          {"spectrum", "random-target", "product", "lemma7", "kbar", "contraction"}));

  auto* bounds_cmd = app.add_subcommand("bounds", "meeting-time bounds and closed forms");
  bounds_cmd->add_option_function<std::string>("--graph", field("graph"), "single graph report");
  bounds_cmd->add_option_function<std::string>("--family", field("family"),
                                               "family sweep: line|cycle|star|...");
  bounds_cmd->add_option_function<std::string>("--n-range", field("n_range"), "lo..hi for --family");

  auto* tv_cmd = app.add_subcommand("tv", "time-varying graph schedules");
  tv_cmd->add_option_function<std::string>("--members", field("members"),
                                           "semicolon-separated graph specs");
  tv_cmd->add_option_function<std::string>("--schedule", field("schedule"),
                                           "file with one graph spec per line");
  tv_cmd->add_option_function<std::string>("--mode", field("mode"), "periodic|random")
      ->check(CLI::IsMember({"periodic", "random"}));
  tv_cmd->add_option_function<std::string>("--sub", field("sub"), "validate|meet|mix")
      ->check(CLI::IsMember({"validate", "meet", "mix"}));
  tv_cmd->add_option_function<std::string>("--start", field("start"), "walker start pair a,b");
  tv_cmd->add_option_function<std::string>("--trials", field("trials"), "meeting-time trials");
  tv_cmd->add_option_function<std::string>("--horizon", field("horizon"), "mixing-trace length");

  auto* sweep_cmd = app.add_subcommand("sweep", "worst meeting time against n*m*diameter");
  sweep_cmd->add_option_function<std::string>("--families", field("families"),
                                              "comma list: line,star,lollipop,semi_regular");
  sweep_cmd->add_option_function<std::string>("--n-range", field("n_range"), "lo..hi (default 3..24)");
  sweep_cmd->add_option_function<std::string>("--mode", field("mode"), "exact|mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  sweep_cmd->add_option_function<std::string>("--trials", field("trials"), "mc trials per pair");

  app.add_subcommand("suite", "run the full acceptance suite and print the report");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto picked = app.get_subcommands();
    if (!picked.empty()) {
      cfg.kind = picked.front()->get_name();
    } else if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config file: " + config_path);
      qcwalk::ExperimentConfig loaded = qcwalk::ExperimentConfig::from_stream(in);
      for (const auto& kv : cfg.fields) loaded.fields[kv.first] = kv.second;
      cfg = std::move(loaded);
    } else {
      std::cerr << app.help();
      return 2;
    }
    return run(std::move(cfg), out_path);
  } catch (const qcwalk::check_error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
