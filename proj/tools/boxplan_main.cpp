#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "boxplan/experiment.hpp"

namespace {

bool parse_formats(const std::string& csl, boxplan::ExperimentSpec& spec,
                   std::string& bad) {
  spec.text = spec.csv = spec.svg = false;
  std::istringstream in(csl);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "text") {
      spec.text = true;
    } else if (item == "csv") {
      spec.csv = true;
    } else if (item == "svg") {
      spec.svg = true;
    } else {
      bad = item;
      return false;
    }
  }
  return spec.text || spec.csv || spec.svg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-robot box-pushing planner driven by multi-objective "
               "optimization (MOPSO with an NSGA-II baseline)"};
  app.require_subcommand(1);

  boxplan::ExperimentSpec spec;
  std::string algo = "mopso";
  std::string formats = "text,csv,svg";

  CLI::App* plan = app.add_subcommand(
      "plan", "Run seeded planning experiments on a world map");
  plan->add_option("--map", spec.map_path, "World map file")->required();
  plan->add_option("--algo", algo, "Optimizer: mopso, nsga2 or both")
      ->check(CLI::IsMember({"mopso", "nsga2", "both"}));
  plan->add_option("--seed", spec.base_seed, "Base seed (runs use seed..seed+reps-1)");
  plan->add_option("--reps", spec.repetitions, "Repetitions per algorithm");
  plan->add_option("--pop", spec.planner.optimizer.population,
                   "Optimizer population size");
  plan->add_option("--iters", spec.planner.optimizer.iterations,
                   "Optimizer iterations (generations)");
  plan->add_option("--archive", spec.planner.optimizer.archive_capacity,
                   "MOPSO archive capacity");
  plan->add_option("--grid-div", spec.planner.optimizer.grid_divisions,
                   "MOPSO grid divisions per objective");
  plan->add_option("--mut-rate", spec.planner.optimizer.mutation_rate,
                   "MOPSO mutation rate in (0,1]");
  plan->add_option("--out", spec.output_dir, "Output directory");
  plan->add_option("--format", formats,
                   "Comma-separated outputs: text,csv,svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // parse/config errors exit 1 regardless of CLI11's own codes
  }

  if (algo == "mopso") {
    spec.algorithm = boxplan::ExperimentAlgo::mopso;
  } else if (algo == "nsga2") {
    spec.algorithm = boxplan::ExperimentAlgo::nsga2;
  } else {
    spec.algorithm = boxplan::ExperimentAlgo::both;
  }
  std::string bad;
  if (!parse_formats(formats, spec, bad)) {
    std::cerr << "invalid --format value"
              << (bad.empty() ? "" : ": '" + bad + "'") << "\n";
    return 1;
  }
  if (spec.planner.optimizer.population < 1 ||
      spec.planner.optimizer.iterations < 1 ||
      spec.planner.optimizer.mutation_rate <= 0.0 ||
      spec.planner.optimizer.mutation_rate > 1.0 ||
      spec.planner.optimizer.grid_divisions < 1) {
    std::cerr << "invalid optimizer configuration\n";
    return 1;
  }

  const boxplan::ExperimentResult result = boxplan::run_experiment(spec);
  if (!result.error.empty()) {
    std::cerr << result.error << "\n";
  }
  if (result.exit_code == 0) {
    std::cout << result.report_text;
    std::cout << "\nartifacts written to " << spec.output_dir << "\n";
  }
  return result.exit_code;
}
