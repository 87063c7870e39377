#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxplan/planner.hpp"

namespace boxplan {

enum class ExperimentAlgo { mopso, nsga2, both };

struct ExperimentSpec {
  std::string map_path;
  ExperimentAlgo algorithm = ExperimentAlgo::mopso;
  int repetitions = 10;
  std::uint64_t base_seed = 1;
  PlannerConfig planner;
  std::string output_dir = "out";
  bool text = true;
  bool csv = true;
  bool svg = true;
};

// One row of the per-step averaged table: means over the runs that reached
// this step index.
struct StepTableRow {
  int step = 0;  // 1-based
  double avg_energy_j = 0.0;
  double avg_time_s = 0.0;
  int runs_at_step = 0;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::mopso;
  std::vector<RunReport> runs;
  std::vector<StepTableRow> table;
  double mean_total_energy_kj = 0.0;
  double mean_total_time_s = 0.0;
  double mean_steps = 0.0;
  int goal_reached = 0;
  int step_limited = 0;
  int stalled = 0;
};

struct ExperimentResult {
  int exit_code = 0;  // 0 ok, 1 parse/config error, 2 I/O error
  std::string error;
  std::vector<AlgorithmSummary> summaries;
  std::string report_text;
};

std::vector<StepTableRow> build_step_table(const std::vector<RunReport>& runs);

AlgorithmSummary summarize(Algorithm algorithm, std::vector<RunReport> runs);

// steps CSV: step,avg_energy_j,avg_time_s,runs_at_step
std::string steps_csv(const std::vector<StepTableRow>& table);

// comparison CSV: method,total_energy_kj,total_time_s,total_steps
std::string comparison_csv(const std::vector<AlgorithmSummary>& summaries);

// Per-run diagnostics CSV with the full time/energy component breakdown and
// the committed pose, one row per step plus a final `total` row whose f1/f2
// equal the column sums of the rounded step values digit-for-digit.
std::string trajectory_csv(const RunReport& report);

// Runs the repetitions (seeds base..base+reps-1), builds the tables, writes
// every requested artifact under spec.output_dir, and reports the exit
// status. Stalled runs are noted in the report and do not fail the run.
ExperimentResult run_experiment(const ExperimentSpec& spec);

}  // namespace boxplan
