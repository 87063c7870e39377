#include "boxplan/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "boxplan/map_io.hpp"
#include "boxplan/svg.hpp"

namespace boxplan {

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

// Fixed-point cents (2 decimals) so a totals row can equal the sum of its
// step rows digit for digit.
long long to_cents(double v) { return std::llround(v * 100.0); }

std::string cents_to_string(long long cents) {
  const bool negative = cents < 0;
  long long abs = negative ? -cents : cents;
  std::string s = std::to_string(abs / 100) + "." +
                  (abs % 100 < 10 ? "0" : "") + std::to_string(abs % 100);
  return negative ? "-" + s : s;
}

std::string display_name(Algorithm algorithm) {
  return algorithm == Algorithm::mopso ? "MOPSO" : "NSGA-II";
}

}  // namespace

std::vector<StepTableRow> build_step_table(const std::vector<RunReport>& runs) {
  std::size_t longest = 0;
  for (const auto& run : runs) longest = std::max(longest, run.steps.size());
  std::vector<StepTableRow> table;
  for (std::size_t i = 0; i < longest; ++i) {
    StepTableRow row;
    row.step = static_cast<int>(i) + 1;
    for (const auto& run : runs) {
      if (i < run.steps.size()) {
        row.avg_energy_j += run.steps[i].objectives.f2;
        row.avg_time_s += run.steps[i].objectives.f1;
        ++row.runs_at_step;
      }
    }
    row.avg_energy_j /= row.runs_at_step;
    row.avg_time_s /= row.runs_at_step;
    table.push_back(row);
  }
  return table;
}

AlgorithmSummary summarize(Algorithm algorithm, std::vector<RunReport> runs) {
  AlgorithmSummary summary;
  summary.algorithm = algorithm;
  summary.table = build_step_table(runs);
  for (const auto& run : runs) {
    summary.mean_total_energy_kj += run.total_energy_j / 1000.0;
    summary.mean_total_time_s += run.total_time_s;
    summary.mean_steps += run.step_count;
    switch (run.termination) {
      case Termination::goal_reached:
        ++summary.goal_reached;
        break;
      case Termination::step_limit:
        ++summary.step_limited;
        break;
      case Termination::stalled:
        ++summary.stalled;
        break;
    }
  }
  const auto n = static_cast<double>(runs.size());
  summary.mean_total_energy_kj /= n;
  summary.mean_total_time_s /= n;
  summary.mean_steps /= n;
  summary.runs = std::move(runs);
  return summary;
}

std::string steps_csv(const std::vector<StepTableRow>& table) {
  std::string out = "step,avg_energy_j,avg_time_s,runs_at_step\n";
  for (const auto& row : table) {
    out += std::to_string(row.step) + "," + fixed(row.avg_energy_j, 2) + "," +
           fixed(row.avg_time_s, 2) + "," + std::to_string(row.runs_at_step) +
           "\n";
  }
  return out;
}

std::string comparison_csv(const std::vector<AlgorithmSummary>& summaries) {
  std::string out = "method,total_energy_kj,total_time_s,total_steps\n";
  for (const auto& s : summaries) {
    out += to_string(s.algorithm) + "," + fixed(s.mean_total_energy_kj, 3) +
           "," + fixed(s.mean_total_time_s, 2) + "," + fixed(s.mean_steps, 1) +
           "\n";
  }
  return out;
}

std::string trajectory_csv(const RunReport& report) {
  std::string out =
      "step,cg_x,cg_y,theta,pivot_x,pivot_y,f1r,f1t,d1,d,alpha,"
      "t1,t2,t3,f1,e1,e2,e3,e4,f2,s_remaining,d2\n";
  long long f1_cents = 0;
  long long f2_cents = 0;
  for (const auto& step : report.steps) {
    const DecisionVector& d = step.decision;
    const ObjectiveBreakdown& o = step.objectives;
    const long long f1 = to_cents(o.f1);
    const long long f2 = to_cents(o.f2);
    f1_cents += f1;
    f2_cents += f2;
    out += std::to_string(step.index + 1);
    for (double v :
         {step.post_state.cg.x(), step.post_state.cg.y(),
          step.post_state.theta, d.pivot.x(), d.pivot.y(), d.rotation_force,
          d.translation_force, d.moment_arm, d.travel_distance, d.turn_angle,
          o.t1, o.t2, o.t3}) {
      out += "," + fixed(v, 2);
    }
    out += "," + cents_to_string(f1);
    for (double v : {o.e1, o.e2, o.e3, o.e4}) {
      out += "," + fixed(v, 2);
    }
    out += "," + cents_to_string(f2);
    out += "," + fixed(o.s_remaining, 2) + "," + fixed(o.clearance_d2, 2) +
           "\n";
  }
  out += "total,,,,,,,,,,,,,," + cents_to_string(f1_cents) + ",,,,," +
         cents_to_string(f2_cents) + ",,\n";
  return out;
}

namespace {

std::string render_report_text(const ExperimentSpec& spec,
                               const std::vector<AlgorithmSummary>& summaries) {
  std::ostringstream out;
  out << "map: " << spec.map_path << "\n";
  out << "seeds: " << spec.base_seed << ".."
      << spec.base_seed + static_cast<std::uint64_t>(spec.repetitions) - 1
      << " (" << spec.repetitions << " repetitions)\n";
  for (const auto& s : summaries) {
    out << "\n" << display_name(s.algorithm) << " step table\n";
    out << "Step | Average Energy (J) | Average Time (s) | Runs\n";
    for (const auto& row : s.table) {
      char line[96];
      std::snprintf(line, sizeof(line), "%4d | %18.2f | %16.2f | %4d\n",
                    row.step, row.avg_energy_j, row.avg_time_s,
                    row.runs_at_step);
      out << line;
    }
    out << "totals: energy " << fixed(s.mean_total_energy_kj, 3)
        << " KJ, time " << fixed(s.mean_total_time_s, 2) << " s, steps "
        << fixed(s.mean_steps, 1) << "\n";
    out << "terminations: goal-reached " << s.goal_reached << ", step-limit "
        << s.step_limited << ", stalled " << s.stalled << "\n";
  }
  if (summaries.size() == 2) {
    out << "\ncomparison\n";
    out << "Method  | Total Energy (KJ) | Total Time (s) | Total No of steps\n";
    for (const auto& s : summaries) {
      char line[96];
      std::snprintf(line, sizeof(line), "%-7s | %17.3f | %14.2f | %17.1f\n",
                    display_name(s.algorithm).c_str(),
                    s.mean_total_energy_kj, s.mean_total_time_s, s.mean_steps);
      out << line;
    }
    const AlgorithmSummary* mopso = &summaries[0];
    const AlgorithmSummary* nsga2 = &summaries[1];
    if (mopso->algorithm != Algorithm::mopso) std::swap(mopso, nsga2);
    const bool energy_ok =
        mopso->mean_total_energy_kj <= 1.05 * nsga2->mean_total_energy_kj;
    const bool time_ok =
        mopso->mean_total_time_s <= 1.05 * nsga2->mean_total_time_s;
    out << "direction: MOPSO within 1.05x NSGA-II on energy: "
        << (energy_ok ? "yes" : "NO (direction reversed)")
        << "; on time: " << (time_ok ? "yes" : "NO (direction reversed)")
        << "\n";
  }
  return out.str();
}

bool write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << body;
  return static_cast<bool>(out);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
  ExperimentResult result;
  if (spec.repetitions < 1) {
    result.exit_code = 1;
    result.error = "repetitions must be >= 1";
    return result;
  }

  WorldMap world;
  try {
    world = load_map(spec.map_path);
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.error = spec.map_path + ": " + e.what();
    return result;
  }

  std::vector<Algorithm> algorithms;
  if (spec.algorithm == ExperimentAlgo::mopso ||
      spec.algorithm == ExperimentAlgo::both) {
    algorithms.push_back(Algorithm::mopso);
  }
  if (spec.algorithm == ExperimentAlgo::nsga2 ||
      spec.algorithm == ExperimentAlgo::both) {
    algorithms.push_back(Algorithm::nsga2);
  }

  for (Algorithm algorithm : algorithms) {
    PlannerConfig config = spec.planner;
    config.optimizer.algorithm = algorithm;
    std::vector<RunReport> runs;
    runs.reserve(static_cast<std::size_t>(spec.repetitions));
    for (int rep = 0; rep < spec.repetitions; ++rep) {
      runs.push_back(run_planner(
          world, config, spec.base_seed + static_cast<std::uint64_t>(rep)));
    }
    result.summaries.push_back(summarize(algorithm, std::move(runs)));
  }
  result.report_text = render_report_text(spec, result.summaries);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(spec.output_dir, ec);
  if (ec) {
    result.exit_code = 2;
    result.error = "cannot create output directory " + spec.output_dir;
    return result;
  }
  const fs::path dir(spec.output_dir);
  bool ok = true;
  if (spec.text) {
    ok = ok && write_file(dir / "report.txt", result.report_text);
  }
  if (spec.csv) {
    for (const auto& s : result.summaries) {
      const std::string tag = to_string(s.algorithm);
      ok = ok && write_file(dir / ("steps_" + tag + ".csv"), steps_csv(s.table));
      ok = ok && write_file(dir / ("trajectory_" + tag + ".csv"),
                            trajectory_csv(s.runs.front()));
    }
    if (result.summaries.size() == 2) {
      ok = ok &&
           write_file(dir / "comparison.csv", comparison_csv(result.summaries));
    }
  }
  if (spec.svg) {
    for (const auto& s : result.summaries) {
      ok = ok && write_file(dir / ("trajectory_" + to_string(s.algorithm) +
                                   ".svg"),
                            render_svg(s.runs.front(), world));
    }
  }
  if (!ok) {
    result.exit_code = 2;
    result.error = "failed writing artifacts to " + spec.output_dir;
  }
  return result;
}

}  // namespace boxplan
