#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "boxplan/experiment.hpp"
#include "boxplan/map_io.hpp"
#include "boxplan/svg.hpp"
#include "test_util.hpp"

using namespace boxplan;
namespace fs = std::filesystem;

namespace {

const char* kTinyMap =
    "workspace 0 0 60 60\n"
    "box 12 12 0 8 4\n"
    "goal 40 35\n";

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

fs::path write_tiny_map() {
  const fs::path dir = fs::path("test_artifacts");
  fs::create_directories(dir);
  const fs::path path = dir / "tiny.map";
  std::ofstream out(path);
  out << kTinyMap;
  return path;
}

ExperimentSpec tiny_spec(const std::string& out_dir) {
  ExperimentSpec spec;
  spec.map_path = write_tiny_map().string();
  spec.repetitions = 2;
  spec.base_seed = 5;
  spec.planner.optimizer.population = 20;
  spec.planner.optimizer.iterations = 15;
  spec.output_dir = (fs::path("test_artifacts") / out_dir).string();
  return spec;
}

RunReport synthetic_report(std::initializer_list<std::pair<double, double>>
                               per_step_time_energy) {
  RunReport report;
  int index = 0;
  for (const auto& [t, e] : per_step_time_energy) {
    StepRecord step;
    step.index = index++;
    step.objectives.f1 = t;
    step.objectives.f2 = e;
    step.pre_state = make_box_state(Vec2(10 + index, 10), 0, 8, 4);
    step.post_state = make_box_state(Vec2(11 + index, 10), 0, 8, 4);
    report.steps.push_back(step);
    report.total_time_s += t;
    report.total_energy_j += e;
  }
  report.step_count = static_cast<int>(report.steps.size());
  return report;
}

}  // namespace

TEST_CASE("build_step_table: averages only over runs that reached the step") {
  const std::vector<RunReport> runs{
      synthetic_report({{10, 100}, {20, 200}, {30, 300}}),
      synthetic_report({{30, 300}}),
  };
  const auto table = build_step_table(runs);
  REQUIRE(table.size() == 3);
  CHECK(table[0].step == 1);
  CHECK(table[0].runs_at_step == 2);
  CHECK(table[0].avg_time_s == doctest::Approx(20.0));
  CHECK(table[0].avg_energy_j == doctest::Approx(200.0));
  CHECK(table[1].runs_at_step == 1);
  CHECK(table[1].avg_time_s == doctest::Approx(20.0));
  CHECK(table[2].runs_at_step == 1);
  CHECK(table[2].avg_time_s == doctest::Approx(30.0));
}

TEST_CASE("steps_csv: schema and fixed-precision rows") {
  const auto table = build_step_table({synthetic_report({{10.005, 100.004}})});
  const std::string csv = steps_csv(table);
  CHECK(csv ==
        "step,avg_energy_j,avg_time_s,runs_at_step\n1,100.00,10.01,1\n");
}

TEST_CASE("trajectory_csv: total row equals the sum of its step rows") {
  const RunReport report =
      synthetic_report({{10.204, 100.106}, {20.403, 200.207}, {5.001, 9.999}});
  const std::string csv = trajectory_csv(report);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  long long f1_sum = 0, f2_sum = 0;
  std::string total_f1, total_f2;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() >= 20);
    if (fields[0] == "total") {
      total_f1 = fields[14];
      total_f2 = fields[19];
    } else {
      // Re-accumulate the printed fixed-precision values digit by digit.
      auto cents = [](const std::string& s) {
        const auto dot = s.find('.');
        REQUIRE(dot != std::string::npos);
        return std::stoll(s.substr(0, dot)) * 100 +
               std::stoll(s.substr(dot + 1));
      };
      f1_sum += cents(fields[14]);
      f2_sum += cents(fields[19]);
    }
  }
  auto render = [](long long c) {
    return std::to_string(c / 100) + "." + (c % 100 < 10 ? "0" : "") +
           std::to_string(c % 100);
  };
  CHECK(total_f1 == render(f1_sum));
  CHECK(total_f2 == render(f2_sum));
}

TEST_CASE("run_experiment: single algorithm writes its artifact set") {
  const ExperimentSpec spec = tiny_spec("single");
  const ExperimentResult result = run_experiment(spec);
  REQUIRE(result.exit_code == 0);
  REQUIRE(result.summaries.size() == 1);
  CHECK(result.summaries[0].goal_reached == 2);
  const fs::path dir(spec.output_dir);
  CHECK(fs::exists(dir / "report.txt"));
  CHECK(fs::exists(dir / "steps_mopso.csv"));
  CHECK(fs::exists(dir / "trajectory_mopso.csv"));
  CHECK(fs::exists(dir / "trajectory_mopso.svg"));
  CHECK_FALSE(fs::exists(dir / "comparison.csv"));
  CHECK(slurp(dir / "steps_mopso.csv")
            .starts_with("step,avg_energy_j,avg_time_s,runs_at_step\n"));
}

TEST_CASE("run_experiment: both algorithms produce the comparison table") {
  ExperimentSpec spec = tiny_spec("both");
  spec.algorithm = ExperimentAlgo::both;
  spec.repetitions = 1;
  const ExperimentResult result = run_experiment(spec);
  REQUIRE(result.exit_code == 0);
  REQUIRE(result.summaries.size() == 2);
  const std::string csv = slurp(fs::path(spec.output_dir) / "comparison.csv");
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "method,total_energy_kj,total_time_s,total_steps");
  std::getline(in, line);
  CHECK(line.starts_with("mopso,"));
  std::getline(in, line);
  CHECK(line.starts_with("nsga2,"));
}

TEST_CASE("run_experiment: identical specs give byte-identical artifacts") {
  ExperimentSpec a = tiny_spec("det_a");
  ExperimentSpec b = tiny_spec("det_b");
  REQUIRE(run_experiment(a).exit_code == 0);
  REQUIRE(run_experiment(b).exit_code == 0);
  for (const char* name :
       {"steps_mopso.csv", "trajectory_mopso.csv", "trajectory_mopso.svg"}) {
    CHECK(slurp(fs::path(a.output_dir) / name) ==
          slurp(fs::path(b.output_dir) / name));
  }
}

TEST_CASE("run_experiment: bad map or spec reports exit code 1") {
  ExperimentSpec spec = tiny_spec("bad");
  spec.map_path = "test_artifacts/definitely_missing.map";
  CHECK(run_experiment(spec).exit_code == 1);
  ExperimentSpec zero = tiny_spec("zero");
  zero.repetitions = 0;
  CHECK(run_experiment(zero).exit_code == 1);
}

TEST_CASE("run_experiment: unwritable output directory reports exit code 2") {
  ExperimentSpec spec = tiny_spec("unused");
  spec.output_dir = "/proc/boxplan_forbidden/out";
  const ExperimentResult result = run_experiment(spec);
  CHECK(result.exit_code == 2);
}

TEST_CASE("render_svg: zero-step report draws workspace, start and goal only") {
  const WorldMap world = parse_map(kTinyMap);
  RunReport report;
  const std::string svg = render_svg(report, world);
  CHECK(testing::xml_wellformed_error(svg).empty());
  std::size_t polygons = 0, pos = 0;
  while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
    ++polygons;
    pos += 8;
  }
  CHECK(polygons == 1);  // just the start footprint
  CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("render_svg: n steps give n+1 footprints and an n-segment line") {
  WorldMap world = parse_map(kTinyMap);
  world.obstacles.push_back(Circle{Vec2(50, 50), 3});
  world.obstacles.push_back(Rect{Vec2(5, 40), Vec2(15, 50)});
  const RunReport report = synthetic_report({{1, 1}, {2, 2}, {3, 3}});
  const std::string svg = render_svg(report, world);
  CHECK(testing::xml_wellformed_error(svg).empty());

  std::size_t polygons = 0, pos = 0;
  while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
    ++polygons;
    pos += 8;
  }
  CHECK(polygons == 4);  // start + 3 steps

  const std::size_t line_at = svg.find("<polyline points=\"");
  REQUIRE(line_at != std::string::npos);
  const std::size_t quote_open = svg.find('"', line_at) + 1;
  const std::size_t quote_close = svg.find('"', quote_open);
  const std::string points = svg.substr(quote_open, quote_close - quote_open);
  const std::size_t vertices =
      1 + static_cast<std::size_t>(
              std::count(points.begin(), points.end(), ' '));
  CHECK(vertices == 4);  // n + 1 cg samples
}
