// lbpr: generate instances, run the matheuristic, compute exact fronts and
// aggregate run reports.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lbpr/heuristic.hpp"
#include "lbpr/io.hpp"
#include "lbpr/metrics.hpp"
#include "lbpr/report.hpp"

namespace fs = std::filesystem;
using namespace lbpr;

namespace {

void make_parent(const fs::path &path) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
}

std::string class_file_name(ProblemKind kind, std::size_t n, std::size_t index) {
  std::ostringstream s;
  s << (kind == ProblemKind::Knapsack ? "kp" : "ap") << "_n" << n << '_'
    << std::setw(2) << std::setfill('0') << index << ".inst";
  return s.str();
}

int cmd_generate(const std::string &kind_name, std::size_t n, std::size_t count,
                 std::uint64_t seed, const CoeffRange &range, const fs::path &out_dir) {
  const ProblemKind kind = parse_kind(kind_name);
  if (kind == ProblemKind::General) {
    throw std::invalid_argument("generate supports knapsack and assignment only");
  }
  fs::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t instance_seed = seed + i;
    const Problem p = kind == ProblemKind::Knapsack
                          ? generate_knapsack(n, instance_seed, range)
                          : generate_assignment(n, instance_seed, range);
    const fs::path path = out_dir / class_file_name(kind, n, i + 1);
    write_instance(p, path);
    std::cout << path.string() << '\n';
  }
  return 0;
}

int cmd_convert(const fs::path &input, const std::string &kind_name, const fs::path &out) {
  std::ifstream in(input);
  if (!in) {
    throw std::runtime_error("cannot open '" + input.string() + "'");
  }
  make_parent(out);
  write_instance(read_kirlik(in, parse_kind(kind_name)), out);
  return 0;
}

int cmd_oracle(const fs::path &instance, const fs::path &out) {
  const Problem p = read_instance(instance);
  const auto front = exact_front(p);
  make_parent(out);
  write_front(p, front, out);
  std::cerr << instance.string() << ": " << front.size() << " nondominated points\n";
  return 0;
}

int cmd_lbset(const fs::path &instance, const fs::path &out) {
  const Problem p = read_instance(instance);
  const LbSet lb = compute_lb_set(p);
  make_parent(out);
  std::ofstream file(out);
  if (!file) {
    throw std::runtime_error("cannot write '" + out.string() + "'");
  }
  write_lb_front(p, lb, file);
  std::cerr << instance.string() << ": " << lb.points.size() << " points, "
            << lb.lp_count << " LPs\n";
  return 0;
}

struct SolveOptions {
  std::vector<std::string> variants{"PI"};
  std::uint64_t seed = 1;
  std::size_t runs = 1;
  std::size_t iter_mult = 50;
  double best_prob = 0.7;
  std::string ref_front;
  std::string ref_dir;
  std::vector<double> ref_point;
  std::string out_dir;
  std::string csv;
  std::size_t jobs = 1;
  bool force_assignment_pr = false;
};

struct Task {
  fs::path instance;
  Variant variant;
  std::uint64_t seed;
};

std::optional<ReferenceFront> find_reference(const fs::path &instance,
                                             const SolveOptions &opt) {
  fs::path path;
  if (!opt.ref_front.empty()) {
    path = opt.ref_front;
  } else if (!opt.ref_dir.empty()) {
    path = fs::path(opt.ref_dir) / (instance.stem().string() + ".ref");
    if (!fs::exists(path)) {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  return ReferenceFront::from_points(read_front(path).min_form_points());
}

RunReport solve_one(const Task &task, const SolveOptions &opt) {
  const Problem problem = read_instance(task.instance);
  PrConfig config;
  config.variant = task.variant;
  config.seed = task.seed;
  config.iteration_multiplier = opt.iter_mult;
  config.best_move_probability = opt.best_prob;
  config.force_assignment_pr = opt.force_assignment_pr;
  const RunResult result = run(problem, config);

  RunReport row;
  row.instance = task.instance.stem().string();
  row.kind = std::string(to_string(problem.kind()));
  row.n = problem.kind() == ProblemKind::Assignment ? problem.tasks() : problem.num_vars();
  row.variant = std::string(to_string(task.variant));
  row.seed = task.seed;
  row.front_size = result.front.size();
  row.time_s = result.stats.wall_seconds;
  row.lp_count = result.stats.lp_count;

  const auto points = objective_points(result.front);
  if (auto ref = find_reference(task.instance, opt)) {
    row.hv = normalized_hypervolume(points, *ref);
    row.hv_pct = hv_percent(points, *ref);
  } else if (opt.ref_point.size() == kNumObjectives) {
    // Raw volume in minimization form against the user's point.
    Point ref_orig{};
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      ref_orig[k] = static_cast<Coefficient>(std::llround(opt.ref_point[k]));
    }
    const Point ref_min = from_original(problem, ref_orig);
    RealPoint ref{static_cast<double>(ref_min[0]), static_cast<double>(ref_min[1]),
                  static_cast<double>(ref_min[2])};
    std::vector<RealPoint> inside;
    for (auto p : points) {
      for (std::size_t k = 0; k < kNumObjectives; ++k) {
        p[k] = std::min(p[k], ref[k]);
      }
      inside.push_back(p);
    }
    row.hv = hypervolume(inside, ref);
  }

  if (!opt.out_dir.empty()) {
    const fs::path path = fs::path(opt.out_dir) / (row.instance + "." + row.variant + ".s" +
                                                   std::to_string(task.seed) + ".front");
    write_front(problem, result.front, path);
    row.front_file = path.string();
  }
  return row;
}

int cmd_solve(const std::vector<std::string> &instances, const SolveOptions &opt) {
  if (!opt.ref_point.empty() && opt.ref_point.size() != kNumObjectives) {
    throw std::invalid_argument("--ref-point needs 3 values");
  }
  if (!opt.out_dir.empty()) {
    fs::create_directories(opt.out_dir);
  }
  std::vector<Variant> variants;
  for (const auto &name : opt.variants) {
    variants.push_back(parse_variant(name));
  }
  std::vector<Task> tasks;
  for (const auto &inst : instances) {
    for (Variant v : variants) {
      for (std::size_t r = 0; r < opt.runs; ++r) {
        tasks.push_back({inst, v, opt.seed + r});
      }
    }
  }

  std::vector<std::optional<RunReport>> rows(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = solve_one(tasks[i], opt);
      } catch (const std::exception &e) {
        errors[i] = e.what();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto &t : pool) {
    t.join();
  }

  std::ofstream csv_file;
  std::ostream *csv = &std::cout;
  if (!opt.csv.empty()) {
    make_parent(opt.csv);
    const bool fresh = !fs::exists(opt.csv) || fs::file_size(opt.csv) == 0;
    csv_file.open(opt.csv, std::ios::app);
    if (!csv_file) {
      throw std::runtime_error("cannot open '" + opt.csv + "'");
    }
    csv = &csv_file;
    if (fresh) {
      write_report_header(*csv);
    }
  } else {
    write_report_header(*csv);
  }
  int failures = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (rows[i]) {
      write_report_row(*rows[i], *csv);
    } else {
      ++failures;
      std::cerr << "failed: " << tasks[i].instance.string() << " "
                << to_string(tasks[i].variant) << " seed " << tasks[i].seed << ": "
                << errors[i] << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}

int cmd_report(const fs::path &run_csv, const std::string &ref_dir, const std::string &out) {
  std::ifstream in(run_csv);
  if (!in) {
    throw std::runtime_error("cannot open '" + run_csv.string() + "'");
  }
  auto rows = read_reports(in);
  if (!ref_dir.empty()) {
    for (auto &r : rows) {
      if (r.hv_pct || r.front_file.empty()) {
        continue;
      }
      const fs::path ref_path = fs::path(ref_dir) / (r.instance + ".ref");
      if (!fs::exists(ref_path) || !fs::exists(r.front_file)) {
        continue;
      }
      const auto ref = ReferenceFront::from_points(read_front(ref_path).min_form_points());
      const auto points = read_front(fs::path(r.front_file)).min_form_points();
      r.hv = normalized_hypervolume(points, ref);
      r.hv_pct = hv_percent(points, ref);
    }
  }
  const auto table = aggregate(std::move(rows));
  if (out.empty()) {
    write_aggregate(table, std::cout);
  } else {
    make_parent(out);
    std::ofstream file(out);
    if (!file) {
      throw std::runtime_error("cannot write '" + out + "'");
    }
    write_aggregate(table, file);
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"LP-relaxation matheuristic for tri-objective binary programs"};
  app.require_subcommand(1);

  std::string kind = "knapsack";
  std::size_t n = 10, count = 10;
  std::uint64_t seed = 1;
  CoeffRange range;
  std::string out;
  auto *gen = app.add_subcommand("generate", "Write random instances");
  gen->add_option("--kind", kind, "knapsack | assignment")->check(CLI::IsMember({"knapsack", "assignment"}));
  gen->add_option("-n,--size", n, "items (knapsack) or tasks (assignment)")->check(CLI::PositiveNumber);
  gen->add_option("--count", count, "number of instances");
  gen->add_option("--seed", seed, "base seed; instance i uses seed + i");
  gen->add_option("--lo", range.lo, "smallest coefficient");
  gen->add_option("--hi", range.hi, "largest coefficient");
  gen->add_option("--out", out, "output directory")->required();

  std::string input;
  auto *conv = app.add_subcommand("convert", "Convert a Kirlik benchmark file");
  conv->add_option("input", input)->required()->check(CLI::ExistingFile);
  conv->add_option("--kind", kind, "knapsack | assignment")->check(CLI::IsMember({"knapsack", "assignment"}));
  conv->add_option("--out", out, "instance file to write")->required();

  auto *oracle = app.add_subcommand("oracle", "Exact nondominated set by enumeration");
  oracle->add_option("instance", input)->required()->check(CLI::ExistingFile);
  oracle->add_option("--out", out, "reference front file")->required();

  auto *lbset = app.add_subcommand("lbset", "Export the LP lower bound set");
  lbset->add_option("instance", input)->required()->check(CLI::ExistingFile);
  lbset->add_option("--out", out, "front file")->required();

  SolveOptions so;
  std::vector<std::string> instances;
  auto *solve = app.add_subcommand("solve", "Run the matheuristic");
  solve->add_option("instances", instances)->required()->check(CLI::ExistingFile);
  solve->add_option("--variant", so.variants, "RD PRrand PRsim PRdif PI PIsim PIdif")->delimiter(',');
  solve->add_option("--seed", so.seed, "first seed");
  solve->add_option("--runs", so.runs, "runs per instance, seeds seed..seed+runs-1");
  solve->add_option("--iter-mult", so.iter_mult, "iterations per initial IR solution");
  solve->add_option("--best-prob", so.best_prob, "best-move probability")->check(CLI::Range(0.0, 1.0));
  solve->add_option("--ref-front", so.ref_front, "reference front for HV%")->check(CLI::ExistingFile);
  solve->add_option("--ref-dir", so.ref_dir, "directory of <instance>.ref fronts");
  solve->add_option("--ref-point", so.ref_point, "raw HV reference point, original senses")->delimiter(',');
  solve->add_option("--out", so.out_dir, "directory for front files");
  solve->add_option("--csv", so.csv, "append report rows here instead of stdout");
  solve->add_option("-j,--jobs", so.jobs, "worker threads");
  solve->add_flag("--force-assignment-pr", so.force_assignment_pr,
                  "round and relink assignment instances too");

  std::string ref_dir;
  auto *report = app.add_subcommand("report", "Aggregate run CSV rows per subclass");
  report->add_option("runs", input, "run CSV")->required()->check(CLI::ExistingFile);
  report->add_option("--ref-dir", ref_dir, "fill missing HV% from <instance>.ref");
  report->add_option("--out", out, "aggregate CSV (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen)
      return cmd_generate(kind, n, count, seed, range, out);
    if (*conv)
      return cmd_convert(input, kind, out);
    if (*oracle)
      return cmd_oracle(input, out);
    if (*lbset)
      return cmd_lbset(input, out);
    if (*solve)
      return cmd_solve(instances, so);
    if (*report)
      return cmd_report(input, ref_dir, out);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
