// moga: experiment runner for the multi-objective antenna design toolkit.
//
// Subcommands:
//   run      execute one optimization run and persist its outputs
//   compare  pool several finished runs into one comparison report
//   bench    run a benchmark problem over a batch of seeds, print IGD

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "moga/experiment.hpp"
#include "moga/metrics.hpp"

namespace {

/// Adds the flags shared by `run` and `bench` to a subcommand.
void add_engine_flags(CLI::App& cmd, moga::ExperimentConfig& cfg,
                      std::string& config_path) {
  cmd.add_option_function<std::string>(
         "--algorithm",
         [&cfg](const std::string& name) {
           cfg.run.algorithm = moga::algorithm_from_string(name);
         },
         "Engine: pga|nsga1|nsga2|nsga3|spea|scalar")
      ->default_str(moga::to_string(cfg.run.algorithm));
  cmd.add_option("--population", cfg.run.population_size,
                 "Population size N")->capture_default_str();
  cmd.add_option("--generations", cfg.run.generations,
                 "Generation count G")->capture_default_str();
  cmd.add_option("--seed", cfg.run.seed,
                 "Random seed (required here or in the config file)");
  cmd.add_option("--weights", cfg.run.weights,
                 "Scalarization weights w1,w2,... (default: all ones)")
      ->delimiter(',');
  cmd.add_option("--sigma-share", cfg.run.sharing.sigma_share,
                 "Sharing radius in normalized objective space")->capture_default_str();
  cmd.add_option("--alpha", cfg.run.sharing.alpha,
                 "Sharing kernel exponent")->capture_default_str();
  cmd.add_option("--ref-divisions", cfg.run.reference_divisions,
                 "Reference-direction lattice divisions (nsga3)")->capture_default_str();
  cmd.add_option("--archive-size", cfg.run.archive_capacity,
                 "External archive capacity (spea)")->capture_default_str();
  cmd.add_option("--jobs", cfg.run.jobs,
                 "Evaluation worker threads (never changes results)")->capture_default_str();
  cmd.add_flag("--proportionate", cfg.run.proportionate_selection,
               "Fitness-proportionate parent selection (nsga1)");
  cmd.add_option("--config", config_path,
                 "Flat key=value file supplying any of the flags above "
                 "(keys drop the leading --); command-line flags override");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  std::size_t out{};
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw std::runtime_error("config key \"" + key +
                             "\" needs a non-negative integer, got \"" +
                             value + "\"");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  double out{};
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw std::runtime_error("config key \"" + key +
                             "\" needs a number, got \"" + value + "\"");
  return out;
}

/// Applies a flat key=value config file to cfg.  Keys mirror the engine
/// flags without the leading dashes; blank lines and #-comments are
/// skipped.  A key whose flag was given on the command line is ignored, so
/// flags always override the file.  Returns true when the file set the
/// seed (the one setting that has no usable default).
bool apply_config_file(const CLI::App& cmd, const std::string& path,
                       moga::ExperimentConfig& cfg,
                       std::size_t* bench_seeds) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);

  bool seed_set = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    const std::string where = path + ":" + std::to_string(line_no);
    if (eq == std::string::npos)
      throw std::runtime_error(where + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));

    const CLI::Option* flag = cmd.get_option_no_throw("--" + key);
    if (flag == nullptr)
      throw std::runtime_error(where + ": unknown config key \"" + key +
                               "\"");
    if (flag->count() > 0) continue;  // command line wins

    if (key == "algorithm") {
      cfg.run.algorithm = moga::algorithm_from_string(value);
    } else if (key == "population") {
      cfg.run.population_size = parse_count(key, value);
    } else if (key == "generations") {
      cfg.run.generations = parse_count(key, value);
    } else if (key == "seed") {
      cfg.run.seed = parse_count(key, value);
      seed_set = true;
    } else if (key == "weights") {
      cfg.run.weights.clear();
      std::stringstream list(value);
      std::string token;
      while (std::getline(list, token, ','))
        cfg.run.weights.push_back(parse_real(key, trim(token)));
    } else if (key == "sigma-share") {
      cfg.run.sharing.sigma_share = parse_real(key, value);
    } else if (key == "alpha") {
      cfg.run.sharing.alpha = parse_real(key, value);
    } else if (key == "ref-divisions") {
      cfg.run.reference_divisions = parse_count(key, value);
    } else if (key == "archive-size") {
      cfg.run.archive_capacity = parse_count(key, value);
    } else if (key == "jobs") {
      cfg.run.jobs = parse_count(key, value);
    } else if (key == "proportionate") {
      if (value == "true" || value == "1")
        cfg.run.proportionate_selection = true;
      else if (value == "false" || value == "0")
        cfg.run.proportionate_selection = false;
      else
        throw std::runtime_error(where + ": key \"" + key +
                                 "\" needs true|false|1|0");
    } else if (key == "evaluator") {
      cfg.evaluator = value;
    } else if (key == "seeds" && bench_seeds != nullptr) {
      *bench_seeds = parse_count(key, value);
    } else {
      throw std::runtime_error(where + ": key \"" + key +
                               "\" must be given on the command line");
    }
  }
  return seed_set;
}

int do_run(const moga::ExperimentConfig& cfg, const std::string& out_dir) {
  // Keep a copy of every completed generation so an evaluator failure
  // (external-solver timeout, say) still leaves a partial trace.csv behind.
  std::vector<moga::GenerationTrace> partial;
  partial.reserve(cfg.run.generations);
  moga::RunRecord rec;
  try {
    rec = moga::run_experiment(
        cfg, [&partial](const moga::GenerationSnapshot& s) {
          partial.push_back(s.trace);
        });
  } catch (...) {
    if (!partial.empty()) {
      std::filesystem::create_directories(out_dir);
      moga::write_trace_csv(std::filesystem::path(out_dir) / "trace.csv",
                            partial);
      std::cerr << "run aborted; partial trace (" << partial.size()
                << " generations) saved to " << out_dir << "\n";
    }
    throw;
  }
  moga::write_run_outputs(out_dir, rec);
  std::cout << "wrote " << out_dir << ": " << rec.result.trace.size()
            << " generations, front size " << rec.result.front.size()
            << ", best fitness " << moga::format_number(rec.result.best_fitness)
            << "\n";
  return 0;
}

int do_compare(const std::vector<std::string>& dirs,
               const std::string& out_dir) {
  std::vector<std::filesystem::path> paths(dirs.begin(), dirs.end());
  const moga::CompareReport report = moga::compare_runs(paths);
  std::cout << moga::compare_table(report);
  if (out_dir.empty()) {
    std::cout << "\n" << moga::compare_csv(report);
  } else {
    std::filesystem::create_directories(out_dir);
    const auto csv_path = std::filesystem::path(out_dir) / "compare.csv";
    std::ofstream out(csv_path, std::ios::binary);
    out << moga::compare_csv(report);
    std::cout << "\nwrote " << csv_path.string() << "\n";
  }
  return 0;
}

int do_bench(moga::ExperimentConfig cfg, std::size_t seed_count) {
  double total = 0.0;
  for (std::size_t k = 0; k < seed_count; ++k) {
    moga::ExperimentConfig one = cfg;
    one.run.seed = cfg.run.seed + k;
    const moga::RunRecord rec = moga::run_experiment(one);
    const double igd = rec.result.trace.back().igd;
    total += igd;
    std::cout << "seed " << one.run.seed << ": igd "
              << moga::format_number(igd) << "\n";
  }
  std::cout << "mean igd " << moga::format_number(total / seed_count) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective evolutionary antenna design toolkit"};
  app.require_subcommand(1);

  // --- run ---------------------------------------------------------------
  auto run_cfg = std::make_shared<moga::ExperimentConfig>();
  auto run_out = std::make_shared<std::string>();
  auto run_config = std::make_shared<std::string>();
  CLI::App* run_cmd =
      app.add_subcommand("run", "Execute one optimization run");
  add_engine_flags(*run_cmd, *run_cfg, *run_config);
  run_cmd->add_option("--evaluator", run_cfg->evaluator,
                      "surrogate|zdt1|dtlz2|external:<dir>")->capture_default_str();
  run_cmd->add_option("--out", *run_out, "Output directory")->required();
  run_cmd->callback([run_cfg, run_out, run_config, run_cmd] {
    bool seed_in_config = false;
    if (!run_config->empty())
      seed_in_config =
          apply_config_file(*run_cmd, *run_config, *run_cfg, nullptr);
    if (run_cmd->count("--seed") == 0 && !seed_in_config)
      throw CLI::RequiredError("--seed");
    do_run(*run_cfg, *run_out);
  });

  // --- compare -----------------------------------------------------------
  auto compare_dirs = std::make_shared<std::vector<std::string>>();
  auto compare_out = std::make_shared<std::string>();
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Pool finished runs into one comparison report");
  compare_cmd
      ->add_option("dirs", *compare_dirs, "Run directories (at least 2)")
      ->required()
      ->expected(2, -1);
  compare_cmd->add_option("--out", *compare_out,
                          "Directory for compare.csv (default: stdout)");
  compare_cmd->callback(
      [compare_dirs, compare_out] { do_compare(*compare_dirs, *compare_out); });

  // --- bench -------------------------------------------------------------
  auto bench_cfg = std::make_shared<moga::ExperimentConfig>();
  bench_cfg->evaluator = "zdt1";
  bench_cfg->run.algorithm = moga::Algorithm::nsga2;
  bench_cfg->run.population_size = 50;
  bench_cfg->run.generations = 150;
  auto bench_seeds = std::make_shared<std::size_t>(10);
  auto bench_config = std::make_shared<std::string>();
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Run a benchmark problem over consecutive seeds, print IGD");
  add_engine_flags(*bench_cmd, *bench_cfg, *bench_config);
  bench_cmd->add_option("--evaluator", bench_cfg->evaluator,
                        "Benchmark problem: zdt1|dtlz2")->capture_default_str();
  bench_cmd->add_option("--seeds", *bench_seeds,
                        "Number of consecutive seeds, starting at --seed")->capture_default_str();
  bench_cmd->callback([bench_cfg, bench_seeds, bench_config, bench_cmd] {
    bool seed_in_config = false;
    if (!bench_config->empty())
      seed_in_config = apply_config_file(*bench_cmd, *bench_config,
                                         *bench_cfg, bench_seeds.get());
    if (bench_cmd->count("--seed") == 0 && !seed_in_config)
      throw CLI::RequiredError("--seed");
    if (bench_cfg->evaluator != "zdt1" && bench_cfg->evaluator != "dtlz2")
      throw CLI::ValidationError("--evaluator",
                                 "bench accepts only zdt1 or dtlz2");
    if (*bench_seeds < 1)
      throw CLI::ValidationError("--seeds", "needs at least 1 seed");
    do_bench(*bench_cfg, *bench_seeds);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
