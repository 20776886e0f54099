#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "moga/engines.hpp"
#include "moga/problem.hpp"

namespace moga {

/// A run configuration plus the evaluator it points at.
struct ExperimentConfig {
  RunConfig run;
  /// One of "surrogate", "zdt1", "dtlz2", or "external:<dir>".
  std::string evaluator = "surrogate";
};

/// Builds the problem named by an evaluator id.  Throws
/// std::invalid_argument for unknown ids.
ProblemPtr make_problem(const std::string& evaluator);

/// A completed run: config echo, engine result with the trace's gd / igd /
/// convergence_speed columns filled in, and the wall-clock duration (the
/// one field that never reproduces between runs; it is persisted in
/// run.json only, never in the byte-reproducible outputs).
struct RunRecord {
  ExperimentConfig config;
  RunResult result;
  double duration_seconds = 0.0;
};

/// Runs the configured engine on the configured evaluator and fills in the
/// post-run trace columns.  The reference front for gd/igd is the analytic
/// front for the benchmark evaluators and the non-dominated union of every
/// generation's front for the antenna evaluators, where no closed form
/// exists.
RunRecord run_experiment(const ExperimentConfig& config,
                         const GenerationObserver& observer = {});

/// Formats a double with 6 significant digits, '.' decimal separator,
/// locale-independent (the CSV number contract).
std::string format_number(double v);

/// Writers for the per-run output directory.  All three are
/// byte-reproducible for a fixed (seed, config); write_run_json also
/// stores the wall-clock duration and so is not.
void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<GenerationTrace>& trace);
/// Throws std::logic_error if the front members are not pairwise
/// non-dominated.
void write_front_json(const std::filesystem::path& path,
                      const std::vector<Individual>& front);
void write_best_json(const std::filesystem::path& path, const RunRecord& rec);
void write_run_json(const std::filesystem::path& path, const RunRecord& rec);

/// Persists trace.csv, front.json, best.json, and run.json into out_dir
/// (created if missing).
void write_run_outputs(const std::filesystem::path& out_dir,
                       const RunRecord& rec);

/// One row of the comparison report, reconstructed from a run directory.
struct CompareRow {
  std::string directory;
  std::string algorithm;
  std::string evaluator;
  std::vector<std::string> parameter_names;
  std::vector<double> best_parameters;
  std::vector<double> best_objectives;
  double best_fitness = 0.0;
  double size_reduction = 0.0;  ///< percent; antenna runs only, else 0
  double gd = 0.0;              ///< final front vs pooled reference front
  double igd = 0.0;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  std::vector<std::vector<double>> pooled_reference;  ///< pooled front
};

/// Loads ≥ 2 completed run directories, pools their final fronts into the
/// reference set, and computes one report row per run.  The pooled front
/// and the metrics are independent of the directory order.  Throws
/// std::runtime_error on missing/corrupt directories and
/// std::invalid_argument when the runs do not share an evaluator family.
CompareReport compare_runs(const std::vector<std::filesystem::path>& dirs);

/// Renders the report as CSV (one header row, then one row per run).
std::string compare_csv(const CompareReport& report);
/// Renders the report as an aligned human-readable table.
std::string compare_table(const CompareReport& report);

}  // namespace moga
