#include "moga/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "moga/benchmarks.hpp"
#include "moga/dominance.hpp"
#include "moga/external.hpp"
#include "moga/metrics.hpp"
#include "moga/surrogate.hpp"

namespace moga {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr char kExternalPrefix[] = "external:";

bool is_external(const std::string& evaluator) {
  return evaluator.rfind(kExternalPrefix, 0) == 0;
}

/// "antenna" for the two 10-gene evaluators, the evaluator id itself
/// otherwise.  Runs may only be pooled within one family: their objective
/// spaces are otherwise unrelated.
std::string evaluator_family(const std::string& evaluator) {
  if (evaluator == "surrogate" || is_external(evaluator)) return "antenna";
  return evaluator;
}

std::vector<std::string> parameter_names_for(std::size_t dimension) {
  std::vector<std::string> names;
  names.reserve(dimension);
  if (dimension == kGenomeSize) {
    for (const auto& n : gene_names()) names.push_back(n);
  } else {
    for (std::size_t i = 0; i < dimension; ++i)
      names.push_back("x" + std::to_string(i + 1));
  }
  return names;
}

ordered_json individual_to_json(const Individual& ind) {
  ordered_json j;
  if (ind.x.size() == kGenomeSize) {
    ordered_json params;
    const auto& names = gene_names();
    for (std::size_t i = 0; i < kGenomeSize; ++i) params[names[i]] = ind.x[i];
    j["parameters"] = std::move(params);
  }
  j["x"] = ind.x;
  j["objectives"] = ind.f;
  return j;
}

ordered_json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("corrupt JSON in " + path.string() + ": " +
                             e.what());
  }
  return j;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline mangling
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::vector<std::vector<double>> reference_front_for(
    const std::string& evaluator, const std::vector<GenerationTrace>& trace) {
  if (evaluator == "zdt1") return zdt1_front();
  if (evaluator == "dtlz2") return dtlz2_front();
  // No closed-form front: pool every generation's front of this run.
  std::vector<std::vector<std::vector<double>>> sets;
  sets.reserve(trace.size());
  for (const auto& row : trace) sets.push_back(row.front_objectives);
  return pooled_front(sets);
}

}  // namespace

ProblemPtr make_problem(const std::string& evaluator) {
  if (evaluator == "surrogate") return std::make_shared<SurrogateProblem>();
  if (evaluator == "zdt1") return std::make_shared<Zdt1Problem>();
  if (evaluator == "dtlz2") return std::make_shared<Dtlz2Problem>();
  if (is_external(evaluator)) {
    const std::string dir = evaluator.substr(sizeof(kExternalPrefix) - 1);
    if (dir.empty())
      throw std::invalid_argument(
          "external evaluator needs a directory: external:<dir>");
    return std::make_shared<ExternalProblem>(dir);
  }
  throw std::invalid_argument(
      "unknown evaluator \"" + evaluator +
      "\" (expected surrogate|zdt1|dtlz2|external:<dir>)");
}

RunRecord run_experiment(const ExperimentConfig& config,
                         const GenerationObserver& observer) {
  RunRecord rec;
  rec.config = config;
  const ProblemPtr problem = make_problem(config.evaluator);

  const auto start = std::chrono::steady_clock::now();
  rec.result = run(config.run, *problem, observer);
  rec.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  auto& trace = rec.result.trace;
  const auto reference = reference_front_for(config.evaluator, trace);
  std::vector<double> best_series;
  best_series.reserve(trace.size());
  for (auto& row : trace) {
    row.gd = generational_distance(row.front_objectives, reference);
    row.igd = inverted_generational_distance(row.front_objectives, reference);
    best_series.push_back(row.best_fitness);
  }
  const auto speed = convergence_speed(best_series);
  for (std::size_t g = 1; g < trace.size(); ++g)
    trace[g].convergence_speed = speed[g - 1];
  return rec;
}

std::string format_number(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

void write_trace_csv(const std::filesystem::path& path,
                     const std::vector<GenerationTrace>& trace) {
  // A metric that was never computed (NaN: the first generation has no
  // convergence speed; a run aborted before its reference front existed
  // has no gd/igd) becomes an empty cell, not the string "nan".
  const auto cell = [](double v) {
    return std::isfinite(v) ? format_number(v) : std::string();
  };
  std::string text =
      "generation,best_fitness,gd,igd,diversity,convergence_speed\n";
  for (const auto& row : trace) {
    text += std::to_string(row.generation);
    text += ',';
    text += format_number(row.best_fitness);
    text += ',';
    text += cell(row.gd);
    text += ',';
    text += cell(row.igd);
    text += ',';
    text += format_number(row.diversity);
    text += ',';
    text += cell(row.convergence_speed);
    text += '\n';
  }
  write_text_file(path, text);
}

void write_front_json(const std::filesystem::path& path,
                      const std::vector<Individual>& front) {
  for (std::size_t i = 0; i < front.size(); ++i)
    for (std::size_t j = 0; j < front.size(); ++j)
      if (i != j && dominates(front[i].f, front[j].f))
        throw std::logic_error(
            "front members must be pairwise non-dominated");
  ordered_json j = ordered_json::array();
  for (const auto& ind : front) j.push_back(individual_to_json(ind));
  write_text_file(path, j.dump(2) + "\n");
}

void write_best_json(const std::filesystem::path& path, const RunRecord& rec) {
  ordered_json j = individual_to_json(rec.result.best);
  j["fitness"] = rec.result.best_fitness;
  if (rec.result.best.x.size() == kGenomeSize &&
      evaluator_family(rec.config.evaluator) == "antenna") {
    j["size_reduction_percent"] = size_reduction_percent(
        AntennaGenome::from_vector(rec.result.best.x));
  }
  write_text_file(path, j.dump(2) + "\n");
}

void write_run_json(const std::filesystem::path& path, const RunRecord& rec) {
  const RunConfig& run = rec.config.run;
  ordered_json j;
  j["algorithm"] = to_string(run.algorithm);
  j["evaluator"] = rec.config.evaluator;
  j["population"] = run.population_size;
  j["generations"] = run.generations;
  j["seed"] = run.seed;
  j["weights"] = run.weights;
  j["crossover_rate"] = run.variation.crossover_rate;
  j["crossover_index"] = run.variation.crossover_index;
  j["mutation_rate"] = run.variation.mutation_rate;
  j["mutation_index"] = run.variation.mutation_index;
  j["sigma_share"] = run.sharing.sigma_share;
  j["alpha"] = run.sharing.alpha;
  j["archive_size"] = run.archive_capacity;
  j["ref_divisions"] = run.reference_divisions;
  j["jobs"] = run.jobs;
  j["proportionate_selection"] = run.proportionate_selection;
  j["best_fitness"] = rec.result.best_fitness;
  // Wall clock: informational only, deliberately quarantined here so the
  // other outputs stay byte-reproducible.
  j["duration_seconds"] = rec.duration_seconds;
  write_text_file(path, j.dump(2) + "\n");
}

void write_run_outputs(const std::filesystem::path& out_dir,
                       const RunRecord& rec) {
  std::filesystem::create_directories(out_dir);
  write_trace_csv(out_dir / "trace.csv", rec.result.trace);
  write_front_json(out_dir / "front.json", rec.result.front);
  write_best_json(out_dir / "best.json", rec);
  write_run_json(out_dir / "run.json", rec);
}

CompareReport compare_runs(const std::vector<std::filesystem::path>& dirs) {
  if (dirs.size() < 2)
    throw std::invalid_argument("compare needs at least 2 run directories");

  CompareReport report;
  std::vector<std::vector<std::vector<double>>> front_sets;
  std::string family;
  for (const auto& dir : dirs) {
    const auto run_meta = load_json(dir / "run.json");
    const auto best = load_json(dir / "best.json");
    const auto front = load_json(dir / "front.json");

    CompareRow row;
    row.directory = dir.string();
    try {
      row.algorithm = run_meta.at("algorithm").get<std::string>();
      row.evaluator = run_meta.at("evaluator").get<std::string>();
      row.best_parameters = best.at("x").get<std::vector<double>>();
      row.best_objectives = best.at("objectives").get<std::vector<double>>();
      row.best_fitness = best.at("fitness").get<double>();
      if (best.contains("size_reduction_percent"))
        row.size_reduction = best.at("size_reduction_percent").get<double>();
      std::vector<std::vector<double>> objectives;
      for (const auto& member : front)
        objectives.push_back(
            member.at("objectives").get<std::vector<double>>());
      front_sets.push_back(std::move(objectives));
    } catch (const std::exception& e) {
      throw std::runtime_error("corrupt run directory " + dir.string() +
                               ": " + e.what());
    }
    row.parameter_names = parameter_names_for(row.best_parameters.size());

    const std::string row_family = evaluator_family(row.evaluator);
    if (family.empty())
      family = row_family;
    else if (family != row_family)
      throw std::invalid_argument(
          "cannot pool runs across evaluators: got \"" + family +
          "\" and \"" + row_family + "\"");
    report.rows.push_back(std::move(row));
  }

  report.pooled_reference = pooled_front(front_sets);
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    report.rows[i].gd =
        generational_distance(front_sets[i], report.pooled_reference);
    report.rows[i].igd = inverted_generational_distance(
        front_sets[i], report.pooled_reference);
  }
  return report;
}

std::string compare_csv(const CompareReport& report) {
  if (report.rows.empty()) return "";
  std::string text = "algorithm";
  for (const auto& name : report.rows.front().parameter_names)
    text += "," + name;
  for (std::size_t m = 0; m < report.rows.front().best_objectives.size(); ++m)
    text += ",f" + std::to_string(m + 1);
  text += ",best_fitness,size_reduction_percent,gd,igd\n";
  for (const auto& row : report.rows) {
    text += row.algorithm;
    for (double v : row.best_parameters) text += "," + format_number(v);
    for (double v : row.best_objectives) text += "," + format_number(v);
    text += "," + format_number(row.best_fitness);
    text += "," + format_number(row.size_reduction);
    text += "," + format_number(row.gd);
    text += "," + format_number(row.igd);
    text += '\n';
  }
  return text;
}

std::string compare_table(const CompareReport& report) {
  std::ostringstream out;
  out << std::left;
  out << std::setw(10) << "algorithm" << std::setw(12) << "fitness"
      << std::setw(12) << "size_red%" << std::setw(12) << "gd"
      << std::setw(12) << "igd"
      << "objectives\n";
  for (const auto& row : report.rows) {
    out << std::setw(10) << row.algorithm << std::setw(12)
        << format_number(row.best_fitness) << std::setw(12)
        << format_number(row.size_reduction) << std::setw(12)
        << format_number(row.gd) << std::setw(12) << format_number(row.igd);
    for (std::size_t m = 0; m < row.best_objectives.size(); ++m)
      out << (m ? " " : "") << format_number(row.best_objectives[m]);
    out << '\n';
  }
  out << "\nbest parameters\n";
  for (const auto& row : report.rows) {
    out << std::setw(10) << row.algorithm;
    for (std::size_t i = 0; i < row.best_parameters.size(); ++i) {
      out << (i ? " " : "") << row.parameter_names[i] << '='
          << format_number(row.best_parameters[i]);
    }
    out << '\n';
  }
  out << "\npooled reference front: " << report.pooled_reference.size()
      << " points\n";
  return out.str();
}

}  // namespace moga
