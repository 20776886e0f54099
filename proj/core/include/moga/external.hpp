#pragma once

#include <chrono>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "moga/genome.hpp"
#include "moga/problem.hpp"
#include "moga/surrogate.hpp"

namespace moga {

/// Raised when the external solver does not produce a result in time.
class EvaluationTimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result file cannot be parsed as a frequency table.
class MalformedTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes "<id>.params" into the exchange directory: ten lines of
/// "name=value", one per gene in canonical order, values in mm with six
/// decimal places.
std::filesystem::path write_params_file(const std::filesystem::path& dir,
                                        const std::string& id,
                                        const AntennaGenome& g);

/// Parses a whitespace-separated frequency table: optional '#'-prefixed
/// header lines, then rows "<frequency_GHz> <S11_dB>".  Blank lines are
/// ignored.  Throws MalformedTableError on anything unparseable or on a
/// non-increasing frequency column.
FrequencyResponse read_s11_table(const std::filesystem::path& path);

/// One round trip with an out-of-process solver: writes "<id>.params",
/// polls for "<id>.s11.txt" until timeout, parses it, and reads off the
/// three band objectives.  Throws EvaluationTimeoutError or
/// MalformedTableError.
BandObjectives external_evaluate(
    const AntennaGenome& g, const std::filesystem::path& dir,
    const std::string& id,
    std::chrono::milliseconds timeout = std::chrono::seconds(60),
    std::chrono::milliseconds poll = std::chrono::milliseconds(50));

/// Problem adapter around external_evaluate.  The evaluation id is taken
/// from the engine-provided eval id, so file names are stable across
/// reruns and across any number of evaluation threads.
class ExternalProblem final : public Problem {
 public:
  ExternalProblem(std::filesystem::path exchange_dir,
                  ParameterBounds bounds = ParameterBounds::defaults(),
                  std::chrono::milliseconds timeout = std::chrono::seconds(60),
                  std::chrono::milliseconds poll =
                      std::chrono::milliseconds(50));

  std::size_t dimension() const override { return kGenomeSize; }
  std::size_t objective_count() const override { return 3; }
  const std::vector<double>& lower_bounds() const override { return lower_; }
  const std::vector<double>& upper_bounds() const override { return upper_; }
  std::string name() const override;
  std::vector<double> repair(std::vector<double> x) const override;
  std::vector<double> evaluate(const std::vector<double>& x) const override;
  std::vector<double> evaluate_at(const std::vector<double>& x,
                                  std::uint64_t eval_id) const override;

 private:
  std::filesystem::path dir_;
  ParameterBounds bounds_;
  std::chrono::milliseconds timeout_;
  std::chrono::milliseconds poll_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace moga
