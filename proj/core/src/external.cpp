#include "moga/external.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace moga {
namespace {

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto result = std::from_chars(first, last, out);
  return result.ec == std::errc{} && result.ptr == last;
}

}  // namespace

std::filesystem::path write_params_file(const std::filesystem::path& dir,
                                        const std::string& id,
                                        const AntennaGenome& g) {
  const std::filesystem::path path = dir / (id + ".params");
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write params file " + path.string());
  const auto values = g.as_array();
  const auto& names = gene_names();
  char buf[64];
  for (std::size_t i = 0; i < kGenomeSize; ++i) {
    std::snprintf(buf, sizeof buf, "%.6f", values[i]);
    out << names[i] << '=' << buf << '\n';
  }
  out.close();
  if (!out)
    throw std::runtime_error("failed writing params file " + path.string());
  return path;
}

FrequencyResponse read_s11_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw MalformedTableError("cannot open result file " + path.string());

  FrequencyResponse response;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;   // blank line
    if (line[start] == '#') continue;           // header/comment

    std::istringstream row(line);
    std::string freq_token, s11_token, extra;
    row >> freq_token >> s11_token;
    const bool has_extra = static_cast<bool>(row >> extra);

    double freq = 0.0, s11 = 0.0;
    if (s11_token.empty() || has_extra || !parse_double(freq_token, freq) ||
        !parse_double(s11_token, s11))
      throw MalformedTableError("line " + std::to_string(line_number) +
                                " of " + path.string() +
                                " is not \"<frequency> <S11>\"");
    if (!response.frequency_ghz.empty() &&
        freq <= response.frequency_ghz.back())
      throw MalformedTableError("line " + std::to_string(line_number) +
                                " of " + path.string() +
                                ": frequencies must be strictly increasing");
    response.frequency_ghz.push_back(freq);
    response.s11_db.push_back(s11);
  }
  if (response.frequency_ghz.empty())
    throw MalformedTableError("result file " + path.string() +
                              " holds no data rows");
  response.validate();
  return response;
}

BandObjectives external_evaluate(const AntennaGenome& g,
                                 const std::filesystem::path& dir,
                                 const std::string& id,
                                 std::chrono::milliseconds timeout,
                                 std::chrono::milliseconds poll) {
  write_params_file(dir, id, g);
  const std::filesystem::path result = dir / (id + ".s11.txt");

  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (!std::filesystem::exists(result)) {
    if (std::chrono::steady_clock::now() >= deadline)
      throw EvaluationTimeoutError("no result for evaluation " + id +
                                   " within " +
                                   std::to_string(timeout.count()) + " ms");
    std::this_thread::sleep_for(poll);
  }
  return objectives_from_response(read_s11_table(result));
}

ExternalProblem::ExternalProblem(std::filesystem::path exchange_dir,
                                 ParameterBounds bounds,
                                 std::chrono::milliseconds timeout,
                                 std::chrono::milliseconds poll)
    : dir_(std::move(exchange_dir)),
      bounds_(bounds),
      timeout_(timeout),
      poll_(poll),
      lower_(bounds.lower.begin(), bounds.lower.end()),
      upper_(bounds.upper.begin(), bounds.upper.end()) {
  bounds_.validate();
  std::filesystem::create_directories(dir_);
}

std::string ExternalProblem::name() const {
  return "external:" + dir_.string();
}

std::vector<double> ExternalProblem::repair(std::vector<double> x) const {
  std::array<double, kGenomeSize> raw{};
  if (x.size() != kGenomeSize)
    throw std::invalid_argument("antenna genome must have 10 genes");
  std::copy(x.begin(), x.end(), raw.begin());
  return moga::repair(raw, bounds_).as_vector();
}

std::vector<double> ExternalProblem::evaluate(
    const std::vector<double>& x) const {
  return evaluate_at(x, 0);
}

std::vector<double> ExternalProblem::evaluate_at(const std::vector<double>& x,
                                                 std::uint64_t eval_id) const {
  char id[32];
  std::snprintf(id, sizeof id, "%08llu",
                static_cast<unsigned long long>(eval_id));
  return external_evaluate(AntennaGenome::from_vector(x), dir_, id, timeout_,
                           poll_)
      .as_vector();
}

}  // namespace moga
