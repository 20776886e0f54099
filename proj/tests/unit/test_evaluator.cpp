#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>
#include <vector>

#include "moga/benchmarks.hpp"
#include "moga/external.hpp"
#include "moga/genome.hpp"
#include "moga/rng.hpp"
#include "moga/surrogate.hpp"

using namespace moga;
namespace fs = std::filesystem;

namespace {

constexpr double kC = 299.792458;  // mm*GHz

// Independent re-derivation of the quasi-static microstrip formulas, kept
// deliberately separate from the library code path.
double oracle_eps_eff(double w, double h, double er) {
  return (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * h / w);
}

double oracle_patch_ghz(double wp, double lp, double h, double er) {
  const double ee = oracle_eps_eff(wp, h, er);
  const double r = wp / h;
  const double dl =
      0.412 * h * (ee + 0.3) * (r + 0.264) / ((ee - 0.258) * (r + 0.8));
  return kC / (2.0 * (lp + 2.0 * dl) * std::sqrt(ee));
}

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir =
      fs::temp_directory_path() / ("moga_eval_" + tag + "_" +
                                   std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::size_t> local_minima(const FrequencyResponse& r) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < r.s11_db.size(); ++i)
    if (r.s11_db[i] < r.s11_db[i - 1] && r.s11_db[i] <= r.s11_db[i + 1])
      idx.push_back(i);
  return idx;
}

}  // namespace

TEST_CASE("effective_permittivity: oracle match and physical range") {
  const FixedDesign fixed;
  for (double w = 3.0; w < 40.0; w += 1.7) {
    const double got = effective_permittivity(w, fixed);
    CHECK(got == doctest::Approx(oracle_eps_eff(w, fixed.substrate_height,
                                                fixed.eps_r))
                     .epsilon(1e-12));
    CHECK(got > 1.0);
    CHECK(got < fixed.eps_r);
  }
  CHECK_THROWS_AS(effective_permittivity(0.0, fixed), std::invalid_argument);
}

TEST_CASE("effective_permittivity: thin-substrate limit approaches eps_r") {
  FixedDesign fixed;
  fixed.substrate_height = 1e-9;
  CHECK(effective_permittivity(22.8, fixed) ==
        doctest::Approx(fixed.eps_r).epsilon(1e-8));
}

TEST_CASE("effective_permittivity: monotone increasing in strip width") {
  const FixedDesign fixed;
  double prev = effective_permittivity(1.0, fixed);
  for (double w = 2.0; w < 60.0; w += 1.0) {
    const double cur = effective_permittivity(w, fixed);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("patch_resonance_ghz: reference design lands on its band") {
  const FixedDesign fixed;
  const AntennaGenome ref = reference_genome();
  const double f = patch_resonance_ghz(ref, fixed);

  // Independent oracle computed from scratch.
  CHECK(f == doctest::Approx(oracle_patch_ghz(ref.wp, ref.lp,
                                              fixed.substrate_height,
                                              fixed.eps_r))
                 .epsilon(1e-12));
  // Within one percent of the 5.2 GHz design frequency.
  CHECK(std::abs(f - 5.2) / 5.2 < 0.01);
}

TEST_CASE("patch_resonance_ghz: strictly decreasing in patch length") {
  const FixedDesign fixed;
  AntennaGenome g = reference_genome();
  double prev = patch_resonance_ghz(g, fixed);
  for (double scale = 1.1; scale < 2.05; scale += 0.1) {
    AntennaGenome longer = g;
    longer.lp = g.lp * scale;
    const double cur = patch_resonance_ghz(longer, fixed);
    CHECK(cur < prev);
    prev = cur;
  }
  // Doubling the length lowers the frequency outright.
  AntennaGenome doubled = g;
  doubled.lp *= 2.0;
  CHECK(patch_resonance_ghz(doubled, fixed) < patch_resonance_ghz(g, fixed));
}

TEST_CASE("ring calibration: outer ring exact, inner ring lands close") {
  const FixedDesign fixed;
  const AntennaGenome ref = reference_genome();
  const double kappa = calibrate_ring_constant(fixed);
  const double eps = effective_permittivity(ref.wp, fixed);

  const double outer = ring_resonance_ghz((ref.r1 + ref.r2) / 2.0, eps, kappa);
  CHECK(outer == doctest::Approx(2.4).epsilon(1e-12));

  // Single-constant cross-check: the inner ring is NOT calibrated, it just
  // falls where the same constant puts it.
  const double inner = ring_resonance_ghz((ref.r3 + ref.r4) / 2.0, eps, kappa);
  CHECK(std::abs(inner - 3.6) / 3.6 < 0.02);
}

TEST_CASE("ring_resonance_ghz: inverse proportional to the radius") {
  const double f1 = ring_resonance_ghz(12.0, 1.9, 1.1);
  const double f2 = ring_resonance_ghz(6.0, 1.9, 1.1);
  CHECK(f2 == doctest::Approx(2.0 * f1).epsilon(1e-12));
  CHECK_THROWS_AS(ring_resonance_ghz(0.0, 1.9, 1.1), std::invalid_argument);
}

TEST_CASE("surrogate_response: three minima near the three bands") {
  const FixedDesign fixed;
  const auto cfg = SurrogateConfig::calibrated();
  const auto resp = surrogate_response(reference_genome(), fixed, cfg);

  const auto minima = local_minima(resp);
  REQUIRE(minima.size() == 3);
  const double targets[3] = {2.4, 3.6, 5.2};
  for (int k = 0; k < 3; ++k) {
    const double f = resp.frequency_ghz[minima[k]];
    CHECK(std::abs(f - targets[k]) / targets[k] < 0.02);
  }
}

TEST_CASE("surrogate_response: sampled 1..7 GHz at 5 MHz steps") {
  const auto cfg = SurrogateConfig::calibrated();
  const auto resp = surrogate_response(reference_genome(), FixedDesign{}, cfg);
  REQUIRE(resp.frequency_ghz.size() == 1201);
  CHECK(resp.frequency_ghz.front() == 1.0);
  CHECK(resp.frequency_ghz.back() == 7.0);
  CHECK(resp.frequency_ghz[1] - resp.frequency_ghz[0] ==
        doctest::Approx(0.005).epsilon(1e-12));
  CHECK_NOTHROW(resp.validate());
}

TEST_CASE("surrogate_response: zero depths leave the flat baseline") {
  auto cfg = SurrogateConfig::calibrated();
  cfg.depth_patch_db = 0.0;
  cfg.depth_outer_db = 0.0;
  cfg.depth_inner_db = 0.0;
  const auto resp = surrogate_response(reference_genome(), FixedDesign{}, cfg);
  for (double v : resp.s11_db) CHECK(v == cfg.baseline_db);
}

TEST_CASE("surrogate_response: bounded by baseline and total depth") {
  const auto cfg = SurrogateConfig::calibrated();
  const ParameterBounds b = ParameterBounds::defaults();
  Rng rng(61);
  const double floor = cfg.baseline_db - cfg.depth_patch_db -
                       cfg.depth_outer_db - cfg.depth_inner_db;
  for (int t = 0; t < 50; ++t) {
    const auto resp =
        surrogate_response(random_genome(b, rng), FixedDesign{}, cfg);
    for (double v : resp.s11_db) {
      REQUIRE(v <= cfg.baseline_db);
      REQUIRE(v >= floor);
    }
  }
}

TEST_CASE("surrogate_response: displaced rings couple weaker") {
  const FixedDesign fixed;
  const auto cfg = SurrogateConfig::calibrated();
  const AntennaGenome centred = reference_genome();
  AntennaGenome displaced = centred;
  displaced.vr = 3.0;
  displaced.ur = 3.0;

  const auto f_c = objectives_from_response(
      surrogate_response(centred, fixed, cfg));
  const auto f_d = objectives_from_response(
      surrogate_response(displaced, fixed, cfg));
  // Both ring dips strictly shallower (less negative) off-centre.
  CHECK(f_d.s11_2g4 > f_c.s11_2g4);
  CHECK(f_d.s11_3g6 > f_c.s11_3g6);
}

TEST_CASE("surrogate_response: deterministic, bitwise") {
  const auto cfg = SurrogateConfig::calibrated();
  const auto a = surrogate_response(reference_genome(), FixedDesign{}, cfg);
  const auto b = surrogate_response(reference_genome(), FixedDesign{}, cfg);
  CHECK(a.frequency_ghz == b.frequency_ghz);
  CHECK(a.s11_db == b.s11_db);
}

TEST_CASE("surrogate config validation") {
  auto cfg = SurrogateConfig::calibrated();
  cfg.depth_patch_db = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SurrogateConfig::calibrated();
  cfg.width_ring_ghz = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SurrogateConfig::calibrated();
  cfg.baseline_db = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = SurrogateConfig::calibrated();
  cfg.sweep_stop_ghz = cfg.sweep_start_ghz;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("objectives_from_response: exact sample points read back") {
  FrequencyResponse resp;
  resp.frequency_ghz = {2.4, 3.6, 5.2};
  resp.s11_db = {-21.56, -16.60, -27.69};
  const auto obj = objectives_from_response(resp);
  CHECK(obj.s11_2g4 == -21.56);
  CHECK(obj.s11_3g6 == -16.60);
  CHECK(obj.s11_5g2 == -27.69);
}

TEST_CASE("objectives_from_response: linear interpolation between samples") {
  // 2.4 GHz falls mid-segment between the first two samples.
  FrequencyResponse flat;
  flat.frequency_ghz = {2.0, 2.8, 3.7, 5.3};
  flat.s11_db = {-10.0, -10.0, -6.0, -5.0};
  CHECK(objectives_from_response(flat).s11_2g4 == -10.0);

  FrequencyResponse slope;
  slope.frequency_ghz = {2.0, 2.8, 3.7, 5.3};
  slope.s11_db = {0.0, -8.0, -8.0, -8.0};
  CHECK(objectives_from_response(slope).s11_2g4 == -4.0);
}

TEST_CASE("objectives_from_response: out-of-span target rejected") {
  FrequencyResponse resp;
  resp.frequency_ghz = {2.0, 3.0, 4.0};
  resp.s11_db = {-5.0, -6.0, -7.0};
  CHECK_THROWS_AS(objectives_from_response(resp), std::out_of_range);
}

TEST_CASE("SurrogateProblem: adapter plumbing") {
  const SurrogateProblem prob;
  CHECK(prob.dimension() == 10);
  CHECK(prob.objective_count() == 3);
  CHECK(prob.name() == "surrogate");

  const auto x = reference_genome().as_vector();
  const auto f = prob.evaluate(x);
  REQUIRE(f.size() == 3);
  for (double v : f) CHECK(v < -10.0);  // reference design covers its bands

  // repair() projects infeasible vectors.
  auto bad = x;
  std::swap(bad[0], bad[1]);
  const auto fixed_x = prob.repair(bad);
  CHECK(is_feasible(AntennaGenome::from_vector(fixed_x),
                    ParameterBounds::defaults()));
}

TEST_CASE("zdt1: closed-form corner values") {
  std::vector<double> zeros(30, 0.0);
  CHECK(zdt1(zeros) == std::vector<double>{0.0, 1.0});

  std::vector<double> one_first(30, 0.0);
  one_first[0] = 1.0;
  CHECK(zdt1(one_first) == std::vector<double>{1.0, 0.0});

  CHECK_THROWS_AS(zdt1({0.5}), std::invalid_argument);
}

TEST_CASE("dtlz2: on-front points have unit norm") {
  for (double x1 : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (double x2 : {0.0, 0.3, 0.6, 1.0}) {
      std::vector<double> x(12, 0.5);  // tail at 0.5 zeroes the g term
      x[0] = x1;
      x[1] = x2;
      const auto f = dtlz2(x);
      REQUIRE(f.size() == 3);
      const double norm_sq = f[0] * f[0] + f[1] * f[1] + f[2] * f[2];
      CHECK(norm_sq == doctest::Approx(1.0).epsilon(1e-12));
    }
  CHECK_THROWS_AS(dtlz2({0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("benchmark problems: bounds boxes") {
  const Zdt1Problem zdt;
  CHECK(zdt.dimension() == 30);
  CHECK(zdt.objective_count() == 2);
  for (double v : zdt.lower_bounds()) CHECK(v == 0.0);
  for (double v : zdt.upper_bounds()) CHECK(v == 1.0);

  const Dtlz2Problem dtlz;
  CHECK(dtlz.dimension() == 12);
  CHECK(dtlz.objective_count() == 3);
}

TEST_CASE("write_params_file: ten named values, six decimals") {
  const fs::path dir = fresh_dir("params");
  const AntennaGenome ref = reference_genome();
  const fs::path path = write_params_file(dir, "42", ref);
  CHECK(path.filename() == "42.params");

  std::ifstream in(path);
  REQUIRE(in.good());
  const auto& names = gene_names();
  const auto values = ref.as_array();
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    REQUIRE(count < kGenomeSize);
    const auto eq = line.find('=');
    REQUIRE(eq != std::string::npos);
    CHECK(line.substr(0, eq) == names[count]);
    const std::string value = line.substr(eq + 1);
    // Exactly six digits after the decimal point.
    const auto dot = value.find('.');
    REQUIRE(dot != std::string::npos);
    CHECK(value.size() - dot - 1 == 6);
    CHECK(std::stod(value) == doctest::Approx(values[count]).epsilon(1e-6));
    ++count;
  }
  CHECK(count == kGenomeSize);
  fs::remove_all(dir);
}

TEST_CASE("read_s11_table: headers, blanks, tabs accepted") {
  const fs::path dir = fresh_dir("table");
  const fs::path file = dir / "ok.s11.txt";
  {
    std::ofstream out(file);
    out << "# frequency_GHz S11_dB\n";
    out << "\n";
    out << "1.0 -1.5\n";
    out << "2.4\t-21.56\n";
    out << "  5.2   -27.69\n";
  }
  const auto resp = read_s11_table(file);
  REQUIRE(resp.frequency_ghz.size() == 3);
  CHECK(resp.frequency_ghz[1] == 2.4);
  CHECK(resp.s11_db[1] == -21.56);
  fs::remove_all(dir);
}

TEST_CASE("read_s11_table: malformed tables rejected") {
  const fs::path dir = fresh_dir("bad");

  const fs::path decreasing = dir / "dec.s11.txt";
  {
    std::ofstream out(decreasing);
    out << "3.0 -4\n2.0 -5\n";
  }
  CHECK_THROWS_AS(read_s11_table(decreasing), MalformedTableError);

  const fs::path text = dir / "text.s11.txt";
  {
    std::ofstream out(text);
    out << "2.0 minus-five\n";
  }
  CHECK_THROWS_AS(read_s11_table(text), MalformedTableError);

  const fs::path extra = dir / "extra.s11.txt";
  {
    std::ofstream out(extra);
    out << "2.0 -5 99\n";
  }
  CHECK_THROWS_AS(read_s11_table(extra), MalformedTableError);

  const fs::path empty = dir / "empty.s11.txt";
  { std::ofstream out(empty); }
  CHECK_THROWS_AS(read_s11_table(empty), MalformedTableError);

  CHECK_THROWS_AS(read_s11_table(dir / "missing.s11.txt"),
                  MalformedTableError);
  fs::remove_all(dir);
}

TEST_CASE("external_evaluate: round trip against a mock solver") {
  const fs::path dir = fresh_dir("roundtrip");

  // The mock solver polls for the request and answers with a fixed table.
  std::atomic<bool> stop{false};
  std::thread solver([&] {
    const fs::path request = dir / "7.params";
    while (!stop.load()) {
      if (fs::exists(request)) {
        const fs::path tmp = dir / "7.s11.tmp";
        {
          std::ofstream out(tmp);
          out << "# mock\n";
          out << "1.0 -0.5\n2.4 -12.5\n3.6 -11.0\n5.2 -14.25\n7.0 -0.5\n";
        }
        fs::rename(tmp, dir / "7.s11.txt");  // atomic handover
        return;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
  });

  const auto obj = external_evaluate(reference_genome(), dir, "7",
                                     std::chrono::seconds(10),
                                     std::chrono::milliseconds(5));
  stop.store(true);
  solver.join();
  CHECK(obj.s11_2g4 == -12.5);
  CHECK(obj.s11_3g6 == -11.0);
  CHECK(obj.s11_5g2 == -14.25);
  fs::remove_all(dir);
}

TEST_CASE("external_evaluate: missing result times out") {
  const fs::path dir = fresh_dir("timeout");
  CHECK_THROWS_AS(
      external_evaluate(reference_genome(), dir, "1",
                        std::chrono::milliseconds(120),
                        std::chrono::milliseconds(10)),
      EvaluationTimeoutError);
  // The request itself was still written.
  CHECK(fs::exists(dir / "1.params"));
  fs::remove_all(dir);
}

TEST_CASE("ExternalProblem: evaluation ids name the exchange files") {
  const fs::path dir = fresh_dir("problem");
  const ExternalProblem prob(dir, ParameterBounds::defaults(),
                             std::chrono::seconds(10),
                             std::chrono::milliseconds(5));
  CHECK(prob.name() == "external:" + dir.string());

  std::atomic<bool> stop{false};
  std::thread solver([&] {
    while (!stop.load()) {
      for (const auto& entry : fs::directory_iterator(dir)) {
        const fs::path p = entry.path();
        if (p.extension() != ".params") continue;
        const std::string id = p.stem().string();
        const fs::path result = dir / (id + ".s11.txt");
        if (fs::exists(result)) continue;
        const fs::path tmp = dir / (id + ".s11.tmp");
        {
          std::ofstream out(tmp);
          out << "1.0 -0.5\n2.4 -11\n3.6 -12\n5.2 -13\n7.0 -0.5\n";
        }
        fs::rename(tmp, result);
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }
  });

  const auto f = prob.evaluate_at(reference_genome().as_vector(), 3);
  stop.store(true);
  solver.join();
  CHECK(f == std::vector<double>{-11.0, -12.0, -13.0});
  // Ids are zero-padded so exchange directories list in evaluation order.
  CHECK(fs::exists(dir / "00000003.params"));
  CHECK(fs::exists(dir / "00000003.s11.txt"));
  fs::remove_all(dir);
}
