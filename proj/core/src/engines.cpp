#include "moga/engines.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

#include "moga/metrics.hpp"

namespace moga {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::vector<std::vector<double>> objectives_of(
    const std::vector<Individual>& pop) {
  std::vector<std::vector<double>> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) out.push_back(ind.f);
  return out;
}

std::vector<std::vector<double>> genomes_of(
    const std::vector<Individual>& pop) {
  std::vector<std::vector<double>> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) out.push_back(ind.x);
  return out;
}

/// Evaluates xs[i] for every i, storing results by index.  With jobs > 1
/// the work is split into contiguous chunks; the eval id passed down is
/// eval_base + i either way, so out-of-process evaluators see the same
/// file names no matter the thread count.
void evaluate_population(const Problem& problem, std::vector<Individual>& pop,
                         std::size_t jobs, std::uint64_t eval_base) {
  const std::size_t n = pop.size();
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i)
      pop[i].f = problem.evaluate_at(pop[i].x, eval_base + i);
    return;
  }
  std::vector<std::future<void>> workers;
  workers.reserve(jobs);
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i)
        pop[i].f = problem.evaluate_at(pop[i].x, eval_base + i);
    }));
  }
  std::exception_ptr first_error;
  for (auto& worker : workers) {
    try {
      worker.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

/// Shared machinery for one run: population state plus the engine-specific
/// pieces (archive, running front, incumbent best).
class Runner {
 public:
  Runner(const RunConfig& config, const Problem& problem,
         const GenerationObserver& observer)
      : cfg_(config),
        problem_(problem),
        observer_(observer),
        rng_(config.seed),
        weights_(config.effective_weights(problem.objective_count())),
        lower_(problem.lower_bounds()),
        upper_(problem.upper_bounds()) {}

  RunResult go() {
    init_population();
    if (cfg_.algorithm == Algorithm::nsga3)
      reference_directions_ =
          simplex_lattice(problem_.objective_count(), cfg_.reference_divisions);

    RunResult result;
    for (std::size_t g = 1; g <= cfg_.generations; ++g) {
      const std::vector<Individual> front = current_front();
      GenerationTrace row;
      row.generation = g;
      row.best_fitness = best_fitness_over(front);
      row.diversity = population_diversity(genomes_of(population_));
      row.gd = kNan;
      row.igd = kNan;
      row.convergence_speed = kNan;
      row.front_objectives = objectives_of(front);
      result.trace.push_back(row);
      if (observer_)
        observer_(GenerationSnapshot{result.trace.back(), population_, front});

      if (g == cfg_.generations) {
        result.front = front;
        break;
      }
      breed(g);
    }

    result.population = population_;
    // Representative single solution: the member of population+front with
    // the highest scalar fitness (first one wins ties).
    result.best_fitness = -std::numeric_limits<double>::infinity();
    for (const auto& ind : result.front) consider_best(result, ind);
    for (const auto& ind : result.population) consider_best(result, ind);
    return result;
  }

 private:
  void consider_best(RunResult& result, const Individual& ind) const {
    const double f = scalar_fitness(ind.f, weights_);
    if (f > result.best_fitness) {
      result.best_fitness = f;
      result.best = ind;
    }
  }

  void init_population() {
    population_.resize(cfg_.population_size);
    for (auto& ind : population_) {
      std::vector<double> raw(problem_.dimension());
      for (std::size_t j = 0; j < raw.size(); ++j)
        raw[j] = rng_.uniform(lower_[j], upper_[j]);
      ind.x = problem_.repair(std::move(raw));
    }
    evaluate_population(problem_, population_, cfg_.jobs, 0);
    eval_counter_ = population_.size();
  }

  /// The engine's current answer to "what is the front?", also used for
  /// the per-generation trace.  For spea this is where the archive gets
  /// its per-generation update, and for scalar where the incumbent best
  /// is advanced — both must happen exactly once per generation.
  std::vector<Individual> current_front() {
    switch (cfg_.algorithm) {
      case Algorithm::pga: {
        const auto partition = fast_nondominated_sort(objectives_of(population_));
        for (std::size_t i : partition.fronts.front())
          merge_into_running_front(population_[i]);
        return running_front_;
      }
      case Algorithm::nsga1:
      case Algorithm::nsga2:
      case Algorithm::nsga3: {
        const auto partition = fast_nondominated_sort(objectives_of(population_));
        std::vector<Individual> front;
        front.reserve(partition.fronts.front().size());
        for (std::size_t i : partition.fronts.front())
          front.push_back(population_[i]);
        return front;
      }
      case Algorithm::spea: {
        update_archive();
        return archive_;
      }
      case Algorithm::scalar: {
        for (const auto& ind : population_) {
          const double f = scalar_fitness(ind.f, weights_);
          if (f > incumbent_fitness_) {  // strictly-better updates only
            incumbent_fitness_ = f;
            incumbent_ = ind;
          }
        }
        return {incumbent_};
      }
    }
    throw std::logic_error("unknown algorithm");
  }

  double best_fitness_over(const std::vector<Individual>& front) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& ind : front)
      best = std::max(best, scalar_fitness(ind.f, weights_));
    for (const auto& ind : population_)
      best = std::max(best, scalar_fitness(ind.f, weights_));
    return best;
  }

  void merge_into_running_front(const Individual& candidate) {
    for (const auto& member : running_front_)
      if (member.x == candidate.x) return;
    running_front_.push_back(candidate);
    // Re-filter: keep only mutually non-dominated members.
    std::vector<Individual> filtered;
    for (std::size_t i = 0; i < running_front_.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < running_front_.size() && !dominated; ++j)
        dominated = (j != i) && dominates(running_front_[j].f,
                                          running_front_[i].f);
      if (!dominated) filtered.push_back(running_front_[i]);
    }
    running_front_ = std::move(filtered);
  }

  void update_archive() {
    std::vector<Individual> pool = population_;
    pool.insert(pool.end(), archive_.begin(), archive_.end());
    spea_pool_ = pool;
    spea_fitness_ = strength_fitness(objectives_of(pool));
    const auto keep = archive_select(objectives_of(pool), cfg_.archive_capacity);
    std::vector<Individual> next;
    next.reserve(keep.size());
    for (std::size_t i : keep) next.push_back(pool[i]);
    archive_ = std::move(next);
  }

  void breed(std::size_t generation) {
    std::vector<Individual> next;
    switch (cfg_.algorithm) {
      case Algorithm::pga:
        next = breed_pga();
        break;
      case Algorithm::nsga1:
        next = breed_nsga1();
        break;
      case Algorithm::nsga2:
        next = breed_elitist(/*use_crowding=*/true);
        break;
      case Algorithm::nsga3:
        next = breed_elitist(/*use_crowding=*/false);
        break;
      case Algorithm::spea:
        next = breed_spea();
        break;
      case Algorithm::scalar:
        next = breed_scalar();
        break;
    }
    population_ = std::move(next);
  }

  Individual make_child(const Individual& a, const Individual& b) {
    auto [c1, c2] =
        sbx_crossover(a.x, b.x, lower_, upper_, cfg_.variation, rng_);
    (void)c2;
    auto mutated =
        polynomial_mutation(c1, lower_, upper_, cfg_.variation, rng_);
    Individual child;
    child.x = problem_.repair(std::move(mutated));
    return child;
  }

  std::pair<Individual, Individual> make_children(const Individual& a,
                                                  const Individual& b) {
    auto [c1, c2] =
        sbx_crossover(a.x, b.x, lower_, upper_, cfg_.variation, rng_);
    Individual k1, k2;
    k1.x = problem_.repair(
        polynomial_mutation(c1, lower_, upper_, cfg_.variation, rng_));
    k2.x = problem_.repair(
        polynomial_mutation(c2, lower_, upper_, cfg_.variation, rng_));
    return {std::move(k1), std::move(k2)};
  }

  /// Fills `next` up to the population size with children bred from
  /// tournament winners under `better` over the current population.
  void fill_with_children(
      std::vector<Individual>& next,
      const std::function<bool(std::size_t, std::size_t)>& better) {
    while (next.size() < cfg_.population_size) {
      const Individual& a =
          population_[binary_tournament(population_.size(), better, rng_)];
      const Individual& b =
          population_[binary_tournament(population_.size(), better, rng_)];
      auto [k1, k2] = make_children(a, b);
      next.push_back(std::move(k1));
      if (next.size() < cfg_.population_size) next.push_back(std::move(k2));
    }
  }

  std::vector<Individual> breed_pga() {
    const auto objs = objectives_of(population_);
    const auto rank = dominance_count_rank(objs);
    const auto normalized = normalize_objectives(objs);
    const std::size_t n = population_.size();
    std::vector<double> shared(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double raw = static_cast<double>(n - std::min(rank[i], n) + 1);
      shared[i] = raw / niche_count(i, normalized, cfg_.sharing);
    }
    // Elite: best shared fitness among the non-dominated members.
    std::size_t elite = 0;
    bool have_elite = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (rank[i] != 1) continue;
      if (!have_elite || shared[i] > shared[elite]) {
        elite = i;
        have_elite = true;
      }
    }
    std::vector<Individual> next;
    next.reserve(cfg_.population_size);
    next.push_back(population_[elite]);
    fill_with_children(next, [&](std::size_t a, std::size_t b) {
      return shared[a] > shared[b];
    });
    evaluate_offspring(next, 1);
    return next;
  }

  std::vector<Individual> breed_nsga1() {
    const auto objs = objectives_of(population_);
    const auto partition = fast_nondominated_sort(objs);
    const auto shared =
        shared_fitness(objs, partition, cfg_.sharing,
                       static_cast<double>(population_.size()));
    std::vector<Individual> next;
    next.reserve(cfg_.population_size);
    if (cfg_.proportionate_selection) {
      double total = 0.0;
      for (double s : shared) total += s;
      auto spin = [&]() {
        const double target = rng_.uniform01() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < shared.size(); ++i) {
          acc += shared[i];
          if (acc >= target) return i;
        }
        return shared.size() - 1;
      };
      while (next.size() < cfg_.population_size) {
        const Individual& a = population_[spin()];
        const Individual& b = population_[spin()];
        auto [k1, k2] = make_children(a, b);
        next.push_back(std::move(k1));
        if (next.size() < cfg_.population_size) next.push_back(std::move(k2));
      }
    } else {
      fill_with_children(next, [&](std::size_t a, std::size_t b) {
        return shared[a] > shared[b];
      });
    }
    evaluate_offspring(next, 0);
    return next;
  }

  /// nsga2/nsga3 share the combine-and-reduce shape; they differ in the
  /// mating key (crowding as tie-break or not) and in how the 2N pool is
  /// reduced back to N.
  std::vector<Individual> breed_elitist(bool use_crowding) {
    const auto objs = objectives_of(population_);
    const auto partition = fast_nondominated_sort(objs);
    std::vector<double> crowding(population_.size(), 0.0);
    if (use_crowding) {
      for (const auto& front : partition.fronts) {
        std::vector<std::vector<double>> front_objs;
        front_objs.reserve(front.size());
        for (std::size_t i : front) front_objs.push_back(objs[i]);
        const auto d = crowding_distance(front_objs);
        for (std::size_t k = 0; k < front.size(); ++k)
          crowding[front[k]] = d[k];
      }
    }
    auto better = [&](std::size_t a, std::size_t b) {
      if (partition.rank[a] != partition.rank[b])
        return partition.rank[a] < partition.rank[b];
      return use_crowding && crowding[a] > crowding[b];
    };

    std::vector<Individual> offspring;
    offspring.reserve(cfg_.population_size);
    fill_with_children(offspring, better);
    evaluate_offspring(offspring, 0);

    std::vector<Individual> combined = population_;
    combined.insert(combined.end(), offspring.begin(), offspring.end());
    const auto combined_objs = objectives_of(combined);

    std::vector<std::size_t> keep;
    if (use_crowding) {
      keep = crowded_survivor_select(combined_objs, cfg_.population_size);
    } else {
      const auto parts = fast_nondominated_sort(combined_objs);
      std::vector<std::size_t> admitted;
      std::vector<std::size_t> splitting;
      for (const auto& front : parts.fronts) {
        if (admitted.size() + front.size() <= cfg_.population_size) {
          admitted.insert(admitted.end(), front.begin(), front.end());
          if (admitted.size() == cfg_.population_size) break;
        } else {
          splitting = front;
          break;
        }
      }
      if (admitted.size() == cfg_.population_size)
        keep = admitted;  // whole fronts fit exactly; no niching involved
      else
        keep = reference_point_select(combined_objs, admitted, splitting,
                                      reference_directions_,
                                      cfg_.population_size, rng_);
    }
    std::vector<Individual> next;
    next.reserve(keep.size());
    for (std::size_t i : keep) next.push_back(std::move(combined[i]));
    return next;
  }

  std::vector<Individual> breed_spea() {
    // spea_pool_/spea_fitness_ were refreshed by update_archive() in the
    // trace step of this generation.
    const auto& pool = spea_pool_;
    const auto& fitness = spea_fitness_;
    auto better = [&](std::size_t a, std::size_t b) {
      return fitness[a] < fitness[b];
    };
    std::vector<Individual> next;
    next.reserve(cfg_.population_size);
    while (next.size() < cfg_.population_size) {
      const Individual& a = pool[binary_tournament(pool.size(), better, rng_)];
      const Individual& b = pool[binary_tournament(pool.size(), better, rng_)];
      auto [k1, k2] = make_children(a, b);
      next.push_back(std::move(k1));
      if (next.size() < cfg_.population_size) next.push_back(std::move(k2));
    }
    evaluate_offspring(next, 0);
    return next;
  }

  std::vector<Individual> breed_scalar() {
    std::vector<double> fitness(population_.size());
    for (std::size_t i = 0; i < population_.size(); ++i)
      fitness[i] = scalar_fitness(population_[i].f, weights_);
    auto better = [&](std::size_t a, std::size_t b) {
      return fitness[a] > fitness[b];
    };
    std::vector<Individual> next;
    next.reserve(cfg_.population_size);
    next.push_back(incumbent_);  // elitism: slot 1 is the best ever seen
    while (next.size() < cfg_.population_size) {
      const Individual& a =
          population_[binary_tournament(population_.size(), better, rng_)];
      const Individual& b =
          population_[binary_tournament(population_.size(), better, rng_)];
      next.push_back(make_child(a, b));
    }
    evaluate_offspring(next, 1);
    return next;
  }

  /// Evaluates the bred members of `next` (the first `skip` members are
  /// carried over with their objectives already known).
  void evaluate_offspring(std::vector<Individual>& next, std::size_t skip) {
    std::vector<Individual> fresh(next.begin() + skip, next.end());
    evaluate_population(problem_, fresh, cfg_.jobs,
                        eval_counter_ + skip);
    for (std::size_t i = 0; i < fresh.size(); ++i)
      next[skip + i] = std::move(fresh[i]);
    eval_counter_ += next.size();
  }

  const RunConfig& cfg_;
  const Problem& problem_;
  const GenerationObserver& observer_;
  Rng rng_;
  std::vector<double> weights_;
  std::vector<double> lower_;
  std::vector<double> upper_;

  std::vector<Individual> population_;
  std::vector<Individual> archive_;        // spea
  std::vector<Individual> spea_pool_;      // population + old archive
  std::vector<double> spea_fitness_;
  std::vector<Individual> running_front_;  // pga
  Individual incumbent_;                   // scalar
  double incumbent_fitness_ = -std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> reference_directions_;
  std::uint64_t eval_counter_ = 0;
};

}  // namespace

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "pga") return Algorithm::pga;
  if (name == "nsga1") return Algorithm::nsga1;
  if (name == "nsga2") return Algorithm::nsga2;
  if (name == "nsga3") return Algorithm::nsga3;
  if (name == "spea") return Algorithm::spea;
  if (name == "scalar") return Algorithm::scalar;
  throw std::invalid_argument(
      "unknown algorithm \"" + name +
      "\" (expected pga|nsga1|nsga2|nsga3|spea|scalar)");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::pga: return "pga";
    case Algorithm::nsga1: return "nsga1";
    case Algorithm::nsga2: return "nsga2";
    case Algorithm::nsga3: return "nsga3";
    case Algorithm::spea: return "spea";
    case Algorithm::scalar: return "scalar";
  }
  throw std::logic_error("unknown algorithm");
}

void RunConfig::validate(std::size_t objective_count) const {
  if (population_size < 2)
    throw std::invalid_argument("population size must be at least 2");
  if (generations < 1)
    throw std::invalid_argument("generation count must be at least 1");
  if (archive_capacity < 1)
    throw std::invalid_argument("archive capacity must be at least 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (reference_divisions < 1)
    throw std::invalid_argument("reference divisions must be at least 1");
  const auto& v = variation;
  if (v.crossover_rate < 0.0 || v.crossover_rate > 1.0 ||
      v.mutation_rate < 0.0 || v.mutation_rate > 1.0)
    throw std::invalid_argument("operator rates must lie in [0, 1]");
  if (!(v.crossover_index > 0.0) || !(v.mutation_index > 0.0))
    throw std::invalid_argument("distribution indices must be positive");
  sharing.validate();
  effective_weights(objective_count);  // throws on bad weights
}

std::vector<double> RunConfig::effective_weights(
    std::size_t objective_count) const {
  if (weights.empty()) return std::vector<double>(objective_count, 1.0);
  if (weights.size() != objective_count)
    throw std::invalid_argument(
        "need one weight per objective (" + std::to_string(objective_count) +
        "), got " + std::to_string(weights.size()));
  bool any_positive = false;
  for (double w : weights) {
    if (w < 0.0)
      throw std::invalid_argument("weights must be non-negative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive)
    throw std::invalid_argument("at least one weight must be positive");
  return weights;
}

double scalar_fitness(const std::vector<double>& objectives,
                      const std::vector<double>& weights) {
  double total = 0.0;
  for (std::size_t m = 0; m < objectives.size(); ++m)
    total += weights[m] * std::abs(objectives[m]);
  return total;
}

std::size_t binary_tournament(
    std::size_t population_size,
    const std::function<bool(std::size_t, std::size_t)>& better, Rng& rng) {
  if (population_size == 0)
    throw std::invalid_argument("tournament over an empty population");
  const std::size_t first = rng.uniform_index(population_size);
  const std::size_t second = rng.uniform_index(population_size);
  return better(second, first) ? second : first;
}

std::vector<std::size_t> crowded_survivor_select(
    const std::vector<std::vector<double>>& objectives,
    std::size_t target_size) {
  if (target_size > objectives.size())
    throw std::invalid_argument("cannot select more members than exist");
  const auto partition = fast_nondominated_sort(objectives);
  std::vector<std::size_t> keep;
  keep.reserve(target_size);
  for (const auto& front : partition.fronts) {
    if (keep.size() + front.size() <= target_size) {
      keep.insert(keep.end(), front.begin(), front.end());
      if (keep.size() == target_size) break;
      continue;
    }
    // Splitting front: most isolated first, index as deterministic
    // tie-break.
    std::vector<std::vector<double>> front_objs;
    front_objs.reserve(front.size());
    for (std::size_t i : front) front_objs.push_back(objectives[i]);
    const auto distance = crowding_distance(front_objs);
    std::vector<std::size_t> order(front.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (distance[a] != distance[b]) return distance[a] > distance[b];
      return front[a] < front[b];
    });
    for (std::size_t k = 0; keep.size() < target_size; ++k)
      keep.push_back(front[order[k]]);
    break;
  }
  return keep;
}

std::vector<double> strength_fitness(
    const std::vector<std::vector<double>>& objectives) {
  const std::size_t n = objectives.size();
  std::vector<double> strength(n, 0.0);
  std::vector<std::vector<std::size_t>> dominators(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t dominated_count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (dominates(objectives[i], objectives[j])) {
        ++dominated_count;
      } else if (dominates(objectives[j], objectives[i])) {
        dominators[i].push_back(j);
      }
    }
    strength[i] =
        static_cast<double>(dominated_count) / static_cast<double>(n + 1);
  }
  std::vector<double> fitness(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : dominators[i]) fitness[i] += strength[j];
  return fitness;
}

std::vector<std::size_t> archive_select(
    const std::vector<std::vector<double>>& objectives,
    std::size_t capacity) {
  const std::size_t n = objectives.size();
  std::vector<std::size_t> nondominated;
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n && !dominated; ++j)
      dominated = (j != i) && dominates(objectives[j], objectives[i]);
    if (!dominated) nondominated.push_back(i);
  }
  if (nondominated.size() <= capacity) return nondominated;

  std::vector<std::vector<double>> front_objs;
  front_objs.reserve(nondominated.size());
  for (std::size_t i : nondominated) front_objs.push_back(objectives[i]);
  const auto distance = crowding_distance(front_objs);
  std::vector<std::size_t> order(nondominated.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (distance[a] != distance[b]) return distance[a] > distance[b];
    return nondominated[a] < nondominated[b];
  });
  std::vector<std::size_t> keep;
  keep.reserve(capacity);
  for (std::size_t k = 0; k < capacity; ++k)
    keep.push_back(nondominated[order[k]]);
  std::sort(keep.begin(), keep.end());
  return keep;
}

RunResult run(const RunConfig& config, const Problem& problem,
              const GenerationObserver& observer) {
  config.validate(problem.objective_count());
  Runner runner(config, problem, observer);
  return runner.go();
}

}  // namespace moga
