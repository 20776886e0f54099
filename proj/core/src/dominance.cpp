#include "moga/dominance.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace moga {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("objective vectors differ in size");
  bool strictly_better = false;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] > b[m]) return false;
    if (a[m] < b[m]) strictly_better = true;
  }
  return strictly_better;
}

FrontPartition fast_nondominated_sort(
    const std::vector<std::vector<double>>& objectives) {
  const std::size_t n = objectives.size();
  FrontPartition out;
  out.rank.assign(n, 0);
  if (n == 0) return out;

  std::vector<std::vector<std::size_t>> dominated_by(n);
  std::vector<std::size_t> dominator_count(n, 0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(objectives[i], objectives[j])) {
        dominated_by[i].push_back(j);
        ++dominator_count[j];
      } else if (dominates(objectives[j], objectives[i])) {
        dominated_by[j].push_back(i);
        ++dominator_count[i];
      }
    }
  }

  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i)
    if (dominator_count[i] == 0) current.push_back(i);

  std::size_t front_number = 1;
  while (!current.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : current) {
      out.rank[i] = front_number;
      for (std::size_t j : dominated_by[i])
        if (--dominator_count[j] == 0) next.push_back(j);
    }
    out.fronts.push_back(std::move(current));
    current = std::move(next);
    ++front_number;
  }
  return out;
}

std::vector<std::size_t> dominance_count_rank(
    const std::vector<std::vector<double>>& objectives) {
  const std::size_t n = objectives.size();
  std::vector<std::size_t> rank(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && dominates(objectives[j], objectives[i])) ++rank[i];
  return rank;
}

std::vector<double> crowding_distance(
    const std::vector<std::vector<double>>& front) {
  const std::size_t n = front.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> distance(n, 0.0);
  if (n == 0) return distance;
  if (n <= 2) return std::vector<double>(n, inf);

  // Group identical objective vectors so duplicates always come out with
  // the same distance, then scan neighbours over the unique vectors.
  std::map<std::vector<double>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[front[i]].push_back(i);

  std::vector<const std::vector<double>*> unique_vecs;
  std::vector<const std::vector<std::size_t>*> unique_members;
  unique_vecs.reserve(groups.size());
  for (const auto& [vec, members] : groups) {
    unique_vecs.push_back(&vec);
    unique_members.push_back(&members);
  }
  const std::size_t u = unique_vecs.size();
  const std::size_t m_count = front[0].size();
  std::vector<double> unique_distance(u, 0.0);
  std::vector<std::size_t> order(u);

  for (std::size_t m = 0; m < m_count; ++m) {
    for (std::size_t k = 0; k < u; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return (*unique_vecs[a])[m] < (*unique_vecs[b])[m];
    });
    const double lo = (*unique_vecs[order.front()])[m];
    const double hi = (*unique_vecs[order.back()])[m];
    const double range = hi - lo;
    if (range <= 0.0) continue;  // flat objective carries no spacing signal

    unique_distance[order.front()] = inf;
    unique_distance[order.back()] = inf;
    for (std::size_t k = 1; k + 1 < u; ++k) {
      const double gap = (*unique_vecs[order[k + 1]])[m] -
                         (*unique_vecs[order[k - 1]])[m];
      unique_distance[order[k]] += gap / range;
    }
  }

  for (std::size_t k = 0; k < u; ++k)
    for (std::size_t i : *unique_members[k]) distance[i] = unique_distance[k];
  return distance;
}

}  // namespace moga
