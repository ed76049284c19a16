#include "fatpoints/unloading.hpp"

#include <stdexcept>

namespace fatpoints {

Int UnloadingStep::excess_after() const {
  return excess_before + amount * (1 + proximate_count);
}

namespace {

struct Adjacency {
  // children[i] = points proximate to p_i; parents[j] = points p_j is
  // proximate to. 0-based vectors over 1-based indices.
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> parents;

  explicit Adjacency(const ProximityStructure& s)
      : children(static_cast<std::size_t>(s.points) + 1),
        parents(static_cast<std::size_t>(s.points) + 1) {
    for (const auto& [j, i] : s.proximities) {
      children[static_cast<std::size_t>(i)].push_back(j);
      parents[static_cast<std::size_t>(j)].push_back(i);
    }
  }
};

// In-place step at `pivot` keeping the excess vector in sync.
UnloadingStep apply_step(std::vector<Int>& m, std::vector<Int>& rho,
                         const Adjacency& adj, int pivot) {
  const Int& excess = rho[static_cast<std::size_t>(pivot) - 1];
  if (excess >= 0)
    throw std::invalid_argument("unload_step: excess at pivot " +
                                std::to_string(pivot) + " is not negative");
  const auto& kids = adj.children[static_cast<std::size_t>(pivot)];
  Int t = static_cast<long>(kids.size());
  Int n = ceil_div(-excess, 1 + t);
  UnloadingStep step{pivot, n, excess, static_cast<long>(kids.size())};

  m[static_cast<std::size_t>(pivot) - 1] += n;
  rho[static_cast<std::size_t>(pivot) - 1] += n;
  for (int q : adj.parents[static_cast<std::size_t>(pivot)])
    rho[static_cast<std::size_t>(q) - 1] -= n;
  for (int j : kids) {
    m[static_cast<std::size_t>(j) - 1] -= n;
    rho[static_cast<std::size_t>(j) - 1] -= n;
    for (int q : adj.parents[static_cast<std::size_t>(j)])
      rho[static_cast<std::size_t>(q) - 1] += n;
  }
  return step;
}

int select_pivot(const std::vector<Int>& rho, PivotPolicy policy) {
  int pivot = 0;
  for (std::size_t k = 0; k < rho.size(); ++k) {
    if (rho[k] >= 0) continue;
    int idx = static_cast<int>(k) + 1;
    switch (policy) {
      case PivotPolicy::lowest_index:
        return idx;
      case PivotPolicy::highest_index:
        pivot = idx;
        break;
      case PivotPolicy::most_negative:
        if (pivot == 0 || rho[k] < rho[static_cast<std::size_t>(pivot) - 1]) pivot = idx;
        break;
    }
  }
  return pivot;  // 0 when consistent
}

}  // namespace

std::pair<WeightedCluster, UnloadingStep> unload_step(const WeightedCluster& c, int pivot) {
  require_valid(c.structure);
  if (pivot < 1 || pivot > c.structure.points)
    throw std::invalid_argument("unload_step: pivot out of range");
  Adjacency adj(c.structure);
  std::vector<Int> m = c.multiplicities;
  std::vector<Int> rho = excesses(c);
  UnloadingStep step = apply_step(m, rho, adj, pivot);
  return {WeightedCluster{c.structure, std::move(m)}, step};
}

UnloadOutcome unload(const WeightedCluster& c, PivotPolicy policy) {
  require_valid(c.structure);
  if (static_cast<int>(c.multiplicities.size()) != c.structure.points)
    throw std::invalid_argument("unload: multiplicity vector length mismatch");

  Adjacency adj(c.structure);
  std::vector<Int> m = c.multiplicities;
  std::vector<Int> rho = excesses(c);

  Int max_abs = 0;
  for (const Int& v : m)
    if (abs(v) > max_abs) max_abs = abs(v);
  const Int cap = Int(10) * c.structure.points * (1 + max_abs);

  UnloadingTrace trace;
  trace.initial = c.multiplicities;
  Int count = 0;
  while (int pivot = select_pivot(rho, policy)) {
    if (count >= cap)
      throw std::logic_error("unload: step cap " + cap.str() +
                             " exceeded; this indicates a bug");
    trace.steps.push_back(apply_step(m, rho, adj, pivot));
    ++count;
  }
  trace.final = m;
  return {WeightedCluster{c.structure, std::move(m)}, std::move(trace)};
}

std::vector<Int> replay_trace(const ProximityStructure& s, const UnloadingTrace& t) {
  Adjacency adj(s);
  std::vector<Int> m = t.initial;
  for (const UnloadingStep& step : t.steps) {
    m[static_cast<std::size_t>(step.pivot) - 1] += step.amount;
    for (int j : adj.children[static_cast<std::size_t>(step.pivot)])
      m[static_cast<std::size_t>(j) - 1] -= step.amount;
  }
  return m;
}

bool equivalent(const WeightedCluster& a, const WeightedCluster& b) {
  if (a.structure != b.structure)
    throw std::invalid_argument("equivalent: clusters have different proximity structures");
  return unload(a).cluster.multiplicities == unload(b).cluster.multiplicities;
}

}  // namespace fatpoints
