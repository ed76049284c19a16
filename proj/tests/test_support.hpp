#pragma once

// Shared helpers for the test binaries: a generator of random realizable
// proximity structures and an unloading oracle that is deliberately
// independent of the library implementation (full excess recomputation each
// round, minimal step size found by linear scan).

#include "fatpoints/cluster.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace fatpoints::testing {

inline ProximityStructure random_structure(std::mt19937_64& rng, int max_points) {
  std::uniform_int_distribution<int> r_dist(1, max_points);
  int r = r_dist(rng);
  std::vector<std::pair<int, int>> prox;
  std::vector<std::pair<int, int>> consumed;  // pairs already carrying a satellite
  for (int j = 2; j <= r; ++j) {
    int roll = std::uniform_int_distribution<int>(0, 99)(rng);
    if (roll < 20) continue;  // proper point, no proximities
    if (roll < 70 || prox.empty()) {
      int parent = std::uniform_int_distribution<int>(1, j - 1)(rng);
      prox.emplace_back(j, parent);
    } else {
      // satellite: attach to an existing pair (k, i) with k < j that no other
      // satellite consumed; closure and pair uniqueness hold by construction
      std::vector<std::pair<int, int>> candidates;
      for (const auto& p : prox)
        if (p.first < j &&
            std::find(consumed.begin(), consumed.end(), p) == consumed.end())
          candidates.push_back(p);
      if (candidates.empty()) {
        prox.emplace_back(j, std::uniform_int_distribution<int>(1, j - 1)(rng));
      } else {
        auto pair = candidates[std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng)];
        prox.emplace_back(j, pair.first);
        prox.emplace_back(j, pair.second);
        consumed.push_back(pair);
      }
    }
  }
  return ProximityStructure(r, std::move(prox));
}

inline std::vector<Int> random_multiplicities(std::mt19937_64& rng, int r, int max_abs) {
  std::uniform_int_distribution<int> dist(-max_abs, max_abs);
  std::vector<Int> m;
  m.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) m.emplace_back(dist(rng));
  return m;
}

inline std::vector<Int> oracle_excesses(const ProximityStructure& s,
                                        const std::vector<Int>& m) {
  std::vector<Int> rho = m;
  for (const auto& [j, i] : s.proximities)
    rho[static_cast<std::size_t>(i) - 1] -= m[static_cast<std::size_t>(j) - 1];
  return rho;
}

/// Reference unloading: recompute everything each round, always repair the
/// lowest violated point, find the minimal transfer by scanning n = 1, 2, ...
inline std::vector<Int> oracle_unload(const ProximityStructure& s, std::vector<Int> m) {
  for (long round = 0; round < 2000000; ++round) {
    std::vector<Int> rho = oracle_excesses(s, m);
    int pivot = 0;
    for (int i = 1; i <= s.points; ++i)
      if (rho[static_cast<std::size_t>(i) - 1] < 0) {
        pivot = i;
        break;
      }
    if (pivot == 0) return m;
    auto kids = s.points_proximate_to(pivot);
    Int t = static_cast<long>(kids.size());
    Int n = 1;
    while (rho[static_cast<std::size_t>(pivot) - 1] + n * (1 + t) < 0) ++n;
    m[static_cast<std::size_t>(pivot) - 1] += n;
    for (int j : kids) m[static_cast<std::size_t>(j) - 1] -= n;
  }
  throw std::runtime_error("oracle_unload: did not terminate");
}

}  // namespace fatpoints::testing
