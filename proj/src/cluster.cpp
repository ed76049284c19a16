#include "fatpoints/cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

ProximityStructure::ProximityStructure(int r, std::vector<std::pair<int, int>> prox)
    : points(r), proximities(std::move(prox)) {
  std::sort(proximities.begin(), proximities.end());
  proximities.erase(std::unique(proximities.begin(), proximities.end()),
                    proximities.end());
}

bool ProximityStructure::has(int j, int i) const {
  return std::binary_search(proximities.begin(), proximities.end(), std::pair{j, i});
}

int ProximityStructure::proximity_count(int i) const {
  int t = 0;
  for (const auto& [a, b] : proximities)
    if (b == i) ++t;
  return t;
}

std::vector<int> ProximityStructure::points_proximate_to(int i) const {
  std::vector<int> out;
  for (const auto& [a, b] : proximities)
    if (b == i) out.push_back(a);
  return out;
}

std::vector<int> ProximityStructure::targets_of(int j) const {
  std::vector<int> out;
  for (const auto& [a, b] : proximities)
    if (a == j) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<bool>> ProximityStructure::relation_matrix() const {
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(points),
                                   std::vector<bool>(static_cast<std::size_t>(points)));
  for (const auto& [j, i] : proximities)
    m[static_cast<std::size_t>(j) - 1][static_cast<std::size_t>(i) - 1] = true;
  return m;
}

std::vector<ValidationIssue> validate(const ProximityStructure& s) {
  std::vector<ValidationIssue> issues;
  auto add = [&](ValidationIssue::Rule rule, int j, int i, std::string msg) {
    issues.push_back({rule, j, i, std::move(msg)});
  };

  if (s.points < 1) {
    add(ValidationIssue::Rule::point_count, 0, 0,
        "point count must be at least 1, got " + std::to_string(s.points));
    return issues;
  }

  for (const auto& [j, i] : s.proximities) {
    if (!(1 <= i && i < j && j <= s.points)) {
      add(ValidationIssue::Rule::pair_range, j, i,
          "pair (" + std::to_string(j) + ", " + std::to_string(i) +
              ") must satisfy 1 <= i < j <= " + std::to_string(s.points));
    }
  }
  if (!issues.empty()) return issues;  // range errors make the later rules unreliable

  std::vector<std::pair<int, int>> seen_pairs;  // (k, i) -> first satellite, parallel
  std::vector<int> seen_by;
  for (int j = 2; j <= s.points; ++j) {
    auto targets = s.targets_of(j);
    if (targets.size() > 2) {
      add(ValidationIssue::Rule::too_many_proximities, j, 0,
          "point " + std::to_string(j) + " is proximate to " +
              std::to_string(targets.size()) + " points; at most 2 allowed");
    }
    // satellite closure: proximate to i < k requires k proximate to i
    for (std::size_t a = 0; a < targets.size(); ++a) {
      for (std::size_t b = a + 1; b < targets.size(); ++b) {
        int i = targets[a], k = targets[b];
        if (!s.has(k, i)) {
          add(ValidationIssue::Rule::satellite_closure, j, i,
              "point " + std::to_string(j) + " is proximate to both " +
                  std::to_string(i) + " and " + std::to_string(k) +
                  " but (" + std::to_string(k) + ", " + std::to_string(i) +
                  ") is missing");
        }
      }
    }
    // pair uniqueness: the first satellite on (k, i) consumes the
    // intersection of the two divisors
    if (targets.size() == 2) {
      std::pair<int, int> pair{targets[1], targets[0]};
      auto it = std::find(seen_pairs.begin(), seen_pairs.end(), pair);
      if (it != seen_pairs.end()) {
        int first = seen_by[static_cast<std::size_t>(it - seen_pairs.begin())];
        add(ValidationIssue::Rule::satellite_pair_reuse, j, targets[0],
            "points " + std::to_string(first) + " and " + std::to_string(j) +
                " are both proximate to the pair (" + std::to_string(pair.first) +
                ", " + std::to_string(pair.second) + ")");
      } else {
        seen_pairs.push_back(pair);
        seen_by.push_back(j);
      }
    }
  }
  return issues;
}

void require_valid(const ProximityStructure& s) {
  auto issues = validate(s);
  if (!issues.empty())
    throw std::invalid_argument("invalid proximity structure: " + issues.front().message);
}

std::vector<Int> excesses(const WeightedCluster& c) {
  if (static_cast<int>(c.multiplicities.size()) != c.structure.points)
    throw std::invalid_argument("excesses: multiplicity vector length mismatch");
  std::vector<Int> rho = c.multiplicities;
  for (const auto& [j, i] : c.structure.proximities)
    rho[static_cast<std::size_t>(i) - 1] -= c.multiplicities[static_cast<std::size_t>(j) - 1];
  return rho;
}

bool is_consistent(const WeightedCluster& c) {
  for (const Int& e : excesses(c))
    if (e < 0) return false;
  return true;
}

Int scheme_degree(const WeightedCluster& c) {
  for (const Int& m : c.multiplicities)
    if (m < 0)
      throw std::invalid_argument("scheme_degree: negative multiplicity");
  if (!is_consistent(c))
    throw std::invalid_argument("scheme_degree: cluster is not consistent");
  Int total = 0;
  for (const Int& m : c.multiplicities) total += m * (m + 1) / 2;
  return total;
}

}  // namespace fatpoints
