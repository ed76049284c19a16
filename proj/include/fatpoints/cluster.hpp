#pragma once

#include "fatpoints/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fatpoints {

/// Ordered cluster of `points` infinitely near points, encoded by its
/// proximity relation: the pair (j, i) with j > i means p_j is proximate to
/// p_i. Indices are 1-based throughout. Pairs are kept sorted and unique.
struct ProximityStructure {
  int points = 0;
  std::vector<std::pair<int, int>> proximities;

  ProximityStructure() = default;
  ProximityStructure(int r, std::vector<std::pair<int, int>> prox);

  bool has(int j, int i) const;
  /// Number of points proximate to p_i (the t_i in the unloading step rule).
  int proximity_count(int i) const;
  /// All j with (j, i) in the relation, ascending.
  std::vector<int> points_proximate_to(int i) const;
  /// All i that p_j is proximate to, ascending.
  std::vector<int> targets_of(int j) const;
  /// Dense form of the relation: cell [j-1][i-1] is true iff (j, i) holds.
  std::vector<std::vector<bool>> relation_matrix() const;

  friend bool operator==(const ProximityStructure&, const ProximityStructure&) = default;
};

struct ValidationIssue {
  enum class Rule {
    point_count,
    pair_range,
    too_many_proximities,
    satellite_closure,
    satellite_pair_reuse
  };
  Rule rule;
  int j = 0;
  int i = 0;
  std::string message;
};

/// Checks the realizability rules: 1 <= i < j <= points for every pair, at
/// most two proximities per point, the satellite closure (j prox to both
/// i < k forces k prox to i), and pair uniqueness (no two points proximate to
/// the same pair -- blowing up the first satellite separates the two divisors,
/// so a second one has nowhere to sit; without this rule the unloading
/// fixpoint is not policy independent). Returns one issue per violation.
std::vector<ValidationIssue> validate(const ProximityStructure& s);

inline bool is_valid(const ProximityStructure& s) { return validate(s).empty(); }

/// Throws std::invalid_argument describing the first issue when invalid.
void require_valid(const ProximityStructure& s);

/// Proximity structure plus integer (virtual) multiplicities; entries may be
/// zero or negative.
struct WeightedCluster {
  ProximityStructure structure;
  std::vector<Int> multiplicities;

  friend bool operator==(const WeightedCluster&, const WeightedCluster&) = default;
};

/// Excess at p_i: rho_i = m_i - sum of m_j over j proximate to i. This is the
/// slack of the proximity inequality at p_i.
std::vector<Int> excesses(const WeightedCluster& c);

/// True iff every excess is non-negative.
bool is_consistent(const WeightedCluster& c);

/// Degree sum(m_i (m_i + 1) / 2) of the scheme cut out by a consistent
/// cluster with non-negative multiplicities; throws std::invalid_argument
/// otherwise.
Int scheme_degree(const WeightedCluster& c);

}  // namespace fatpoints
