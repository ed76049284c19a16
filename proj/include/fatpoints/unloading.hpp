#pragma once

#include "fatpoints/cluster.hpp"

#include <utility>
#include <vector>

namespace fatpoints {

/// Which violated point to repair next. The final multiplicities do not
/// depend on the choice; traces do.
enum class PivotPolicy { lowest_index, highest_index, most_negative };

/// One unloading step: the violated excess at `pivot` is repaired by moving
/// `amount` units of multiplicity onto it from every point proximate to it.
/// `amount` is the minimal n with excess_before + n * (1 + t) >= 0, where t
/// counts the points proximate to the pivot.
struct UnloadingStep {
  int pivot = 0;          // 1-based point index
  Int amount;             // > 0
  Int excess_before;      // < 0
  Int excess_after() const;
  Int proximate_count;    // t at the pivot (fixed by the structure)
};

struct UnloadingTrace {
  std::vector<Int> initial;
  std::vector<UnloadingStep> steps;
  std::vector<Int> final;
};

struct UnloadOutcome {
  WeightedCluster cluster;  // consistent, same structure as the input
  UnloadingTrace trace;
};

/// Applies one unloading step at `pivot` (1-based). Throws
/// std::invalid_argument if the excess there is already non-negative.
std::pair<WeightedCluster, UnloadingStep> unload_step(const WeightedCluster& c, int pivot);

/// Runs unloading to the unique consistent system of multiplicities
/// equivalent to the input. A step cap of 10 * r * (1 + max|m_i|) guards
/// against non-termination bugs; hitting it throws std::logic_error.
UnloadOutcome unload(const WeightedCluster& c,
                     PivotPolicy policy = PivotPolicy::lowest_index);

/// Replays a trace's steps from its initial vector on the given structure.
std::vector<Int> replay_trace(const ProximityStructure& s, const UnloadingTrace& t);

/// Two multiplicity systems on one proximity structure are equivalent iff
/// they unload to the same consistent system. Throws std::invalid_argument
/// when the structures differ.
bool equivalent(const WeightedCluster& a, const WeightedCluster& b);

}  // namespace fatpoints
