#pragma once

#include "fatpoints/unloading.hpp"

#include <string>
#include <vector>

namespace fatpoints {

/// The chain-with-satellites structure on r points at depth i: p_j proximate
/// to p_{j-1} for j = 2..r, and additionally p_j proximate to p_1 for
/// j = 3..i (p_2 already is via the chain). No other relations hold.
/// Requires 2 <= i <= r.
ProximityStructure build_chain(int r, int i);

/// alpha_i = (i-1)/(r-1) and beta_i = 1 - (i-1)/((i-1)^2 + r - 1).
Rat stage_alpha(int i, int r);
Rat stage_beta(int i, int r);

/// Everything checked at one specialization stage: the two entry hypotheses,
/// the unloading run on the depth-i chain, the two inequalities the stage
/// must deliver, the proximity-slack audit, and the conservation audit of
/// (i-1) m_1 + M along the trace (equal on every step, non-decreasing at the
/// last point).
struct StageRecord {
  int r = 0;
  int stage = 0;  // i
  std::vector<Int> input;
  std::vector<Int> output;   // consistent on the depth-i chain
  Int m1;                    // output first multiplicity
  Int tail_sum;              // M' = sum of output multiplicities from p_2 on
  Rat target;                // the incoming target value A
  Rat alpha;                 // alpha_i
  Rat beta;                  // beta_i
  UnloadingTrace trace;

  bool ratio_hypothesis = false;    // ((i-2) m_1 + M) / ((i-2) a_{i-1} + 1) >= A
  bool m1_hypothesis = false;       // m_1 >= a_{i-1} A
  bool ratio_bound = false;         // ((i-1) m'_1 + M') / ((i-1) a_i + 1) >= b_i A
  bool m1_bound = false;            // m'_1 >= a_i b_i A
  bool slack_audit = false;         // m'_1 - a_i M' >= 0
  bool conserved_quantity = false;  // audit along the trace
  bool output_consistent = false;
  bool output_nonnegative = false;

  bool passed() const;
  /// Names of the checks that failed, empty when passed().
  std::vector<std::string> failures() const;
};

/// Runs one stage: verifies the hypotheses for the incoming target, unloads
/// the multiplicities on build_chain(r, i), and evaluates every check with
/// exact rational arithmetic. Requires 2 <= i <= r and m of length r.
StageRecord check_stage(int r, int i, const std::vector<Int>& m, const Rat& target);

/// Full iterated specialization starting from the uniform vector (m,...,m):
/// stage i = 3..r feeds each consistent output into the next richer chain,
/// with targets A_2 = m (r-1) and A_i = beta_i A_{i-1}.
struct SpecializationRun {
  int r = 0;
  Int m;
  std::vector<StageRecord> stages;
  std::vector<Int> final_multiplicities;
  Rat certified_bound;            // m (r-1) alpha_r prod_{i=3..r} beta_i
  bool certificate_holds = false; // final m_1 >= certified_bound
  bool matches_closed_form = false;  // certified_bound == degree_bound(r, m)

  bool all_passed() const;
};

/// Requires r >= 2 and m >= 1 (r = 2 runs zero stages and certifies m >= m).
SpecializationRun simulate_specialization(int r, const Int& m);

}  // namespace fatpoints
