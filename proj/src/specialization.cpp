#include "fatpoints/specialization.hpp"

#include "fatpoints/bounds.hpp"

#include <stdexcept>

namespace fatpoints {

ProximityStructure build_chain(int r, int i) {
  if (i < 2 || i > r)
    throw std::invalid_argument("build_chain: need 2 <= i <= r, got i=" +
                                std::to_string(i) + ", r=" + std::to_string(r));
  std::vector<std::pair<int, int>> prox;
  for (int j = 2; j <= r; ++j) prox.emplace_back(j, j - 1);
  for (int j = 3; j <= i; ++j) prox.emplace_back(j, 1);
  return ProximityStructure(r, std::move(prox));
}

Rat stage_alpha(int i, int r) { return Rat(i - 1, r - 1); }

Rat stage_beta(int i, int r) {
  return 1 - Rat(i - 1, Int(i - 1) * (i - 1) + r - 1);
}

bool StageRecord::passed() const {
  return ratio_hypothesis && m1_hypothesis && ratio_bound && m1_bound &&
         slack_audit && conserved_quantity && output_consistent && output_nonnegative;
}

std::vector<std::string> StageRecord::failures() const {
  std::vector<std::string> out;
  auto note = [&](bool ok, const char* name) {
    if (!ok) out.emplace_back(name);
  };
  note(ratio_hypothesis, "ratio-hypothesis");
  note(m1_hypothesis, "m1-hypothesis");
  note(ratio_bound, "ratio-bound");
  note(m1_bound, "m1-bound");
  note(slack_audit, "slack-audit");
  note(conserved_quantity, "conserved-quantity");
  note(output_consistent, "output-consistent");
  note(output_nonnegative, "output-nonnegative");
  return out;
}

namespace {

// (i-1) m_1 + sum_{j>=2} m_j for a state vector.
Int conserved_value(int i, const std::vector<Int>& m) {
  Int q = Int(i - 1) * m[0];
  for (std::size_t k = 1; k < m.size(); ++k) q += m[k];
  return q;
}

// The quantity stays fixed on every step whose pivot is interior or first
// (its gain at the pivot cancels against the proximate points) and may only
// grow when the last point is repaired.
bool audit_conserved(int i, int r, const ProximityStructure& s, const UnloadingTrace& t) {
  std::vector<Int> state = t.initial;
  Int q = conserved_value(i, state);
  for (const UnloadingStep& step : t.steps) {
    state[static_cast<std::size_t>(step.pivot) - 1] += step.amount;
    for (int j : s.points_proximate_to(step.pivot))
      state[static_cast<std::size_t>(j) - 1] -= step.amount;
    Int q_next = conserved_value(i, state);
    if (step.pivot == r) {
      if (q_next < q) return false;
    } else {
      if (q_next != q) return false;
    }
    q = q_next;
  }
  return state == t.final;
}

}  // namespace

StageRecord check_stage(int r, int i, const std::vector<Int>& m, const Rat& target) {
  if (r < 2) throw std::invalid_argument("check_stage: need r >= 2");
  if (i < 2 || i > r) throw std::invalid_argument("check_stage: need 2 <= i <= r");
  if (static_cast<int>(m.size()) != r)
    throw std::invalid_argument("check_stage: multiplicity vector length mismatch");

  StageRecord rec;
  rec.r = r;
  rec.stage = i;
  rec.input = m;
  rec.target = target;
  rec.alpha = stage_alpha(i, r);
  rec.beta = stage_beta(i, r);

  Int m1_in = m[0];
  Int tail_in = 0;
  for (std::size_t k = 1; k < m.size(); ++k) tail_in += m[k];

  const Rat alpha_prev = stage_alpha(i - 1, r);
  rec.ratio_hypothesis =
      Rat(Int(i - 2) * m1_in + tail_in) >= target * (Int(i - 2) * alpha_prev + 1);
  rec.m1_hypothesis = Rat(m1_in) >= alpha_prev * target;

  ProximityStructure chain = build_chain(r, i);
  UnloadOutcome outcome = unload(WeightedCluster{chain, m});
  rec.output = outcome.cluster.multiplicities;
  rec.trace = std::move(outcome.trace);
  rec.m1 = rec.output[0];
  rec.tail_sum = 0;
  for (std::size_t k = 1; k < rec.output.size(); ++k) rec.tail_sum += rec.output[k];

  const Rat scaled_target = rec.beta * target;
  rec.ratio_bound =
      Rat(Int(i - 1) * rec.m1 + rec.tail_sum) >= scaled_target * (Int(i - 1) * rec.alpha + 1);
  rec.m1_bound = Rat(rec.m1) >= rec.alpha * scaled_target;
  rec.slack_audit = Rat(rec.m1) >= rec.alpha * Rat(rec.tail_sum);
  rec.conserved_quantity = audit_conserved(i, r, chain, rec.trace);
  rec.output_consistent = is_consistent(outcome.cluster);
  rec.output_nonnegative = true;
  for (const Int& v : rec.output)
    if (v < 0) rec.output_nonnegative = false;
  return rec;
}

bool SpecializationRun::all_passed() const {
  for (const StageRecord& s : stages)
    if (!s.passed()) return false;
  return certificate_holds && matches_closed_form;
}

SpecializationRun simulate_specialization(int r, const Int& m) {
  if (r < 2) throw std::invalid_argument("simulate_specialization: need r >= 2");
  if (m < 1) throw std::invalid_argument("simulate_specialization: need m >= 1");

  SpecializationRun run;
  run.r = r;
  run.m = m;
  std::vector<Int> current(static_cast<std::size_t>(r), m);
  Rat target = Rat(m) * (r - 1);
  for (int i = 3; i <= r; ++i) {
    StageRecord rec = check_stage(r, i, current, target);
    target = rec.beta * target;
    current = rec.output;
    run.stages.push_back(std::move(rec));
  }
  run.final_multiplicities = current;
  run.certified_bound = stage_alpha(r, r) * target;
  run.certificate_holds = Rat(current[0]) >= run.certified_bound;
  run.matches_closed_form = run.certified_bound == degree_bound(r, m);
  return run;
}

}  // namespace fatpoints
