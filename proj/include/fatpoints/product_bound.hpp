#pragma once

#include "fatpoints/bounds.hpp"

namespace fatpoints {

/// Exact value of b = n prod_{i=2}^{n} (1 - i/(i^2 + n)). Equals
/// degree_bound(n+1, 1) factor for factor. product_lower_bound(1) == 1.
Rat product_lower_bound(int n);

/// The two product identities behind the squared form of b, plus the
/// agreement of the i = 2..n and i = 1..n-1 index ranges (first and last
/// factors coincide). All exact, zero tolerance.
struct IdentityChecks {
  bool reindex = false;   // n prod (n+i^2-i)/(i^2+n) == prod (1 + i/(i^2+n))
  bool square = false;    // b^2 == n prod (1 - (i/(i^2+n))^2)
  bool shifted = false;   // prod_{i=2..n} form == prod_{i=1..n-1} form
  bool all_hold() const { return reindex && square && shifted; }
};

IdentityChecks check_identities(int n);  // n >= 1 (empty products at n = 1)

/// eps = 1 - prod (1 - x_i^2) and delta = prod (1 + x_i^2) - 1 for
/// x_i = i/(i^2+n), i = 1..n-1. For n >= 3 the ordering eps < delta is
/// strict; at n = 2 the single-factor products make eps == delta exactly.
struct EpsDelta {
  Rat eps;
  Rat delta;
  bool positive = false;           // 0 < eps (false only for n = 1)
  bool ordered = false;            // eps <= delta
  bool strictly_ordered = false;   // eps < delta
  bool square_lower_bound = false; // b^2 >= n (1 - delta)
};

EpsDelta eps_delta(int n);  // n >= 1

/// Result of a rigorous check: the inequality is proven, proven false, or
/// undecidable at the precision used.
enum class CheckResult { pass, fail, undecided };

const char* to_string(CheckResult c);

/// Truncated-series test of the closed form
///   sum_{i>=1} (i/(i^2+n))^2 = (pi/(2 sinh sqrt(n) pi))^2 (1/pi)
///                              (-pi + sinh(2 sqrt(n) pi)/(2 sqrt(n))).
/// The truncation tail is bounded above by 1/terms and, for the tail
/// estimate from i = n on, below by 1/(terms+2).
struct ParsevalCheck {
  int n = 0;
  long terms = 0;
  Rat tolerance;
  Enclosure truncated_sum;   // sum_{i=1}^{terms}
  Enclosure closed_form;
  Enclosure difference;      // closed_form - truncated_sum
  Rat tail_allowance;        // 1/terms
  CheckResult main = CheckResult::undecided;          // |difference| <= tolerance + allowance
  CheckResult tail_estimate = CheckResult::undecided; // sum_{i>=n} >= 1/(n+1)
  /// Pass requires the main bound proven and the tail estimate not refuted.
  bool passed() const;
};

/// Requires n >= 1 and terms >= n.
ParsevalCheck parseval_check(int n, long terms, const Rat& tolerance, int digits = 48);

/// Each intermediate inequality in the derivation of b > sqrt(n) - pi/8,
/// checked independently (exact where possible, by enclosures otherwise).
struct ProofChain {
  CheckResult reindex_identity = CheckResult::undecided;
  CheckResult square_identity = CheckResult::undecided;
  CheckResult eps_delta_order = CheckResult::undecided;
  CheckResult parseval_closed_form = CheckResult::undecided;
  CheckResult tail_lower_bound = CheckResult::undecided;   // sum_{i>=n} >= 1/(n+1)
  CheckResult sinh_ratio_bound = CheckResult::undecided;   // sinh(2x)/(2 sinh^2 x) <= 1 + 3/t^2
  CheckResult exp_growth_bound = CheckResult::undecided;   // e^{sqrt(n) pi} >= 3n
  CheckResult sum_upper_bound = CheckResult::undecided;    // sum <= pi/(4 sqrt n) - 1/(n+2)
  CheckResult final_square_bound = CheckResult::undecided; // b^2 >= n - pi sqrt(n)/4 + 9/11 - 2/5

  bool all_pass() const;
  bool any_fail() const;
  bool any_undecided() const;
};

struct ProductBoundCertificate {
  int n = 0;
  Rat b;                  // exact product
  Enclosure rhs;          // sqrt(n) - pi/8 at the final precision
  Order verdict = Order::inconclusive;  // b vs rhs, enclosure separation
  bool exploratory = false;             // n < 9: outside the proven range
  ProofChain chain;
  long parseval_terms = 0;
  int digits_used = 0;
};

/// Compares exact b against the enclosure of sqrt(n) - pi/8, escalating
/// precision per the budget until the verdict and every enclosure-based
/// chain entry are decided. `parseval_terms` 0 picks max(1000, 2n).
ProductBoundCertificate verify_product_bound(int n, const PrecisionBudget& budget = {},
                                             long parseval_terms = 0);

}  // namespace fatpoints
