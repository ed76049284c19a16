#pragma once

#include "fatpoints/enclosure.hpp"

#include <vector>

namespace fatpoints {

/// Exact lower bound m (r-1) prod_{i=2}^{r-1} (1 - i/(i^2 + r - 1)) on the
/// degree of a plane curve with multiplicity m at r general points.
/// degree_bound(1, m) == 0 and degree_bound(2, m) == m (empty product).
Rat degree_bound(int r, const Int& m);

/// floor(sqrt(r)) * m via exact integer square root.
Int nagata_floor(int r, const Int& m);

/// Exact threshold (8m/(4m-1) (m+1))^2; multiplicity-m improvements of the
/// Nagata floor are known unconditionally for r strictly above it.
Rat evain_threshold(const Int& m);

/// Proven order relation between two bound values. `proven_equal` can only
/// arise from exact arithmetic; enclosure comparisons yield the other three.
enum class Order { proven_less, proven_equal, proven_greater, inconclusive };

const char* to_string(Order o);

Order order_of(Separation s);
/// Exact three-way comparison of rationals as an Order.
Order exact_order(const Rat& a, const Rat& b);

/// All competing bounds for one (r, m), with rigorous verdicts. The two Xu
/// bounds apply to irreducible reduced curves only and are informational.
struct BoundReport {
  int r = 0;
  Int m;
  Rat product_bound;       // exact, reduced
  Int nagata;              // floor(sqrt r) * m
  Enclosure sqrt_bound;    // (sqrt(r-1) - pi/8) m
  Enclosure xu_reduced;    // sqrt(r-1) m
  Enclosure xu_offset;     // sqrt(r) m - 1/(2 sqrt(r-1))
  Order vs_nagata = Order::inconclusive;
  Order vs_sqrt_bound = Order::inconclusive;
  Order vs_xu_reduced = Order::inconclusive;
  Order vs_xu_offset = Order::inconclusive;
  int digits_used = 0;

  bool any_inconclusive() const;
};

/// Requires r >= 2. Enclosure comparisons escalate precision per the budget;
/// the stored enclosures are the ones from the final precision used.
BoundReport compare_bounds(int r, const Int& m, const PrecisionBudget& budget = {});

/// One interval ((n + pi/8)^2 + 1, (n+1)^2) in which the product bound is
/// guaranteed to beat the Nagata floor (for r >= 10).
struct PredictedWindow {
  int n = 0;
  Enclosure lower;  // (n + pi/8)^2 + 1
  Int upper;        // (n+1)^2, exact
};

struct ImprovementScan {
  int r_min = 0;
  int r_max = 0;
  /// r in [r_min, r_max] with degree_bound(r, 1) strictly above the Nagata
  /// floor; ties excluded. Exact arithmetic only.
  std::vector<int> improving;
  /// Predicted windows meeting [r_min, r_max], endpoints as stated.
  std::vector<PredictedWindow> windows;
};

/// Requires 2 <= r_min <= r_max.
ImprovementScan improvement_scan(int r_min, int r_max, int window_digits = 40);

}  // namespace fatpoints
