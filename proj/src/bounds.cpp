#include "fatpoints/bounds.hpp"

#include <stdexcept>

namespace fatpoints {

Rat degree_bound(int r, const Int& m) {
  if (r < 1) throw std::invalid_argument("degree_bound: need r >= 1");
  if (r == 1) return Rat(0);
  RatProduct prod;
  prod.mul(Int(m) * (r - 1), 1);
  for (int i = 2; i <= r - 1; ++i) {
    Int d = Int(i) * i + r - 1;
    prod.mul(d - i, d);
  }
  return prod.value();
}

Int nagata_floor(int r, const Int& m) {
  if (r < 1) throw std::invalid_argument("nagata_floor: need r >= 1");
  return isqrt_floor(Int(r)) * m;
}

Rat evain_threshold(const Int& m) {
  if (m < 1) throw std::invalid_argument("evain_threshold: need m >= 1");
  Rat base = Rat(8 * m * (m + 1), 4 * m - 1);
  return base * base;
}

const char* to_string(Order o) {
  switch (o) {
    case Order::proven_less: return "proven-less";
    case Order::proven_equal: return "proven-equal";
    case Order::proven_greater: return "proven-greater";
    default: return "inconclusive";
  }
}

Order order_of(Separation s) {
  switch (s) {
    case Separation::less: return Order::proven_less;
    case Separation::greater: return Order::proven_greater;
    default: return Order::inconclusive;
  }
}

Order exact_order(const Rat& a, const Rat& b) {
  if (a < b) return Order::proven_less;
  if (a > b) return Order::proven_greater;
  return Order::proven_equal;
}

bool BoundReport::any_inconclusive() const {
  return vs_nagata == Order::inconclusive || vs_sqrt_bound == Order::inconclusive ||
         vs_xu_reduced == Order::inconclusive || vs_xu_offset == Order::inconclusive;
}

namespace {

Enclosure sqrt_bound_enclosure(int r, const Int& m, int digits) {
  Enclosure root = sqrt_enclosure(Rat(r - 1), digits);
  Enclosure pi = pi_enclosure(digits);
  return (root - pi / Rat(8)) * Rat(m);
}

Enclosure xu_reduced_enclosure(int r, const Int& m, int digits) {
  return sqrt_enclosure(Rat(r - 1), digits) * Rat(m);
}

Enclosure xu_offset_enclosure(int r, const Int& m, int digits) {
  Enclosure a = sqrt_enclosure(Rat(r), digits) * Rat(m);
  Enclosure half_inv = recip(sqrt_enclosure(Rat(r - 1), digits) * Rat(2));
  return a - half_inv;
}

}  // namespace

BoundReport compare_bounds(int r, const Int& m, const PrecisionBudget& budget) {
  if (r < 2) throw std::invalid_argument("compare_bounds: need r >= 2");
  BoundReport rep;
  rep.r = r;
  rep.m = m;
  rep.product_bound = degree_bound(r, m);
  rep.nagata = nagata_floor(r, m);
  rep.vs_nagata = exact_order(rep.product_bound, Rat(rep.nagata));

  const Enclosure exact_point(rep.product_bound);
  int digits = budget.start;
  auto run = [&](auto make) {
    Enclosure first = make(budget.start);
    if (first.lower() == first.upper())  // exact tie or exactly representable rhs
      return exact_order(rep.product_bound, first.lower());
    auto [sep, used] = separate_with_budget(
        [&](int) { return exact_point; }, make, budget);
    if (used > digits) digits = used;
    return order_of(sep);
  };
  rep.vs_sqrt_bound = run([&](int d) { return sqrt_bound_enclosure(r, m, d); });
  rep.vs_xu_reduced = run([&](int d) { return xu_reduced_enclosure(r, m, d); });
  rep.vs_xu_offset = run([&](int d) { return xu_offset_enclosure(r, m, d); });
  rep.digits_used = digits;
  rep.sqrt_bound = sqrt_bound_enclosure(r, m, digits);
  rep.xu_reduced = xu_reduced_enclosure(r, m, digits);
  rep.xu_offset = xu_offset_enclosure(r, m, digits);
  return rep;
}

ImprovementScan improvement_scan(int r_min, int r_max, int window_digits) {
  if (r_min < 2 || r_min > r_max)
    throw std::invalid_argument("improvement_scan: need 2 <= r_min <= r_max");
  ImprovementScan scan;
  scan.r_min = r_min;
  scan.r_max = r_max;
  for (int r = r_min; r <= r_max; ++r) {
    if (degree_bound(r, 1) > Rat(nagata_floor(r, 1))) scan.improving.push_back(r);
  }
  Enclosure pi = pi_enclosure(window_digits);
  for (int n = 1; Int(n) * n < r_max; ++n) {
    Int upper = Int(n + 1) * (n + 1);
    Enclosure lower = sqr(Enclosure(Rat(n)) + pi / Rat(8)) + Rat(1);
    // keep windows that meet [r_min, r_max]
    if (upper <= r_min || lower.lower() >= r_max) continue;
    scan.windows.push_back({n, lower, upper});
  }
  return scan;
}

}  // namespace fatpoints
