#pragma once

#include "fatpoints/rational.hpp"

#include <string>
#include <utility>

namespace fatpoints {

/// Closed interval [lower, upper] with exact rational endpoints, guaranteed
/// to contain the real value it stands for. All operations round outward, so
/// containment is preserved through arbitrary compositions.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const Rat& exact) : lo_(exact), hi_(exact) {}
  Enclosure(Rat lo, Rat hi);

  const Rat& lower() const { return lo_; }
  const Rat& upper() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / 2; }
  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
  Enclosure& operator+=(const Enclosure& o);
  Enclosure& operator-=(const Enclosure& o);
  Enclosure& operator*=(const Enclosure& o);
  Enclosure& operator/=(const Enclosure& o);

  friend Enclosure operator+(Enclosure a, const Enclosure& b) { return a += b; }
  friend Enclosure operator-(Enclosure a, const Enclosure& b) { return a -= b; }
  friend Enclosure operator*(Enclosure a, const Enclosure& b) { return a *= b; }
  friend Enclosure operator/(Enclosure a, const Enclosure& b) { return a /= b; }

 private:
  Rat lo_{0};
  Rat hi_{0};
};

Enclosure operator+(const Enclosure& a, const Rat& s);
Enclosure operator-(const Enclosure& a, const Rat& s);
Enclosure operator*(const Enclosure& a, const Rat& s);
Enclosure operator*(const Rat& s, const Enclosure& a);
Enclosure operator/(const Enclosure& a, const Rat& s);

/// 1/[a,b]; throws std::domain_error when the interval spans zero.
Enclosure recip(const Enclosure& a);

/// Tight square (monotone on each sign half).
Enclosure sqr(const Enclosure& a);

/// Outward rounding of both endpoints to the grid of multiples of
/// 10^-digits. Keeps endpoint rationals small after kernel evaluations.
Enclosure round_out(const Enclosure& a, int digits);

std::string to_string(const Enclosure& a, int significant_digits = 10);

enum class Separation { less, greater, inconclusive };

/// Proven order of the values enclosed by a and b; never claims an order the
/// intervals do not separate.
Separation separate(const Enclosure& a, const Enclosure& b);

const char* to_string(Separation s);

// ---- rigorous kernels -----------------------------------------------------
//
// `digits` counts significant decimal digits: enclosures tighten at least as
// fast as 10^-digits relative to the magnitude of the result, and widths are
// monotone non-increasing in `digits`.

/// pi by a two-arctangent formula with alternating-series truncation bounds.
Enclosure pi_enclosure(int digits);

/// Square root via scaled integer square roots; exact when x is a perfect
/// square of the grid. Throws std::domain_error for negative input.
Enclosure sqrt_enclosure(const Rat& x, int digits);
Enclosure sqrt_enclosure(const Enclosure& x, int digits);

/// exp via argument halving, truncated Taylor series with an explicit
/// remainder bound, and interval squaring; every step rounds outward.
Enclosure exp_enclosure(const Rat& x, int digits);
Enclosure exp_enclosure(const Enclosure& x, int digits);

/// sinh x = (t - 1/t)/2 evaluated on the exp enclosure (monotone in t).
Enclosure sinh_enclosure(const Rat& x, int digits);
Enclosure sinh_enclosure(const Enclosure& x, int digits);

// ---- precision escalation -------------------------------------------------

/// Significant-digit schedule for verdicts: start, then double until cap.
struct PrecisionBudget {
  int start = 64;
  int cap = 4096;
};

/// Evaluates two enclosure factories at escalating precision until the
/// intervals separate or the budget is exhausted. Returns the verdict and the
/// precision at which it was reached.
template <typename MakeA, typename MakeB>
std::pair<Separation, int> separate_with_budget(MakeA make_a, MakeB make_b,
                                                const PrecisionBudget& budget = {}) {
  int digits = budget.start;
  while (true) {
    Separation s = separate(make_a(digits), make_b(digits));
    if (s != Separation::inconclusive || digits >= budget.cap) return {s, digits};
    digits = digits * 2 > budget.cap ? budget.cap : digits * 2;
  }
}

}  // namespace fatpoints
