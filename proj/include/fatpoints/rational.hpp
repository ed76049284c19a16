#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fatpoints {

// Exact arbitrary-precision arithmetic. Rationals are always stored reduced
// with positive denominator; Boost maintains that invariant for us.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

/// Floor division a/b for b != 0 (rounds toward negative infinity).
Int floor_div(const Int& a, const Int& b);

/// Ceiling division a/b for b != 0 (rounds toward positive infinity).
Int ceil_div(const Int& a, const Int& b);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

/// Largest s with s*s <= x. Throws std::domain_error for x < 0.
Int isqrt_floor(const Int& x);

/// 10^k for k >= 0.
Int pow10(long k);

/// base^e with exact rational result; e may be negative if base != 0.
Rat rat_pow(const Rat& base, long e);

/// Number of decimal digits of |x| (digits10(0) == 1).
int digits10(const Int& x);

enum class RoundMode { nearest, down, up };

/// Renders x with the given number of significant decimal digits.
/// `down`/`up` round toward -inf/+inf so printed interval endpoints stay
/// outside the true value.
std::string decimal_string(const Rat& x, int significant_digits,
                           RoundMode mode = RoundMode::nearest);

/// Canonical exact form: "n" or "n/d" in lowest terms.
std::string rational_string(const Rat& x);

/// Parses "n" or "n/d" (optional leading '-'). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

/// Running sum of rationals that defers gcd reduction to the final value();
/// much faster than repeated Rat += for long sums.
class RatAccum {
 public:
  void add(const Rat& x);
  void add(const Int& num, const Int& den);
  Rat value() const;

 private:
  Int num_{0};
  Int den_{1};
};

/// Running product with the same deferred-reduction trick.
class RatProduct {
 public:
  void mul(const Rat& x);
  void mul(const Int& num, const Int& den);
  Rat value() const;

 private:
  Int num_{1};
  Int den_{1};
};

}  // namespace fatpoints
