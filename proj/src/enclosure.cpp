#include "fatpoints/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

Enclosure::Enclosure(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Enclosure: lower > upper");
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& o) {
  Rat lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(lo);
  return *this;
}

Enclosure& Enclosure::operator*=(const Enclosure& o) {
  Rat c1 = lo_ * o.lo_, c2 = lo_ * o.hi_, c3 = hi_ * o.lo_, c4 = hi_ * o.hi_;
  lo_ = std::min(std::min(c1, c2), std::min(c3, c4));
  hi_ = std::max(std::max(c1, c2), std::max(c3, c4));
  return *this;
}

Enclosure& Enclosure::operator/=(const Enclosure& o) { return *this *= recip(o); }

Enclosure operator+(const Enclosure& a, const Rat& s) {
  return Enclosure(a.lower() + s, a.upper() + s);
}

Enclosure operator-(const Enclosure& a, const Rat& s) {
  return Enclosure(a.lower() - s, a.upper() - s);
}

Enclosure operator*(const Enclosure& a, const Rat& s) {
  if (s >= 0) return Enclosure(a.lower() * s, a.upper() * s);
  return Enclosure(a.upper() * s, a.lower() * s);
}

Enclosure operator*(const Rat& s, const Enclosure& a) { return a * s; }

Enclosure operator/(const Enclosure& a, const Rat& s) {
  if (s == 0) throw std::domain_error("Enclosure: division by zero scalar");
  return a * (Rat(1) / s);
}

Enclosure recip(const Enclosure& a) {
  if (a.lower() <= 0 && a.upper() >= 0)
    throw std::domain_error("recip: interval spans zero");
  return Enclosure(Rat(1) / a.upper(), Rat(1) / a.lower());
}

Enclosure sqr(const Enclosure& a) {
  if (a.lower() >= 0) return Enclosure(a.lower() * a.lower(), a.upper() * a.upper());
  if (a.upper() <= 0) return Enclosure(a.upper() * a.upper(), a.lower() * a.lower());
  return Enclosure(Rat(0), std::max(a.lower() * a.lower(), a.upper() * a.upper()));
}

Enclosure round_out(const Enclosure& a, int digits) {
  Int scale = pow10(digits);
  Rat lo(floor_rat(a.lower() * scale), scale);
  Rat hi(ceil_rat(a.upper() * scale), scale);
  return Enclosure(std::move(lo), std::move(hi));
}

std::string to_string(const Enclosure& a, int significant_digits) {
  if (a.lower() == a.upper()) return decimal_string(a.lower(), significant_digits);
  return "[" + decimal_string(a.lower(), significant_digits, RoundMode::down) + ", " +
         decimal_string(a.upper(), significant_digits, RoundMode::up) + "]";
}

Separation separate(const Enclosure& a, const Enclosure& b) {
  if (a.upper() < b.lower()) return Separation::less;
  if (a.lower() > b.upper()) return Separation::greater;
  return Separation::inconclusive;
}

const char* to_string(Separation s) {
  switch (s) {
    case Separation::less: return "proven-less";
    case Separation::greater: return "proven-greater";
    default: return "inconclusive";
  }
}

namespace {

struct ScaledInterval {
  Int lo;
  Int hi;
};

// arctan(1/k)*scale for integer k >= 2, bracketed by directed rounding of the
// alternating series. The truncation remainder has the sign of the first
// omitted term and is no larger than it.
ScaledInterval arctan_recip_scaled(long k, const Int& scale) {
  Int k2 = Int(k) * k;
  Int p = k;  // k^(2j+1)
  ScaledInterval acc{0, 0};
  bool positive = true;
  for (long j = 0;; ++j, positive = !positive) {
    Int d = (2 * j + 1) * p;
    Int term_lo = scale / d;
    Int term_hi = term_lo + (scale % d == 0 ? 0 : 1);
    if (term_hi <= 1) {  // remainder bound: widen toward the omitted term
      if (positive)
        acc.hi += term_hi;
      else
        acc.lo -= term_hi;
      return acc;
    }
    if (positive) {
      acc.lo += term_lo;
      acc.hi += term_hi;
    } else {
      acc.lo -= term_hi;
      acc.hi -= term_lo;
    }
    p *= k2;
  }
}

// e^y * scale for rational y in [0, 1/2], by directed Taylor summation.
// Terms are bracketed through the recurrence t_j = t_{j-1} * y / j; the tail
// after stopping is at most twice the first omitted term since y <= 1/2.
ScaledInterval exp_reduced_scaled(const Rat& y, const Int& scale) {
  const Int p = num(y), q = den(y);
  Int term_lo = scale, term_hi = scale;
  ScaledInterval acc{0, 0};
  for (long j = 1;; ++j) {
    acc.lo += term_lo;
    acc.hi += term_hi;
    Int d = q * j;
    term_lo = floor_div(term_lo * p, d);
    term_hi = ceil_div(term_hi * p, d);
    if (term_hi <= 1) {
      acc.hi += 2 * term_hi;
      return acc;
    }
  }
}

}  // namespace

Enclosure pi_enclosure(int digits) {
  if (digits < 1) throw std::invalid_argument("pi_enclosure: digits < 1");
  long w = digits + 6;
  Int scale = pow10(w);
  // pi = 16 arctan(1/5) - 4 arctan(1/239)
  ScaledInterval a5 = arctan_recip_scaled(5, scale);
  ScaledInterval a239 = arctan_recip_scaled(239, scale);
  Int lo = 16 * a5.lo - 4 * a239.hi;
  Int hi = 16 * a5.hi - 4 * a239.lo;
  return Enclosure(Rat(lo, scale), Rat(hi, scale));
}

Enclosure sqrt_enclosure(const Rat& x, int digits) {
  if (digits < 1) throw std::invalid_argument("sqrt_enclosure: digits < 1");
  if (x < 0) throw std::domain_error("sqrt_enclosure: negative argument");
  if (x == 0) return Enclosure(Rat(0));
  long g = digits + 2;
  Int scale = pow10(g);
  Int scaled2 = scale * scale;
  Int n = floor_rat(x * scaled2);
  Int s = isqrt_floor(n);
  if (Rat(s * s, scaled2) == x) return Enclosure(Rat(s, scale));
  return Enclosure(Rat(s, scale), Rat(s + 1, scale));
}

Enclosure sqrt_enclosure(const Enclosure& x, int digits) {
  return Enclosure(sqrt_enclosure(x.lower(), digits).lower(),
                   sqrt_enclosure(x.upper(), digits).upper());
}

Enclosure exp_enclosure(const Rat& x, int digits) {
  if (digits < 1) throw std::invalid_argument("exp_enclosure: digits < 1");
  if (x == 0) return Enclosure(Rat(1));
  if (x < 0) {
    // exact reciprocal keeps the relative width of the positive-branch result
    return recip(exp_enclosure(Rat(-x), digits + 2));
  }
  int halvings = 0;
  Rat y = x;
  const Rat half(1, 2);
  while (y > half) {
    y /= 2;
    ++halvings;
  }
  long w = digits + 2 * halvings + 10;
  Int scale = pow10(w);
  ScaledInterval e = exp_reduced_scaled(y, scale);
  for (int i = 0; i < halvings; ++i) {
    e.lo = floor_div(e.lo * e.lo, scale);
    e.hi = ceil_div(e.hi * e.hi, scale);
  }
  return round_out(Enclosure(Rat(e.lo, scale), Rat(e.hi, scale)), digits + 2);
}

Enclosure exp_enclosure(const Enclosure& x, int digits) {
  return Enclosure(exp_enclosure(x.lower(), digits).lower(),
                   exp_enclosure(x.upper(), digits).upper());
}

namespace {

// (t - 1/t)/2 is increasing in t > 0, so endpoint images bracket sinh.
Rat sinh_from_exp(const Rat& t) { return (t - Rat(1) / t) / 2; }

}  // namespace

Enclosure sinh_enclosure(const Rat& x, int digits) {
  if (x == 0) return Enclosure(Rat(0));
  Enclosure e = exp_enclosure(x, digits + 4);
  return Enclosure(sinh_from_exp(e.lower()), sinh_from_exp(e.upper()));
}

Enclosure sinh_enclosure(const Enclosure& x, int digits) {
  return Enclosure(sinh_enclosure(x.lower(), digits).lower(),
                   sinh_enclosure(x.upper(), digits).upper());
}

}  // namespace fatpoints
