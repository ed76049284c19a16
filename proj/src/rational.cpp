#include "fatpoints/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace fatpoints {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::overflow_error("floor_div: division by zero");
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  if (b == 0) throw std::overflow_error("ceil_div: division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Int floor_rat(const Rat& x) { return floor_div(num(x), den(x)); }

Int ceil_rat(const Rat& x) { return ceil_div(num(x), den(x)); }

Int isqrt_floor(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(x);
}

Int pow10(long k) {
  if (k < 0) throw std::invalid_argument("pow10: negative exponent");
  Int base = 10, out = 1;
  long e = k;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Rat rat_pow(const Rat& base, long e) {
  if (base == 0 && e < 0) throw std::overflow_error("rat_pow: 0 to negative power");
  Rat b = base, out = 1;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
  while (k > 0) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) out = Rat(1) / out;
  return out;
}

int digits10(const Int& x) {
  Int a = abs(x);
  if (a == 0) return 1;
  // msb gives a two-candidate window; settle by comparison.
  int approx = static_cast<int>(static_cast<double>(msb(a)) * 0.30102999566398119) + 1;
  while (a >= pow10(approx)) ++approx;
  while (approx > 1 && a < pow10(approx - 1)) --approx;
  return approx;
}

std::string decimal_string(const Rat& x, int significant_digits, RoundMode mode) {
  if (significant_digits < 1) throw std::invalid_argument("decimal_string: digits < 1");
  if (x == 0) return "0";
  bool negative = x < 0;
  Rat a = negative ? Rat(-x) : x;

  // exponent k with 10^(k-1) <= a < 10^k
  int k = digits10(num(a)) - digits10(den(a));
  while (a >= rat_pow(10, k)) ++k;
  while (a < rat_pow(10, k - 1)) --k;

  Rat scaled = a * rat_pow(10, significant_digits - k);
  Int digits;
  switch (mode) {
    case RoundMode::nearest: digits = floor_rat(scaled + Rat(1, 2)); break;
    case RoundMode::down: digits = negative ? ceil_rat(scaled) : floor_rat(scaled); break;
    case RoundMode::up: digits = negative ? floor_rat(scaled) : ceil_rat(scaled); break;
  }
  if (digits == pow10(significant_digits)) {  // rounding carried into a new digit
    digits /= 10;
    ++k;
  }

  std::string ds = digits.str();
  std::string out;
  if (k <= 0) {
    out = "0.";
    out.append(static_cast<std::size_t>(-k), '0');
    out += ds;
  } else if (k >= significant_digits) {
    out = ds;
    out.append(static_cast<std::size_t>(k - significant_digits), '0');
  } else {
    out = ds.substr(0, static_cast<std::size_t>(k)) + "." + ds.substr(static_cast<std::size_t>(k));
  }
  return negative ? "-" + out : out;
}

std::string rational_string(const Rat& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

Rat parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty integer");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw std::invalid_argument("parse_rational: sign without digits");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw std::invalid_argument("parse_rational: invalid character in '" + std::string(s) + "'");
    return Int(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
  return Rat(n, d);
}

void RatAccum::add(const Rat& x) { add(num(x), den(x)); }

void RatAccum::add(const Int& n, const Int& d) {
  num_ = num_ * d + n * den_;
  den_ *= d;
}

Rat RatAccum::value() const { return Rat(num_, den_); }

void RatProduct::mul(const Rat& x) { mul(num(x), den(x)); }

void RatProduct::mul(const Int& n, const Int& d) {
  num_ *= n;
  den_ *= d;
}

Rat RatProduct::value() const { return Rat(num_, den_); }

}  // namespace fatpoints
