#include "fatpoints/product_bound.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatpoints {

Rat product_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("product_lower_bound: need n >= 1");
  RatProduct prod;
  prod.mul(n, 1);
  for (int i = 2; i <= n; ++i) {
    Int d = Int(i) * i + n;
    prod.mul(d - i, d);
  }
  return prod.value();
}

IdentityChecks check_identities(int n) {
  if (n < 1) throw std::invalid_argument("check_identities: need n >= 1");
  IdentityChecks out;
  const Rat b = product_lower_bound(n);

  RatProduct reindex_lhs, reindex_rhs, square_rhs, shifted;
  reindex_lhs.mul(n, 1);
  square_rhs.mul(n, 1);
  shifted.mul(n, 1);
  for (int i = 1; i <= n - 1; ++i) {
    Int d = Int(i) * i + n;
    reindex_lhs.mul(d - i, d);        // note n + i^2 - i == d - i
    reindex_rhs.mul(d + i, d);
    square_rhs.mul(d * d - Int(i) * i, d * d);
    shifted.mul(d - i, d);
  }
  out.reindex = reindex_lhs.value() == reindex_rhs.value();
  out.square = b * b == square_rhs.value();
  out.shifted = b == shifted.value();
  return out;
}

EpsDelta eps_delta(int n) {
  if (n < 1) throw std::invalid_argument("eps_delta: need n >= 1");
  RatProduct minus, plus;
  for (int i = 1; i <= n - 1; ++i) {
    Int d = Int(i) * i + n;
    Int d2 = d * d, i2 = Int(i) * i;
    minus.mul(d2 - i2, d2);
    plus.mul(d2 + i2, d2);
  }
  EpsDelta out;
  out.eps = 1 - minus.value();
  out.delta = plus.value() - 1;
  out.positive = out.eps > 0;
  out.ordered = out.eps <= out.delta;
  out.strictly_ordered = out.eps < out.delta;
  const Rat b = product_lower_bound(n);
  out.square_lower_bound = b * b >= Rat(n) * (1 - out.delta);
  return out;
}

const char* to_string(CheckResult c) {
  switch (c) {
    case CheckResult::pass: return "pass";
    case CheckResult::fail: return "fail";
    default: return "undecided";
  }
}

bool ParsevalCheck::passed() const {
  return main == CheckResult::pass && tail_estimate != CheckResult::fail;
}

namespace {

CheckResult from_bool(bool b) { return b ? CheckResult::pass : CheckResult::fail; }

// Proven "value of a <= value of b" / proven violation / undecided.
CheckResult check_le(const Enclosure& a, const Enclosure& b) {
  if (a.upper() <= b.lower()) return CheckResult::pass;
  if (a.lower() > b.upper()) return CheckResult::fail;
  return CheckResult::undecided;
}

Enclosure parseval_closed_form_enclosure(int n, int digits) {
  Enclosure pi = pi_enclosure(digits);
  Enclosure root = sqrt_enclosure(Rat(n), digits);
  Enclosure x = root * pi;
  Enclosure sh1 = sinh_enclosure(x, digits);
  Enclosure sh2 = sinh_enclosure(x * Rat(2), digits);
  Enclosure factor = sqr(pi / (sh1 * Rat(2))) * recip(pi);
  Enclosure integral = sh2 / (root * Rat(2)) - pi;
  return factor * integral;
}

}  // namespace

ParsevalCheck parseval_check(int n, long terms, const Rat& tolerance, int digits) {
  if (n < 1) throw std::invalid_argument("parseval_check: need n >= 1");
  if (terms < n) throw std::invalid_argument("parseval_check: need terms >= n");
  if (tolerance < 0) throw std::invalid_argument("parseval_check: negative tolerance");

  ParsevalCheck out;
  out.n = n;
  out.terms = terms;
  out.tolerance = tolerance;
  out.tail_allowance = Rat(1, terms);

  // directed fixed-point accumulation of (i/(i^2+n))^2, full sum and the
  // partial sum from i = n used by the tail estimate
  const Int scale = pow10(digits);
  Int sum_lo = 0, sum_hi = 0, from_n_lo = 0, from_n_hi = 0;
  for (long i = 1; i <= terms; ++i) {
    Int i2 = Int(i) * i;
    Int d = (i2 + n) * (i2 + n);
    Int lo = (i2 * scale) / d;
    Int hi = lo + ((i2 * scale) % d == 0 ? 0 : 1);
    sum_lo += lo;
    sum_hi += hi;
    if (i >= n) {
      from_n_lo += lo;
      from_n_hi += hi;
    }
  }
  out.truncated_sum = Enclosure(Rat(sum_lo, scale), Rat(sum_hi, scale));
  out.closed_form = parseval_closed_form_enclosure(n, digits);
  out.difference = out.closed_form - out.truncated_sum;

  const Rat allowed = tolerance + out.tail_allowance;
  if (out.difference.upper() <= allowed && out.difference.lower() >= -allowed)
    out.main = CheckResult::pass;
  else if (out.difference.lower() > allowed || out.difference.upper() < -allowed)
    out.main = CheckResult::fail;

  // sum_{i>=n} = partial + rest with rest in [1/(terms+2), 1/terms]: the
  // summand is at least 1/(i+1)^2 once i >= n, which integrates to the lower
  // bound, and at most 1/i^2, which integrates to the upper one.
  Enclosure tail(Rat(from_n_lo, scale) + Rat(1, terms + 2),
                 Rat(from_n_hi, scale) + Rat(1, terms));
  const Rat claim(1, n + 1);
  if (tail.lower() >= claim)
    out.tail_estimate = CheckResult::pass;
  else if (tail.upper() < claim)
    out.tail_estimate = CheckResult::fail;
  return out;
}

bool ProofChain::all_pass() const {
  for (CheckResult c : {reindex_identity, square_identity, eps_delta_order,
                        parseval_closed_form, tail_lower_bound, sinh_ratio_bound,
                        exp_growth_bound, sum_upper_bound, final_square_bound})
    if (c != CheckResult::pass) return false;
  return true;
}

bool ProofChain::any_fail() const {
  for (CheckResult c : {reindex_identity, square_identity, eps_delta_order,
                        parseval_closed_form, tail_lower_bound, sinh_ratio_bound,
                        exp_growth_bound, sum_upper_bound, final_square_bound})
    if (c == CheckResult::fail) return true;
  return false;
}

bool ProofChain::any_undecided() const {
  for (CheckResult c : {reindex_identity, square_identity, eps_delta_order,
                        parseval_closed_form, tail_lower_bound, sinh_ratio_bound,
                        exp_growth_bound, sum_upper_bound, final_square_bound})
    if (c == CheckResult::undecided) return true;
  return false;
}

ProductBoundCertificate verify_product_bound(int n, const PrecisionBudget& budget,
                                             long parseval_terms) {
  if (n < 1) throw std::invalid_argument("verify_product_bound: need n >= 1");
  ProductBoundCertificate cert;
  cert.n = n;
  cert.exploratory = n < 9;
  cert.b = product_lower_bound(n);
  cert.parseval_terms = parseval_terms > 0 ? parseval_terms
                                           : std::max<long>(1000, 2L * n);
  if (cert.parseval_terms < n) cert.parseval_terms = n;

  // exact entries
  IdentityChecks ids = check_identities(n);
  cert.chain.reindex_identity = from_bool(ids.reindex && ids.shifted);
  cert.chain.square_identity = from_bool(ids.square);
  EpsDelta ed = eps_delta(n);
  cert.chain.eps_delta_order =
      from_bool((n < 2 || ed.positive) && ed.ordered && ed.square_lower_bound);

  // exact partial sum for the sum upper bound
  RatAccum sum_acc;
  for (int i = 1; i <= n - 1; ++i) {
    Int d = Int(i) * i + n;
    sum_acc.add(Int(i) * i, d * d);
  }
  const Rat sum_exact = sum_acc.value();
  const Rat b_squared = cert.b * cert.b;
  const Enclosure b_point{cert.b};

  int digits = budget.start;
  while (true) {
    Enclosure pi = pi_enclosure(digits);
    Enclosure root = sqrt_enclosure(Rat(n), digits);
    cert.rhs = root - pi / Rat(8);
    cert.verdict = order_of(separate(b_point, cert.rhs));

    Enclosure x = root * pi;   // sqrt(n) pi
    Enclosure t = exp_enclosure(x, digits);
    Enclosure sh1 = sinh_enclosure(x, digits);
    Enclosure sh2 = sinh_enclosure(x * Rat(2), digits);
    Enclosure ratio = sh2 / (sqr(sh1) * Rat(2));
    Enclosure ratio_cap = recip(sqr(t)) * Rat(3) + Rat(1);
    cert.chain.sinh_ratio_bound = check_le(ratio, ratio_cap);

    cert.chain.exp_growth_bound = check_le(Enclosure(Rat(3 * n)), t);

    Enclosure sum_cap = pi / (root * Rat(4)) - Rat(1, n + 2);
    cert.chain.sum_upper_bound = check_le(Enclosure(sum_exact), sum_cap);

    Enclosure final_floor = Enclosure(Rat(n)) - pi * root / Rat(4) + Rat(9, 11) - Rat(2, 5);
    cert.chain.final_square_bound = check_le(final_floor, Enclosure(b_squared));

    ParsevalCheck pc = parseval_check(n, cert.parseval_terms, Rat(1, 1000000), digits);
    cert.chain.parseval_closed_form = pc.main;
    cert.chain.tail_lower_bound = pc.tail_estimate;

    cert.digits_used = digits;
    bool undecided = cert.verdict == Order::inconclusive || cert.chain.any_undecided();
    if (!undecided || digits >= budget.cap) break;
    digits = digits * 2 > budget.cap ? budget.cap : digits * 2;
  }
  return cert;
}

}  // namespace fatpoints
