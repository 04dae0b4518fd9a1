#include "boolcomm/complexity.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "boolcomm/errors.hpp"

namespace boolcomm {

CodebookSizeTable::CodebookSizeTable(const SymmetricFunction& f) : n_(f.n()) {
  const auto& levels = f.levels();
  // prefix[i] = number of set levels below i.
  std::vector<int> prefix(n_ + 2, 0);
  for (int i = 0; i <= n_; ++i) prefix[i + 1] = prefix[i] + (levels[i] ? 1 : 0);

  a_.resize((n_ + 1) * (n_ + 2) / 2);
  value_.resize(a_.size());

  for (int depth = n_; depth >= 0; --depth) {
    for (int ones = 0; ones <= depth; ++ones) {
      // Residual at (depth, ones) spans counts [ones, ones + n - depth].
      int lo = ones, hi = ones + n_ - depth;
      int set = prefix[hi + 1] - prefix[lo];
      int idx = index(depth, ones);
      if (set == 0) {
        value_[idx] = 0;
        a_[idx] = 1;
      } else if (set == hi - lo + 1) {
        value_[idx] = 1;
        a_[idx] = 1;
      } else {
        value_[idx] = -1;
        a_[idx] = a_[index(depth + 1, ones)] + a_[index(depth + 1, ones + 1)];
      }
    }
  }
}

int CodebookSizeTable::index(int depth, int ones) const {
  if (depth < 0 || depth > n_ || ones < 0 || ones > depth)
    throw std::domain_error("CodebookSizeTable: state out of range");
  return depth * (depth + 1) / 2 + ones;
}

const BigInt& CodebookSizeTable::at(int depth, int ones) const { return a_[index(depth, ones)]; }

bool CodebookSizeTable::constant_at(int depth, int ones) const {
  return value_[index(depth, ones)] >= 0;
}

int CodebookSizeTable::constant_value_at(int depth, int ones) const {
  signed char v = value_[index(depth, ones)];
  if (v < 0) throw std::domain_error("constant_value_at: residual is nonconstant");
  return v;
}

BigInt codebook_size(const SymmetricFunction& f) { return CodebookSizeTable(f).size(); }

double threshold_complexity(int n, int theta) {
  if (theta < 0 || theta > n + 1)
    throw std::domain_error("threshold_complexity: theta must lie in [0, n+1]");
  return log2_value(binomial(n + 1, theta));
}

double delta_complexity(int n, int theta) {
  if (theta < 0 || theta > n)
    throw std::domain_error("delta_complexity: theta must lie in [0, n]");
  return log2_value(binomial(n + 1, theta) + binomial(n, theta + 1));
}

namespace {

IntervalBounds proper_interval_bounds(int n, int a, int b) {
  // Two bound families depending on which end of {0,...,n} is closer; at
  // a + b = n they coincide and both are computed as a consistency check.
  IntervalBounds low_side{0, 0}, high_side{0, 0};
  bool have_low = a + b <= n, have_high = a + b >= n;
  if (have_low) {
    BigInt dominant = binomial(n + 1, b + 1), res = binomial(n, a - 1);
    low_side.lower = log2_value(dominant + res);
    low_side.upper = log2_value(dominant + (b - a + 1) * res);
  }
  if (have_high) {
    BigInt dominant = binomial(n + 1, a), res = binomial(n, b + 1);
    high_side.lower = log2_value(dominant + res);
    high_side.upper = log2_value(dominant + (b - a + 1) * res);
  }
  if (have_low && have_high) {
    constexpr double tol = 1e-9;
    if (low_side.lower > high_side.upper + tol || high_side.lower > low_side.upper + tol)
      throw invariant_error("interval_bounds: the two a+b = n bound families disagree");
    return low_side.upper <= high_side.upper ? low_side : high_side;
  }
  return have_low ? low_side : high_side;
}

}  // namespace

IntervalBounds interval_bounds(int n, int a, int b) {
  if (n < 1 || a < 0 || a > b || b > n)
    throw std::domain_error("interval_bounds: need 0 <= a <= b <= n");
  if (a == 0 && b == n) return {0.0, 0.0};
  // [0,b] is a threshold after relabeling 0 <-> 1; [a,n] is one directly.
  if (a == 0) {
    double e = threshold_complexity(n, b + 1);
    return {e, e};
  }
  if (b == n) {
    double e = threshold_complexity(n, a);
    return {e, e};
  }
  return proper_interval_bounds(n, a, b);
}

double union_asymptotic(int n, const std::vector<std::pair<int, int>>& intervals) {
  make_union(n, intervals);  // validates disjointness and ranges
  BigInt sum = 0;
  for (const auto& [a, b] : intervals) {
    // a + b = n ties resolve to the b+1 branch; the two terms are equal there.
    if (a + b <= n)
      sum += binomial(n + 1, b + 1);
    else
      sum += binomial(n + 1, a);
  }
  return log2_value(sum);
}

IntervalDiagnostics diagnostics(int n, int a, int b) {
  if (n < 1 || a < 0 || a > b || b > n)
    throw std::domain_error("diagnostics: need 0 <= a <= b <= n");
  if (a == 0 || b == n) return {0.0, 0.0};  // threshold-reducible, bounds are exact
  IntervalBounds bounds = proper_interval_bounds(n, a, b);
  BigInt dominant, res;
  if (a + b <= n) {
    dominant = binomial(n + 1, b + 1);
    res = binomial(n, a - 1);
  } else {
    dominant = binomial(n + 1, a);
    res = binomial(n, b + 1);
  }
  return {bounds.upper - bounds.lower, ratio_as_double((b - a + 1) * res, dominant)};
}

RateResult rate_result(const SymmetricFunction& f) {
  const int n = f.n();
  if (f.is_constant()) return {0.0, 0.0, 0.0, true};

  const auto& levels = f.levels();
  int a = 0, b = n;
  while (!levels[a]) ++a;
  while (!levels[b]) --b;
  bool contiguous = true;
  for (int k = a; k <= b; ++k) contiguous = contiguous && levels[k];

  RateResult r;
  r.achievable = log2_value(codebook_size(f));
  if (contiguous && a == b) {
    double e = delta_complexity(n, a);
    return {e, e, e, true};
  }
  if (contiguous && (a == 0 || b == n)) {
    IntervalBounds ib = interval_bounds(n, a, b);
    return {ib.lower, ib.lower, ib.upper, true};
  }
  if (contiguous) {
    IntervalBounds ib = interval_bounds(n, a, b);
    return {ib.lower, r.achievable, ib.upper, false};
  }
  // No proven lower bound for general level sets; achievability is still
  // constructive, so log2 A upper-bounds the complexity.
  return {0.0, r.achievable, r.achievable, false};
}

std::string format_bits(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string rate_csv_header() {
  return "kind,n,theta_or_a,b,lower_bits,achievable_bits,upper_bits,exact";
}

std::string rate_csv_row(const std::string& kind, int n, int theta_or_a, int b,
                         const RateResult& r) {
  return kind + "," + std::to_string(n) + "," + std::to_string(theta_or_a) + "," +
         std::to_string(b) + "," + format_bits(r.lower_bound) + "," + format_bits(r.achievable) +
         "," + format_bits(r.upper_bound) + "," + (r.exact ? "true" : "false");
}

}  // namespace boolcomm
