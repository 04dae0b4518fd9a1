#pragma once

// Worst-case per-instance communication cost of symmetric Boolean functions
// in a broadcast network. The codebook-size table A holds exact integers:
// A = 1 at constants, A = A0 + A1 over the two residuals otherwise, and the
// achievable rate is log2 A bits per instance. Thresholds and deltas have
// matching closed forms; intervals carry bracketing bounds.

#include <string>
#include <utility>
#include <vector>

#include "boolcomm/bignum.hpp"
#include "boolcomm/symfunc.hpp"

namespace boolcomm {

// A[k][j] for depth k in {0,...,n} (k nodes already resolved) and ones-count
// j in {0,...,k}. All residuals of a symmetric root at equal (k, j) coincide,
// so the state space is O(n^2).
class CodebookSizeTable {
 public:
  explicit CodebookSizeTable(const SymmetricFunction& f);

  int n() const { return n_; }
  const BigInt& at(int depth, int ones) const;
  bool constant_at(int depth, int ones) const;
  // Value of the residual when constant_at(depth, ones).
  int constant_value_at(int depth, int ones) const;
  const BigInt& size() const { return at(0, 0); }

 private:
  int index(int depth, int ones) const;
  int n_;
  std::vector<BigInt> a_;
  std::vector<signed char> value_;  // 0, 1, or -1 for nonconstant
};

BigInt codebook_size(const SymmetricFunction& f);

double threshold_complexity(int n, int theta);  // log2 C(n+1, theta), 0 <= theta <= n+1
double delta_complexity(int n, int theta);      // log2[C(n+1,theta) + C(n,theta+1)], 0 <= theta <= n

struct IntervalBounds {
  double lower;
  double upper;
};

// Bracketing bounds for interval functions, 0 <= a <= b <= n. Intervals
// touching an end of {0,...,n} are thresholds up to relabeling and get the
// exact value on both sides.
IntervalBounds interval_bounds(int n, int a, int b);

// log2 of the summed dominant codebook terms for a disjoint union of
// intervals; asymptotically tight, not a proven finite-n bound.
double union_asymptotic(int n, const std::vector<std::pair<int, int>>& intervals);

struct IntervalDiagnostics {
  double gap;             // upper - lower, always <= log2(b - a + 2)
  double residual_ratio;  // secondary term over dominant term; -> 0 as n grows
};

IntervalDiagnostics diagnostics(int n, int a, int b);

struct RateResult {
  double lower_bound = 0.0;
  double achievable = 0.0;
  double upper_bound = 0.0;
  bool exact = false;
};

// Classifies f (constant / threshold-like / delta / interval / other) and
// fills the tightest bounds available for that class. `achievable` is always
// log2 codebook_size(f).
RateResult rate_result(const SymmetricFunction& f);

std::string rate_csv_header();
std::string rate_csv_row(const std::string& kind, int n, int theta_or_a, int b,
                         const RateResult& r);

// Fixed 12-significant-digit rendering used by every emitter.
std::string format_bits(double value);

}  // namespace boolcomm
