#pragma once

// Symmetric Boolean functions of n Boolean variables, represented by their
// level set: the subset of {0,...,n} of 1-counts on which the function is 1.
// Thresholds, deltas, intervals and unions of intervals all share this one
// representation; the residual operation (condition on one node's bit) is a
// one-slot shift/truncation of the level set.

#include <utility>
#include <vector>

namespace boolcomm {

class SymmetricFunction {
 public:
  enum class Constness { zero, one, nonconstant };

  // levels.size() must be n+1; levels[k] == true means f = 1 when the
  // number of 1s among the arguments is k.
  SymmetricFunction(int n, std::vector<bool> levels);

  int n() const { return n_; }
  const std::vector<bool>& levels() const { return levels_; }

  // f evaluated at a 1-count; count must lie in [0, n].
  int evaluate(int count) const;

  // Function the remaining n-1 nodes must compute once one node's bit is
  // known. bit = 0 truncates the top level, bit = 1 shifts levels down.
  SymmetricFunction residual(int bit) const;

  Constness constant_value() const;
  bool is_constant() const { return constant_value() != Constness::nonconstant; }

  // Input relabeling 0 <-> 1 at every node: level k maps to n-k.
  SymmetricFunction reflected() const;
  // Output complement.
  SymmetricFunction complemented() const;

  bool operator==(const SymmetricFunction& other) const = default;

 private:
  int n_;
  std::vector<bool> levels_;
};

SymmetricFunction make_threshold(int n, int theta);                 // 1 iff count >= theta
SymmetricFunction make_delta(int n, int theta);                     // 1 iff count == theta
SymmetricFunction make_interval(int n, int a, int b);               // 1 iff a <= count <= b
SymmetricFunction make_union(int n, const std::vector<std::pair<int, int>>& intervals);
SymmetricFunction make_levels(int n, const std::vector<int>& levels);

// Cap on n accepted by constructors (DP tables are O(n^2)). Default 1024.
int max_nodes();
void set_max_nodes(int cap);

}  // namespace boolcomm
