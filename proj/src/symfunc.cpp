#include "boolcomm/symfunc.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace boolcomm {

namespace {
std::atomic<int> g_max_nodes{1024};
}

int max_nodes() { return g_max_nodes.load(); }

void set_max_nodes(int cap) {
  if (cap < 1) throw std::domain_error("max_nodes cap must be positive");
  g_max_nodes.store(cap);
}

SymmetricFunction::SymmetricFunction(int n, std::vector<bool> levels)
    : n_(n), levels_(std::move(levels)) {
  if (n_ < 1) throw std::domain_error("SymmetricFunction: n must be >= 1");
  if (n_ > max_nodes())
    throw std::domain_error("SymmetricFunction: n exceeds cap of " + std::to_string(max_nodes()));
  if (levels_.size() != static_cast<std::size_t>(n_) + 1)
    throw std::domain_error("SymmetricFunction: level set must cover {0,...,n}");
}

int SymmetricFunction::evaluate(int count) const {
  if (count < 0 || count > n_)
    throw std::domain_error("evaluate: count " + std::to_string(count) + " outside [0, " +
                            std::to_string(n_) + "]");
  return levels_[count] ? 1 : 0;
}

SymmetricFunction SymmetricFunction::residual(int bit) const {
  if (n_ < 2) throw std::domain_error("residual: function must have n >= 2");
  if (bit != 0 && bit != 1) throw std::domain_error("residual: bit must be 0 or 1");
  std::vector<bool> sub(bit == 0 ? levels_.begin() : levels_.begin() + 1,
                        bit == 0 ? levels_.end() - 1 : levels_.end());
  return SymmetricFunction(n_ - 1, std::move(sub));
}

SymmetricFunction::Constness SymmetricFunction::constant_value() const {
  bool any = false, all = true;
  for (bool v : levels_) {
    any = any || v;
    all = all && v;
  }
  if (!any) return Constness::zero;
  if (all) return Constness::one;
  return Constness::nonconstant;
}

SymmetricFunction SymmetricFunction::reflected() const {
  std::vector<bool> rev(levels_.rbegin(), levels_.rend());
  return SymmetricFunction(n_, std::move(rev));
}

SymmetricFunction SymmetricFunction::complemented() const {
  std::vector<bool> c = levels_;
  c.flip();
  return SymmetricFunction(n_, std::move(c));
}

SymmetricFunction make_threshold(int n, int theta) {
  if (theta < 0 || theta > n + 1)
    throw std::domain_error("make_threshold: theta must lie in [0, n+1]");
  std::vector<bool> levels(n + 1, false);
  for (int k = theta; k <= n; ++k) levels[k] = true;
  return SymmetricFunction(n, std::move(levels));
}

SymmetricFunction make_delta(int n, int theta) {
  if (theta < 0 || theta > n) throw std::domain_error("make_delta: theta must lie in [0, n]");
  std::vector<bool> levels(n + 1, false);
  levels[theta] = true;
  return SymmetricFunction(n, std::move(levels));
}

SymmetricFunction make_interval(int n, int a, int b) {
  if (a < 0 || b > n || a > b)
    throw std::domain_error("make_interval: need 0 <= a <= b <= n");
  std::vector<bool> levels(n + 1, false);
  for (int k = a; k <= b; ++k) levels[k] = true;
  return SymmetricFunction(n, std::move(levels));
}

SymmetricFunction make_union(int n, const std::vector<std::pair<int, int>>& intervals) {
  std::vector<bool> levels(n + 1, false);
  for (const auto& [a, b] : intervals) {
    if (a < 0 || b > n || a > b)
      throw std::domain_error("make_union: interval [" + std::to_string(a) + "," +
                              std::to_string(b) + "] not within 0 <= a <= b <= n");
    for (int k = a; k <= b; ++k) {
      if (levels[k])
        throw std::domain_error("make_union: intervals overlap at level " + std::to_string(k));
      levels[k] = true;
    }
  }
  return SymmetricFunction(n, std::move(levels));
}

SymmetricFunction make_levels(int n, const std::vector<int>& set) {
  std::vector<bool> levels(n + 1, false);
  for (int k : set) {
    if (k < 0 || k > n)
      throw std::domain_error("make_levels: level " + std::to_string(k) + " outside [0, n]");
    levels[k] = true;
  }
  return SymmetricFunction(n, std::move(levels));
}

}  // namespace boolcomm
