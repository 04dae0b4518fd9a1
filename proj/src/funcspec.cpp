#include "boolcomm/funcspec.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "boolcomm/errors.hpp"

namespace boolcomm {

namespace {

// Cursor over the spec string; all errors carry the current offset.
class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }

  void expect(char c) {
    if (done() || s_[pos_] != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool accept(char c) {
    if (!done() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident() {
    std::size_t start = pos_;
    while (!done() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected a name", pos_);
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error("expected an integer", pos_);
    long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (s_[i] - '0');
      if (v > 1000000) throw parse_error("integer too large", start);
    }
    return static_cast<int>(v);
  }

  void key(const char* name) {
    std::size_t start = pos_;
    std::string id = ident();
    if (id != name)
      throw parse_error(std::string("expected '") + name + "', got '" + id + "'", start);
    expect('=');
  }

  void end() {
    if (!done()) throw parse_error("unexpected trailing input", pos_);
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymmetricFunction parse_function_spec(const std::string& spec) {
  Cursor c(spec);
  std::string kind = c.ident();
  c.expect(':');
  c.key("n");
  int n = c.integer();

  try {
    if (kind == "threshold" || kind == "delta") {
      c.expect(',');
      c.key("theta");
      int theta = c.integer();
      c.end();
      return kind == "threshold" ? make_threshold(n, theta) : make_delta(n, theta);
    }
    if (kind == "interval") {
      c.expect(',');
      c.key("a");
      int a = c.integer();
      c.expect(',');
      c.key("b");
      int b = c.integer();
      c.end();
      return make_interval(n, a, b);
    }
    if (kind == "union") {
      c.expect(',');
      c.key("intervals");
      std::vector<std::pair<int, int>> intervals;
      do {
        int a = c.integer();
        c.expect('-');
        int b = c.integer();
        intervals.emplace_back(a, b);
      } while (c.accept(';'));
      c.end();
      return make_union(n, intervals);
    }
    if (kind == "levels") {
      c.expect(',');
      c.key("set");
      std::vector<int> set;
      do {
        set.push_back(c.integer());
      } while (c.accept(','));
      c.end();
      return make_levels(n, set);
    }
  } catch (const std::domain_error& e) {
    throw parse_error(e.what(), 0);
  }
  throw parse_error("unknown function kind '" + kind + "'", 0);
}

std::string to_spec_string(const SymmetricFunction& f) {
  const auto& levels = f.levels();
  int n = f.n();

  // Maximal runs of set levels.
  std::vector<std::pair<int, int>> runs;
  for (int k = 0; k <= n; ++k) {
    if (!levels[k]) continue;
    int b = k;
    while (b + 1 <= n && levels[b + 1]) ++b;
    runs.emplace_back(k, b);
    k = b;
  }

  std::string base = "n=" + std::to_string(n);
  if (runs.empty()) return "threshold:" + base + ",theta=" + std::to_string(n + 1);
  if (runs.size() == 1) {
    auto [a, b] = runs.front();
    if (b == n) return "threshold:" + base + ",theta=" + std::to_string(a);
    if (a == b) return "delta:" + base + ",theta=" + std::to_string(a);
    return "interval:" + base + ",a=" + std::to_string(a) + ",b=" + std::to_string(b);
  }
  std::string out = "union:" + base + ",intervals=";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(runs[i].first) + "-" + std::to_string(runs[i].second);
  }
  return out;
}

}  // namespace boolcomm
