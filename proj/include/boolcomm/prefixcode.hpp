#pragma once

// Prefix-free codes over fixed-length Boolean blocks whose codeword length
// depends only on the block's weight. Length targets come from exact integer
// comparisons (never floating-point log2), Kraft feasibility is checked in
// exact arithmetic, and codebooks are held implicitly: a codeword is the
// canonical numbering of (weight class, combinatorial rank), so a code over
// 2^N blocks costs O(N) state.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boolcomm/bignum.hpp"

namespace boolcomm {

using BitBlock = std::vector<std::uint8_t>;  // one 0/1 entry per instance

// Bits packed MSB-first; serialized as hex plus an explicit bit count.
class BitString {
 public:
  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }
  int bit(std::size_t i) const;
  void push_bit(int b);
  void append_u64(std::uint64_t value, int nbits);
  void append_big(const BigInt& value, int nbits);

  std::string to_hex() const;
  static BitString from_hex(const std::string& hex, std::size_t nbits);

  bool operator==(const BitString& other) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

// Least l >= 0 with 2^l * A0^(N-w1) * A1^w1 >= A^N, by exact comparison.
// A = 1 needs no code and yields 0. Throws std::domain_error when
// A < A0 + A1 (such a profile could not satisfy Kraft).
int target_length(const BigInt& A, const BigInt& A0, const BigInt& A1, int block_len, int w1);

struct LengthProfile {
  int block_len = 0;
  std::map<int, int> per_weight_length;  // weight class -> codeword bits

  bool operator==(const LengthProfile& other) const = default;
};

// Profile with target_length at every weight 0..N for one DP node.
LengthProfile dp_profile(const BigInt& A, const BigInt& A0, const BigInt& A1, int block_len);

// Exact Kraft sum over the profile's weight classes.
BigRat kraft_sum(const LengthProfile& profile);
bool kraft_check(const LengthProfile& profile);

// Colexicographic rank of a block among same-weight blocks, and its inverse.
std::pair<int, BigInt> comb_rank(const BitBlock& block);
BitBlock comb_unrank(int block_len, int weight, const BigInt& rank);

// Canonical code over a Kraft-feasible profile: weight classes ordered by
// (length asc, weight asc), codewords numbered consecutively. Decodable from
// the profile alone; nothing per-codeword is stored.
class CanonicalCode {
 public:
  explicit CanonicalCode(LengthProfile profile);

  const LengthProfile& profile() const { return profile_; }
  int block_len() const { return profile_.block_len; }
  int length_for_weight(int weight) const;

  BitString encode(const BitBlock& block) const;
  // Decodes one codeword starting at bit `start`; returns the block and the
  // number of bits consumed. Throws invariant_error on a corrupt stream.
  std::pair<BitBlock, std::size_t> decode(const BitString& stream, std::size_t start = 0) const;

 private:
  struct ClassInfo {
    int weight;
    int length;
    BigInt base;   // first codeword value for this class
    BigInt count;  // C(N, weight)
  };

  template <typename Value>
  std::pair<BitBlock, std::size_t> decode_with(const BitString& stream, std::size_t start) const;

  LengthProfile profile_;
  std::vector<ClassInfo> classes_;  // canonical order
  std::vector<int> class_of_weight_;
  bool fits_u64_ = false;  // all values < 2^62: integer fast path
};

}  // namespace boolcomm
