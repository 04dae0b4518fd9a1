#pragma once

// Thin wrappers around GMP for the exact integer/rational arithmetic used
// throughout: binomial coefficients, codebook sizes, Kraft sums. Floating
// point appears only at the reporting boundary (log2_value).

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace boolcomm {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// log2 of a positive integer, full double precision regardless of magnitude.
inline double log2_value(const BigInt& x) {
  signed long int exp = 0;
  double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(d) + static_cast<double>(exp);
}

inline double ratio_as_double(const BigInt& num, const BigInt& den) {
  BigRat q(num, den);
  q.canonicalize();
  return q.get_d();
}

// Number of bits in x > 0, i.e. floor(log2 x) + 1.
inline std::size_t bit_length(const BigInt& x) {
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Smallest l >= 0 with 2^l >= num/den (num, den > 0), by exact comparison.
inline int ceil_log2_ratio(const BigInt& num, const BigInt& den) {
  if (num <= den) return 0;
  BigInt q = (num + den - 1) / den;  // ceil(num/den)
  return static_cast<int>(bit_length(q - 1));
}

}  // namespace boolcomm
