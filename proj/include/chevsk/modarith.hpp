#pragma once

// Exact arithmetic in Z/p^N Z.
//
// Residues are stored as canonical 64-bit representatives; products go
// through unsigned __int128, so the modulus is limited to p^N < 2^62.
// Anything that needs genuinely unbounded intermediates (determinants of
// lifted matrices, reduction of big integers) goes through GMP.

#include <cstdint>
#include <gmpxx.h>

#include "chevsk/error.hpp"

namespace chevsk {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxModulus = u64{1} << 62;

bool is_prime(u64 n);

struct RingParams {
  u64 p = 3;
  int N = 1;
  u64 modulus = 3;

  // Validates p (odd prime) and N (>= 1, p^N < 2^62).
  static RingParams make(u64 p, int N);

  // Same prime, precision n. Throws BadPrecision for n < 1.
  RingParams with_precision(int n) const;

  // p^e for 0 <= e <= N.
  u64 power(int e) const;

  bool operator==(const RingParams&) const = default;
};

inline u64 mod_add(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 mod_sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
inline u64 mod_neg(u64 a, u64 m) { return a == 0 ? 0 : m - a; }
inline u64 mod_mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 mod_pow(u64 base, u64 e, u64 m);

// Canonical representative of x in [0, m).
u64 mod_reduce(i64 x, u64 m);
u64 mod_reduce(const mpz_class& x, u64 m);

// Inverse of a unit modulo p^N. Throws NotAUnit when p | a.
u64 mod_inverse(u64 a, const RingParams& params);

// Largest m <= N with p^m | v; N for v == 0.
int valuation(u64 v, const RingParams& params);

// v_p(k!) by Legendre's formula.
i64 factorial_valuation(i64 k, u64 p);

// v_p(k) for k >= 1.
int int_valuation(u64 k, u64 p);

class Residue {
 public:
  Residue(u64 canonical_value, const RingParams& params);

  static Residue reduce(i64 x, const RingParams& params);
  static Residue reduce(const mpz_class& x, const RingParams& params);
  static Residue zero(const RingParams& params) { return {0, params}; }
  static Residue one(const RingParams& params) { return {1 % params.modulus, params}; }

  u64 value() const { return value_; }
  const RingParams& params() const { return params_; }

  bool is_unit() const { return value_ % params_.p != 0; }
  int valuation() const { return chevsk::valuation(value_, params_); }
  Residue inverse() const { return {mod_inverse(value_, params_), params_}; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const { return {mod_neg(value_, params_.modulus), params_}; }

  bool operator==(const Residue& o) const { return value_ == o.value_ && params_ == o.params_; }

 private:
  void check_compatible(const Residue& o) const;

  u64 value_;
  RingParams params_;
};

}  // namespace chevsk
