#include "chevsk/modarith.hpp"

#include <string>

namespace chevsk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::CoveringUnavailable: return "CoveringUnavailable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadPrecision: return "BadPrecision";
    case ErrorCode::LevelTooLow: return "LevelTooLow";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroLetter: return "ZeroLetter";
    case ErrorCode::CertificateMismatch: return "CertificateMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) { return 10 + static_cast<int>(code); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingParams RingParams::make(u64 p, int N) {
  if (p == 2) throw Error(ErrorCode::UnsupportedPrime, "p = 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::BadParams, "p = " + std::to_string(p) + " is not prime");
  if (N < 1) throw Error(ErrorCode::BadPrecision, "N must be >= 1");
  u64 m = 1;
  for (int i = 0; i < N; ++i) {
    if (m > kMaxModulus / p)
      throw Error(ErrorCode::TooLarge, "p^N exceeds 2^62 (p=" + std::to_string(p) +
                                           ", N=" + std::to_string(N) + ")");
    m *= p;
  }
  return RingParams{p, N, m};
}

RingParams RingParams::with_precision(int n) const {
  if (n < 1) throw Error(ErrorCode::BadPrecision, "precision must be >= 1");
  return make(p, n);
}

u64 RingParams::power(int e) const {
  if (e < 0 || e > N) throw Error(ErrorCode::BadPrecision, "exponent outside [0, N]");
  u64 r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

u64 mod_pow(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mod_mul(r, base, m);
    base = mod_mul(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 mod_reduce(i64 x, u64 m) {
  if (x >= 0) return static_cast<u64>(x) % m;
  // -(x+1) avoids overflow on INT64_MIN
  u64 neg = (static_cast<u64>(-(x + 1)) % m + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

u64 mod_reduce(const mpz_class& x, u64 m) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

u64 mod_inverse(u64 a, const RingParams& params) {
  const u64 m = params.modulus;
  a %= m;
  if (a % params.p == 0) throw Error(ErrorCode::NotAUnit, std::to_string(a) + " is divisible by p");
  // extended Euclid on signed 128-bit to stay exact
  __int128 r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += m;
  return static_cast<u64>(t0);
}

int valuation(u64 v, const RingParams& params) {
  v %= params.modulus;
  if (v == 0) return params.N;
  int k = 0;
  while (v % params.p == 0) {
    v /= params.p;
    ++k;
  }
  return k;
}

i64 factorial_valuation(i64 k, u64 p) {
  if (k < 0) throw Error(ErrorCode::BadParams, "factorial_valuation needs k >= 0");
  i64 v = 0;
  for (u64 q = p; q <= static_cast<u64>(k); q *= p) {
    v += k / static_cast<i64>(q);
    if (q > static_cast<u64>(k) / p) break;
  }
  return v;
}

int int_valuation(u64 k, u64 p) {
  int v = 0;
  while (k != 0 && k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

Residue::Residue(u64 canonical_value, const RingParams& params)
    : value_(canonical_value % params.modulus), params_(params) {}

Residue Residue::reduce(i64 x, const RingParams& params) { return {mod_reduce(x, params.modulus), params}; }

Residue Residue::reduce(const mpz_class& x, const RingParams& params) {
  return {mod_reduce(x, params.modulus), params};
}

void Residue::check_compatible(const Residue& o) const {
  if (!(params_ == o.params_)) throw Error(ErrorCode::DimensionMismatch, "residues over different rings");
}

Residue Residue::operator+(const Residue& o) const {
  check_compatible(o);
  return {mod_add(value_, o.value_, params_.modulus), params_};
}

Residue Residue::operator-(const Residue& o) const {
  check_compatible(o);
  return {mod_sub(value_, o.value_, params_.modulus), params_};
}

Residue Residue::operator*(const Residue& o) const {
  check_compatible(o);
  return {mod_mul(value_, o.value_, params_.modulus), params_};
}

}  // namespace chevsk
