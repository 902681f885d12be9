#include "chevsk/expolog.hpp"

#include <algorithm>

namespace chevsk {

namespace {

int floor_log(u64 k, u64 p) {
  int e = 0;
  while (k >= p) {
    k /= p;
    ++e;
  }
  return e;
}

void check_level_param(const RingParams& params, int m) {
  if (params.p == 2) throw Error(ErrorCode::UnsupportedPrime, "p = 2");
  if (m < 1 || m > params.N) throw Error(ErrorCode::BadPrecision, "m outside [1, N]");
}

}  // namespace

int exp_truncation_index(u64 p, int N, int m) {
  if (p < 3 || m < 1 || N < 1) throw Error(ErrorCode::BadParams, "exp truncation needs p >= 3, m, N >= 1");
  // m k - floor((k-1)/(p-1)) is a nondecreasing lower bound for m k - v_p(k!)
  i64 kb = 1;
  while (static_cast<i64>(m) * kb - (kb - 1) / static_cast<i64>(p - 1) < N) ++kb;
  i64 last_bad = 0;
  for (i64 k = 0; k < kb; ++k)
    if (static_cast<i64>(m) * k - factorial_valuation(k, p) < N) last_bad = k;
  return static_cast<int>(last_bad + 1);
}

int log_truncation_index(u64 p, int N, int m) {
  if (p < 3 || m < 1 || N < 1) throw Error(ErrorCode::BadParams, "log truncation needs p >= 3, m, N >= 1");
  // m (k-1) - floor(log_p k) is nondecreasing and bounds m (k-1) - v_p(k) below
  u64 kb = 1;
  while (static_cast<i64>(m) * static_cast<i64>(kb - 1) - floor_log(kb, p) < N) ++kb;
  u64 last_bad = 0;
  for (u64 k = 1; k < kb; ++k)
    if (static_cast<i64>(m) * static_cast<i64>(k - 1) - int_valuation(k, p) < N) last_bad = k;
  return static_cast<int>(last_bad + 1);
}

GroupElement exp_trunc(const LieElement& a, int m) {
  const RingParams& params = a.params();
  check_level_param(params, m);
  const int d = a.dim();
  const u64 mod = params.modulus;
  const int K = exp_truncation_index(params.p, params.N, m);

  ModMatrix sum = ModMatrix::identity(params, d);
  ModMatrix power = ModMatrix::identity(params, d);
  u64 unit_fact = 1 % mod;  // k! with all factors of p removed
  i64 vfact = 0;
  for (int k = 1; k < K; ++k) {
    power = power * a.mat();
    u64 q = static_cast<u64>(k);
    while (q % params.p == 0) {
      q /= params.p;
      ++vfact;
    }
    unit_fact = mod_mul(unit_fact, q % mod, mod);
    const i64 e = static_cast<i64>(m) * k - vfact;
    if (e >= params.N) continue;
    const u64 coeff = mod_mul(params.power(static_cast<int>(e)), mod_inverse(unit_fact, params), mod);
    sum += power.scaled(coeff);
  }
  return GroupElement::trusted(std::move(sum));
}

ModMatrix nlog_series(const GroupElement& g, int m) {
  const RingParams& params = g.params();
  check_level_param(params, m);
  if (level(g) < m) throw Error(ErrorCode::LevelTooLow, "level " + std::to_string(level(g)) + " < " + std::to_string(m));
  const int d = g.dim();
  const u64 mod = params.modulus;
  ModMatrix sum(params, d);
  if (m >= params.N) return sum;

  const ModMatrix B = (g.mat() - ModMatrix::identity(params, d)).divided_by_p_power(m);
  const int K = log_truncation_index(params.p, params.N, m);
  ModMatrix power = ModMatrix::identity(params, d);
  for (int k = 1; k < K; ++k) {
    power = power * B;
    const int v = int_valuation(static_cast<u64>(k), params.p);
    const i64 e = static_cast<i64>(m) * (k - 1) - v;
    if (e >= params.N) continue;
    u64 unit = static_cast<u64>(k);
    for (int t = 0; t < v; ++t) unit /= params.p;
    u64 coeff = mod_mul(params.power(static_cast<int>(e)), mod_inverse(unit % mod, params), mod);
    if (k % 2 == 0) coeff = mod_neg(coeff, mod);
    sum += power.scaled(coeff);
  }
  return sum;
}

LieElement nlog(const GroupElement& g, int m) {
  ModMatrix a = nlog_series(g, m);
  const int last = a.dim() - 1;
  a.set(last, last, mod_sub(a(last, last), a.trace(), a.modulus()));
  return LieElement(std::move(a));
}

WeigelReport verify_weigel(const RingParams& params, int dim, int m, u64 samples, Rng& rng) {
  WeigelReport rep;
  rep.m = m;
  const u64 trace_modulus = params.power(params.N - std::min(m, params.N));
  for (u64 s = 0; s < samples; ++s) {
    const GroupElement g = s % 2 == 0 ? random_in_gamma_direct(params, dim, m, rng) : random_in_gamma(params, dim, m, rng);
    ++rep.samples;
    const ModMatrix raw = nlog_series(g, m);
    if (raw.trace() % trace_modulus != 0) {
      ++rep.trace_failures;
      if (rep.examples.size() < 5) rep.examples.push_back("trace " + g.mat().to_string());
      continue;
    }
    if (!(exp_trunc(nlog(g, m), m) == g)) {
      ++rep.roundtrip_failures;
      if (rep.examples.size() < 5) rep.examples.push_back("roundtrip " + g.mat().to_string());
    }
  }
  return rep;
}

}  // namespace chevsk
