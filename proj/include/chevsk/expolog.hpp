#pragma once

// Truncated exponential exp(p^m A) and the normalized logarithm on Gamma_m.

#include <string>
#include <vector>

#include "chevsk/group.hpp"
#include "chevsk/lie.hpp"

namespace chevsk {

// Least K with m k - v_p(k!) >= N for every k >= K.
int exp_truncation_index(u64 p, int N, int m);
// Least K with m (k-1) - v_p(k) >= N for every k >= K.
int log_truncation_index(u64 p, int N, int m);

// sum_k p^{mk} A^k / k! mod p^N, 1 <= m <= N.
GroupElement exp_trunc(const LieElement& a, int m);

// For g = I + p^m B: sum_k (-1)^{k+1} p^{m(k-1)} B^k / k, trace-corrected.
// B is only known mod p^{N-m}, so the result is determined mod p^{N-m};
// exp_trunc(nlog(g, m), m) == g holds exactly.
LieElement nlog(const GroupElement& g, int m);

// The series before the trace correction. Its trace is divisible by p^{N-m}.
ModMatrix nlog_series(const GroupElement& g, int m);

struct WeigelReport {
  int m = 1;
  u64 samples = 0;
  u64 trace_failures = 0;
  u64 roundtrip_failures = 0;
  std::vector<std::string> examples;  // first few failures

  u64 failures() const { return trace_failures + roundtrip_failures; }
};

// Samples Gamma_m both through exp images and directly (det-corrected
// I + p^m R), checking nlog is trace-zero and exp_trunc(nlog(g)) == g.
WeigelReport verify_weigel(const RingParams& params, int dim, int m, u64 samples, Rng& rng);

}  // namespace chevsk
