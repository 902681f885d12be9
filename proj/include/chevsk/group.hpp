#pragma once

// SL_d(Z/p^N Z), its congruence filtration and generating sets.

#include <utility>
#include <vector>

#include "chevsk/matrix.hpp"
#include "chevsk/rng.hpp"

namespace chevsk {

class GroupElement {
 public:
  // Checks det == 1; throws InvalidElement otherwise.
  explicit GroupElement(ModMatrix m);

  static GroupElement identity(const RingParams& params, int dim);
  // No determinant check. For products of elements already known to be in SL.
  static GroupElement trusted(ModMatrix m);

  const ModMatrix& mat() const { return m_; }
  const RingParams& params() const { return m_.params(); }
  int dim() const { return m_.dim(); }
  int precision() const { return m_.params().N; }

  GroupElement operator*(const GroupElement& o) const { return trusted(m_ * o.m_); }
  GroupElement inverse() const { return trusted(m_.inverse()); }
  bool operator==(const GroupElement& o) const { return m_ == o.m_; }
  bool is_identity() const { return m_.is_identity(); }

 private:
  struct Unchecked {};
  GroupElement(ModMatrix m, Unchecked) : m_(std::move(m)) {}

  ModMatrix m_;
};

// Largest m with g = I mod p^m; N for the identity.
int level(const GroupElement& g);

// Reduction mod p^n, 1 <= n <= N.
GroupElement project(const GroupElement& g, int n);

// {a, b} = a^-1 b^-1 a b.
GroupElement commutator(const GroupElement& a, const GroupElement& b);

// |SL_d(Z/p^n Z)| = p^{(n-1)(d^2-1)} |SL_d(F_p)|.
mpz_class sl_order(u64 p, int n, int dim);

GroupElement random_element(const RingParams& params, int dim, Rng& rng);
// exp of p^m times a random trace-zero matrix; level >= m.
GroupElement random_in_gamma(const RingParams& params, int dim, int m, Rng& rng);
// I + p^m R with the last diagonal entry solved so det == 1. Does not use exp.
GroupElement random_in_gamma_direct(const RingParams& params, int dim, int m, Rng& rng);

struct GenSet {
  RingParams params;
  int dim = 2;
  std::vector<GroupElement> gens;

  // Nonempty, shared params and dimension.
  static GenSet make(std::vector<GroupElement> gens);

  std::size_t size() const { return gens.size(); }
  // Signed 1-based letter: i -> S[i], -i -> S[i]^-1.
  GroupElement letter(int a) const;
  GenSet projected(int n) const;
};

// Matrix helpers shared by tests and samplers.
ModMatrix random_matrix(const RingParams& params, int dim, Rng& rng);

}  // namespace chevsk
