#pragma once

// sl_{l+1} over Z/p^N Z: trace-zero matrices, Chevalley coordinates and the
// bracket decomposition driven by a covering certificate.

#include <map>
#include <vector>

#include "chevsk/matrix.hpp"
#include "chevsk/rng.hpp"
#include "chevsk/rootsys.hpp"

namespace chevsk {

class LieElement {
 public:
  // Throws InvalidElement unless trace == 0.
  explicit LieElement(ModMatrix m);

  static LieElement zero(const RingParams& params, int dim);
  static LieElement random(const RingParams& params, int dim, Rng& rng);

  const ModMatrix& mat() const { return m_; }
  const RingParams& params() const { return m_.params(); }
  int dim() const { return m_.dim(); }

  LieElement operator+(const LieElement& o) const { return LieElement(m_ + o.m_); }
  LieElement operator-(const LieElement& o) const { return LieElement(m_ - o.m_); }
  LieElement scaled(u64 c) const { return LieElement(m_.scaled(c)); }
  bool operator==(const LieElement& o) const { return m_ == o.m_; }
  bool is_zero() const { return m_.is_zero(); }

 private:
  ModMatrix m_;
};

LieElement bracket(const LieElement& a, const LieElement& b);

// Coordinates in {e_s, h_r}. A root e_a - e_b is keyed by its vector in
// Z^{l+1}; only nonzero coefficients are stored.
struct ChevalleyCoords {
  RingParams params;
  int rank = 1;
  std::map<IntVec, u64> phi;
  std::vector<u64> cartan;  // size rank, coefficient of h_r = E_rr - E_{r+1,r+1}
};

ChevalleyCoords to_coords(const LieElement& a);
LieElement from_coords(const ChevalleyCoords& c);

// Root vector e_s for s = e_a - e_b.
LieElement root_vector(const RingParams& params, int dim, int a, int b);
// h_r, 0-based r < dim - 1.
LieElement coroot(const RingParams& params, int dim, int r);

struct BracketPair {
  LieElement left;
  LieElement right;
};

// Pairs with sum of [left, right] equal to A exactly. At most cert.k() + 1
// pairs: one for the Cartan part, one per class with nonzero part.
// Throws CertificateMismatch unless cert is a verified type-A certificate of
// the matching rank and prime.
std::vector<BracketPair> decompose_brackets(const LieElement& a, const CoveringCertificate& cert);

// Same, with the certificate check done by the caller.
std::vector<BracketPair> decompose_brackets_unchecked(const LieElement& a, const CoveringCertificate& cert);

LieElement bracket_sum(const std::vector<BracketPair>& pairs, const RingParams& params, int dim);

int strong_perfectness_r(const CoveringCertificate& cert);

}  // namespace chevsk
