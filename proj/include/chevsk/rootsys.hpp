#pragma once

// Irreducible root systems with exact integer coordinates and covering
// certificates.
//
// Embeddings (all integer, so pairings are exact dot products):
//   A_l        e_i - e_j in Z^{l+1}
//   B_l, C_l, D_l  the usual orthonormal coordinates in Z^l
//   G_2        the plane x+y+z = 0 in Z^3
//   F_4, E_6, E_7, E_8  scaled by 2, so half-integer roots become odd vectors
//
// A set X of roots is covered mod p by a witness h when every pairing
// (h, s), s in X, is a unit mod p. A certificate partitions the roots into
// k covered classes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chevsk/modarith.hpp"

namespace chevsk {

enum class RootType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

RootType parse_root_type(const std::string& s);
char to_char(RootType t);

using IntVec = std::vector<i64>;

i64 dot(const IntVec& a, const IntVec& b);

struct RootSystem {
  RootType type = RootType::A;
  int rank = 1;
  int embed_dim = 2;
  std::vector<IntVec> roots;
  std::vector<IntVec> simple_roots;

  // Throws InvalidType for unsupported (type, rank).
  static RootSystem build(RootType type, int rank);

  std::string label() const;
  bool contains(const IntVec& v) const;
  // Classical |Phi| for the type and rank.
  static std::size_t expected_size(RootType type, int rank);
  // Coefficients of `root` over the simple roots, when integral.
  std::optional<IntVec> simple_coefficients(const IntVec& root) const;
};

struct CoverClass {
  IntVec witness;
  std::vector<IntVec> roots;
  std::vector<i64> pairings;  // sorted distinct values (witness, s), s in roots
};

struct CoveringCertificate {
  RootType type = RootType::A;
  int rank = 1;
  u64 p = 3;
  std::vector<CoverClass> classes;
  std::string method;  // how it was found: recipe, recipe-search, search, random

  int k() const { return static_cast<int>(classes.size()); }
  // Strong-perfectness count: one bracket per covered class plus one for the Cartan part.
  int r() const { return k() + 1; }
};

struct CoverOptions {
  // Upper bound on the number of classes; 0 means the nominal count for the
  // type (1 for A and G, 2 otherwise).
  int max_classes = 0;
  u64 seed = 1;
  u64 random_attempts = 1'000'000;
  u64 search_node_cap = 4'000'000;
};

int nominal_classes(RootType type);

// The fixed recipe certificate for the type, built verbatim and NOT verified.
// Empty for type A, which has no explicit recipe.
std::optional<CoveringCertificate> recipe_certificate(const RootSystem& rs, u64 p);

// Recipe, then recipe-preserving search, then small-integer search, then
// seeded random sampling. Throws CoveringUnavailable when nothing is found.
CoveringCertificate certify_cover(const RootSystem& rs, u64 p, const CoverOptions& opts = {});

// Pure re-check: exact partition, every pairing a unit mod p, zero-sum
// witnesses for type A, recorded pairings consistent.
bool verify_certificate(const RootSystem& rs, const CoveringCertificate& cert, u64 p);

// Recomputes the class pairing sets from roots and witnesses.
void recompute_pairings(CoveringCertificate& cert);

// Certificate text format: see README.
void write_certificate(std::ostream& os, const CoveringCertificate& cert);
std::vector<CoveringCertificate> read_certificates(std::istream& is);

// Certificate file used as a cache keyed by (type, rank, p).
class CertificateStore {
 public:
  explicit CertificateStore(std::string path);

  std::optional<CoveringCertificate> find(RootType type, int rank, u64 p) const;
  // Returns the cached certificate if it re-verifies, otherwise certifies and appends.
  CoveringCertificate certify(const RootSystem& rs, u64 p, const CoverOptions& opts = {});

 private:
  void save() const;

  std::string path_;
  std::vector<CoveringCertificate> certs_;
};

}  // namespace chevsk
