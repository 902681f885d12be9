#pragma once

// Solovay-Kitaev synthesis over SL_{l+1}(Z/p^n Z).
//
// A base table holds BFS-shortest words for all of G_2. Deeper precision is
// reached layer by layer: the residual in Gamma_j is written as a product of
// at most r commutators of elements of Gamma_ceil(j/2) and Gamma_floor(j/2),
// each approximated recursively one layer beyond its own level.

#include <iosfwd>
#include <vector>

#include "chevsk/bfs.hpp"
#include "chevsk/expolog.hpp"
#include "chevsk/lie.hpp"
#include "chevsk/rootsys.hpp"
#include "chevsk/words.hpp"

namespace chevsk {

class BaseTable {
 public:
  // BFS on S projected to precision 2. Throws NotGenerating.
  static BaseTable build(const GenSet& s, const BfsOptions& opts = {});
  // Reads a persisted table; the header hash must match S and every word is
  // re-evaluated. Throws ParseError or NotGenerating.
  static BaseTable read(std::istream& is, const GenSet& s);

  // g at precision >= 2, looked up mod p^2.
  const Word& lookup(const GroupElement& g) const;
  // Shortest stored word whose value is g mod p (g at any precision).
  const Word& lookup_mod_p(const GroupElement& g) const;

  std::size_t size() const { return words_.size(); }
  // C_2: the largest word length, i.e. the diameter of G_2.
  std::size_t max_length() const { return max_length_; }
  u64 gens_hash() const { return hash_; }
  const GenSet& gens() const { return gens2_; }

  // "p gens_hash" header, then "key word" lines.
  void write(std::ostream& os) const;

 private:
  BaseTable(GenSet gens2, u64 hash) : gens2_(std::move(gens2)), hash_(hash), codec_(gens2_.params, gens2_.dim) {}
  void add(u64 key, Word w);

  GenSet gens2_;
  u64 hash_;
  ElementCodec codec_;
  FlatIndex index_;
  std::vector<u64> keys_;
  std::vector<Word> words_;
  std::size_t max_length_ = 0;
};

// FNV-1a over p, dim and the generator entries mod p^2.
u64 gens_hash(const GenSet& s);

struct CommPair {
  GroupElement x;
  GroupElement y;
};

// For level(g) >= n >= 2, with i = ceil(n/2), j = floor(n/2): pairs with
// level(x) >= i, level(y) >= j and prod {x_k, y_k} = g mod p^{n+1}.
// Only nlog(g, n) mod p enters. Empty when g = I mod p^{n+1}.
std::vector<CommPair> sk_prime(const GroupElement& g, int n, const CoveringCertificate& cert);

struct SKStats {
  int n = 0;
  int r = 0;
  std::size_t C2 = 0;
  double bound = 0;
  u64 base_length = 0;                 // unreduced length of the G_2 word
  std::vector<u64> layer_lengths;      // index j: unreduced correction at layer j
  std::vector<u64> level_max;          // index m: max unreduced layer_word length at level m
  u64 total_reduced = 0;
  u64 total_unreduced = 0;
  u64 sk_prime_calls = 0;
  u64 layer_word_calls = 0;
  u64 recursion_violations = 0;        // calls exceeding 4r times their children
};

class SolovayKitaev {
 public:
  SolovayKitaev(GenSet s, CoveringCertificate cert, BaseTable table);
  // Certifies A_l at p and builds the base table.
  static SolovayKitaev build(const GenSet& s, const CoverOptions& cover = {}, const BfsOptions& bfs = {});

  const GenSet& gens() const { return s_; }
  const CoveringCertificate& certificate() const { return cert_; }
  const BaseTable& table() const { return table_; }
  int r() const { return cert_.r(); }

  // Word w with evaluate(w) = x mod p^{m+1}; requires level(x) >= m >= 1.
  Word layer_word(const GroupElement& x, int m, SKStats* stats = nullptr) const;

  // Word w with evaluate(w) = g mod p^n, 1 <= n <= precision of S.
  Word approx(const GroupElement& g, int n, SKStats* stats = nullptr) const;

  // Unlayered recursion: approximate mod p^{n-1}, then correct the residual
  // with commutators whose components are themselves approximated mod
  // p^{n-1}. Exponential cost, so n <= 5.
  Word approx_literal(const GroupElement& g, int n) const;

 private:
  GenSet s_;
  CoveringCertificate cert_;
  BaseTable table_;
};

// log(4r) / (log(2i) - log(i+1)); i >= 2, r >= 1.
double d_exponent(double i, int r);
// C n^{1 + d_i(r)}
double diam_bound(double n, double i, int r, double C);
// p^{i (|Phi| + l)}
mpz_class default_C_bound(u64 p, int i, RootType type, int rank);

}  // namespace chevsk
