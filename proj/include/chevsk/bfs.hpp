#pragma once

// Breadth-first search of the Cayley graph of <S> in SL_d(Z/p^n Z).
//
// Elements are packed into a single u64 (mixed radix p^n over the d^2
// entries, row-major, first entry most significant). Edges are left
// multiplications x = s y for s in S and S^-1, so the word of x is s
// followed by the word of y. Among shortest words the lexicographically
// least one wins, with letters ordered 1 < -1 < 2 < -2 < ...
//
// bfs_serial is the reference; bfs_parallel expands each level with OpenMP
// and merges candidates deterministically. Both agree element by element
// (distance, first letter, parent); order inside a level may differ.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chevsk/group.hpp"
#include "chevsk/words.hpp"

namespace chevsk {

class ElementCodec {
 public:
  // Throws TooLarge if (p^n)^{d^2} does not fit in 64 bits.
  ElementCodec(const RingParams& params, int dim);

  const RingParams& params() const { return params_; }
  int dim() const { return dim_; }

  u64 encode(const ModMatrix& m) const;
  u64 encode(const u64* entries) const;
  void decode(u64 key, u64* entries) const;
  ModMatrix decode(u64 key) const;

  // "a,b,c,d"
  std::string key_text(u64 key) const;
  u64 parse_key_text(const std::string& text) const;

 private:
  RingParams params_;
  int dim_;
};

// Open addressing u64 -> u32. Slots hold key + 1 so that 0 marks empty.
// Concurrent find() is safe while nobody inserts.
class FlatIndex {
 public:
  explicit FlatIndex(std::size_t expected = 16);

  std::optional<std::uint32_t> find(u64 key) const;
  // Returns false if the key was already present.
  bool insert(u64 key, std::uint32_t value);
  std::size_t size() const { return size_; }

 private:
  void grow();
  std::size_t slot_of(u64 key) const;

  std::vector<u64> slots_;
  std::vector<std::uint32_t> values_;
  std::size_t size_ = 0;
  std::size_t mask_ = 0;
};

struct BfsOptions {
  u64 cap = 100'000'000;  // refuse groups larger than this
};

struct BfsResult {
  RingParams params;
  int dim = 2;
  int num_gens = 0;
  std::vector<u64> keys;               // BFS order, identity first
  std::vector<std::uint32_t> dist;
  std::vector<std::uint8_t> rank;      // letter rank of the first letter; unused for the identity
  std::vector<std::uint32_t> parent;   // position of s^-1 x
  FlatIndex index;
  u64 group_order = 0;
  bool complete = false;               // closure == whole group

  std::optional<std::uint32_t> find(u64 key) const { return index.find(key); }
  std::uint32_t max_distance() const;
  Word word(std::uint32_t pos) const;
  std::size_t size() const { return keys.size(); }
};

// Letter with the given rank: 0 -> 1, 1 -> -1, 2 -> 2, ...
inline int letter_of_rank(int r) { return r % 2 == 0 ? r / 2 + 1 : -(r / 2 + 1); }

BfsResult bfs_serial(const GenSet& s, const BfsOptions& opts = {});
BfsResult bfs_parallel(const GenSet& s, const BfsOptions& opts = {});

}  // namespace chevsk
