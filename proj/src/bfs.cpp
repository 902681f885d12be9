#include "chevsk/bfs.hpp"

#include <algorithm>
#include <array>
#include <omp.h>
#include <sstream>

namespace chevsk {

namespace {

constexpr int kMaxEntries = 64;

u64 splitmix(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Generators and inverses in rank order, as flat entry arrays.
struct Kernel {
  int dim;
  u64 q;
  std::vector<std::array<u64, kMaxEntries>> gens;

  Kernel(const GenSet& s) : dim(s.dim), q(s.params.modulus) {
    for (std::size_t i = 1; i <= s.size(); ++i)
      for (int sign : {1, -1}) {
        const GroupElement g = s.letter(sign * static_cast<int>(i));
        std::array<u64, kMaxEntries> a{};
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c) a[static_cast<std::size_t>(r * dim + c)] = g.mat()(r, c);
        gens.push_back(a);
      }
  }

  void left_mul(int rank, const u64* y, u64* out) const {
    const u64* s = gens[static_cast<std::size_t>(rank)].data();
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        u128 acc = 0;
        for (int k = 0; k < dim; ++k) acc += static_cast<u128>(s[r * dim + k]) * y[k * dim + c];
        out[r * dim + c] = static_cast<u64>(acc % q);
      }
  }
};

BfsResult start(const GenSet& s, const BfsOptions& opts, const ElementCodec& codec) {
  if (s.size() * 2 > 256) throw Error(ErrorCode::BadParams, "at most 128 generators");
  const mpz_class order = sl_order(s.params.p, s.params.N, s.dim);
  if (opts.cap > 0xffffffffULL) throw Error(ErrorCode::BadParams, "cap must fit in 32 bits");
  if (order > mpz_class(static_cast<unsigned long>(opts.cap)))
    throw Error(ErrorCode::TooLarge, "|G| = " + order.get_str() + " exceeds cap " + std::to_string(opts.cap));
  BfsResult res;
  res.params = s.params;
  res.dim = s.dim;
  res.num_gens = static_cast<int>(s.size());
  res.group_order = order.get_ui();
  res.index = FlatIndex(static_cast<std::size_t>(res.group_order));
  res.keys.reserve(static_cast<std::size_t>(res.group_order));
  const u64 id = codec.encode(ModMatrix::identity(s.params, s.dim));
  res.keys.push_back(id);
  res.dist.push_back(0);
  res.rank.push_back(0);
  res.parent.push_back(0);
  res.index.insert(id, 0);
  return res;
}

}  // namespace

ElementCodec::ElementCodec(const RingParams& params, int dim) : params_(params), dim_(dim) {
  if (dim * dim > kMaxEntries) throw Error(ErrorCode::TooLarge, "dimension too large for key packing");
  u128 span = 1;
  for (int k = 0; k < dim * dim; ++k) {
    span *= params.modulus;
    if (span > static_cast<u128>(UINT64_MAX))
      throw Error(ErrorCode::TooLarge, "(p^n)^(d^2) does not fit in 64 bits");
  }
}

u64 ElementCodec::encode(const u64* entries) const {
  u64 key = 0;
  for (int k = 0; k < dim_ * dim_; ++k) key = key * params_.modulus + entries[k];
  return key;
}

u64 ElementCodec::encode(const ModMatrix& m) const { return encode(m.entries().data()); }

void ElementCodec::decode(u64 key, u64* entries) const {
  for (int k = dim_ * dim_ - 1; k >= 0; --k) {
    entries[k] = key % params_.modulus;
    key /= params_.modulus;
  }
}

ModMatrix ElementCodec::decode(u64 key) const {
  std::array<u64, kMaxEntries> e{};
  decode(key, e.data());
  ModMatrix m(params_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m.set(i, j, e[static_cast<std::size_t>(i * dim_ + j)]);
  return m;
}

std::string ElementCodec::key_text(u64 key) const {
  std::array<u64, kMaxEntries> e{};
  decode(key, e.data());
  std::ostringstream os;
  for (int k = 0; k < dim_ * dim_; ++k) os << (k ? "," : "") << e[static_cast<std::size_t>(k)];
  return os.str();
}

u64 ElementCodec::parse_key_text(const std::string& text) const {
  std::array<u64, kMaxEntries> e{};
  std::istringstream is(text);
  std::string tok;
  int k = 0;
  while (std::getline(is, tok, ',')) {
    if (k >= dim_ * dim_) throw Error(ErrorCode::ParseError, "too many entries in key '" + text + "'");
    std::size_t used = 0;
    u64 v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v >= params_.modulus) throw Error(ErrorCode::ParseError, "bad key entry '" + tok + "'");
    e[static_cast<std::size_t>(k++)] = v;
  }
  if (k != dim_ * dim_) throw Error(ErrorCode::ParseError, "wrong number of entries in key '" + text + "'");
  return encode(e.data());
}

FlatIndex::FlatIndex(std::size_t expected) {
  std::size_t cap = 16;
  while (cap < expected * 2) cap <<= 1;
  slots_.assign(cap, 0);
  values_.assign(cap, 0);
  mask_ = cap - 1;
}

std::size_t FlatIndex::slot_of(u64 key) const {
  std::size_t i = static_cast<std::size_t>(splitmix(key)) & mask_;
  while (slots_[i] != 0 && slots_[i] != key + 1) i = (i + 1) & mask_;
  return i;
}

std::optional<std::uint32_t> FlatIndex::find(u64 key) const {
  const std::size_t i = slot_of(key);
  if (slots_[i] == 0) return std::nullopt;
  return values_[i];
}

bool FlatIndex::insert(u64 key, std::uint32_t value) {
  if ((size_ + 1) * 2 > slots_.size()) grow();
  const std::size_t i = slot_of(key);
  if (slots_[i] != 0) return false;
  slots_[i] = key + 1;
  values_[i] = value;
  ++size_;
  return true;
}

void FlatIndex::grow() {
  std::vector<u64> old_slots = std::move(slots_);
  std::vector<std::uint32_t> old_values = std::move(values_);
  slots_.assign(old_slots.size() * 2, 0);
  values_.assign(old_slots.size() * 2, 0);
  mask_ = slots_.size() - 1;
  size_ = 0;
  for (std::size_t i = 0; i < old_slots.size(); ++i)
    if (old_slots[i] != 0) insert(old_slots[i] - 1, old_values[i]);
}

std::uint32_t BfsResult::max_distance() const { return dist.empty() ? 0 : dist.back(); }

Word BfsResult::word(std::uint32_t pos) const {
  std::vector<int> letters;
  while (pos != 0) {
    letters.push_back(letter_of_rank(rank[pos]));
    pos = parent[pos];
  }
  return Word::reduce(letters);
}

BfsResult bfs_serial(const GenSet& s, const BfsOptions& opts) {
  const ElementCodec codec(s.params, s.dim);
  const Kernel kern(s);
  BfsResult res = start(s, opts, codec);
  const int nranks = static_cast<int>(kern.gens.size());
  std::array<u64, kMaxEntries> y{}, x{};
  for (std::size_t head = 0; head < res.keys.size(); ++head) {
    codec.decode(res.keys[head], y.data());
    const std::uint32_t d = res.dist[head] + 1;
    for (int r = 0; r < nranks; ++r) {
      kern.left_mul(r, y.data(), x.data());
      const u64 key = codec.encode(x.data());
      if (auto pos = res.index.find(key)) {
        // same-level rediscovery through a smaller first letter
        if (res.dist[*pos] == d && r < res.rank[*pos]) {
          res.rank[*pos] = static_cast<std::uint8_t>(r);
          res.parent[*pos] = static_cast<std::uint32_t>(head);
        }
        continue;
      }
      const auto pos = static_cast<std::uint32_t>(res.keys.size());
      res.index.insert(key, pos);
      res.keys.push_back(key);
      res.dist.push_back(d);
      res.rank.push_back(static_cast<std::uint8_t>(r));
      res.parent.push_back(static_cast<std::uint32_t>(head));
    }
  }
  res.complete = res.keys.size() == res.group_order;
  return res;
}

BfsResult bfs_parallel(const GenSet& s, const BfsOptions& opts) {
  const ElementCodec codec(s.params, s.dim);
  const Kernel kern(s);
  BfsResult res = start(s, opts, codec);
  const int nranks = static_cast<int>(kern.gens.size());

  struct Cand {
    u64 key;
    std::uint32_t rank;
    std::uint32_t parent;
  };
  std::size_t lo = 0, hi = 1;
  std::uint32_t d = 0;
  std::vector<Cand> level;
  while (lo < hi) {
    level.clear();
#pragma omp parallel
    {
      std::vector<Cand> local;
      std::array<u64, kMaxEntries> y{}, x{};
#pragma omp for schedule(static) nowait
      for (std::int64_t i = static_cast<std::int64_t>(lo); i < static_cast<std::int64_t>(hi); ++i) {
        codec.decode(res.keys[static_cast<std::size_t>(i)], y.data());
        for (int r = 0; r < nranks; ++r) {
          kern.left_mul(r, y.data(), x.data());
          const u64 key = codec.encode(x.data());
          if (!res.index.find(key))
            local.push_back({key, static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(i)});
        }
      }
#pragma omp critical(chevsk_bfs_merge)
      level.insert(level.end(), local.begin(), local.end());
    }
    std::sort(level.begin(), level.end(), [](const Cand& a, const Cand& b) {
      return a.key != b.key ? a.key < b.key : a.rank < b.rank;
    });
    ++d;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && level[i].key == level[i - 1].key) continue;
      const auto pos = static_cast<std::uint32_t>(res.keys.size());
      res.index.insert(level[i].key, pos);
      res.keys.push_back(level[i].key);
      res.dist.push_back(d);
      res.rank.push_back(static_cast<std::uint8_t>(level[i].rank));
      res.parent.push_back(level[i].parent);
    }
    lo = hi;
    hi = res.keys.size();
  }
  res.complete = res.keys.size() == res.group_order;
  return res;
}

}  // namespace chevsk
