#include "chevsk/diam.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <unordered_map>

namespace chevsk {

std::uint32_t DistanceTable::distance(const GroupElement& g) const {
  const ElementCodec codec(bfs.params, bfs.dim);
  auto pos = bfs.find(codec.encode(project(g, precision).mat()));
  if (!pos) throw Error(ErrorCode::InvalidElement, "element not reached by the search");
  return bfs.dist[*pos];
}

std::uint32_t DistanceTable::diameter() const {
  if (!generating()) throw Error(ErrorCode::NotGenerating, "S does not generate G_" + std::to_string(precision));
  return bfs.max_distance();
}

DistanceTable bfs_distances(const GenSet& s, int n, const BfsOptions& opts) {
  DistanceTable t;
  t.precision = n;
  t.bfs = bfs_parallel(s.projected(n), opts);
  return t;
}

std::uint32_t exact_diameter(const GenSet& s, int n, const BfsOptions& opts) {
  return bfs_distances(s, n, opts).diameter();
}

std::uint32_t chain_diameter(const DistanceTable& t, int j1, int j2) {
  const int n = t.precision;
  if (j1 < 0 || j1 > j2 || j2 > n) throw Error(ErrorCode::BadParams, "need 0 <= j1 <= j2 <= n");
  if (j1 == j2) return 0;
  if (!t.generating()) throw Error(ErrorCode::NotGenerating, "chain diameter needs a generating set");

  const RingParams& params = t.bfs.params;
  const int d = t.bfs.dim;
  const ElementCodec codec(params, d);
  const u64 step = params.power(j1);
  const u64 coset_mod = params.power(j2 - j1);
  std::unordered_map<u64, std::uint32_t> best;
  std::array<u64, 64> e{};
  for (std::size_t pos = 0; pos < t.bfs.size(); ++pos) {
    codec.decode(t.bfs.keys[pos], e.data());
    bool inside = true;
    u64 key = 0;
    for (int k = 0; k < d * d && inside; ++k) {
      u64 v = e[static_cast<std::size_t>(k)];
      if (k % (d + 1) == 0) v = mod_sub(v, 1 % params.modulus, params.modulus);
      if (v % step != 0) inside = false;
      key = key * coset_mod + (v / step) % coset_mod;
    }
    if (!inside) continue;
    auto [it, fresh] = best.try_emplace(key, t.bfs.dist[pos]);
    if (!fresh) it->second = std::min(it->second, t.bfs.dist[pos]);
  }
  // |Gamma_j1 / Gamma_j2| inside G_n
  const mpz_class top = j1 == 0 ? sl_order(params.p, n, d) : sl_order(params.p, n, d) / sl_order(params.p, j1, d);
  const mpz_class bottom = j2 == n ? mpz_class(1) : sl_order(params.p, n, d) / sl_order(params.p, j2, d);
  const mpz_class cosets = top / bottom;
  if (mpz_class(static_cast<unsigned long>(best.size())) != cosets)
    throw Error(ErrorCode::NotGenerating, "reached " + std::to_string(best.size()) + " of " + cosets.get_str() + " cosets");
  std::uint32_t out = 0;
  for (const auto& [k, v] : best) out = std::max(out, v);
  return out;
}

std::uint32_t chain_diameter(const GenSet& s, int n, int j1, int j2, const BfsOptions& opts) {
  return chain_diameter(bfs_distances(s, n, opts), j1, j2);
}

bool check_subadditivity(const DistanceTable& t, int j0, int j1, int j2) {
  return chain_diameter(t, j0, j2) <= chain_diameter(t, j0, j1) + chain_diameter(t, j1, j2);
}

void write_distances(std::ostream& os, const DistanceTable& t) {
  const ElementCodec codec(t.bfs.params, t.bfs.dim);
  for (std::size_t pos = 0; pos < t.bfs.size(); ++pos) os << codec.key_text(t.bfs.keys[pos]) << ' ' << t.bfs.dist[pos] << '\n';
}

}  // namespace chevsk
