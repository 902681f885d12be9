#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "chevsk/diam.hpp"
#include "chevsk/sk.hpp"
#include "support.hpp"

using namespace chevsk;
using testing_support::mat2;
using testing_support::unipotents;

namespace {

constexpr std::uint32_t kD1 = 4;  // SL2(F_3), standard unipotents

// diam(Gamma_j1 / Gamma_j2) straight from the definition: min distance per coset, max over cosets.
std::uint32_t naive_chain(const GenSet& s, int j1, int j2) {
  const auto dist = testing_support::naive_distances(s);
  const u64 q = s.params.modulus, pj1 = s.params.power(j1), mod = s.params.power(j2 - j1);
  std::map<std::vector<u64>, int> best;
  for (const auto& [e, d] : dist) {
    std::vector<u64> coset;
    bool in = true;
    for (std::size_t i = 0; i < e.size() && in; ++i) {
      const u64 diag = (i % (static_cast<std::size_t>(s.dim) + 1) == 0) ? 1 : 0;
      const u64 v = (e[i] + q - diag) % q;
      in = v % pj1 == 0;
      coset.push_back(v / pj1 % mod);
    }
    if (!in) continue;
    auto [it, fresh] = best.emplace(coset, d);
    if (!fresh) it->second = std::min(it->second, d);
  }
  int out = 0;
  for (const auto& [k, d] : best) out = std::max(out, d);
  return static_cast<std::uint32_t>(out);
}

}  // namespace

TEST_SUITE("diam") {
  TEST_CASE("SL2(F3) regression constant") {
    const GenSet s = unipotents(RingParams::make(3, 1));
    const DistanceTable t = bfs_distances(s, 1);
    CHECK(t.bfs.size() == 24);
    CHECK(t.distance(GroupElement::identity(s.params, 2)) == 0);
    for (const auto& g : s.gens) CHECK(t.distance(g) == 1);
    CHECK(t.diameter() == kD1);
    CHECK(exact_diameter(s, 1) == kD1);
    int naive_max = 0;
    for (const auto& [e, d] : testing_support::naive_distances(s)) naive_max = std::max(naive_max, d);
    CHECK(naive_max == static_cast<int>(kD1));
  }

  TEST_CASE("trivial diameters") {
    const RingParams r = RingParams::make(3, 1);
    // SL1 is the trivial group
    const GenSet one = GenSet::make({GroupElement::identity(r, 1)});
    CHECK(exact_diameter(one, 1) == 0);
    // every element as a generator
    const BfsResult all = bfs_serial(unipotents(r));
    std::vector<GroupElement> every;
    const ElementCodec codec(r, 2);
    for (u64 k : all.keys)
      if (k != all.keys[0]) every.push_back(GroupElement(codec.decode(k)));
    CHECK(exact_diameter(GenSet::make(every), 1) == 1);
  }

  TEST_CASE("chain diameters against the definition") {
    Rng rng(101);
    for (int trial = 0; trial < 4; ++trial) {
      const RingParams r = RingParams::make(3, 3);
      GenSet s = trial == 0 ? unipotents(r) : GenSet::make({random_element(r, 2, rng), random_element(r, 2, rng)});
      const DistanceTable t = bfs_distances(s, 3);
      if (!t.generating()) continue;
      for (int j1 = 0; j1 <= 3; ++j1)
        for (int j2 = j1; j2 <= 3; ++j2) {
          CAPTURE(j1);
          CAPTURE(j2);
          CHECK(chain_diameter(t, j1, j2) == (j1 == j2 ? 0u : naive_chain(s, j1, j2)));
        }
      CHECK(chain_diameter(t, 0, 3) == t.diameter());
    }
  }

  TEST_CASE("chain properties") {
    const GenSet s = unipotents(RingParams::make(3, 3));
    const DistanceTable t = bfs_distances(s, 3);
    for (int j = 0; j <= 3; ++j) CHECK(chain_diameter(t, j, j) == 0);
    for (int j = 1; j <= 3; ++j) {
      std::uint32_t sum = 0;
      for (int u = 0; u < j; ++u) sum += chain_diameter(t, u, u + 1);
      CHECK(chain_diameter(t, 0, j) <= sum);
      CHECK(chain_diameter(t, 0, j - 1) <= chain_diameter(t, 0, j));
    }
    for (int a = 0; a <= 3; ++a)
      for (int b = a; b <= 3; ++b)
        for (int c = b; c <= 3; ++c) CHECK(check_subadditivity(t, a, b, c));
    CHECK(chain_diameter(s, 3, 1, 2) == chain_diameter(t, 1, 2));
    CHECK_THROWS_AS(chain_diameter(t, 2, 1), Error);
    CHECK_THROWS_AS(chain_diameter(t, 0, 4), Error);
  }

  TEST_CASE("diameter grows with precision") {
    const GenSet s = unipotents(RingParams::make(3, 4));
    std::uint32_t prev = 0;
    for (int n = 1; n <= 4; ++n) {
      const std::uint32_t d = exact_diameter(s, n);
      CHECK(d >= prev);
      prev = d;
    }
  }

  TEST_CASE("layer diameter is reached by SK layer corrections") {
    const RingParams r = RingParams::make(3, 2);
    const GenSet s = unipotents(r);
    const std::uint32_t l1 = chain_diameter(s, 2, 1, 2);
    const SolovayKitaev sk = SolovayKitaev::build(s);
    std::uint64_t worst = 0;
    const BfsResult all = bfs_serial(s);
    const ElementCodec codec(r, 2);
    for (u64 k : all.keys) {
      const GroupElement g(codec.decode(k));
      if (level(g) < 1) continue;
      worst = std::max<std::uint64_t>(worst, sk.layer_word(g, 1).length());
    }
    CHECK(worst >= l1);
  }

  TEST_CASE("partial tables") {
    const RingParams r = RingParams::make(3, 2);
    const GenSet s = GenSet::make({mat2(r, 1, 1, 0, 1)});
    const DistanceTable t = bfs_distances(s, 2);
    CHECK_FALSE(t.generating());
    CHECK_THROWS_AS(t.diameter(), Error);
    CHECK_THROWS_AS(exact_diameter(s, 2), Error);
    CHECK_THROWS_AS(t.distance(mat2(r, 1, 0, 1, 1)), Error);
  }

  TEST_CASE("distance export") {
    const GenSet s = unipotents(RingParams::make(3, 1));
    const DistanceTable t = bfs_distances(s, 1);
    std::ostringstream os;
    write_distances(os, t);
    std::istringstream is(os.str());
    std::string line;
    std::size_t lines = 0;
    std::getline(is, line);
    CHECK(line == "1,0,0,1 0");
    ++lines;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == 24);
  }
}
