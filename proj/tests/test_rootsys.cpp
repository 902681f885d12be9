#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "chevsk/rootsys.hpp"

using namespace chevsk;

namespace {

// Orbit of the simple roots under the reflections they generate.
std::set<IntVec> weyl_closure(const std::vector<IntVec>& simple) {
  std::set<IntVec> seen(simple.begin(), simple.end());
  std::vector<IntVec> todo(simple.begin(), simple.end());
  while (!todo.empty()) {
    const IntVec v = todo.back();
    todo.pop_back();
    for (const auto& a : simple) {
      const i64 num = 2 * dot(v, a), den = dot(a, a);
      REQUIRE(num % den == 0);
      IntVec w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= num / den * a[i];
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

std::size_t classical_count(char t, int l) {
  switch (t) {
    case 'A': return static_cast<std::size_t>(l * (l + 1));
    case 'B':
    case 'C': return static_cast<std::size_t>(2 * l * l);
    case 'D': return static_cast<std::size_t>(2 * l * (l - 1));
    case 'G': return 12;
    case 'F': return 48;
    default: return l == 6 ? 72 : l == 7 ? 126 : 240;
  }
}

std::vector<std::pair<char, int>> all_types() {
  std::vector<std::pair<char, int>> out;
  for (int l = 1; l <= 8; ++l) out.emplace_back('A', l);
  for (int l = 2; l <= 8; ++l) out.emplace_back('B', l), out.emplace_back('C', l);
  for (int l = 3; l <= 8; ++l) out.emplace_back('D', l);
  out.insert(out.end(), {{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}});
  return out;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("root counts and Weyl closure") {
    for (auto [t, l] : all_types()) {
      CAPTURE(t);
      CAPTURE(l);
      const RootSystem rs = RootSystem::build(parse_root_type(std::string(1, t)), l);
      CHECK(rs.roots.size() == classical_count(t, l));
      CHECK(rs.roots.size() == RootSystem::expected_size(rs.type, l));
      CHECK(static_cast<int>(rs.simple_roots.size()) == l);
      const auto orbit = weyl_closure(rs.simple_roots);
      CHECK(orbit == std::set<IntVec>(rs.roots.begin(), rs.roots.end()));
      for (const auto& s : rs.roots) {
        const auto c = rs.simple_coefficients(s);
        REQUIRE(c.has_value());
        const bool nonneg = std::all_of(c->begin(), c->end(), [](i64 x) { return x >= 0; });
        const bool nonpos = std::all_of(c->begin(), c->end(), [](i64 x) { return x <= 0; });
        CHECK((nonneg || nonpos));
      }
    }
  }

  TEST_CASE("small explicit root sets") {
    const RootSystem a1 = RootSystem::build(RootType::A, 1);
    CHECK(a1.roots == std::vector<IntVec>{{-1, 1}, {1, -1}});
    const RootSystem b2 = RootSystem::build(RootType::B, 2);
    std::set<IntVec> expect;
    for (i64 s : {-1, 1}) {
      expect.insert({s, 0});
      expect.insert({0, s});
      for (i64 t : {-1, 1}) expect.insert({s, t});
    }
    CHECK(std::set<IntVec>(b2.roots.begin(), b2.roots.end()) == expect);
  }

  TEST_CASE("E8 against the standard even-coordinate enumeration") {
    std::set<IntVec> expect;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (i64 s : {-2, 2})
          for (i64 t : {-2, 2}) {
            IntVec v(8, 0);
            v[static_cast<std::size_t>(i)] = s;
            v[static_cast<std::size_t>(j)] = t;
            expect.insert(v);
          }
    for (int mask = 0; mask < 256; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
      IntVec v(8);
      for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      expect.insert(v);
    }
    const RootSystem e8 = RootSystem::build(RootType::E, 8);
    CHECK(expect.size() == 240);
    CHECK(std::set<IntVec>(e8.roots.begin(), e8.roots.end()) == expect);
  }

  TEST_CASE("invalid types") {
    CHECK_THROWS_AS(RootSystem::build(RootType::B, 1), Error);
    CHECK_THROWS_AS(RootSystem::build(RootType::D, 2), Error);
    CHECK_THROWS_AS(RootSystem::build(RootType::E, 5), Error);
    CHECK_THROWS_AS(RootSystem::build(RootType::G, 3), Error);
    CHECK_THROWS_AS(parse_root_type("Q"), Error);
  }

  TEST_CASE("B4 at p=5 is 2-covered with a {+-1,+-2} class") {
    const RootSystem rs = RootSystem::build(RootType::B, 4);
    const CoveringCertificate c = certify_cover(rs, 5);
    CHECK(c.k() == 2);
    CHECK(c.r() == 3);
    CHECK(verify_certificate(rs, c, 5));
    bool small = false;
    for (const auto& cl : c.classes)
      small = small || std::all_of(cl.pairings.begin(), cl.pairings.end(), [](i64 v) { return v != 0 && v >= -2 && v <= 2; });
    CHECK(small);
  }

  TEST_CASE("G2 at p=7 is 1-covered, p=3 is not") {
    const RootSystem g2 = RootSystem::build(RootType::G, 2);
    const CoveringCertificate c = certify_cover(g2, 7);
    CHECK(c.k() == 1);
    for (i64 v : c.classes[0].pairings) CHECK((v != 0 && v >= -5 && v <= 5));
    try {
      certify_cover(g2, 3);
      FAIL("expected CoveringUnavailable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CoveringUnavailable);
    }
    CoverOptions two;
    two.max_classes = 2;
    CHECK(verify_certificate(g2, certify_cover(g2, 3, two), 3));
  }

  TEST_CASE("every returned certificate verifies") {
    for (auto [t, l] : all_types()) {
      const RootSystem rs = RootSystem::build(parse_root_type(std::string(1, t)), l);
      for (u64 p : {5, 7, 11, 13}) {
        CAPTURE(rs.label());
        CAPTURE(p);
        CoverOptions opts;
        opts.max_classes = 3;
        opts.random_attempts = 20000;
        try {
          const CoveringCertificate c = certify_cover(rs, p, opts);
          CHECK(verify_certificate(rs, c, p));
          if (rs.type == RootType::A)
            for (const auto& cl : c.classes) {
              i64 sum = 0;
              for (i64 x : cl.witness) sum += x;
              CHECK(sum == 0);
            }
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::CoveringUnavailable);
        }
      }
    }
  }

  TEST_CASE("B/C/D with l <= p are 2-covered") {
    for (u64 p : {3, 5, 7})
      for (char t : {'B', 'C', 'D'})
        for (int l = (t == 'D' ? 3 : 2); l <= static_cast<int>(p) && l <= 7; ++l) {
          CAPTURE(t);
          CAPTURE(l);
          CAPTURE(p);
          const RootSystem rs = RootSystem::build(parse_root_type(std::string(1, t)), l);
          const CoveringCertificate c = certify_cover(rs, p);
          CHECK(c.k() <= 2);
        }
  }

  TEST_CASE("verification rejects tampering") {
    const RootSystem rs = RootSystem::build(RootType::B, 4);
    const CoveringCertificate good = certify_cover(rs, 5);
    CHECK_FALSE(verify_certificate(rs, good, 2));
    CHECK_FALSE(verify_certificate(rs, good, 3));

    // move a root into the class whose witness pairs it to 0 mod p
    bool mutated = false;
    for (std::size_t from = 0; from < good.classes.size() && !mutated; ++from)
      for (const auto& s : good.classes[from].roots) {
        for (std::size_t to = 0; to < good.classes.size(); ++to) {
          if (to == from || dot(good.classes[to].witness, s) % 5 != 0) continue;
          CoveringCertificate bad = good;
          auto& src = bad.classes[from].roots;
          src.erase(std::find(src.begin(), src.end(), s));
          bad.classes[to].roots.push_back(s);
          recompute_pairings(bad);
          CHECK_FALSE(verify_certificate(rs, bad, 5));
          mutated = true;
          break;
        }
        if (mutated) break;
      }
    CHECK(mutated);

    CoveringCertificate dropped = good;
    dropped.classes[0].roots.pop_back();
    recompute_pairings(dropped);
    CHECK_FALSE(verify_certificate(rs, dropped, 5));

    CoveringCertificate duplicated = good;
    duplicated.classes[1].roots.push_back(duplicated.classes[0].roots.front());
    recompute_pairings(duplicated);
    CHECK_FALSE(verify_certificate(rs, duplicated, 5));

    CoveringCertificate wrong_pairings = good;
    wrong_pairings.classes[0].pairings.push_back(99);
    CHECK_FALSE(verify_certificate(rs, wrong_pairings, 5));

    CoveringCertificate a = certify_cover(RootSystem::build(RootType::A, 2), 5);
    a.classes[0].witness[0] += 5;
    recompute_pairings(a);
    CHECK_FALSE(verify_certificate(RootSystem::build(RootType::A, 2), a, 5));
  }

  TEST_CASE("certificate text round trip") {
    std::stringstream ss;
    const RootSystem f4 = RootSystem::build(RootType::F, 4);
    const RootSystem a3 = RootSystem::build(RootType::A, 3);
    const CoveringCertificate c1 = certify_cover(f4, 7), c2 = certify_cover(a3, 5);
    write_certificate(ss, c1);
    write_certificate(ss, c2);
    const auto back = read_certificates(ss);
    REQUIRE(back.size() == 2);
    CHECK(verify_certificate(f4, back[0], 7));
    CHECK(verify_certificate(a3, back[1], 5));
    CHECK(back[0].classes.size() == c1.classes.size());
    CHECK(back[1].classes[0].witness == c2.classes[0].witness);
    std::istringstream junk("certificate type=Z rank=1\n");
    CHECK_THROWS_AS(read_certificates(junk), Error);
  }

  TEST_CASE("recipes") {
    CHECK_FALSE(recipe_certificate(RootSystem::build(RootType::A, 3), 5).has_value());
    const RootSystem e8 = RootSystem::build(RootType::E, 8);
    const auto r23 = recipe_certificate(e8, 23);
    REQUIRE(r23.has_value());
    CHECK(verify_certificate(e8, *r23, 23));
    const auto r19 = recipe_certificate(e8, 19);
    REQUIRE(r19.has_value());
    CHECK_FALSE(verify_certificate(e8, *r19, 19));
  }
}
