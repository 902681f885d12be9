#include <doctest.h>

#include "chevsk/lie.hpp"

using namespace chevsk;

TEST_SUITE("lie") {
  TEST_CASE("sl2 triple") {
    const RingParams r = RingParams::make(5, 3);
    const LieElement e = root_vector(r, 2, 0, 1), f = root_vector(r, 2, 1, 0), h = coroot(r, 2, 0);
    CHECK(bracket(e, f) == h);
    CHECK(bracket(h, e) == e.scaled(2));
    CHECK(bracket(h, f) == f.scaled(r.modulus - 2));
  }

  TEST_CASE("trace zero is enforced") {
    const RingParams r = RingParams::make(3, 2);
    CHECK_THROWS_AS(LieElement(ModMatrix::identity(r, 2)), Error);
    CHECK(LieElement::zero(r, 3).is_zero());
  }

  TEST_CASE("bracket identities on random elements") {
    Rng rng(31);
    for (int dim = 2; dim <= 5; ++dim) {
      const RingParams r = RingParams::make(7, 4);
      for (int s = 0; s < 100; ++s) {
        const LieElement a = LieElement::random(r, dim, rng), b = LieElement::random(r, dim, rng), c = LieElement::random(r, dim, rng);
        CHECK(bracket(a, b) == LieElement::zero(r, dim) - bracket(b, a));
        CHECK((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
        CHECK(bracket(a + b, c) == bracket(a, c) + bracket(b, c));
      }
    }
  }

  TEST_CASE("Chevalley coordinates round trip") {
    Rng rng(37);
    for (int dim = 2; dim <= 6; ++dim) {
      const RingParams r = RingParams::make(5, 3);
      for (int s = 0; s < 50; ++s) {
        const LieElement a = LieElement::random(r, dim, rng);
        const ChevalleyCoords c = to_coords(a);
        CHECK(c.cartan.size() == static_cast<std::size_t>(dim - 1));
        CHECK(c.phi.size() <= static_cast<std::size_t>(dim * (dim - 1)));
        CHECK(from_coords(c) == a);
      }
    }
    const RingParams r = RingParams::make(3, 2);
    const ChevalleyCoords e = to_coords(root_vector(r, 3, 0, 2));
    REQUIRE(e.phi.size() == 1);
    CHECK(e.phi.begin()->first == IntVec{1, 0, -1});
    CHECK(e.phi.begin()->second == 1);
  }

  TEST_CASE("bracket decomposition reproduces A exactly") {
    Rng rng(41);
    for (auto [l, p, N] : std::vector<std::tuple<int, u64, int>>{{1, 3, 4}, {1, 5, 3}, {2, 5, 2}, {2, 7, 3}, {3, 5, 3}, {4, 7, 2}}) {
      const RingParams r = RingParams::make(p, N);
      const CoveringCertificate cert = certify_cover(RootSystem::build(RootType::A, l), p);
      const int samples = (l == 2 && p == 5) ? 1000 : 200;
      for (int s = 0; s < samples; ++s) {
        const LieElement a = LieElement::random(r, l + 1, rng);
        const auto pairs = decompose_brackets(a, cert);
        CHECK(static_cast<int>(pairs.size()) <= strong_perfectness_r(cert));
        CHECK(bracket_sum(pairs, r, l + 1) == a);
      }
    }
  }

  TEST_CASE("class brackets have no cross terms up to rank 7") {
    // a single covered class contributes exactly its own root part
    Rng rng(43);
    for (int l = 1; l <= 7; ++l) {
      const RingParams r = RingParams::make(11, 2);
      const CoveringCertificate cert = certify_cover(RootSystem::build(RootType::A, l), 11);
      for (int s = 0; s < 20; ++s) {
        ChevalleyCoords c = to_coords(LieElement::random(r, l + 1, rng));
        std::fill(c.cartan.begin(), c.cartan.end(), 0);
        const LieElement off = from_coords(c);
        const auto pairs = decompose_brackets(off, cert);
        CHECK(static_cast<int>(pairs.size()) <= cert.k());
        for (const auto& bp : pairs) {
          // the left side is diagonal, so each bracket stays off-diagonal
          const ModMatrix m = bracket(bp.left, bp.right).mat();
          for (int i = 0; i <= l; ++i) CHECK(m(i, i) == 0);
        }
        CHECK(bracket_sum(pairs, r, l + 1) == off);
      }
    }
  }

  TEST_CASE("zero parts are skipped") {
    const RingParams r = RingParams::make(5, 2);
    const CoveringCertificate cert = certify_cover(RootSystem::build(RootType::A, 1), 5);
    CHECK(decompose_brackets(LieElement::zero(r, 2), cert).empty());
    CHECK(decompose_brackets(coroot(r, 2, 0), cert).size() == 1);
    CHECK(decompose_brackets(root_vector(r, 2, 0, 1), cert).size() == 1);
  }

  TEST_CASE("strong perfectness counts") {
    CHECK(strong_perfectness_r(certify_cover(RootSystem::build(RootType::A, 1), 5)) == 2);
    CHECK(strong_perfectness_r(certify_cover(RootSystem::build(RootType::B, 4), 5)) == 3);
    CHECK(strong_perfectness_r(certify_cover(RootSystem::build(RootType::E, 8), 23)) == 3);
  }

  TEST_CASE("mismatched certificates are rejected") {
    const RingParams r = RingParams::make(5, 2);
    const LieElement a = coroot(r, 3, 1);
    CHECK_THROWS_AS(decompose_brackets(a, certify_cover(RootSystem::build(RootType::A, 1), 5)), Error);
    CHECK_THROWS_AS(decompose_brackets(a, certify_cover(RootSystem::build(RootType::A, 2), 7)), Error);
    CHECK_THROWS_AS(decompose_brackets(a, certify_cover(RootSystem::build(RootType::B, 2), 5)), Error);
    CoveringCertificate bad = certify_cover(RootSystem::build(RootType::A, 2), 5);
    bad.classes[0].roots.pop_back();
    CHECK_THROWS_AS(decompose_brackets(a, bad), Error);
  }
}
