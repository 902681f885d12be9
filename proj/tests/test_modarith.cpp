#include <doctest.h>

#include "chevsk/matrix.hpp"
#include "chevsk/rng.hpp"

using namespace chevsk;

namespace {

// v_p(k!) by multiplying out and dividing, small k only.
i64 brute_factorial_valuation(i64 k, u64 p) {
  i64 v = 0;
  for (i64 j = 2; j <= k; ++j)
    for (i64 x = j; x % static_cast<i64>(p) == 0; x /= static_cast<i64>(p)) ++v;
  return v;
}

mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  mpz_class out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    out += (c % 2 ? -1 : 1) * a[0][c] * cofactor_det(minor);
  }
  return out;
}

}  // namespace

TEST_SUITE("modarith") {
  TEST_CASE("ring parameters") {
    const RingParams r = RingParams::make(3, 4);
    CHECK(r.modulus == 81);
    CHECK(r.power(0) == 1);
    CHECK(r.power(3) == 27);
    CHECK(r.with_precision(2).modulus == 9);
    CHECK_THROWS_AS(RingParams::make(2, 3), Error);
    CHECK_THROWS_AS(RingParams::make(9, 1), Error);
    CHECK_THROWS_AS(RingParams::make(3, 0), Error);
    CHECK_THROWS_AS(RingParams::make(3, 40), Error);
    try {
      RingParams::make(2, 1);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedPrime);
    }
  }

  TEST_CASE("inverse examples") {
    const RingParams r9 = RingParams::make(3, 2);
    CHECK(mod_inverse(2, r9) == 5);
    CHECK(mod_inverse(1, RingParams::make(7, 5)) == 1);
    CHECK_THROWS_AS(mod_inverse(3, r9), Error);
  }

  TEST_CASE("inverse of random units") {
    Rng rng(11);
    for (u64 p : {3, 5, 7})
      for (int N = 1; N <= 6; ++N) {
        const RingParams r = RingParams::make(p, N);
        for (int s = 0; s < 1000; ++s) {
          u64 a = rng.below(r.modulus);
          if (a % p == 0) a += 1;
          a %= r.modulus;
          CHECK(mod_mul(a, mod_inverse(a, r), r.modulus) == 1 % r.modulus);
        }
      }
  }

  TEST_CASE("valuation") {
    const RingParams r = RingParams::make(3, 3);
    CHECK(valuation(18, r) == 2);
    CHECK(valuation(0, r) == 3);
    CHECK(valuation(7, r) == 0);
    Rng rng(5);
    for (int s = 0; s < 1000; ++s) {
      const u64 a = rng.below(r.modulus), b = rng.below(r.modulus);
      CHECK(valuation(mod_mul(a, b, r.modulus), r) == std::min(valuation(a, r) + valuation(b, r), r.N));
    }
  }

  TEST_CASE("factorial valuation against direct count") {
    CHECK(factorial_valuation(6, 3) == 2);
    CHECK(factorial_valuation(0, 5) == 0);
    CHECK(factorial_valuation(25, 5) == 6);
    for (u64 p : {3, 5, 7, 11})
      for (i64 k = 0; k < 200; ++k) CHECK(factorial_valuation(k, p) == brute_factorial_valuation(k, p));
    CHECK(int_valuation(54, 3) == 3);
    CHECK(int_valuation(7, 3) == 0);
  }

  TEST_CASE("reduction of negatives and big integers") {
    CHECK(mod_reduce(i64{-1}, 27) == 26);
    CHECK(mod_reduce(i64{-54}, 27) == 0);
    const mpz_class big("-1000000000000000000000001"), m81 = 81;
    mpz_class rem;
    mpz_mod(rem.get_mpz_t(), big.get_mpz_t(), m81.get_mpz_t());
    CHECK(mod_reduce(big, 81) == rem.get_ui());
  }

  TEST_CASE("residue ring axioms") {
    const RingParams r = RingParams::make(5, 3);
    Rng rng(3);
    for (int s = 0; s < 1000; ++s) {
      const Residue a(rng.below(r.modulus), r), b(rng.below(r.modulus), r), c(rng.below(r.modulus), r);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a - b) + b == a);
      CHECK(a + (-a) == Residue::zero(r));
      if (a.is_unit()) CHECK(a * a.inverse() == Residue::one(r));
    }
    const i64 x = 123456789, y = -987654;
    CHECK(Residue::reduce(x, r) * Residue::reduce(y, r) == Residue::reduce(mpz_class(x) * y, r));
  }

  TEST_CASE("determinant matches cofactor expansion") {
    Rng rng(17);
    for (int dim = 1; dim <= 5; ++dim) {
      const RingParams r = RingParams::make(7, 4);
      for (int s = 0; s < 50; ++s) {
        ModMatrix m(r, dim);
        std::vector<std::vector<mpz_class>> z(static_cast<std::size_t>(dim), std::vector<mpz_class>(static_cast<std::size_t>(dim)));
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            m.set(i, j, rng.below(r.modulus));
            z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<unsigned long>(m(i, j));
          }
        CHECK(m.det() == mod_reduce(cofactor_det(z), r.modulus));
      }
    }
  }

  TEST_CASE("matrix inverse and reduction") {
    Rng rng(23);
    const RingParams r = RingParams::make(5, 4);
    for (int s = 0; s < 200; ++s) {
      ModMatrix m(r, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.set(i, j, rng.below(r.modulus));
      if (m.det() % 5 == 0) {
        CHECK_THROWS_AS(m.inverse(), Error);
        continue;
      }
      CHECK((m * m.inverse()).is_identity());
      CHECK((m * m).reduced(2) == m.reduced(2) * m.reduced(2));
    }
    const i64 e[] = {25, 50, 75, 100};
    const ModMatrix q = ModMatrix::from_integers(r, 2, e);
    CHECK(q.valuation() == 2);
    CHECK(q.divided_by_p_power(2) == ModMatrix::from_integers(r, 2, std::vector<i64>{1, 2, 3, 4}));
  }
}
