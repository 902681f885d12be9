#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chevsk/io.hpp"
#include "support.hpp"

using namespace chevsk;

TEST_SUITE("io") {
  TEST_CASE("matrix round trip") {
    Rng rng(139);
    const RingParams r = RingParams::make(7, 3);
    for (int dim = 1; dim <= 5; ++dim) {
      const ModMatrix m = random_matrix(r, dim, rng);
      std::stringstream ss;
      write_matrix(ss, m);
      CHECK(read_matrix(ss) == m);
    }
  }

  TEST_CASE("negative entries are reduced") {
    std::istringstream in("3 2 2\n1 -1\n0 1\n");
    const GroupElement g = read_element(in);
    CHECK(g.mat()(0, 1) == 8);
  }

  TEST_CASE("generator files") {
    const GenSet s = testing_support::unipotents(RingParams::make(5, 4));
    std::stringstream ss;
    write_generators(ss, s);
    CHECK(ss.str() == "2\n5 4 2\n1 1\n0 1\n5 4 2\n1 0\n1 1\n");
    const GenSet back = read_generators(ss);
    REQUIRE(back.size() == 2);
    CHECK(back.gens[0] == s.gens[0]);
    CHECK(back.gens[1] == s.gens[1]);
  }

  TEST_CASE("malformed input") {
    std::istringstream short_matrix("3 2 2\n1 0\n0\n");
    CHECK_THROWS_AS(read_matrix(short_matrix), Error);
    std::istringstream bad_det("3 2 2\n2 0\n0 1\n");
    CHECK_THROWS_AS(read_element(bad_det), Error);
    std::istringstream even("2 2 2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_matrix(even), Error);
    std::istringstream huge_dim("3 1 9\n");
    CHECK_THROWS_AS(read_matrix(huge_dim), Error);
    std::istringstream mixed("2\n3 2 2\n1 1\n0 1\n5 2 2\n1 0\n1 1\n");
    CHECK_THROWS_AS(read_generators(mixed), Error);
    std::istringstream none("0\n");
    CHECK_THROWS_AS(read_generators(none), Error);
    try {
      read_generators_file("/nonexistent/gens.txt");
      FAIL("expected IoError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IoError);
    }
  }

  TEST_CASE("files on disk") {
    const std::string path = "chevsk_io_test_matrix.txt";
    {
      std::ofstream out(path);
      out << "5 3 2\n2 3\n7 11\n";
    }
    const GroupElement g = read_element_file(path);
    CHECK(g.mat()(1, 1) == 11);
    std::remove(path.c_str());
  }

  TEST_CASE("exit statuses are distinct") {
    CHECK(exit_status(ErrorCode::NotAUnit) == 10);
    CHECK(exit_status(ErrorCode::IoError) == 10 + static_cast<int>(ErrorCode::IoError));
    CHECK(to_string(ErrorCode::CoveringUnavailable) == "CoveringUnavailable");
  }
}
