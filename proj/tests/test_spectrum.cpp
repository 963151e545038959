#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "mpip/spectrum.hpp"
#include "testutil.hpp"

using namespace mpip;

TEST_CASE("equal extremes give the exact identity") {
  const MatrixF64 m = spd_from_spectrum(17, 1.0, 1.0, 17, 5);
  for (int i = 0; i < 17; ++i)
    for (int j = 0; j < 17; ++j) CHECK(m(i, j) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("construction is exactly symmetric") {
  const MatrixF64 m = spd_from_spectrum(64, 1.0, 1e5, 64, 8);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) CHECK(m(i, j) == m(j, i));
}

TEST_CASE("identical seeds give bit-identical matrices") {
  const MatrixF64 a = spd_from_spectrum(50, 1.0, 1e4, 50, 123);
  const MatrixF64 b = spd_from_spectrum(50, 1.0, 1e4, 50, 123);
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
  const MatrixF64 c = spd_from_spectrum(50, 1.0, 1e4, 50, 124);
  CHECK(std::memcmp(a.data(), c.data(), a.size() * sizeof(double)) != 0);
}

TEST_CASE("cond_2 basics") {
  CHECK(cond_2(MatrixF64::identity(12)) == doctest::Approx(1.0));
  MatrixF64 d = MatrixF64::identity(2);
  d(1, 1) = 1e4;
  CHECK(cond_2(d) == doctest::Approx(1e4));
}

TEST_CASE("spectrum extremes are realized: kappa = 1e6 within 0.1%") {
  const MatrixF64 m = spd_from_spectrum(200, 1.0, 1e6, 200, 31);
  CHECK(cond_2(m) == doctest::Approx(1e6).epsilon(1e-3));
}

TEST_CASE("spectrum extremes are realized: kappa = 1e8 within 1e-6 relative") {
  const MatrixF64 m = spd_from_spectrum(200, 1.0, 1e8, 200, 32);
  const VectorF64 eig = jacobi_eigenvalues(m);
  CHECK(eig.back() / std::abs(eig.front()) ==
        doctest::Approx(1e8).epsilon(1e-6));
}

TEST_CASE("jacobi eigenvalues match the prescribed spectrum") {
  // With count == m the sorted eigenvalues are exactly the drawn values.
  const int n = 40;
  const MatrixF64 m = spd_from_spectrum(n, 2.0, 2e3, n, 9);
  const VectorF64 eig = jacobi_eigenvalues(m);
  CHECK(eig.front() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(eig.back() == doctest::Approx(2e3).epsilon(1e-9));
  for (double v : eig) {
    CHECK(v >= 2.0 * (1 - 1e-9));
    CHECK(v <= 2e3 * (1 + 1e-9));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(spd_from_spectrum(0, 1, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(spd_from_spectrum(5, -1, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(spd_from_spectrum(5, 3, 2, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(spd_from_spectrum(5, 1, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(spd_from_spectrum(5, 1, 2, 6, 1), std::invalid_argument);
  auto g = mpip::test::rng(1);
  CHECK_THROWS_AS(cond_2(mpip::test::random_matrix(g, 3, 4)),
                  std::invalid_argument);
}
