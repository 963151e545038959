#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "mpip/errors.hpp"
#include "mpip/kernels.hpp"
#include "testutil.hpp"

using namespace mpip;

namespace {

MatrixF32 random_matrix_f32(std::uint64_t seed, int rows, int cols) {
  auto g = test::rng(seed);
  std::normal_distribution<float> dist(0.0f, 1.0f);
  MatrixF32 a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = dist(g);
  return a;
}

template <typename T>
bool bitwise_equal(const Matrix<T>& a, const Matrix<T>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(T)) == 0;
}

template <typename T>
Matrix<T> spd_for_cholesky(std::uint64_t seed, int n) {
  auto g = test::rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix<T> m(n, n);
  MatrixF64 b = test::random_matrix(g, n, n + 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = i == j ? 0.5 : 0.0;  // diagonal lift keeps it comfortably SPD
      for (int k = 0; k < n + 3; ++k) s += b(i, k) * b(j, k);
      m(i, j) = static_cast<T>(s);
    }
  return m;
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference bit for bit") {
  for (int size : {7, 64, 129, 300}) {
    auto g = test::rng(1000 + size);
    const MatrixF64 a = test::random_matrix(g, size, size + 17);
    const VectorF64 x = test::random_vector(g, size + 17);
    const VectorF64 xt = test::random_vector(g, size);

    VectorF64 y1(size), y2(size);
    kernels::matvec(a, x, y1);
    kernels::serial::matvec(a, x, y2);
    CHECK(std::memcmp(y1.data(), y2.data(), y1.size() * sizeof(double)) == 0);

    VectorF64 z1(size + 17), z2(size + 17);
    kernels::matvec_transpose(a, xt, z1);
    kernels::serial::matvec_transpose(a, xt, z2);
    CHECK(std::memcmp(z1.data(), z2.data(), z1.size() * sizeof(double)) == 0);

    const VectorF64 d = test::random_vector(g, size + 17, 0.5, 2.0);
    MatrixF64 s1(size, size + 17), s2(size, size + 17);
    kernels::scale_columns<double>(a, d, s1);
    kernels::serial::scale_columns<double>(a, d, s2);
    CHECK(bitwise_equal(s1, s2));

    MatrixF64 m1(size, size), m2(size, size);
    kernels::syrk_lower(a, m1);
    kernels::serial::syrk_lower(a, m2);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j <= i; ++j) CHECK(m1(i, j) == m2(i, j));
  }
}

TEST_CASE("float32 syrk and cholesky match serial bit for bit") {
  const MatrixF32 b = random_matrix_f32(7, 201, 145);
  MatrixF32 m1(201, 201), m2(201, 201);
  kernels::syrk_lower(b, m1);
  kernels::serial::syrk_lower(b, m2);
  for (int i = 0; i < 201; ++i)
    for (int j = 0; j <= i; ++j) CHECK(m1(i, j) == m2(i, j));

  MatrixF32 c1 = spd_for_cholesky<float>(8, 173);
  MatrixF32 c2 = c1;
  kernels::cholesky_inplace(c1);
  kernels::serial::cholesky_inplace(c2);
  CHECK(bitwise_equal(c1, c2));
}

TEST_CASE("float64 cholesky matches serial bit for bit") {
  MatrixF64 c1 = spd_for_cholesky<double>(9, 190);
  MatrixF64 c2 = c1;
  kernels::cholesky_inplace(c1);
  kernels::serial::cholesky_inplace(c2);
  CHECK(bitwise_equal(c1, c2));
}

TEST_CASE("matvec agrees with the textbook oracle") {
  auto g = test::rng(42);
  const MatrixF64 a = test::random_matrix(g, 33, 57);
  const VectorF64 x = test::random_vector(g, 57);
  const VectorF64 xt = test::random_vector(g, 33);

  VectorF64 y(33);
  kernels::matvec(a, x, y);
  CHECK(test::rel_err(y, test::oracle_matvec(a, x)) < 1e-14);

  VectorF64 z(57);
  kernels::matvec_transpose(a, xt, z);
  CHECK(test::rel_err(z, test::oracle_matvec_t(a, xt)) < 1e-14);
}

TEST_CASE("syrk agrees with the textbook oracle") {
  auto g = test::rng(43);
  const MatrixF64 b = test::random_matrix(g, 45, 70);
  MatrixF64 m(45, 45);
  kernels::syrk_lower(b, m);
  const MatrixF64 want = test::oracle_matmul_bbt(b);
  for (int i = 0; i < 45; ++i)
    for (int j = 0; j <= i; ++j)
      CHECK(m(i, j) == doctest::Approx(want(i, j)).epsilon(1e-12));
}

TEST_CASE("cholesky reconstructs and substitution round-trips") {
  MatrixF64 m = spd_for_cholesky<double>(5, 87);
  const MatrixF64 orig = m;
  kernels::cholesky_inplace(m);

  // strict upper zeroed
  for (int i = 0; i < 87; ++i)
    for (int j = i + 1; j < 87; ++j) CHECK(m(i, j) == 0.0);

  double err = 0;
  for (int i = 0; i < 87; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0;
      for (int k = 0; k <= j; ++k) s += m(i, k) * m(j, k);
      err = std::max(err, std::abs(s - orig(i, j)));
    }
  CHECK(err < 1e-10 * test::fro_norm(orig));

  auto g = test::rng(6);
  const VectorF64 xref = test::random_vector(g, 87);
  const VectorF64 w = test::oracle_matvec(orig, xref);
  VectorF64 x = w;
  kernels::trsv_forward(m, x.data());
  kernels::trsv_backward(m, x.data());
  CHECK(test::rel_err(x, xref) < 1e-9);
}

TEST_CASE("cholesky breakdown reports the failing pivot") {
  MatrixF64 m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 1;
  CHECK_THROWS_WITH_AS(kernels::cholesky_inplace(m),
                       doctest::Contains("pivot 1"), CholeskyBreakdown);
  try {
    MatrixF64 again(2, 2);
    again(0, 0) = 1;
    again(1, 0) = 2;
    again(1, 1) = 1;
    kernels::cholesky_inplace(again);
  } catch (const CholeskyBreakdown& e) {
    CHECK(e.pivot() == 1);
  }
}

TEST_CASE("trsv backward solves the transposed system") {
  // L^T = [[2,1],[0,1]], w = (3,2) -> x = (0.5, 2)
  MatrixF64 l(2, 2);
  l(0, 0) = 2;
  l(1, 0) = 1;
  l(1, 1) = 1;
  VectorF64 x = {3.0, 2.0};
  kernels::trsv_backward(l, x.data());
  CHECK(x[0] == doctest::Approx(0.5));
  CHECK(x[1] == doctest::Approx(2.0));
}
