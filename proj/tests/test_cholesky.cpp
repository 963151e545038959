#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpip/cholesky.hpp"
#include "mpip/spectrum.hpp"
#include "testutil.hpp"

using namespace mpip;

namespace {

MatrixF64 mat2(double a, double b, double c, double d) {
  MatrixF64 m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("cholesky of a hand-checkable 2x2") {
  const CholeskyFactor f = cholesky(mat2(4, 2, 2, 3), Precision::binary64);
  CHECK(f.l64(0, 0) == doctest::Approx(2.0));
  CHECK(f.l64(1, 0) == doctest::Approx(1.0));
  CHECK(f.l64(1, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(f.l64(0, 1) == 0.0);
}

TEST_CASE("cholesky of the identity is the identity at every precision") {
  const MatrixF64 eye = MatrixF64::identity(9);
  for (Precision p : {Precision::binary64, Precision::binary32,
                      Precision::emulated_binary16}) {
    const CholeskyFactor f = cholesky(eye, p);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        const double v =
            p == Precision::binary64 ? f.l64(i, j) : double(f.l32(i, j));
        CHECK(v == (i == j ? 1.0 : 0.0));
      }
  }
}

TEST_CASE("indefinite 2x2 breaks down at the second pivot") {
  try {
    cholesky(mat2(1, 2, 2, 1), Precision::binary64);
    FAIL("expected breakdown");
  } catch (const CholeskyBreakdown& e) {
    CHECK(e.pivot() == 1);
  }
}

TEST_CASE("shifted cholesky of the identity scales the diagonal") {
  const CholeskyFactor f =
      shifted_cholesky(MatrixF64::identity(5), 30.0, kUnitRoundoffSingle);
  CHECK(f.precision == Precision::binary32);
  CHECK(f.shift == 30.0 * kUnitRoundoffSingle);
  const float want = std::sqrt(1.0f + float(30.0 * kUnitRoundoffSingle));
  for (int i = 0; i < 5; ++i) CHECK(f.l32(i, i) == want);
}

TEST_CASE("zero shift reproduces the plain factorization bit for bit") {
  auto g = test::rng(11);
  MatrixF64 b = test::random_matrix(g, 30, 40);
  MatrixF64 m = test::oracle_matmul_bbt(b);
  const CholeskyFactor plain = cholesky(m, Precision::binary64);
  const CholeskyFactor shifted = shifted_cholesky(m, 0.0, kUnitRoundoffDouble);
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j <= i; ++j) CHECK(plain.l64(i, j) == shifted.l64(i, j));
}

TEST_CASE("float32 shifted cholesky survives kappa = 1e10 at n = 200") {
  const MatrixF64 m = spd_from_spectrum(200, 1.0, 1e10, 200, 2024);
  const CholeskyFactor f = shifted_cholesky(m, 30.0, kUnitRoundoffSingle);
  CHECK(f.dim() == 200);
  for (int i = 0; i < 200; ++i) CHECK(f.l32(i, i) > 0.0f);
}

TEST_CASE("tri_solve forward and backward on 2x2 fixtures") {
  CholeskyFactor f;
  f.precision = Precision::binary64;
  f.l64 = mat2(2, 0, 1, 1);
  const VectorF64 fw = tri_solve(f, {2.0, 3.0}, TriangularSide::forward);
  CHECK(fw[0] == doctest::Approx(1.0));
  CHECK(fw[1] == doctest::Approx(2.0));

  // L^T = [[2,1],[0,1]]
  const VectorF64 bw = tri_solve(f, {3.0, 2.0}, TriangularSide::backward);
  CHECK(bw[0] == doctest::Approx(0.5));
  CHECK(bw[1] == doctest::Approx(2.0));

  f.l64 = MatrixF64::identity(2);
  const VectorF64 id = tri_solve(f, {5.0, -7.0}, TriangularSide::forward);
  CHECK(id[0] == 5.0);
  CHECK(id[1] == -7.0);

  CHECK_THROWS_AS(tri_solve(f, {1.0}, TriangularSide::forward),
                  std::invalid_argument);
}

TEST_CASE("precond_apply on trivial factors") {
  CholeskyFactor f;
  f.precision = Precision::binary32;
  f.l32 = MatrixF32::identity(3);

  const VectorF64 v = {1.0 + 1e-9, -2.5, 3.0};
  const VectorF64 got = precond_apply(f, v);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(got[i] - v[i]) <=
          kUnitRoundoffSingle * std::abs(v[i]) * 1.0001);
  }

  MatrixF32 twice = MatrixF32::identity(2);
  twice(0, 0) = 2.0f;
  twice(1, 1) = 2.0f;
  f.l32 = twice;
  const VectorF64 scaled = precond_apply(f, {8.0, 4.0});
  CHECK(scaled[0] == 2.0);
  CHECK(scaled[1] == 1.0);

  CHECK_THROWS_AS(precond_apply(f, {1e39, 0.0}), OverflowError);

  CholeskyFactor wrong;
  wrong.precision = Precision::binary64;
  wrong.l64 = MatrixF64::identity(2);
  CHECK_THROWS_AS(precond_apply(wrong, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("precond_apply approximates the inverse for well-conditioned M") {
  // Oracle: binary64 substitution on the same widened factor.
  const MatrixF64 m = spd_from_spectrum(60, 1.0, 1e3, 60, 7);
  const CholeskyFactor f = shifted_cholesky(m, 30.0, kUnitRoundoffSingle);
  const MatrixF64 lw = to_double(f.l32);

  auto g = test::rng(77);
  const VectorF64 x = test::random_vector(g, 60);
  const VectorF64 mx = test::oracle_matvec(m, x);

  const VectorF64 via_f32 = precond_apply(f, mx);
  const VectorF64 via_f64 =
      test::oracle_backward(lw, test::oracle_forward(lw, mx));

  // Both routes give x back, and agree with each other, to kappa * u_s scale.
  const double kappa = 1e3;
  CHECK(test::rel_err(via_f32, x) < kappa * kUnitRoundoffSingle);
  CHECK(test::rel_err(via_f64, x) < kappa * kUnitRoundoffSingle);
  CHECK(test::rel_err(via_f32, via_f64) < 10 * kappa * kUnitRoundoffSingle);
}

TEST_CASE("emulated half cholesky on the identity applies the shift") {
  const CholeskyFactor f = emulated_half_cholesky(MatrixF64::identity(4), 10.0);
  const float want = round_to_half(
      std::sqrt(round_to_half(1.0f + round_to_half(float(10.0 * kUnitRoundoffHalf)))));
  for (int i = 0; i < 4; ++i) CHECK(f.l32(i, i) == want);
  CHECK(f.precision == Precision::emulated_binary16);
}

TEST_CASE("emulated half cholesky 2x2 is within u_h of exact") {
  const CholeskyFactor f = emulated_half_cholesky(mat2(1, 0.5, 0.5, 1), 0.0);
  const double want[3] = {1.0, 0.5, std::sqrt(0.75)};
  const double got[3] = {f.l32(0, 0), f.l32(1, 0), f.l32(1, 1)};
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(got[i] - want[i]) <= kUnitRoundoffHalf * want[i]);
}

TEST_CASE("emulated half cholesky rejects entries beyond the binary16 range") {
  MatrixF64 big = MatrixF64::identity(2);
  big(1, 0) = 1e6;
  CHECK_THROWS_AS(emulated_half_cholesky(big, 10.0), OverflowError);
}

TEST_CASE("reconstruction error stays within 50 u ||M||_F") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 40 + 7 * static_cast<int>(seed);
    const MatrixF64 m = spd_from_spectrum(n, 1.0, 1e6, n, seed);
    const double mfro = test::fro_norm(m);

    const CholeskyFactor f64 = cholesky(m, Precision::binary64);
    double err = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = 0;
        for (int k = 0; k <= j; ++k) s += f64.l64(i, k) * f64.l64(j, k);
        err += (s - m(i, j)) * (s - m(i, j)) * (i == j ? 1 : 2);
      }
    CHECK(std::sqrt(err) <= 50 * kUnitRoundoffDouble * mfro);

    const CholeskyFactor f32 = cholesky(m, Precision::binary32);
    err = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        double s = 0;
        for (int k = 0; k <= j; ++k)
          s += double(f32.l32(i, k)) * double(f32.l32(j, k));
        err += (s - m(i, j)) * (s - m(i, j)) * (i == j ? 1 : 2);
      }
    CHECK(std::sqrt(err) <= 50 * kUnitRoundoffSingle * mfro);
  }
}

TEST_CASE("solve correctness tracks 1e3 u kappa") {
  for (std::uint64_t seed = 21; seed <= 25; ++seed) {
    const int n = 50;
    const double kappa = 1e4;
    const MatrixF64 m = spd_from_spectrum(n, 1.0, kappa, n, seed);
    auto g = test::rng(seed);
    const VectorF64 xref = test::random_vector(g, n);
    const VectorF64 w = test::oracle_matvec(m, xref);

    const CholeskyFactor f64 = cholesky(m, Precision::binary64);
    const VectorF64 x64 = tri_solve(
        f64, tri_solve(f64, w, TriangularSide::forward), TriangularSide::backward);
    CHECK(test::rel_err(x64, xref) <= 1e3 * kUnitRoundoffDouble * kappa);

    const CholeskyFactor f32 = cholesky(m, Precision::binary32);
    const VectorF64 x32 = tri_solve(
        f32, tri_solve(f32, w, TriangularSide::forward), TriangularSide::backward);
    CHECK(test::rel_err(x32, xref) <= 1e3 * kUnitRoundoffSingle * kappa);
  }
}

TEST_CASE("preconditioned matrix has condition near 1 + kappa u_s") {
  // Fig-2-style spot check at kappa = 1e8 (the acceptance suite sweeps the
  // whole grid).
  const MatrixF64 m = spd_from_spectrum(120, 1.0, 1e8, 120, 3);
  const CholeskyFactor f = shifted_cholesky(m, 30.0, kUnitRoundoffSingle);
  const double kappa_pre = cond_2(preconditioned_matrix(f, m));
  const double predicted = 1.0 + 1e8 * kUnitRoundoffSingle;
  CHECK(kappa_pre < 10 * predicted);
  CHECK(kappa_pre > predicted / 10);
}
