#pragma once

#include <cmath>
#include <random>

#include "mpip/matrix.hpp"
#include "mpip/standard_form.hpp"

namespace mpip::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline VectorF64 random_vector(std::mt19937_64& g, int n, double lo = -1.0,
                               double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  VectorF64 v(n);
  for (double& x : v) x = dist(g);
  return v;
}

inline MatrixF64 random_matrix(std::mt19937_64& g, int rows, int cols,
                               double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  MatrixF64 a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = dist(g);
  return a;
}

// Textbook oracles, kept independent of the kernels they check.

inline MatrixF64 oracle_matmul_bbt(const MatrixF64& b) {
  const int m = b.rows(), n = b.cols();
  MatrixF64 out(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double s = 0;
      for (int k = 0; k < n; ++k) s += b(i, k) * b(j, k);
      out(i, j) = s;
    }
  return out;
}

inline VectorF64 oracle_matvec(const MatrixF64& a, const VectorF64& x) {
  VectorF64 y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline VectorF64 oracle_matvec_t(const MatrixF64& a, const VectorF64& x) {
  VectorF64 y(a.cols(), 0.0);
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) y[j] += a(i, j) * x[i];
  return y;
}

// Plain forward/backward substitution in double on a widened factor.
inline VectorF64 oracle_forward(const MatrixF64& l, const VectorF64& w) {
  const int n = l.rows();
  VectorF64 x = w;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) x[i] -= l(i, j) * x[j];
    x[i] /= l(i, i);
  }
  return x;
}

inline VectorF64 oracle_backward(const MatrixF64& l, const VectorF64& w) {
  const int n = l.rows();
  VectorF64 x = w;
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[i] -= l(j, i) * x[j];
    x[i] /= l(i, i);
  }
  return x;
}

inline double rel_err(const VectorF64& got, const VectorF64& want) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    num += (got[i] - want[i]) * (got[i] - want[i]);
    den += want[i] * want[i];
  }
  return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

inline double fro_norm(const MatrixF64& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * a.data()[i];
  return std::sqrt(s);
}

// Random LP with strictly feasible primal and dual points, hence bounded and
// solvable: b = A x*, c = A^T y* + z* with x*, z* > 0.
inline StandardFormLP random_feasible_lp(std::uint64_t seed, int max_m = 40,
                                         int max_n = 80) {
  auto g = rng(seed);
  std::uniform_int_distribution<int> mdist(2, max_m);
  const int m = mdist(g);
  std::uniform_int_distribution<int> ndist(m + 1, std::max(m + 2, max_n));
  const int n = ndist(g);

  StandardFormLP lp;
  lp.m = m;
  lp.n = n;
  lp.a = random_matrix(g, m, n);
  const VectorF64 xstar = random_vector(g, n, 0.1, 2.0);
  const VectorF64 zstar = random_vector(g, n, 0.1, 2.0);
  const VectorF64 ystar = random_vector(g, m, -1.0, 1.0);
  lp.b = oracle_matvec(lp.a, xstar);
  lp.c = oracle_matvec_t(lp.a, ystar);
  for (int j = 0; j < n; ++j) lp.c[j] += zstar[j];
  return lp;
}

}  // namespace mpip::test
