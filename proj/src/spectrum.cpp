#include "mpip/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mpip/kernels.hpp"

namespace mpip {

namespace {

// Explicit Q from the Householder QR of a square matrix.
MatrixF64 householder_q(MatrixF64 a) {
  const int n = a.rows();
  MatrixF64 q = MatrixF64::identity(n);
  VectorF64 v(n);
  for (int k = 0; k < n; ++k) {
    double norm = 0;
    for (int i = k; i < n; ++i) norm = std::hypot(norm, a(i, k));
    if (norm == 0) continue;
    const double alpha = a(k, k) >= 0 ? -norm : norm;
    double vnorm = 0;
    for (int i = k; i < n; ++i) {
      v[i] = a(i, k) - (i == k ? alpha : 0.0);
      vnorm += v[i] * v[i];
    }
    if (vnorm == 0) continue;
    // a := (I - 2 v v^T / v^T v) a on the trailing block
    for (int j = k; j < n; ++j) {
      double s = 0;
      for (int i = k; i < n; ++i) s += v[i] * a(i, j);
      s = 2.0 * s / vnorm;
      for (int i = k; i < n; ++i) a(i, j) -= s * v[i];
    }
    // q := q (I - 2 v v^T / v^T v), accumulating Q = H_0 H_1 ... from the left
    for (int i = 0; i < n; ++i) {
      double s = 0;
      for (int j = k; j < n; ++j) s += q(i, j) * v[j];
      s = 2.0 * s / vnorm;
      for (int j = k; j < n; ++j) q(i, j) -= s * v[j];
    }
  }
  return q;
}

}  // namespace

MatrixF64 spd_from_spectrum(int m, double lambda_min, double lambda_max,
                            int count, std::uint64_t seed) {
  if (m <= 0) throw std::invalid_argument("spd_from_spectrum: m must be > 0");
  if (!(lambda_min > 0) || !(lambda_min <= lambda_max))
    throw std::invalid_argument(
        "spd_from_spectrum: need 0 < lambda_min <= lambda_max");

  if (lambda_min == lambda_max) {
    // Q diag(lambda) Q^T commutes; return the exact multiple of the identity.
    MatrixF64 eye = MatrixF64::identity(m);
    for (int i = 0; i < m; ++i) eye(i, i) = lambda_min;
    return eye;
  }

  if (count < 2 || count > m)
    throw std::invalid_argument("spd_from_spectrum: need 2 <= count <= m");

  std::mt19937_64 rng(seed);
  VectorF64 values(count);
  values.front() = lambda_min;
  values.back() = lambda_max;
  std::uniform_real_distribution<double> interior(std::log10(lambda_min),
                                                  std::log10(lambda_max));
  for (int i = 1; i < count - 1; ++i)
    values[i] = std::pow(10.0, interior(rng));

  MatrixF64 g(m, m);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = normal(rng);
  const MatrixF64 q = householder_q(std::move(g));

  // M = B B^T with B = Q diag(sqrt(lambda)); syrk writes the lower triangle,
  // mirrored afterwards so the result is exactly symmetric.
  MatrixF64 b(m, m);
  for (int j = 0; j < m; ++j) {
    const double s = std::sqrt(values[j % count]);
    for (int i = 0; i < m; ++i) b(i, j) = q(i, j) * s;
  }
  MatrixF64 out(m, m);
  kernels::syrk_lower(b, out);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out(i, j) = out(j, i);
  return out;
}

VectorF64 jacobi_eigenvalues(const MatrixF64& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("jacobi_eigenvalues: matrix not square");
  const int n = m.rows();
  MatrixF64 a = m;

  double fro = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fro += a(i, j) * a(i, j);
  fro = std::sqrt(fro);
  const double target = 1e-12 * fro;

  auto off_norm = [&] {
    double s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= target || n == 1) {
      VectorF64 eig(n);
      for (int i = 0; i < n; ++i) eig[i] = a(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < n; ++r) {
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
      }
    }
  }
  throw std::runtime_error(
      "jacobi_eigenvalues: no convergence within 100 sweeps");
}

double cond_2(const MatrixF64& m) {
  const VectorF64 eig = jacobi_eigenvalues(m);
  return eig.back() / std::abs(eig.front());
}

}  // namespace mpip
