#include "mpip/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mpip/errors.hpp"

namespace mpip::kernels {

namespace {

constexpr int kLanes = 8;       // accumulators per dot product
constexpr int kRowBlock = 4;    // rows processed together in syrk/cholesky
constexpr int kColStripe = 256; // column stripe of matvec_transpose
constexpr int kPanel = 64;      // cholesky panel width

// Multi-accumulator dot product. The lane structure fixes the rounding
// order, so the value is the same no matter how callers are scheduled.
template <typename T>
inline T dot_lanes(const T* a, const T* b, int n) {
  T acc[kLanes] = {};
  int k = 0;
  for (; k + kLanes <= n; k += kLanes)
    for (int l = 0; l < kLanes; ++l) acc[l] += a[k + l] * b[k + l];
  T sum = 0;
  for (int l = 0; l < kLanes; ++l) sum += acc[l];
  for (; k < n; ++k) sum += a[k] * b[k];
  return sum;
}

// Four dot products against a shared right-hand row, streaming q once.
template <typename T>
inline void dot_lanes_x4(const T* p0, const T* p1, const T* p2, const T* p3,
                         const T* q, int n, T out[kRowBlock]) {
  T acc0[kLanes] = {}, acc1[kLanes] = {}, acc2[kLanes] = {}, acc3[kLanes] = {};
  int k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    for (int l = 0; l < kLanes; ++l) {
      const T ql = q[k + l];
      acc0[l] += p0[k + l] * ql;
      acc1[l] += p1[k + l] * ql;
      acc2[l] += p2[k + l] * ql;
      acc3[l] += p3[k + l] * ql;
    }
  }
  T s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  for (int l = 0; l < kLanes; ++l) {
    s0 += acc0[l];
    s1 += acc1[l];
    s2 += acc2[l];
    s3 += acc3[l];
  }
  for (; k < n; ++k) {
    const T qk = q[k];
    s0 += p0[k] * qk;
    s1 += p1[k] * qk;
    s2 += p2[k] * qk;
    s3 += p3[k] * qk;
  }
  out[0] = s0;
  out[1] = s1;
  out[2] = s2;
  out[3] = s3;
}

void matvec_impl(const MatrixF64& a, const double* x, double* y,
                 bool parallel) {
  const int m = a.rows(), n = a.cols();
#pragma omp parallel for schedule(static) if (parallel && m > 32)
  for (int i = 0; i < m; ++i) y[i] = dot_lanes(a.row(i), x, n);
}

void matvec_transpose_impl(const MatrixF64& a, const double* x, double* y,
                           bool parallel) {
  const int m = a.rows(), n = a.cols();
  const int stripes = (n + kColStripe - 1) / kColStripe;
#pragma omp parallel for schedule(static) if (parallel && stripes > 1)
  for (int s = 0; s < stripes; ++s) {
    const int j0 = s * kColStripe;
    const int j1 = std::min(j0 + kColStripe, n);
    for (int j = j0; j < j1; ++j) y[j] = 0.0;
    for (int i = 0; i < m; ++i) {
      const double xi = x[i];
      const double* row = a.row(i);
      for (int j = j0; j < j1; ++j) y[j] += row[j] * xi;
    }
  }
}

template <typename T>
void scale_columns_impl(const Matrix<T>& a, const T* d, Matrix<T>& out,
                        bool parallel) {
  const int m = a.rows(), n = a.cols();
#pragma omp parallel for schedule(static) if (parallel && m > 32)
  for (int i = 0; i < m; ++i) {
    const T* src = a.row(i);
    T* dst = out.row(i);
    for (int j = 0; j < n; ++j) dst[j] = src[j] * d[j];
  }
}

// rows [i0, i1) of M = B B^T; the 4-row grouping reuses each streamed row_j.
template <typename T>
inline void syrk_rows(const Matrix<T>& b, Matrix<T>& m, int i0, int i1) {
  const int inner = b.cols();
  int i = i0;
  for (; i + kRowBlock <= i1; i += kRowBlock) {
    const T* p0 = b.row(i);
    const T* p1 = b.row(i + 1);
    const T* p2 = b.row(i + 2);
    const T* p3 = b.row(i + 3);
    T vals[kRowBlock];
    for (int j = 0; j <= i + kRowBlock - 1; ++j) {
      dot_lanes_x4(p0, p1, p2, p3, b.row(j), inner, vals);
      for (int r = 0; r < kRowBlock; ++r)
        if (j <= i + r) m(i + r, j) = vals[r];
    }
  }
  for (; i < i1; ++i) {
    const T* pi = b.row(i);
    T* mi = m.row(i);
    for (int j = 0; j <= i; ++j) mi[j] = dot_lanes(pi, b.row(j), inner);
  }
}

template <typename T>
void syrk_lower_impl(const Matrix<T>& b, Matrix<T>& m, bool parallel) {
  const int rows = b.rows();
  if (m.rows() != rows || m.cols() != rows)
    throw std::invalid_argument("syrk_lower: output must be rows x rows");
  const int blocks = (rows + kRowBlock - 1) / kRowBlock;
#pragma omp parallel for schedule(dynamic, 2) if (parallel && rows > 64)
  for (int blk = 0; blk < blocks; ++blk) {
    const int i0 = blk * kRowBlock;
    syrk_rows(b, m, i0, std::min(i0 + kRowBlock, rows));
  }
}

// rows [i0, i1) of the trailing update M -= L_panel L_panel^T, columns >= ke.
template <typename T>
inline void trailing_rows(Matrix<T>& m, int kb, int ke, int i0, int i1) {
  const int width = ke - kb;
  int i = i0;
  for (; i + kRowBlock <= i1; i += kRowBlock) {
    const T* p0 = m.row(i) + kb;
    const T* p1 = m.row(i + 1) + kb;
    const T* p2 = m.row(i + 2) + kb;
    const T* p3 = m.row(i + 3) + kb;
    T vals[kRowBlock];
    for (int j = ke; j <= i + kRowBlock - 1; ++j) {
      dot_lanes_x4(p0, p1, p2, p3, m.row(j) + kb, width, vals);
      for (int r = 0; r < kRowBlock; ++r)
        if (j <= i + r) m(i + r, j) -= vals[r];
    }
  }
  for (; i < i1; ++i) {
    const T* pi = m.row(i) + kb;
    T* mi = m.row(i);
    for (int j = ke; j <= i; ++j)
      mi[j] -= dot_lanes(pi, m.row(j) + kb, width);
  }
}

template <typename T>
void cholesky_impl(Matrix<T>& m, bool parallel) {
  const int n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("cholesky: matrix not square");

  for (int kb = 0; kb < n; kb += kPanel) {
    const int ke = std::min(kb + kPanel, n);

    // Panel factorization, columns kb..ke-1. Earlier blocks have already been
    // subtracted by previous trailing updates.
    for (int k = kb; k < ke; ++k) {
      T* rk = m.row(k);
      const T dk = rk[k] - dot_lanes(rk + kb, rk + kb, k - kb);
      if (!(dk > T(0)))
        throw CholeskyBreakdown(
            k, "cholesky breakdown: pivot " + std::to_string(k) +
                   " is not positive (" + std::to_string(double(dk)) + ")");
      const T lkk = std::sqrt(dk);
      rk[k] = lkk;
#pragma omp parallel for schedule(static) if (parallel && n - k > 512)
      for (int i = k + 1; i < n; ++i) {
        T* ri = m.row(i);
        ri[k] = (ri[k] - dot_lanes(ri + kb, rk + kb, k - kb)) / lkk;
      }
    }

    if (ke == n) break;
    const int blocks = (n - ke + kRowBlock - 1) / kRowBlock;
#pragma omp parallel for schedule(dynamic, 2) if (parallel && n - ke > 64)
    for (int blk = 0; blk < blocks; ++blk) {
      const int i0 = ke + blk * kRowBlock;
      trailing_rows(m, kb, ke, i0, std::min(i0 + kRowBlock, n));
    }
  }

  for (int i = 0; i < n; ++i) std::fill(m.row(i) + i + 1, m.row(i) + n, T(0));
}

template <typename T>
void trsv_forward_impl(const Matrix<T>& l, T* x) {
  const int n = l.rows();
  for (int i = 0; i < n; ++i) {
    const T* li = l.row(i);
    x[i] = (x[i] - dot_lanes(li, x, i)) / li[i];
  }
}

// Solves L^T x = w column-wise so memory access stays on rows of L.
template <typename T>
void trsv_backward_impl(const Matrix<T>& l, T* x) {
  const int n = l.rows();
  for (int j = n - 1; j >= 0; --j) {
    const T* lj = l.row(j);
    x[j] /= lj[j];
    const T xj = x[j];
    for (int i = 0; i < j; ++i) x[i] -= lj[i] * xj;
  }
}

}  // namespace

void matvec(const MatrixF64& a, std::span<const double> x,
            std::span<double> y) {
  matvec_impl(a, x.data(), y.data(), true);
}

void matvec_transpose(const MatrixF64& a, std::span<const double> x,
                      std::span<double> y) {
  matvec_transpose_impl(a, x.data(), y.data(), true);
}

template <typename T>
void scale_columns(const Matrix<T>& a, std::span<const T> d, Matrix<T>& out) {
  scale_columns_impl(a, d.data(), out, true);
}

template <typename T>
void syrk_lower(const Matrix<T>& b, Matrix<T>& m) {
  syrk_lower_impl(b, m, true);
}

template <typename T>
void cholesky_inplace(Matrix<T>& m) {
  cholesky_impl(m, true);
}

template <typename T>
void trsv_forward(const Matrix<T>& l, T* x) {
  trsv_forward_impl(l, x);
}

template <typename T>
void trsv_backward(const Matrix<T>& l, T* x) {
  trsv_backward_impl(l, x);
}

double dot(std::span<const double> a, std::span<const double> b) {
  return dot_lanes(a.data(), b.data(), static_cast<int>(a.size()));
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double norm1(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += std::abs(x);
  return s;
}

double norm_inf(std::span<const double> v) {
  double s = 0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}

namespace serial {

void matvec(const MatrixF64& a, std::span<const double> x,
            std::span<double> y) {
  matvec_impl(a, x.data(), y.data(), false);
}

void matvec_transpose(const MatrixF64& a, std::span<const double> x,
                      std::span<double> y) {
  matvec_transpose_impl(a, x.data(), y.data(), false);
}

template <typename T>
void scale_columns(const Matrix<T>& a, std::span<const T> d, Matrix<T>& out) {
  scale_columns_impl(a, d.data(), out, false);
}

template <typename T>
void syrk_lower(const Matrix<T>& b, Matrix<T>& m) {
  syrk_lower_impl(b, m, false);
}

template <typename T>
void cholesky_inplace(Matrix<T>& m) {
  cholesky_impl(m, false);
}

template void scale_columns<float>(const MatrixF32&, std::span<const float>,
                                   MatrixF32&);
template void scale_columns<double>(const MatrixF64&, std::span<const double>,
                                    MatrixF64&);
template void syrk_lower<float>(const MatrixF32&, MatrixF32&);
template void syrk_lower<double>(const MatrixF64&, MatrixF64&);
template void cholesky_inplace<float>(MatrixF32&);
template void cholesky_inplace<double>(MatrixF64&);

}  // namespace serial

template void scale_columns<float>(const MatrixF32&, std::span<const float>,
                                   MatrixF32&);
template void scale_columns<double>(const MatrixF64&, std::span<const double>,
                                    MatrixF64&);
template void syrk_lower<float>(const MatrixF32&, MatrixF32&);
template void syrk_lower<double>(const MatrixF64&, MatrixF64&);
template void cholesky_inplace<float>(MatrixF32&);
template void cholesky_inplace<double>(MatrixF64&);
template void trsv_forward<float>(const MatrixF32&, float*);
template void trsv_forward<double>(const MatrixF64&, double*);
template void trsv_backward<float>(const MatrixF32&, float*);
template void trsv_backward<double>(const MatrixF64&, double*);

}  // namespace mpip::kernels
